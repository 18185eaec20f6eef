#pragma once

// Young diagrams, Frobenius coordinates and border-strip peeling of supports.
// Cells are 1-indexed (row, col); row 1 is the top row.

#include <algorithm>
#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace flagrsk {

struct Cell {
    int row = 1;
    int col = 1;
    auto operator<=>(const Cell&) const = default;
};

using Support = std::set<Cell>;

class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            require(parts_[i] > 0, "partition parts must be positive");
            require(i == 0 || parts_[i] <= parts_[i - 1], "partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    int size() const {
        int n = 0;
        for (int p : parts_) n += p;
        return n;
    }

    /// 1-based part access; zero beyond the length.
    int part(int i) const { return (i >= 1 && i <= length()) ? parts_[i - 1] : 0; }

    bool has_cell(Cell c) const { return c.row >= 1 && c.col >= 1 && c.col <= part(c.row); }

    bool contains(const Partition& other) const {
        if (other.length() > length()) return false;
        for (int i = 1; i <= other.length(); ++i)
            if (other.part(i) > part(i)) return false;
        return true;
    }

    bool is_self_conjugate() const;

    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        for (int i = 1; i <= length(); ++i)
            for (int j = 1; j <= part(i); ++j) out.push_back({i, j});
        return out;
    }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

inline Partition conjugate(const Partition& p) {
    std::vector<int> out(p.part(1), 0);
    for (int i = 1; i <= p.length(); ++i)
        for (int j = 0; j < p.part(i); ++j) ++out[j];
    return Partition(std::move(out));
}

inline bool Partition::is_self_conjugate() const { return conjugate(*this) == *this; }

/// Diagonal length: number of i with lambda_i >= i.
inline int diagonal_length(const Partition& p) {
    int d = 0;
    while (p.part(d + 1) >= d + 1) ++d;
    return d;
}

/// Removable corners, top row first.
inline std::vector<Cell> removable_corners(const Partition& p) {
    std::vector<Cell> out;
    for (int i = 1; i <= p.length(); ++i)
        if (p.part(i) > p.part(i + 1)) out.push_back({i, p.part(i)});
    return out;
}

inline Partition remove_cell(const Partition& p, Cell c) {
    std::vector<int> parts = p.parts();
    require(c.row >= 1 && c.row <= p.length() && parts[c.row - 1] == c.col && p.part(c.row + 1) < c.col,
            "cell is not a removable corner");
    --parts[c.row - 1];
    return Partition(std::move(parts));
}

inline Partition add_cell(const Partition& p, int row) {
    std::vector<int> parts = p.parts();
    if (row == p.length() + 1) parts.push_back(0);
    require(row >= 1 && row <= static_cast<int>(parts.size()), "row out of range");
    require(row == 1 || parts[row - 2] > parts[row - 1], "cell is not addable");
    ++parts[row - 1];
    return Partition(std::move(parts));
}

/// Every partition of n, in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int n, int max_part = -1) {
    if (max_part < 0) max_part = n;
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int cap) -> void {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(left, cap); k >= 1; --k) {
            cur.push_back(k);
            self(self, left - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, max_part);
    return out;
}

/// Partitions contained in `box`, by increasing size.
inline std::vector<Partition> partitions_inside(const Partition& box) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row, int cap) -> void {
        out.emplace_back(cur);
        if (row > box.length()) return;
        for (int k = 1; k <= std::min(cap, box.part(row)); ++k) {
            cur.push_back(k);
            self(self, row + 1, k);
            cur.pop_back();
        }
    };
    rec(rec, 1, box.part(1));
    std::stable_sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) { return a.size() < b.size(); });
    return out;
}

/// Outer shape with an inner shape removed; inner must fit cellwise.
struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape() = default;
    SkewShape(Partition o, Partition i = {}) : outer(std::move(o)), inner(std::move(i)) {
        require(outer.contains(inner), "skew shape inner must be contained in outer");
    }

    int size() const { return outer.size() - inner.size(); }
    bool has_cell(Cell c) const { return outer.has_cell(c) && !inner.has_cell(c); }

    auto operator<=>(const SkewShape&) const = default;
};

/// Strict sequences alpha (column side) and beta (row side), counted from
/// the diagonal inclusively: alpha_i = lambda'_i - i + 1, beta_i = lambda_i - i + 1.
struct FrobeniusForm {
    std::vector<int> alpha;
    std::vector<int> beta;

    int diagonal() const { return static_cast<int>(alpha.size()); }
    auto operator<=>(const FrobeniusForm&) const = default;
};

inline FrobeniusForm frobenius_encode(const Partition& p) {
    const Partition pc = conjugate(p);
    const int d = diagonal_length(p);
    FrobeniusForm f;
    for (int i = 1; i <= d; ++i) {
        f.alpha.push_back(pc.part(i) - i + 1);
        f.beta.push_back(p.part(i) - i + 1);
    }
    return f;
}

inline bool is_strictly_decreasing_positive(const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] <= 0) return false;
        if (i > 0 && v[i] >= v[i - 1]) return false;
    }
    return true;
}

inline Partition frobenius_decode(const FrobeniusForm& f) {
    require(f.alpha.size() == f.beta.size(), "frobenius_decode: alpha and beta must have equal length");
    require(is_strictly_decreasing_positive(f.alpha), "frobenius_decode: alpha must be strictly decreasing positive");
    require(is_strictly_decreasing_positive(f.beta), "frobenius_decode: beta must be strictly decreasing positive");
    const int d = f.diagonal();
    if (d == 0) return {};
    // Rows 1..d come from beta, columns 1..d from alpha; rows below the
    // diagonal square are read off the column lengths.
    std::vector<int> col_len(d);
    for (int j = 1; j <= d; ++j) col_len[j - 1] = f.alpha[j - 1] + j - 1;
    std::vector<int> rows;
    for (int i = 1; i <= d; ++i) rows.push_back(f.beta[i - 1] + i - 1);
    for (int i = d + 1; i <= col_len[0]; ++i) {
        int n = 0;
        for (int j = 1; j <= d; ++j)
            if (col_len[j - 1] >= i) ++n;
        rows.push_back(n);
    }
    return Partition(rows);
}

/// Smallest partition containing every cell of `s`.
inline Partition hull(const Support& s) {
    if (s.empty()) return {};
    int max_row = 0;
    for (const Cell& c : s) max_row = std::max(max_row, c.row);
    std::vector<int> rows(max_row, 0);
    for (const Cell& c : s) rows[c.row - 1] = std::max(rows[c.row - 1], c.col);
    for (int i = max_row - 2; i >= 0; --i) rows[i] = std::max(rows[i], rows[i + 1]);
    return Partition(rows);
}

struct StripPeel {
    SkewShape strip;
    Cell corner;
};

/// Border strip of the hull of `s`, and the corner (max row, max col).
inline StripPeel theta(const Support& s) {
    require(!s.empty(), "empty support");
    const Partition outer = hull(s);
    std::vector<int> inner;
    for (int i = 1; i < outer.length(); ++i) inner.push_back(outer.part(i + 1) - 1);
    return {SkewShape(outer, Partition(inner)), Cell{outer.length(), outer.part(1)}};
}

struct SupportShape {
    std::vector<Cell> corners;
    Partition shape;
};

/// Peels border strips off `s` until it is empty; corners are (alpha_k, beta_k).
inline SupportShape peel_support(const Support& s) {
    SupportShape out;
    Support rest = s;
    FrobeniusForm f;
    while (!rest.empty()) {
        const StripPeel peel = theta(rest);
        out.corners.push_back(peel.corner);
        f.alpha.push_back(peel.corner.row);
        f.beta.push_back(peel.corner.col);
        for (auto it = rest.begin(); it != rest.end();) {
            if (peel.strip.has_cell(*it))
                it = rest.erase(it);
            else
                ++it;
        }
    }
    require(is_strictly_decreasing_positive(f.alpha) && is_strictly_decreasing_positive(f.beta),
            "peel_support: corners are not strictly north-west of each other");
    out.shape = frobenius_decode(f);
    return out;
}

inline Partition lambda_of_support(const Support& s) { return peel_support(s).shape; }

inline int residue(Cell c) { return c.col - c.row; }

inline std::string to_string(const Partition& p) {
    std::string out = "(";
    for (int i = 0; i < p.length(); ++i) {
        if (i) out += ",";
        out += std::to_string(p.parts()[i]);
    }
    return out + ")";
}

}  // namespace flagrsk
