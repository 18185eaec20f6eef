#pragma once

// Semistandard tableaux of anti-normal shape (possibly skew, (eta/mu)^pi) and
// of normal shape. Entries are stored as order keys of their alphabet: -k^v
// is stored as k, a positive letter j as j.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crystal.hpp"
#include "shapes.hpp"

namespace flagrsk {

/// Anti-normal tableau stored by columns counted from the right. Column k
/// holds its keys bottom to top (strictly decreasing), sitting above inner(k)
/// removed cells. Rows are counted from the bottom.
class AntiTableau {
public:
    AntiTableau() = default;
    explicit AntiTableau(Alphabet a) : alphabet_(a) {}

    /// Columns (right to left, each bottom to top) with optional inner column heights.
    AntiTableau(Alphabet a, std::vector<std::vector<int>> cols, std::vector<int> inner = {})
        : alphabet_(a), cols_(std::move(cols)), inner_(std::move(inner)) {
        inner_.resize(std::max(inner_.size(), cols_.size()), 0);
        cols_.resize(inner_.size());
        trim();
        validate();
    }

    /// Rows from the bottom, each left to right; an inner shape mu leaves the
    /// rightmost mu_r cells of row r empty.
    static AntiTableau from_rows(Alphabet a, const std::vector<std::vector<int>>& rows_bottom_up,
                                 const Partition& inner = {}) {
        const int width = rows_bottom_up.empty() ? inner.part(1)
                                                 : std::max(inner.part(1), static_cast<int>(rows_bottom_up[0].size()) + inner.part(1));
        std::vector<std::vector<int>> cols(width);
        std::vector<int> in(width, 0);
        const Partition ic = conjugate(inner);
        for (int k = 0; k < width; ++k) in[k] = ic.part(k + 1);
        for (std::size_t r = 0; r < rows_bottom_up.size(); ++r) {
            const auto& row = rows_bottom_up[r];
            const int skip = inner.part(static_cast<int>(r) + 1);
            const int n = static_cast<int>(row.size());
            for (int p = 0; p < n; ++p) {
                const int k = skip + (n - 1 - p);
                require(k < width, "tableau rows must weakly shrink upward");
                require(static_cast<int>(cols[k].size()) + in[k] == static_cast<int>(r),
                        "tableau rows do not form an anti-normal shape");
                cols[k].push_back(order_key(Letter(a, row[p])));
            }
        }
        return AntiTableau(a, std::move(cols), std::move(in));
    }

    /// Highest weight element: the l-th entry from the top of each column is l.
    static AntiTableau highest(Alphabet a, const Partition& nu) {
        const Partition c = conjugate(nu);
        std::vector<std::vector<int>> cols;
        for (int k = 1; k <= c.length(); ++k) {
            std::vector<int> col;
            for (int l = c.part(k); l >= 1; --l) col.push_back(l);
            cols.push_back(std::move(col));
        }
        return AntiTableau(a, std::move(cols));
    }

    Alphabet alphabet() const { return alphabet_; }
    int num_columns() const { return static_cast<int>(cols_.size()); }
    const std::vector<std::vector<int>>& columns() const { return cols_; }
    const std::vector<int>& inner_heights() const { return inner_; }
    bool empty() const { return cols_.empty(); }

    int height(int k) const { return k < num_columns() ? inner_[k] + static_cast<int>(cols_[k].size()) : 0; }
    int inner_height(int k) const { return k < num_columns() ? inner_[k] : 0; }

    std::size_t size() const {
        std::size_t n = 0;
        for (auto& c : cols_) n += c.size();
        return n;
    }

    /// eta of the shape (eta/mu)^pi: row r from the bottom has eta_r cells.
    Partition outer_shape() const {
        std::vector<int> h;
        for (int k = 0; k < num_columns(); ++k) h.push_back(height(k));
        return conjugate(Partition(h));
    }
    Partition inner_shape() const { return conjugate(Partition(inner_)); }

    /// Key at column k (from the right, 0-based) and row r (from the bottom, 1-based).
    std::optional<int> at(int k, int r) const {
        if (k >= num_columns() || r <= inner_[k] || r > height(k)) return std::nullopt;
        return cols_[k][r - inner_[k] - 1];
    }

    /// Smallest (topmost) key of column k.
    std::optional<int> top(int k) const {
        if (k >= num_columns() || cols_[k].empty()) return std::nullopt;
        return cols_[k].back();
    }

    /// Reading word: rows top to bottom, each row right to left.
    Word reading_word() const {
        Word w;
        w.alphabet = alphabet_;
        for (auto [k, r] : reading_cells()) w.values.push_back(value_of_key(alphabet_, *at(k, r)));
        return w;
    }

    std::vector<std::pair<int, int>> reading_cells() const {
        std::vector<std::pair<int, int>> cells;
        const int top_row = num_columns() ? height(0) : 0;
        for (int r = top_row; r >= 1; --r)
            for (int k = 0; k < num_columns(); ++k)
                if (at(k, r)) cells.emplace_back(k, r);
        return cells;
    }

    /// Same shape, entries replaced from a word laid out in reading order.
    AntiTableau with_word(const Word& w) const {
        require(w.size() == size(), "word length does not match tableau size");
        AntiTableau t = *this;
        std::size_t p = 0;
        for (auto [k, r] : reading_cells()) t.cols_[k][r - inner_[k] - 1] = order_key(Letter(alphabet_, w.values[p++]));
        return t;
    }

    /// Rows from the bottom, left to right, as letter values (empty cells dropped).
    std::vector<std::vector<int>> rows_bottom_up() const {
        std::vector<std::vector<int>> rows;
        const int top_row = num_columns() ? height(0) : 0;
        for (int r = 1; r <= top_row; ++r) {
            std::vector<int> row;
            for (int k = num_columns() - 1; k >= 0; --k)
                if (auto v = at(k, r)) row.push_back(value_of_key(alphabet_, *v));
            rows.push_back(std::move(row));
        }
        return rows;
    }

    Weight weight() const {
        Weight w;
        for (auto& c : cols_)
            for (int key : c) w += letter_weight(Letter(alphabet_, value_of_key(alphabet_, key)));
        return w;
    }

    struct BumpStep {
        int column;
        std::optional<int> replaced;  ///< key displaced from this column, if any
    };

    /// Anti-normal column insertion of the letter whose key is `key`.
    std::vector<BumpStep> insert_key(int key) {
        std::vector<BumpStep> path;
        int a = key;
        for (int k = 0;; ++k) {
            if (k == num_columns()) {
                cols_.emplace_back();
                inner_.push_back(0);
            }
            auto& col = cols_[k];
            // col is strictly decreasing bottom to top: the first entry <= a is the largest such.
            auto it = std::find_if(col.begin(), col.end(), [a](int x) { return x <= a; });
            if (it == col.end()) {
                require(k == 0 || height(k) < height(k - 1), "insertion broke the anti-normal shape");
                col.push_back(a);
                path.push_back({k, std::nullopt});
                return path;
            }
            const int bumped = *it;
            *it = a;
            path.push_back({k, bumped});
            a = bumped;
        }
    }

    /// Inverse of a single insertion whose new cell is the top of column k.
    int reverse_bump(int k) {
        require(k < num_columns() && !cols_[k].empty(), "reverse_bump: column is empty");
        int x = cols_[k].back();
        cols_[k].pop_back();
        for (int c = k - 1; c >= 0; --c) {
            auto& col = cols_[c];
            // Smallest entry >= x: scan from the top.
            auto it = std::find_if(col.rbegin(), col.rend(), [x](int y) { return y >= x; });
            require(it != col.rend(), "reverse_bump: no entry to displace");
            std::swap(*it, x);
        }
        trim();
        return x;
    }

    /// Adds `key` on top of column k (k may equal num_columns()).
    void push_top(int k, int key) {
        if (k == num_columns()) {
            cols_.emplace_back();
            inner_.push_back(0);
        }
        cols_[k].push_back(key);
    }

    int pop_top(int k) {
        require(k < num_columns() && !cols_[k].empty(), "pop_top: column is empty");
        const int v = cols_[k].back();
        cols_[k].pop_back();
        trim();
        return v;
    }

    bool is_semistandard() const {
        for (int k = 0; k < num_columns(); ++k) {
            if (inner_[k] < 0) return false;
            if (k > 0 && (height(k) > height(k - 1) || inner_[k] > inner_[k - 1])) return false;
            const auto& c = cols_[k];
            for (std::size_t r = 0; r < c.size(); ++r) {
                if (c[r] < 1) return false;
                if (r > 0 && c[r] >= c[r - 1]) return false;
                if (k > 0) {
                    const int row = inner_[k] + static_cast<int>(r) + 1;
                    if (auto right = at(k - 1, row); right && c[r] > *right) return false;
                }
            }
        }
        return true;
    }

    bool operator==(const AntiTableau& o) const {
        return alphabet_ == o.alphabet_ && cols_ == o.cols_ && inner_ == o.inner_;
    }
    auto operator<=>(const AntiTableau& o) const {
        if (auto c = alphabet_ <=> o.alphabet_; c != 0) return c;
        if (auto c = cols_ <=> o.cols_; c != 0) return c;
        return inner_ <=> o.inner_;
    }

private:
    void trim() {
        while (!cols_.empty() && cols_.back().empty() && inner_.back() == 0) {
            cols_.pop_back();
            inner_.pop_back();
        }
    }

    void validate() const {
        for (auto& c : cols_)
            for (int key : c) (void)Letter(alphabet_, value_of_key(alphabet_, key));
        require(is_semistandard(), "tableau is not semistandard of anti-normal shape");
    }

    Alphabet alphabet_ = Alphabet::Bpos;
    std::vector<std::vector<int>> cols_;
    std::vector<int> inner_;
};

/// Semistandard tableau of normal shape, rows top to bottom, letter values.
class NormalTableau {
public:
    NormalTableau() = default;
    NormalTableau(Alphabet a, std::vector<std::vector<int>> rows) : alphabet_(a), rows_(std::move(rows)) {
        while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            require(r == 0 || rows_[r].size() <= rows_[r - 1].size(), "normal tableau rows must weakly shrink");
            for (std::size_t c = 0; c < rows_[r].size(); ++c) {
                const int key = order_key(Letter(a, rows_[r][c]));
                require(c == 0 || order_key(a, rows_[r][c - 1]) <= key, "normal tableau rows must weakly increase");
                require(r == 0 || order_key(a, rows_[r - 1][c]) < key, "normal tableau columns must strictly increase");
            }
        }
    }

    static NormalTableau highest(const Partition& nu) {
        std::vector<std::vector<int>> rows;
        for (int i = 1; i <= nu.length(); ++i) rows.emplace_back(nu.part(i), i);
        return NormalTableau(Alphabet::Bpos, std::move(rows));
    }

    Alphabet alphabet() const { return alphabet_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    Partition shape() const {
        std::vector<int> p;
        for (auto& r : rows_) p.push_back(static_cast<int>(r.size()));
        return Partition(p);
    }

    Word reading_word() const {
        Word w;
        w.alphabet = alphabet_;
        for (auto& r : rows_)
            for (auto it = r.rbegin(); it != r.rend(); ++it) w.values.push_back(*it);
        return w;
    }

    NormalTableau with_word(const Word& w) const {
        NormalTableau t = *this;
        std::size_t p = 0;
        for (auto& r : t.rows_)
            for (auto it = r.rbegin(); it != r.rend(); ++it) {
                require(p < w.size(), "word too short for tableau");
                *it = w.values[p++];
            }
        require(p == w.size(), "word too long for tableau");
        return t;
    }

    Weight weight() const { return word_weight(reading_word()); }

    auto operator<=>(const NormalTableau&) const = default;

private:
    Alphabet alphabet_ = Alphabet::Bpos;
    std::vector<std::vector<int>> rows_;
};

inline std::string entry_text(Alphabet a, int key) {
    if (a == Alphabet::BnegDual) return "-" + std::to_string(key) + "^v";
    return std::to_string(value_of_key(a, key));
}

inline std::string rstrip(std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

/// Grid layout, top row first: cells right-aligned to a common width, empty
/// anti-normal cells left blank, inner (skew) cells drawn as "[]".
inline std::string pretty(const AntiTableau& t) {
    const int ncols = t.num_columns();
    if (ncols == 0) return "(empty)\n";
    std::size_t width = 1;
    for (auto& c : t.columns())
        for (int key : c) width = std::max(width, entry_text(t.alphabet(), key).size());
    for (int h : t.inner_heights())
        if (h > 0) width = std::max<std::size_t>(width, 2);
    std::string out;
    for (int r = t.height(0); r >= 1; --r) {
        std::string line;
        for (int k = ncols - 1; k >= 0; --k) {
            std::string cell;
            if (auto v = t.at(k, r))
                cell = entry_text(t.alphabet(), *v);
            else if (r <= t.inner_height(k))
                cell = "[]";
            line += std::string(width - cell.size(), ' ') + cell;
            if (k > 0) line += ' ';
        }
        out += rstrip(line) + "\n";
    }
    return out;
}

inline std::string pretty(const NormalTableau& t) {
    if (t.rows().empty()) return "(empty)\n";
    std::size_t width = 1;
    for (auto& r : t.rows())
        for (int v : r) width = std::max(width, letter_to_string(t.alphabet(), v).size());
    std::string out;
    for (auto& r : t.rows()) {
        std::string line;
        for (std::size_t c = 0; c < r.size(); ++c) {
            const std::string cell = letter_to_string(t.alphabet(), r[c]);
            if (c) line += ' ';
            line += std::string(width - cell.size(), ' ') + cell;
        }
        out += line + "\n";
    }
    return out;
}

/// All semistandard anti-normal tableaux of shape nu^pi with keys in
/// [1, bound(r)] for row r from the bottom.
template <class RowBound>
std::vector<AntiTableau> enumerate_anti(Alphabet a, const Partition& nu, RowBound bound) {
    const Partition c = conjugate(nu);
    const int ncols = c.length();
    std::vector<std::vector<int>> cols(ncols);
    for (int k = 0; k < ncols; ++k) cols[k].assign(c.part(k + 1), 0);
    std::vector<AntiTableau> out;
    // Fill column by column from the right, each bottom to top.
    auto rec = [&](auto&& self, int k, int r) -> void {
        if (k == ncols) {
            out.emplace_back(a, cols);
            return;
        }
        if (r == c.part(k + 1)) {
            self(self, k + 1, 0);
            return;
        }
        int hi = bound(r + 1);
        if (r > 0) hi = std::min(hi, cols[k][r - 1] - 1);
        if (k > 0) hi = std::min(hi, cols[k - 1][r]);
        for (int v = 1; v <= hi; ++v) {
            cols[k][r] = v;
            self(self, k, r + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace flagrsk
