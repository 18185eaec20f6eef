#pragma once

// The crystal of finitely supported nonnegative integer matrices A = (a_{-i^v, j}),
// stored with both indices positive: entry (i, j) is a_{-i^v, j}.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "closure.hpp"
#include "crystal.hpp"
#include "shapes.hpp"

namespace flagrsk {

class SparseMatrix {
public:
    using Key = std::pair<int, int>;

    SparseMatrix() = default;

    /// Dense rows, row 1 first.
    static SparseMatrix from_dense(const std::vector<std::vector<long long>>& rows) {
        SparseMatrix m;
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows[i].size(); ++j) {
                require(rows[i][j] >= 0, "matrix entries must be nonnegative");
                m.set(static_cast<int>(i) + 1, static_cast<int>(j) + 1, rows[i][j]);
            }
        return m;
    }

    static SparseMatrix unit(int i, int j, long long a = 1) {
        SparseMatrix m;
        m.set(i, j, a);
        return m;
    }

    long long at(int i, int j) const {
        auto it = entries_.find({i, j});
        return it == entries_.end() ? 0 : it->second;
    }

    void set(int i, int j, long long a) {
        require(i >= 1 && j >= 1, "matrix indices must be positive");
        require(a >= 0, "matrix entries must be nonnegative");
        if (a == 0)
            entries_.erase({i, j});
        else
            entries_[{i, j}] = a;
    }

    void add(int i, int j, long long a) { set(i, j, at(i, j) + a); }

    const std::map<Key, long long>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    long long sum() const {
        long long s = 0;
        for (auto& [_, a] : entries_) s += a;
        return s;
    }
    long long row_sum(int i) const {
        long long s = 0;
        for (auto& [k, a] : entries_)
            if (k.first == i) s += a;
        return s;
    }
    long long col_sum(int j) const {
        long long s = 0;
        for (auto& [k, a] : entries_)
            if (k.second == j) s += a;
        return s;
    }
    int max_row() const {
        int r = 0;
        for (auto& [k, _] : entries_) r = std::max(r, k.first);
        return r;
    }
    int max_col() const {
        int c = 0;
        for (auto& [k, _] : entries_) c = std::max(c, k.second);
        return c;
    }

    Support support() const {
        Support s;
        for (auto& [k, _] : entries_) s.insert({k.first, k.second});
        return s;
    }

    SparseMatrix transpose() const {
        SparseMatrix t;
        for (auto& [k, a] : entries_) t.entries_[{k.second, k.first}] = a;
        return t;
    }

    bool is_symmetric() const { return transpose() == *this; }

    /// Canonical text form used as a set key: "i,j:a;..." in lexicographic order.
    std::string key() const {
        std::string s;
        for (auto& [k, a] : entries_)
            s += std::to_string(k.first) + "," + std::to_string(k.second) + ":" + std::to_string(a) + ";";
        return s;
    }

    auto operator<=>(const SparseMatrix&) const = default;

private:
    std::map<Key, long long> entries_;
};

enum class BiwordVariant { Omega, OmegaPrime };

/// Pairs (-i^v, j), stored as positive (i, j).
struct Biword {
    BiwordVariant variant = BiwordVariant::Omega;
    std::vector<std::pair<int, int>> pairs;

    /// i's as BnegDual values.
    Word top() const {
        Word w;
        w.alphabet = Alphabet::BnegDual;
        for (auto [i, _] : pairs) w.values.push_back(-i);
        return w;
    }
    Word bottom() const {
        Word w;
        w.alphabet = Alphabet::Bpos;
        for (auto [_, j] : pairs) w.values.push_back(j);
        return w;
    }
    bool operator==(const Biword&) const = default;
};

/// Strict order on pairs for the given variant. Omega: j increasing, then
/// -i^v decreasing (that is, i decreasing). OmegaPrime: -i^v increasing (i
/// increasing), then j decreasing.
inline bool biword_less(BiwordVariant v, std::pair<int, int> a, std::pair<int, int> b) {
    if (v == BiwordVariant::Omega) return a.second < b.second || (a.second == b.second && a.first > b.first);
    return a.first < b.first || (a.first == b.first && a.second > b.second);
}

inline Biword to_biword(const SparseMatrix& a, BiwordVariant v) {
    Biword b;
    b.variant = v;
    for (auto& [k, n] : a.entries())
        for (long long t = 0; t < n; ++t) b.pairs.push_back(k);
    std::stable_sort(b.pairs.begin(), b.pairs.end(), [v](auto x, auto y) { return biword_less(v, x, y); });
    return b;
}

inline SparseMatrix count_pairs(const std::vector<std::pair<int, int>>& pairs) {
    SparseMatrix m;
    for (auto [i, j] : pairs) m.add(i, j, 1);
    return m;
}

inline SparseMatrix from_biword(const Biword& b) {
    for (std::size_t k = 1; k < b.pairs.size(); ++k)
        require(!biword_less(b.variant, b.pairs[k], b.pairs[k - 1]), "from_biword: biword is not sorted");
    return count_pairs(b.pairs);
}

/// The word that index i acts on (i of Omega for i < 0, l of OmegaPrime
/// for i > 0) together with the biword it came from.
inline std::pair<Biword, Word> acting_word(const SparseMatrix& a, int i) {
    if (i < 0) {
        Biword b = to_biword(a, BiwordVariant::Omega);
        Word w = b.top();
        return {std::move(b), std::move(w)};
    }
    Biword b = to_biword(a, BiwordVariant::OmegaPrime);
    Word w = b.bottom();
    return {std::move(b), std::move(w)};
}

/// Rebuilds the matrix after the acting word of `b` was replaced by `w`.
inline SparseMatrix rebuild(const Biword& b, const Word& w, int i) {
    std::vector<std::pair<int, int>> pairs = b.pairs;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (i < 0)
            pairs[k].first = -w.values[k];
        else
            pairs[k].second = w.values[k];
    }
    return count_pairs(pairs);
}

inline std::optional<SparseMatrix> matrix_apply(const SparseMatrix& a, int i, Dir d) {
    if (i == 0) {
        SparseMatrix out = a;
        if (d == Dir::Raise) {
            if (a.at(1, 1) == 0) return std::nullopt;
            out.add(1, 1, -1);
        } else {
            out.add(1, 1, 1);
        }
        return out;
    }
    auto [b, w] = acting_word(a, i);
    if (!word_apply_inplace(w.alphabet, w.values, i, d)) return std::nullopt;
    return rebuild(b, w, i);
}

inline Weight matrix_weight(const SparseMatrix& a) {
    Weight w;
    for (auto& [k, n] : a.entries()) w += (Weight::eps(k.second) - Weight::eps(-k.first)) * n;
    return w;
}

struct MatrixEpsPhi {
    Weight wt;
    long long eps = 0;
    long long phi = 0;
};

inline MatrixEpsPhi weight_eps_phi(const SparseMatrix& a, int i) {
    MatrixEpsPhi r;
    r.wt = matrix_weight(a);
    if (i == 0) {
        r.eps = a.at(1, 1);
    } else {
        auto [b, w] = acting_word(a, i);
        r.eps = word_signature(w.alphabet, w.values, i).eps;
    }
    r.phi = r.wt.pairing(i) + r.eps;
    return r;
}

/// Finite index window [lo, hi].
struct IndexWindow {
    int lo = -1;
    int hi = 1;

    std::vector<int> indices() const {
        std::vector<int> out;
        for (int i = lo; i <= hi; ++i) out.push_back(i);
        return out;
    }
};

/// True iff every raise in the window kills `a`; a nonzero matrix always has a
/// live raise within indices (-max_row .. max_col).
inline bool is_highest(const SparseMatrix& a) {
    const int lo = -std::max(a.max_row(), 1), hi = std::max(a.max_col(), 1);
    for (int i = lo; i <= hi; ++i)
        if (matrix_apply(a, i, Dir::Raise)) return false;
    return true;
}

/// {f_{i1} ... f_{ir} O} with indices in `w`, pruned at entry sum `sum_bound`.
inline std::set<SparseMatrix> closure_from_zero(long long sum_bound, IndexWindow w, int jobs = 1) {
    const std::vector<int> idx = w.indices();
    return bfs_closure<SparseMatrix>(
        {SparseMatrix{}},
        [&](const SparseMatrix& a, std::vector<SparseMatrix>& out) {
            for (int i : idx) {
                auto b = matrix_apply(a, i, Dir::Lower);
                if (b && b->sum() <= sum_bound) out.push_back(std::move(*b));
            }
        },
        jobs);
}

/// Matrices of the symmetric b_inf (epsilon = 1) or c_inf (epsilon = 2) folding.
struct FoldedMatrix {
    SparseMatrix base;
    int epsilon = 1;

    FoldedMatrix() = default;
    FoldedMatrix(SparseMatrix m, int e) : base(std::move(m)), epsilon(e) {
        require(e == 1 || e == 2, "folded matrix epsilon must be 1 or 2");
        require(base.is_symmetric(), "folded matrix must be symmetric");
        for (auto& [k, a] : base.entries())
            if (k.first == k.second) require(a % e == 0, "folded matrix diagonal entries must be divisible by epsilon");
    }

    static bool valid(const SparseMatrix& m, int e) {
        if (!m.is_symmetric()) return false;
        for (auto& [k, a] : m.entries())
            if (k.first == k.second && a % e != 0) return false;
        return true;
    }

    bool operator==(const FoldedMatrix&) const = default;
};

/// E_0 = e_0^eps, E_i = e_i e_{-i}; F_0 = f_0^eps, F_i = f_i f_{-i} (i >= 1).
inline std::optional<FoldedMatrix> folded_apply(const FoldedMatrix& m, int i, Dir d) {
    require(i >= 0, "folded operators take indices i >= 0");
    std::optional<SparseMatrix> cur = m.base;
    if (i == 0) {
        for (int k = 0; k < m.epsilon && cur; ++k) cur = matrix_apply(*cur, 0, d);
    } else {
        cur = matrix_apply(*cur, -i, d);
        if (cur) cur = matrix_apply(*cur, i, d);
    }
    if (!cur) return std::nullopt;
    return FoldedMatrix(std::move(*cur), m.epsilon);
}

}  // namespace flagrsk
