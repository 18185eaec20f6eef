#pragma once

// Grassmannian elements w <-> lambda(w), reduced words from standard
// tableaux, and the Demazure crystals M_w, T_w and their folded versions.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bitableau.hpp"
#include "closure.hpp"

namespace flagrsk {

enum class Group { GlInf, Hat };

struct GrassmannianElement {
    Partition shape;
    Group group = Group::GlInf;
    int epsilon = 1;  ///< only meaningful for Group::Hat

    GrassmannianElement() = default;
    explicit GrassmannianElement(Partition lam, Group g = Group::GlInf, int eps = 1)
        : shape(std::move(lam)), group(g), epsilon(eps) {
        if (g == Group::Hat) {
            require(shape.is_self_conjugate(), "hat Grassmannian element needs a self-conjugate shape");
            require(eps == 1 || eps == 2, "epsilon must be 1 or 2");
        }
    }

    int length() const { return shape.size(); }
};

/// Simple-reflection subscripts [a_l, ..., a_1] of w = s_{a_l} ... s_{a_1}.
/// The last entry acts first.
struct ReducedWord {
    std::vector<int> indices;
    bool operator==(const ReducedWord&) const = default;
};

/// Standard tableau as rows top to bottom.
using StandardTableau = std::vector<std::vector<int>>;

inline bool is_standard(const StandardTableau& t, const Partition& lam) {
    if (static_cast<int>(t.size()) != lam.length()) return false;
    std::vector<int> seen(lam.size() + 1, 0);
    for (int i = 0; i < lam.length(); ++i) {
        if (static_cast<int>(t[i].size()) != lam.part(i + 1)) return false;
        for (int j = 0; j < lam.part(i + 1); ++j) {
            const int v = t[i][j];
            if (v < 1 || v > lam.size() || seen[v]++) return false;
            if (j > 0 && t[i][j - 1] >= v) return false;
            if (i > 0 && t[i - 1][j] >= v) return false;
        }
    }
    return true;
}

inline StandardTableau row_reading_standard(const Partition& lam) {
    StandardTableau t;
    int n = 0;
    for (int p : lam.parts()) {
        t.emplace_back();
        for (int j = 0; j < p; ++j) t.back().push_back(++n);
    }
    return t;
}

inline StandardTableau column_reading_standard(const Partition& lam) {
    StandardTableau t;
    for (int p : lam.parts()) t.emplace_back(p, 0);
    const Partition c = conjugate(lam);
    int n = 0;
    for (int j = 0; j < c.length(); ++j)
        for (int i = 0; i < c.part(j + 1); ++i) t[i][j] = ++n;
    return t;
}

inline ReducedWord reduced_word(const GrassmannianElement& w, const StandardTableau& t) {
    require(is_standard(t, w.shape), "reduced_word: tableau is not standard of shape lambda(w)");
    std::vector<int> by_entry(w.length() + 1, 0);
    for (int i = 0; i < w.shape.length(); ++i)
        for (int j = 0; j < w.shape.part(i + 1); ++j) by_entry[t[i][j]] = residue({i + 1, j + 1});
    ReducedWord r;
    for (int k = w.length(); k >= 1; --k) r.indices.push_back(by_entry[k]);
    return r;
}

inline ReducedWord reduced_word(const GrassmannianElement& w) { return reduced_word(w, row_reading_standard(w.shape)); }

/// Word in the folded generators s^_0 = s_0, s^_i = s_i s_{-i}, for a
/// self-conjugate shape: strip a corner on or above the diagonal together
/// with its mirror image, record |residue|, repeat.
inline ReducedWord hat_reduced_word(const GrassmannianElement& w) {
    require(w.shape.is_self_conjugate(), "hat word needs a self-conjugate shape");
    Partition lam = w.shape;
    std::vector<int> removed;
    while (!lam.empty()) {
        std::optional<Cell> pick;
        for (const Cell& c : removable_corners(lam))
            if (c.col >= c.row) pick = c;
        require(pick.has_value(), "hat word: no corner on or above the diagonal");
        lam = remove_cell(lam, *pick);
        if (pick->col > pick->row) lam = remove_cell(lam, Cell{pick->col, pick->row});
        removed.push_back(residue(*pick));
    }
    return {removed};
}

inline bool bruhat_leq(const GrassmannianElement& a, const GrassmannianElement& b) {
    require(a.group == b.group, "bruhat_leq: elements of different groups");
    return b.shape.contains(a.shape);
}

inline bool in_Mw(const SparseMatrix& a, const GrassmannianElement& w) {
    return w.shape.contains(lambda_of_support(a.support()));
}

/// { x_{i_1}^{m_1} ... x_{i_r}^{m_r} seed }: the last word index acts first.
/// `apply` returns the lowered element or nullopt; `keep` prunes the search.
template <class T, class Apply, class Keep>
std::set<T> demazure_closure(const T& seed, const ReducedWord& word, Apply apply, Keep keep, int jobs = 1) {
    std::set<T> cur{seed};
    for (auto it = word.indices.rbegin(); it != word.indices.rend(); ++it) {
        const int i = *it;
        std::vector<T> seeds(cur.begin(), cur.end());
        cur = bfs_closure<T>(
            seeds,
            [&](const T& x, std::vector<T>& out) {
                auto y = apply(x, i);
                if (y && keep(*y)) out.push_back(std::move(*y));
            },
            jobs);
    }
    return cur;
}

inline std::set<SparseMatrix> generate_Mw(const ReducedWord& word, long long sum_bound, int jobs = 1) {
    return demazure_closure<SparseMatrix>(
        SparseMatrix{}, word, [](const SparseMatrix& a, int i) { return matrix_apply(a, i, Dir::Lower); },
        [sum_bound](const SparseMatrix& a) { return a.sum() <= sum_bound; }, jobs);
}

inline std::set<SparseMatrix> generate_Mw(const GrassmannianElement& w, long long sum_bound, int jobs = 1) {
    return generate_Mw(reduced_word(w), sum_bound, jobs);
}

/// M_{mu,nu,w}: the same closure started at O_{mu,nu}; bounded by the entry sum of A.
inline std::set<VermaTriple> generate_Mw_triples(const Partition& mu, const Partition& nu, const ReducedWord& word,
                                                 long long sum_bound, int jobs = 1) {
    return demazure_closure<VermaTriple>(
        VermaTriple::origin(mu, nu), word, [](const VermaTriple& v, int i) { return triple_apply(v, i, Dir::Lower); },
        [sum_bound](const VermaTriple& v) { return v.a.sum() <= sum_bound; }, jobs);
}

/// {A : lambda(supp A) in lambda(w), sum A <= bound}, by direct enumeration.
/// supp A need not lie inside lambda(w), but its hull corner is (alpha_1,
/// beta_1), so it lies in the l(lambda) x lambda_1 box.
inline std::set<SparseMatrix> characterize_Mw(const GrassmannianElement& w, long long sum_bound) {
    std::vector<Cell> cells;
    for (int i = 1; i <= w.shape.length(); ++i)
        for (int j = 1; j <= w.shape.part(1); ++j) cells.push_back({i, j});
    std::set<SparseMatrix> out;
    SparseMatrix cur;
    auto rec = [&](auto&& self, std::size_t k, long long left) -> void {
        if (k == cells.size()) {
            if (in_Mw(cur, w)) out.insert(cur);
            return;
        }
        for (long long a = 0; a <= left; ++a) {
            cur.set(cells[k].row, cells[k].col, a);
            self(self, k + 1, left - a);
        }
        cur.set(cells[k].row, cells[k].col, 0);
    };
    rec(rec, 0, sum_bound);
    return out;
}

struct FlagData {
    std::vector<int> alpha;
    std::vector<int> beta;
    std::vector<int> phi;  ///< alpha reversed
    std::vector<int> psi;  ///< beta reversed
    int d = 0;
};

inline FlagData flag_data(const Partition& lam) {
    const FrobeniusForm f = frobenius_encode(lam);
    FlagData r{f.alpha, f.beta, f.alpha, f.beta, f.diagonal()};
    std::reverse(r.phi.begin(), r.phi.end());
    std::reverse(r.psi.begin(), r.psi.end());
    return r;
}

/// Flag condition on an anti-normal tableau: row i from the bottom has keys
/// at most flag[d - i] (1-based flag[d - i + 1]).
inline bool satisfies_flag(const AntiTableau& t, const std::vector<int>& flag) {
    const auto rows = t.rows_bottom_up();
    if (rows.size() > flag.size()) return false;
    const int d = static_cast<int>(flag.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int v : rows[i])
            if (std::abs(v) > flag[d - 1 - i]) return false;
    return true;
}

/// All (S, T) with l(nu) <= d(w), |nu| <= size_bound; when `box` is given,
/// nu_1 <= box as well.
inline std::set<BiTableau> enumerate_Tw(const GrassmannianElement& w, int size_bound,
                                        std::optional<int> box = std::nullopt) {
    const FlagData f = flag_data(w.shape);
    std::set<BiTableau> out;
    for (int n = 0; n <= size_bound; ++n)
        for (const Partition& nu : partitions_of(n)) {
            if (nu.length() > f.d || (box && nu.part(1) > *box)) continue;
            const auto ss = enumerate_anti(Alphabet::BnegDual, nu, [&](int r) { return f.alpha[r - 1]; });
            const auto ts = enumerate_anti(Alphabet::Bpos, nu, [&](int r) { return f.beta[r - 1]; });
            for (const auto& s : ss)
                for (const auto& t : ts) out.emplace(s, t);
        }
    return out;
}

/// B_w(n Lambda_0) through its kappa-side encoding: nu inside (n^d).
inline std::set<BiTableau> enumerate_Bw(const GrassmannianElement& w, int n, int size_bound) {
    return enumerate_Tw(w, size_bound, n);
}

inline bool hat_in_Mw(const FoldedMatrix& m, const GrassmannianElement& w) {
    require(w.shape.is_self_conjugate(), "hat_in_Mw: shape must be self-conjugate");
    return in_Mw(m.base, w);
}

/// F-closure of O along a folded word.
inline std::set<SparseMatrix> hat_generate(const ReducedWord& hat_word, int epsilon, long long sum_bound,
                                           int jobs = 1) {
    require(epsilon == 1 || epsilon == 2, "epsilon must be 1 or 2");
    return demazure_closure<SparseMatrix>(
        SparseMatrix{}, hat_word,
        [epsilon](const SparseMatrix& a, int i) -> std::optional<SparseMatrix> {
            auto r = folded_apply(FoldedMatrix(a, epsilon), i, Dir::Lower);
            if (!r) return std::nullopt;
            return r->base;
        },
        [sum_bound](const SparseMatrix& a) { return a.sum() <= sum_bound; }, jobs);
}

inline std::set<SparseMatrix> hat_generate(const GrassmannianElement& w, long long sum_bound, int jobs = 1) {
    require(w.group == Group::Hat, "hat_generate: element is not in the folded group");
    return hat_generate(hat_reduced_word(w), w.epsilon, sum_bound, jobs);
}

/// Symmetric matrices of M_w with epsilon-divisible diagonal and bounded sum.
inline std::set<SparseMatrix> hat_characterize(const GrassmannianElement& w, int epsilon, long long sum_bound) {
    std::set<SparseMatrix> out;
    for (const SparseMatrix& a : characterize_Mw(w, sum_bound))
        if (FoldedMatrix::valid(a, epsilon)) out.insert(a);
    return out;
}

/// Tableaux over Bpos of shape nu^pi, epsilon | nu, l(nu) <= d, flagged by
/// phi(w), with |nu| <= size_bound (and nu_1 <= box if given).
inline std::set<AntiTableau> hat_enumerate_image(const GrassmannianElement& w, int epsilon, int size_bound,
                                                 std::optional<int> box = std::nullopt) {
    const FlagData f = flag_data(w.shape);
    std::set<AntiTableau> out;
    for (int n = 0; n <= size_bound; ++n)
        for (const Partition& nu : partitions_of(n)) {
            if (nu.length() > f.d || (box && nu.part(1) > *box)) continue;
            if (std::any_of(nu.parts().begin(), nu.parts().end(), [&](int p) { return p % epsilon != 0; })) continue;
            for (auto& t : enumerate_anti(Alphabet::Bpos, nu, [&](int r) { return f.alpha[r - 1]; })) out.insert(t);
        }
    return out;
}

}  // namespace flagrsk
