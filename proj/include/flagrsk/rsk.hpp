#pragma once

// Anti-normal column insertion and the map kappa = (P, Q) with its inverse.

#include <algorithm>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "tableau.hpp"

namespace flagrsk {

struct Insertion {
    AntiTableau tableau;
    std::vector<AntiTableau::BumpStep> path;
};

inline Insertion insert(const AntiTableau& t, const Letter& a) {
    require(a.alphabet == t.alphabet(), "insert: letter alphabet differs from tableau alphabet");
    Insertion r{t, {}};
    r.path = r.tableau.insert_key(order_key(a));
    return r;
}

struct RskPair {
    AntiTableau p;  ///< over BnegDual
    AntiTableau q;  ///< over Bpos; skew (tau/mu)^pi after skew insertion

    bool operator==(const RskPair&) const = default;
    auto operator<=>(const RskPair&) const = default;
};

/// P(S <- A) and its recording tableau Q(S <- A), of shape (tau/mu)^pi.
inline RskPair skew_insert(const AntiTableau& s, const SparseMatrix& a) {
    require(s.alphabet() == Alphabet::BnegDual, "skew_insert: S must be over BnegDual");
    for (int k = 0; k < s.num_columns(); ++k)
        require(s.inner_height(k) == 0, "skew_insert: S must have anti-normal (non-skew) shape");
    RskPair r{s, AntiTableau(Alphabet::Bpos)};
    std::vector<int> inner;
    for (int k = 0; k < s.num_columns(); ++k) inner.push_back(s.height(k));
    r.q = AntiTableau(Alphabet::Bpos, std::vector<std::vector<int>>(inner.size()), inner);
    const Biword b = to_biword(a, BiwordVariant::Omega);
    for (auto it = b.pairs.rbegin(); it != b.pairs.rend(); ++it) {
        const auto path = r.p.insert_key(it->first);
        r.q.push_top(path.back().column, it->second);
    }
    return r;
}

inline RskPair kappa(const SparseMatrix& a) { return skew_insert(AntiTableau(Alphabet::BnegDual), a); }

struct SkewPreimage {
    SparseMatrix a;
    AntiTableau s;
};

/// Undoes skew_insert: peels Q's cells from the last insertion back to the first.
inline SkewPreimage skew_uninsert(const AntiTableau& p, const AntiTableau& q) {
    require(p.alphabet() == Alphabet::BnegDual, "P must be over BnegDual");
    require(q.alphabet() == Alphabet::Bpos, "Q must be over Bpos");
    require(p.is_semistandard() && q.is_semistandard(), "P and Q must be semistandard");
    require(p.outer_shape() == q.outer_shape(), "P and Q must have the same outer shape");
    for (int k = 0; k < p.num_columns(); ++k) require(p.inner_height(k) == 0, "P must have anti-normal shape");
    AntiTableau pp = p, qq = q;
    SparseMatrix a;
    while (qq.size() > 0) {
        // The last insertion recorded the smallest label; among equal labels
        // the leftmost cell was created last.
        int best = -1;
        for (int k = 0; k < qq.num_columns(); ++k) {
            auto t = qq.top(k);
            if (t && (best < 0 || *t <= *qq.top(best))) best = k;
        }
        const int j = qq.pop_top(best);
        const int i = pp.reverse_bump(best);
        a.add(i, j, 1);
    }
    return {a, pp};
}

inline SparseMatrix kappa_inverse(const AntiTableau& p, const AntiTableau& q) {
    for (int k = 0; k < q.num_columns(); ++k) require(q.inner_height(k) == 0, "Q must have anti-normal shape");
    return skew_uninsert(p, q).a;
}

inline SparseMatrix kappa_inverse(const RskPair& pq) { return kappa_inverse(pq.p, pq.q); }

/// c(A): number of columns of P(A).
inline int column_count(const SparseMatrix& a) { return kappa(a).p.num_columns(); }

/// The tableau S with kappa(base) = (-S^v, S) for a symmetric matrix.
inline AntiTableau kappa_hat(const FoldedMatrix& m) {
    const RskPair pq = kappa(m.base);
    require(pq.p.columns() == pq.q.columns(), "kappa_hat: P is not the mirror of Q");
    const Partition nu = pq.q.outer_shape();
    for (int part : nu.parts()) require(part % m.epsilon == 0, "kappa_hat: shape rows not divisible by epsilon");
    return pq.q;
}

/// -S^v: each entry j of S becomes -j^v.
inline AntiTableau mirror_dual(const AntiTableau& s) {
    require(s.alphabet() == Alphabet::Bpos, "mirror_dual expects a tableau over Bpos");
    return AntiTableau(Alphabet::BnegDual, s.columns(), s.inner_heights());
}

}  // namespace flagrsk
