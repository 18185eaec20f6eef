#pragma once

// The crystal of same-shape bitableaux (S, T) with the 0-signature rule, and
// the triples (A, S_<0, S_>0) of the generalized Verma crystals M_{mu,nu}.

#include <optional>
#include <string>
#include <vector>

#include "rsk.hpp"

namespace flagrsk {

struct BiTableau {
    AntiTableau s{Alphabet::BnegDual};
    AntiTableau t{Alphabet::Bpos};

    BiTableau() = default;
    BiTableau(AntiTableau s_, AntiTableau t_) : s(std::move(s_)), t(std::move(t_)) {
        require(s.alphabet() == Alphabet::BnegDual, "bitableau S must be over BnegDual");
        require(t.alphabet() == Alphabet::Bpos, "bitableau T must be over Bpos");
        require(s.outer_shape() == t.outer_shape(), "bitableau S and T must have the same shape");
        for (int k = 0; k < s.num_columns(); ++k)
            require(s.inner_height(k) == 0 && t.inner_height(k) == 0, "bitableau shapes must be anti-normal");
    }
    explicit BiTableau(const RskPair& pq) : BiTableau(pq.p, pq.q) {}

    Partition shape() const { return s.outer_shape(); }
    int num_columns() const { return s.num_columns(); }
    Weight weight() const { return s.weight() + t.weight(); }

    bool operator==(const BiTableau&) const = default;
    auto operator<=>(const BiTableau&) const = default;
};

enum class Sign { Plus, Minus, Dot };

/// signs[k] is sigma_{k+1}: column k+1 from the right; the last slot is the
/// virtual empty column.
using SignSequence = std::vector<Sign>;

inline SignSequence raw_zero_signature(const BiTableau& b) {
    SignSequence sig;
    for (int k = 0; k < b.num_columns(); ++k) {
        const int sk = *b.s.top(k), tk = *b.t.top(k);
        if (sk > 1 && tk > 1)
            sig.push_back(Sign::Plus);
        else if (sk == 1 && tk == 1)
            sig.push_back(Sign::Minus);
        else
            sig.push_back(Sign::Dot);
    }
    sig.push_back(Sign::Plus);
    return sig;
}

/// Cancels each (-, +) pair with the minus to the left (larger k) and only
/// dots between, until no minus is left of a plus. Scans right to left, so a
/// plus waits on a stack for the nearest unmatched minus to its left.
inline SignSequence reduce_signature(SignSequence sig) {
    std::vector<int> open;
    for (int k = 0; k < static_cast<int>(sig.size()); ++k) {
        if (sig[k] == Sign::Plus) {
            open.push_back(k);
        } else if (sig[k] == Sign::Minus && !open.empty()) {
            sig[open.back()] = Sign::Dot;
            sig[k] = Sign::Dot;
            open.pop_back();
        }
    }
    return sig;
}

inline SignSequence zero_signature(const BiTableau& b) { return reduce_signature(raw_zero_signature(b)); }

/// Column index (0-based from the right) of the 0-good minus, or -1.
inline int good_minus(const SignSequence& reduced) {
    for (int k = static_cast<int>(reduced.size()) - 1; k >= 0; --k)
        if (reduced[k] == Sign::Minus) return k;
    return -1;
}

/// Column index of the 0-good plus, or -1.
inline int good_plus(const SignSequence& reduced) {
    for (int k = 0; k < static_cast<int>(reduced.size()); ++k)
        if (reduced[k] == Sign::Plus) return k;
    return -1;
}

inline std::string signature_text(const SignSequence& sig) {
    // Leftmost column first; "... +" stands for the empty columns beyond
    // the virtual slot.
    std::string out = "(... +";
    for (int k = static_cast<int>(sig.size()) - 1; k >= 0; --k) {
        out += ", ";
        out += sig[k] == Sign::Plus ? "+" : sig[k] == Sign::Minus ? "-" : ".";
    }
    return out + ")";
}

inline std::optional<BiTableau> bt_apply(const BiTableau& b, int i, Dir d) {
    if (i < 0) {
        auto w = word_apply(b.s.reading_word(), i, d);
        if (!w) return std::nullopt;
        return BiTableau(b.s.with_word(*w), b.t);
    }
    if (i > 0) {
        auto w = word_apply(b.t.reading_word(), i, d);
        if (!w) return std::nullopt;
        return BiTableau(b.s, b.t.with_word(*w));
    }
    const SignSequence red = zero_signature(b);
    BiTableau out = b;
    if (d == Dir::Raise) {
        const int k = good_minus(red);
        if (k < 0) return std::nullopt;
        out.s.pop_top(k);
        out.t.pop_top(k);
    } else {
        const int k = good_plus(red);
        out.s.push_top(k, 1);
        out.t.push_top(k, 1);
    }
    require(out.s.is_semistandard() && out.t.is_semistandard(), "0-operator left the bitableau crystal");
    return out;
}

struct BtEpsPhi {
    Weight wt;
    long long eps = 0;
    long long phi = 0;
};

inline BtEpsPhi bt_eps_phi(const BiTableau& b, int i) {
    BtEpsPhi r;
    r.wt = b.weight();
    if (i < 0)
        r.eps = word_signature(Alphabet::BnegDual, b.s.reading_word().values, i).eps;
    else if (i > 0)
        r.eps = word_signature(Alphabet::Bpos, b.t.reading_word().values, i).eps;
    else
        for (Sign x : zero_signature(b)) r.eps += x == Sign::Minus;
    r.phi = r.wt.pairing(i) + r.eps;
    return r;
}

/// Element (A, S_<0, S_>0) of M_{mu,nu}.
struct VermaTriple {
    SparseMatrix a;
    AntiTableau s_neg{Alphabet::BnegDual};
    NormalTableau s_pos;

    VermaTriple() = default;
    VermaTriple(SparseMatrix a_, AntiTableau sn, NormalTableau sp)
        : a(std::move(a_)), s_neg(std::move(sn)), s_pos(std::move(sp)) {
        require(s_neg.alphabet() == Alphabet::BnegDual, "S_<0 must be over BnegDual");
        require(s_pos.alphabet() == Alphabet::Bpos, "S_>0 must be over Bpos");
    }

    /// O_{mu,nu} = (O, H_{mu^pi}, H_nu).
    static VermaTriple origin(const Partition& mu, const Partition& nu) {
        return {SparseMatrix{}, AntiTableau::highest(Alphabet::BnegDual, mu), NormalTableau::highest(nu)};
    }

    Partition mu() const { return s_neg.outer_shape(); }
    Partition nu() const { return s_pos.shape(); }
    Weight weight() const { return matrix_weight(a) + s_neg.weight() + s_pos.weight(); }

    bool operator==(const VermaTriple&) const = default;
    auto operator<=>(const VermaTriple&) const = default;
};

inline std::optional<VermaTriple> triple_apply(const VermaTriple& v, int i, Dir d) {
    if (i == 0) {
        auto a = matrix_apply(v.a, 0, d);
        if (!a) return std::nullopt;
        return VermaTriple(std::move(*a), v.s_neg, v.s_pos);
    }
    // The tensor factor A contributes the word it is acted on through.
    auto [b, w] = acting_word(v.a, i);
    const std::size_t n = w.values.size();
    const Word tail = i < 0 ? v.s_neg.reading_word() : v.s_pos.reading_word();
    w.values.insert(w.values.end(), tail.values.begin(), tail.values.end());
    if (!word_apply_inplace(w.alphabet, w.values, i, d)) return std::nullopt;
    Word head{w.alphabet, std::vector<int>(w.values.begin(), w.values.begin() + n)};
    Word rest{w.alphabet, std::vector<int>(w.values.begin() + n, w.values.end())};
    SparseMatrix a = rebuild(b, head, i);
    if (i < 0) return VermaTriple(std::move(a), v.s_neg.with_word(rest), v.s_pos);
    return VermaTriple(std::move(a), v.s_neg, v.s_pos.with_word(rest));
}

inline BtEpsPhi triple_eps_phi(const VermaTriple& v, int i) {
    BtEpsPhi r;
    r.wt = v.weight();
    if (i == 0) {
        r.eps = v.a.at(1, 1);
    } else {
        auto [b, w] = acting_word(v.a, i);
        const Word tail = i < 0 ? v.s_neg.reading_word() : v.s_pos.reading_word();
        w.values.insert(w.values.end(), tail.values.begin(), tail.values.end());
        r.eps = word_signature(w.alphabet, w.values, i).eps;
    }
    r.phi = r.wt.pairing(i) + r.eps;
    return r;
}

/// Whether A lies in the image of Psi_n, i.e. c(A) <= n.
inline bool psi_image_test(const SparseMatrix& a, int n) { return column_count(a) <= n; }

/// Finite encoding (w^v_<0, w_>0) of the B(n Lambda_0) element mapped to A.
inline RskPair psi_n_decode(const SparseMatrix& a, int n) {
    require(psi_image_test(a, n), "outside Im Psi_n: c(A) exceeds n");
    return kappa(a);
}

struct PsiMuNuEncoding {
    AntiTableau w_neg_dual;  ///< P(S_<0 <- A), anti-normal shape eta^pi
    AntiTableau w_minus;     ///< Q(S_<0 <- A), skew shape (eta/mu)^pi
    NormalTableau w_plus;    ///< S_>0
};

inline PsiMuNuEncoding psi_munu_decode(const VermaTriple& v, int n) {
    require(n >= v.mu().part(1) + v.nu().part(1), "outside Im Psi_{mu,nu;n}: n < mu_1 + nu_1");
    RskPair pq = skew_insert(v.s_neg, v.a);
    require(pq.p.num_columns() <= n, "outside Im Psi_{mu,nu;n}: P(S <- A) has more than n columns");
    return {std::move(pq.p), std::move(pq.q), v.s_pos};
}

/// Inverse of psi_munu_decode on its image.
inline VermaTriple psi_munu_encode(const PsiMuNuEncoding& e) {
    SkewPreimage pre = skew_uninsert(e.w_neg_dual, e.w_minus);
    return {std::move(pre.a), std::move(pre.s), e.w_plus};
}

}  // namespace flagrsk
