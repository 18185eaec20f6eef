#pragma once

// Exact polynomials: truncated power series in finitely many variables and
// Laurent polynomials over the weight lattice. Flagged Schur functions,
// Demazure operators and both sides of the flagged Cauchy identities.

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "demazure.hpp"

namespace flagrsk {

using BigInt = boost::multiprecision::cpp_int;
using Monomial = std::vector<int>;

inline std::string big_to_string(const BigInt& b) { return b.str(); }

/// Power series in `nvars` variables with every term of total degree > cap dropped.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    TruncatedSeries(int nvars, int cap) : nvars_(nvars), cap_(cap) {
        require(nvars >= 0 && cap >= 0, "series needs nonnegative variable count and cap");
    }

    static TruncatedSeries one(int nvars, int cap) {
        TruncatedSeries s(nvars, cap);
        s.add_term(Monomial(nvars, 0), 1);
        return s;
    }

    static TruncatedSeries monomial(int nvars, int cap, const Monomial& m, const BigInt& c = 1) {
        TruncatedSeries s(nvars, cap);
        s.add_term(m, c);
        return s;
    }

    /// m / (1 - m) = m + m^2 + ..., truncated.
    static TruncatedSeries geometric_tail(int nvars, int cap, const Monomial& m) {
        TruncatedSeries s(nvars, cap);
        const int d = degree(m);
        require(d > 0, "geometric_tail needs a nonconstant monomial");
        Monomial cur = m;
        for (int k = 1; k * d <= cap; ++k) {
            s.add_term(cur, 1);
            for (int v = 0; v < nvars; ++v) cur[v] += m[v];
        }
        return s;
    }

    static int degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

    int nvars() const { return nvars_; }
    int cap() const { return cap_; }
    const std::map<Monomial, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const BigInt& c) {
        require(static_cast<int>(m.size()) == nvars_, "monomial has the wrong number of variables");
        for (int e : m) require(e >= 0, "series exponents must be nonnegative");
        if (degree(m) > cap_ || c == 0) return;
        BigInt& slot = terms_[m];
        slot += c;
        if (slot == 0) terms_.erase(m);
    }

    BigInt coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        check_compatible(o);
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        check_compatible(o);
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_compatible(b);
        TruncatedSeries r(a.nvars_, a.cap_);
        Monomial m(a.nvars_);
        for (auto& [ma, ca] : a.terms_) {
            const int da = degree(ma);
            for (auto& [mb, cb] : b.terms_) {
                if (da + degree(mb) > a.cap_) continue;
                for (int v = 0; v < a.nvars_; ++v) m[v] = ma[v] + mb[v];
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    friend TruncatedSeries operator*(TruncatedSeries a, const BigInt& k) {
        if (k == 0) return TruncatedSeries(a.nvars_, a.cap_);
        for (auto& [_, c] : a.terms_) c *= k;
        return a;
    }

    bool operator==(const TruncatedSeries& o) const {
        return nvars_ == o.nvars_ && cap_ == o.cap_ && terms_ == o.terms_;
    }

    /// "3*x1^2*y2 + ..." in the given variable names, sorted monomial order.
    std::string to_string(const std::vector<std::string>& names) const {
        require(static_cast<int>(names.size()) == nvars_, "wrong number of variable names");
        std::string out;
        for (auto& [m, c] : terms_) {
            std::string mono;
            for (int v = 0; v < nvars_; ++v) {
                if (m[v] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += names[v];
                if (m[v] > 1) mono += "^" + std::to_string(m[v]);
            }
            BigInt a = c < 0 ? BigInt(-c) : c;
            std::string term = mono.empty() ? a.str() : (a == 1 ? mono : a.str() + "*" + mono);
            if (out.empty())
                out = (c < 0 ? "-" : "") + term;
            else
                out += (c < 0 ? " - " : " + ") + term;
        }
        return out.empty() ? "0" : out;
    }

private:
    void check_compatible(const TruncatedSeries& o) const {
        require(nvars_ == o.nvars_ && cap_ == o.cap_, "series have different variables or caps");
    }

    int nvars_ = 0;
    int cap_ = 0;
    std::map<Monomial, BigInt> terms_;
};

/// Names x1..xm then y1..yn.
inline std::vector<std::string> xy_names(int m, int n) {
    std::vector<std::string> out;
    for (int i = 1; i <= m; ++i) out.push_back("x" + std::to_string(i));
    for (int j = 1; j <= n; ++j) out.push_back("y" + std::to_string(j));
    return out;
}

inline std::vector<std::string> indexed_names(const std::string& stem, int n) {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
    return out;
}

/// Which block of a series' variables a symmetric function lives in.
struct VarBlock {
    int nvars = 0;   ///< total variables in the series
    int offset = 0;  ///< index of the first variable of the block
    int cap = 0;
};

/// h_k in the first `count` variables of the block.
inline TruncatedSeries complete_h(int k, int count, const VarBlock& b) {
    TruncatedSeries s(b.nvars, b.cap);
    if (k < 0) return s;
    if (k == 0) return TruncatedSeries::one(b.nvars, b.cap);
    if (count <= 0 || k > b.cap) return s;
    require(b.offset + count <= b.nvars, "complete_h: block exceeds series variables");
    Monomial m(b.nvars, 0);
    auto rec = [&](auto&& self, int v, int left) -> void {
        if (v == count - 1) {
            m[b.offset + v] = left;
            s.add_term(m, 1);
            m[b.offset + v] = 0;
            return;
        }
        for (int e = 0; e <= left; ++e) {
            m[b.offset + v] = e;
            self(self, v + 1, left - e);
        }
        m[b.offset + v] = 0;
    };
    rec(rec, 0, k);
    return s;
}

/// Single-variable shortcut: h_k in variables 1..vars of a series of exactly that many variables.
inline TruncatedSeries complete_h(int k, int vars, int cap) { return complete_h(k, vars, VarBlock{vars, 0, cap}); }

/// Leibniz expansion; matrices here are at most a few rows.
inline TruncatedSeries determinant(const std::vector<std::vector<TruncatedSeries>>& m, int nvars, int cap) {
    const int d = static_cast<int>(m.size());
    TruncatedSeries out(nvars, cap);
    if (d == 0) return TruncatedSeries::one(nvars, cap);
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (int a = 0; a < d; ++a)
            for (int b = a + 1; b < d; ++b) inversions += perm[a] > perm[b];
        TruncatedSeries term = TruncatedSeries::one(nvars, cap);
        for (int r = 0; r < d && !term.is_zero(); ++r) term = term * m[r][perm[r]];
        if (inversions % 2) out -= term;
        else out += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// s_{lambda/mu}(X_phi) = det(h_{lambda_i - mu_j - i + j}(X_{phi_i})).
inline TruncatedSeries flagged_schur_det(const SkewShape& sh, const std::vector<int>& phi, const VarBlock& b) {
    const int d = static_cast<int>(phi.size());
    require(sh.outer.length() <= d && sh.inner.length() <= d, "flagged_schur: shape longer than the flag");
    std::vector<std::vector<TruncatedSeries>> m(d);
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            m[i - 1].push_back(complete_h(sh.outer.part(i) - sh.inner.part(j) - i + j, phi[i - 1], b));
    return determinant(m, b.nvars, b.cap);
}

/// Sum of x^T over semistandard T of shape lambda/mu with row i entries <= phi_i.
inline TruncatedSeries flagged_schur_tableaux(const SkewShape& sh, const std::vector<int>& phi, const VarBlock& b) {
    const int d = static_cast<int>(phi.size());
    require(sh.outer.length() <= d && sh.inner.length() <= d, "flagged_schur: shape longer than the flag");
    TruncatedSeries out(b.nvars, b.cap);
    std::vector<Cell> cells;
    for (int i = 1; i <= sh.outer.length(); ++i)
        for (int j = sh.inner.part(i) + 1; j <= sh.outer.part(i); ++j) cells.push_back({i, j});
    std::map<Cell, int> fill;
    Monomial m(b.nvars, 0);
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            out.add_term(m, 1);
            return;
        }
        const Cell c = cells[k];
        int lo = 1;
        if (auto it = fill.find({c.row, c.col - 1}); it != fill.end()) lo = std::max(lo, it->second);
        if (auto it = fill.find({c.row - 1, c.col}); it != fill.end()) lo = std::max(lo, it->second + 1);
        for (int v = lo; v <= phi[c.row - 1]; ++v) {
            require(b.offset + v - 1 < b.nvars, "flagged_schur: flag exceeds series variables");
            fill[c] = v;
            ++m[b.offset + v - 1];
            self(self, k + 1);
            --m[b.offset + v - 1];
        }
        fill.erase(c);
    };
    rec(rec, 0);
    return out;
}

/// s^_nu(X_alpha) = det(h_{nu_i - i + j}(X_{alpha_j})).
inline TruncatedSeries s_hat(const Partition& nu, const std::vector<int>& alpha, const VarBlock& b) {
    const int d = static_cast<int>(alpha.size());
    require(nu.length() <= d, "s_hat: l(nu) exceeds the flag length");
    std::vector<std::vector<TruncatedSeries>> m(d);
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) m[i - 1].push_back(complete_h(nu.part(i) - i + j, alpha[j - 1], b));
    return determinant(m, b.nvars, b.cap);
}

/// Anti-normal tableau sum: row i from the bottom of nu^pi bounded by alpha_i.
inline TruncatedSeries s_hat_tableaux(const Partition& nu, const std::vector<int>& alpha, const VarBlock& b) {
    require(nu.length() <= static_cast<int>(alpha.size()), "s_hat: l(nu) exceeds the flag length");
    TruncatedSeries out(b.nvars, b.cap);
    for (const AntiTableau& t : enumerate_anti(Alphabet::Bpos, nu, [&](int r) { return alpha[r - 1]; })) {
        Monomial m(b.nvars, 0);
        for (const auto& col : t.columns())
            for (int key : col) ++m[b.offset + key - 1];
        out.add_term(m, 1);
    }
    return out;
}

/// Finite Laurent polynomial on the weight lattice.
class WeightPolynomial {
public:
    WeightPolynomial() = default;
    static WeightPolynomial monomial(const Weight& w, const BigInt& c = 1) {
        WeightPolynomial p;
        p.add_term(w, c);
        return p;
    }

    const std::map<Weight, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Weight& w, const BigInt& c) {
        if (c == 0) return;
        BigInt& slot = terms_[w];
        slot += c;
        if (slot == 0) terms_.erase(w);
    }

    BigInt coefficient(const Weight& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    WeightPolynomial& operator+=(const WeightPolynomial& o) {
        for (auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    WeightPolynomial& operator-=(const WeightPolynomial& o) {
        for (auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    friend WeightPolynomial operator+(WeightPolynomial a, const WeightPolynomial& b) { return a += b; }
    friend WeightPolynomial operator-(WeightPolynomial a, const WeightPolynomial& b) { return a -= b; }

    /// Multiplication by e^mu.
    WeightPolynomial shifted(const Weight& mu) const {
        WeightPolynomial r;
        for (auto& [w, c] : terms_) r.add_term(w + mu, c);
        return r;
    }

    bool operator==(const WeightPolynomial&) const = default;

private:
    std::map<Weight, BigInt> terms_;
};

/// e^lambda (1 - e^{-(1+m) alpha}) / (1 - e^{-alpha}) for a monomial with pairing m.
inline WeightPolynomial geometric_string(const Weight& lambda, const BigInt& c, long long m, const Weight& alpha) {
    WeightPolynomial r;
    if (m >= 0) {
        for (long long k = 0; k <= m; ++k) r.add_term(lambda - alpha * k, c);
    } else {
        for (long long k = 1; k <= -m - 1; ++k) r.add_term(lambda + alpha * k, -c);
    }
    return r;
}

inline WeightPolynomial demazure_op(const WeightPolynomial& p, int i) {
    WeightPolynomial r;
    const Weight a = Weight::alpha(i);
    for (auto& [w, c] : p.terms()) r += geometric_string(w, c, w.pairing(i), a);
    return r;
}

/// D_{i_1} ... D_{i_r} p for the word [i_1, ..., i_r]; the last index acts first.
inline WeightPolynomial demazure_word(const WeightPolynomial& p, const ReducedWord& word) {
    WeightPolynomial r = p;
    for (auto it = word.indices.rbegin(); it != word.indices.rend(); ++it) r = demazure_op(r, *it);
    return r;
}

inline Weight hat_alpha(int i, int epsilon) {
    require(i >= 0, "folded indices are nonnegative");
    if (i == 0) return Weight::alpha(0) * epsilon;
    return Weight::alpha(i) + Weight::alpha(-i);
}

/// <w, h^_i>; rejects weights outside the folded lattice.
inline long long hat_pairing(const Weight& w, int i, int epsilon) {
    require(i >= 0, "folded indices are nonnegative");
    if (i == 0) {
        require(w.pairing(0) % epsilon == 0, "weight is not in the folded lattice: <w,h_0> not divisible by epsilon");
        return w.pairing(0) / epsilon;
    }
    require(w.pairing(i) == w.pairing(-i), "weight is not in the folded lattice: <w,h_i> != <w,h_-i>");
    return w.pairing(i);
}

inline WeightPolynomial hat_demazure_op(const WeightPolynomial& p, int i, int epsilon) {
    WeightPolynomial r;
    const Weight a = hat_alpha(i, epsilon);
    for (auto& [w, c] : p.terms()) r += geometric_string(w, c, hat_pairing(w, i, epsilon), a);
    return r;
}

inline WeightPolynomial hat_demazure_word(const WeightPolynomial& p, const ReducedWord& word, int epsilon) {
    WeightPolynomial r = p;
    for (auto it = word.indices.rbegin(); it != word.indices.rend(); ++it) r = hat_demazure_op(r, *it, epsilon);
    return r;
}

/// e^{-eps_{-i}} -> x_i, e^{eps_j} -> y_j in a series over x1..xm, y1..yn.
/// The Lambda_0 coordinate must already be zero.
inline TruncatedSeries specialize_xy(const WeightPolynomial& p, int m, int n, int cap) {
    TruncatedSeries s(m + n, cap);
    for (auto& [w, c] : p.terms()) {
        require(w.lambda0() == 0, "specialize: shift away the Lambda_0 part first");
        Monomial mono(m + n, 0);
        for (auto [k, e] : w.eps_coeffs()) {
            if (k < 0) {
                require(-k <= m && e <= 0, "specialize: weight is not a monomial in x1..xm");
                mono[-k - 1] = static_cast<int>(-e);
            } else {
                require(k <= n && e >= 0, "specialize: weight is not a monomial in y1..yn");
                mono[m + k - 1] = static_cast<int>(e);
            }
        }
        s.add_term(mono, c);
    }
    return s;
}

/// z_i = x_i y_i, i.e. e^{eps_i - eps_{-i}} -> z_i.
inline TruncatedSeries specialize_z(const WeightPolynomial& p, int n, int cap) {
    TruncatedSeries s(n, cap);
    for (auto& [w, c] : p.terms()) {
        require(w.lambda0() == 0, "specialize: shift away the Lambda_0 part first");
        Monomial mono(n, 0);
        for (auto [k, e] : w.eps_coeffs()) {
            const int i = k < 0 ? -k : k;
            require(i <= n && e * (k < 0 ? -1 : 1) >= 0, "specialize: weight is not a monomial in z1..zn");
            require(w.coeff(i) == -w.coeff(-i), "specialize: weight is not symmetric");
            mono[i - 1] = static_cast<int>(k < 0 ? -e : e);
        }
        s.add_term(mono, c);
    }
    return s;
}

/// ch of a finite set of elements: sum of e^{wt(b)}.
template <class Range, class Wt>
WeightPolynomial character(const Range& elements, Wt wt) {
    WeightPolynomial p;
    for (const auto& b : elements) p.add_term(wt(b), 1);
    return p;
}

struct SeriesPair {
    TruncatedSeries lhs;
    TruncatedSeries rhs;
    bool equal() const { return lhs == rhs; }
};

/// Sum over supports S within [1..vars]^2 with lambda(S) in lambda(w) of
/// prod x_i y_j / (1 - x_i y_j), against sum over l(nu) <= d(w) of
/// s^_nu(X_alpha) s^_nu(Y_beta); variables x1..x_vars, y1..y_vars.
inline SeriesPair cauchy_sides(const GrassmannianElement& w, int vars, int cap) {
    const int nv = 2 * vars;
    const FlagData f = flag_data(w.shape);
    require(f.alpha.empty() || (f.alpha[0] <= vars && f.beta[0] <= vars), "cauchy_sides: vars must cover the flags");
    SeriesPair r{TruncatedSeries(nv, cap), TruncatedSeries(nv, cap)};

    std::vector<Cell> cells;
    for (int i = 1; i <= std::min(vars, w.shape.length()); ++i)
        for (int j = 1; j <= std::min(vars, w.shape.part(1)); ++j) cells.push_back({i, j});
    Support s;
    auto rec = [&](auto&& self, std::size_t k, TruncatedSeries acc) -> void {
        if (acc.is_zero()) return;
        if (k == cells.size()) {
            if (w.shape.contains(lambda_of_support(s))) r.lhs += acc;
            return;
        }
        self(self, k + 1, acc);
        Monomial m(nv, 0);
        m[cells[k].row - 1] = 1;
        m[vars + cells[k].col - 1] = 1;
        s.insert(cells[k]);
        self(self, k + 1, acc * TruncatedSeries::geometric_tail(nv, cap, m));
        s.erase(cells[k]);
    };
    rec(rec, 0, TruncatedSeries::one(nv, cap));

    const VarBlock xb{nv, 0, cap}, yb{nv, vars, cap};
    for (int n = 0; 2 * n <= cap; ++n)
        for (const Partition& nu : partitions_of(n)) {
            if (nu.length() > f.d) continue;
            r.rhs += s_hat(nu, f.alpha, xb) * s_hat(nu, f.beta, yb);
        }
    return r;
}

/// Symmetric supports S = S' with prod over diagonal z_i^eps/(1 - z_i^eps)
/// and over pairs i < j of z_i z_j/(1 - z_i z_j), against the sum of
/// s^_nu(Z_alpha) over eps | nu, l(nu) <= d(w).
inline SeriesPair hat_cauchy_sides(const GrassmannianElement& w, int epsilon, int vars, int cap) {
    require(w.shape.is_self_conjugate(), "hat_cauchy_sides: shape must be self-conjugate");
    require(epsilon == 1 || epsilon == 2, "epsilon must be 1 or 2");
    const FlagData f = flag_data(w.shape);
    require(f.alpha.empty() || f.alpha[0] <= vars, "hat_cauchy_sides: vars must cover the flag");
    SeriesPair r{TruncatedSeries(vars, cap), TruncatedSeries(vars, cap)};

    const int side = std::min(vars, w.shape.part(1));
    std::vector<Cell> cells;  // upper triangle, diagonal included
    for (int i = 1; i <= side; ++i)
        for (int j = i; j <= side; ++j) cells.push_back({i, j});
    Support s;
    auto rec = [&](auto&& self, std::size_t k, TruncatedSeries acc) -> void {
        if (acc.is_zero()) return;
        if (k == cells.size()) {
            if (w.shape.contains(lambda_of_support(s))) r.lhs += acc;
            return;
        }
        self(self, k + 1, acc);
        const Cell c = cells[k];
        Monomial m(vars, 0);
        if (c.row == c.col) {
            m[c.row - 1] = epsilon;
        } else {
            m[c.row - 1] = 1;
            m[c.col - 1] = 1;
        }
        s.insert(c);
        s.insert({c.col, c.row});
        self(self, k + 1, acc * TruncatedSeries::geometric_tail(vars, cap, m));
        s.erase(c);
        s.erase({c.col, c.row});
    };
    rec(rec, 0, TruncatedSeries::one(vars, cap));

    const VarBlock zb{vars, 0, cap};
    for (int n = 0; n <= cap; ++n)
        for (const Partition& nu : partitions_of(n)) {
            if (nu.length() > f.d) continue;
            if (std::any_of(nu.parts().begin(), nu.parts().end(), [&](int p) { return p % epsilon != 0; })) continue;
            r.rhs += s_hat(nu, f.alpha, zb);
        }
    return r;
}

/// D_w(e^{n Lambda_0}) e^{-n Lambda_0} specialized, against the sum over
/// nu in (n^d) of s^_nu(X_alpha) s^_nu(Y_beta). The cap is large enough to
/// hold every term.
inline SeriesPair demazure_character_sides(const GrassmannianElement& w, int n, int vars) {
    const FlagData f = flag_data(w.shape);
    const int cap = 2 * n * f.d;
    const int nv = 2 * vars;
    WeightPolynomial d = demazure_word(WeightPolynomial::monomial(Weight::Lambda0(n)), reduced_word(w));
    SeriesPair r{specialize_xy(d.shifted(Weight::Lambda0(-n)), vars, vars, cap), TruncatedSeries(nv, cap)};
    const VarBlock xb{nv, 0, cap}, yb{nv, vars, cap};
    std::vector<int> box(f.d, n);
    for (const Partition& nu : partitions_inside(Partition(box)))
        r.rhs += s_hat(nu, f.alpha, xb) * s_hat(nu, f.beta, yb);
    return r;
}

/// D^_w(e^{n Lambda^_0}) e^{-n Lambda^_0} in z, against the sum over
/// eps | nu in ((eps n)^d) of s^_nu(Z_alpha).
inline SeriesPair hat_demazure_character_sides(const GrassmannianElement& w, int epsilon, int n, int vars) {
    require(w.shape.is_self_conjugate(), "hat character: shape must be self-conjugate");
    const FlagData f = flag_data(w.shape);
    const int cap = epsilon * n * f.d;
    const Weight top = Weight::Lambda0(static_cast<long long>(epsilon) * n);
    WeightPolynomial d = hat_demazure_word(WeightPolynomial::monomial(top), hat_reduced_word(w), epsilon);
    SeriesPair r{specialize_z(d.shifted(top * -1), vars, cap), TruncatedSeries(vars, cap)};
    const VarBlock zb{vars, 0, cap};
    std::vector<int> box(f.d, epsilon * n);
    for (const Partition& nu : partitions_inside(Partition(box))) {
        if (std::any_of(nu.parts().begin(), nu.parts().end(), [&](int p) { return p % epsilon != 0; })) continue;
        r.rhs += s_hat(nu, f.alpha, zb);
    }
    return r;
}

}  // namespace flagrsk
