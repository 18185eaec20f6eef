#pragma once

// Plane partitions, the layer bijection with matrices, traces, bounded and
// symmetric families, and their generating functions.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "characters.hpp"

namespace flagrsk {

class PlanePartition {
public:
    PlanePartition() = default;

    /// Rows top to bottom; trailing zeros are dropped.
    explicit PlanePartition(std::vector<std::vector<int>> rows) {
        for (auto& r : rows) {
            while (!r.empty() && r.back() == 0) r.pop_back();
        }
        while (!rows.empty() && rows.back().empty()) rows.pop_back();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            require(!rows[i].empty(), "plane partition rows must be nonempty above the last row");
            for (std::size_t j = 0; j < rows[i].size(); ++j) {
                require(rows[i][j] > 0, "plane partition entries must be positive inside the shape");
                require(j == 0 || rows[i][j] <= rows[i][j - 1], "plane partition rows must weakly decrease");
                if (i > 0) {
                    require(j < rows[i - 1].size(), "plane partition shape must be a Young diagram");
                    require(rows[i][j] <= rows[i - 1][j], "plane partition columns must weakly decrease");
                }
            }
        }
        rows_ = std::move(rows);
    }

    /// Layers lambda^(1) >= lambda^(2) >= ... stacked from the bottom.
    static PlanePartition from_layers(const std::vector<Partition>& layers) {
        std::vector<std::vector<int>> rows;
        for (std::size_t k = 0; k < layers.size(); ++k) {
            require(k == 0 || layers[k - 1].contains(layers[k]), "layers must be nested");
            for (const Cell& c : layers[k].cells()) {
                if (static_cast<int>(rows.size()) < c.row) rows.resize(c.row);
                auto& r = rows[c.row - 1];
                if (static_cast<int>(r.size()) < c.col) r.resize(c.col, 0);
                ++r[c.col - 1];
            }
        }
        return PlanePartition(std::move(rows));
    }

    const std::vector<std::vector<int>>& rows() const { return rows_; }

    int at(int i, int j) const {
        if (i < 1 || i > static_cast<int>(rows_.size())) return 0;
        const auto& r = rows_[i - 1];
        return j >= 1 && j <= static_cast<int>(r.size()) ? r[j - 1] : 0;
    }

    Partition shape() const {
        std::vector<int> p;
        for (auto& r : rows_) p.push_back(static_cast<int>(r.size()));
        return Partition(p);
    }

    int max_entry() const { return at(1, 1); }

    long long norm() const {
        long long n = 0;
        for (auto& r : rows_)
            for (int v : r) n += v;
        return n;
    }

    long long trace(int r) const {
        long long t = 0;
        for (int i = std::max(1, 1 - r); i <= static_cast<int>(rows_.size()); ++i) t += at(i, i + r);
        return t;
    }

    std::vector<Partition> layers() const {
        std::vector<Partition> out;
        for (int k = 1; k <= max_entry(); ++k) {
            std::vector<int> p;
            for (auto& r : rows_) {
                int n = 0;
                for (int v : r) n += v >= k;
                if (n == 0) break;
                p.push_back(n);
            }
            out.emplace_back(p);
        }
        return out;
    }

    bool is_symmetric() const {
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (std::size_t j = 0; j < rows_[i].size(); ++j)
                if (at(static_cast<int>(j) + 1, static_cast<int>(i) + 1) != rows_[i][j]) return false;
        return true;
    }

    bool operator==(const PlanePartition&) const = default;
    auto operator<=>(const PlanePartition&) const = default;

private:
    std::vector<std::vector<int>> rows_;
};

/// pi(A): layer k is (alpha | beta) with alpha, beta the k-th columns (from
/// the right) of P(A) and Q(A) read bottom to top.
inline PlanePartition from_matrix(const SparseMatrix& a) {
    const RskPair pq = kappa(a);
    std::vector<Partition> layers;
    for (int k = 0; k < pq.p.num_columns(); ++k)
        layers.push_back(frobenius_decode({pq.p.columns()[k], pq.q.columns()[k]}));
    return PlanePartition::from_layers(layers);
}

inline SparseMatrix to_matrix(const PlanePartition& p) {
    std::vector<std::vector<int>> pc, qc;
    for (const Partition& lam : p.layers()) {
        const FrobeniusForm f = frobenius_encode(lam);
        pc.push_back(f.alpha);
        qc.push_back(f.beta);
    }
    return kappa_inverse(AntiTableau(Alphabet::BnegDual, pc), AntiTableau(Alphabet::Bpos, qc));
}

/// P, P(lambda), P_{<=n}, P(lambda)_{<=n} and their symmetric eps-versions.
struct Family {
    std::optional<Partition> shape;
    std::optional<int> bound;
    bool symmetric = false;
    int epsilon = 1;

    static Family all() { return {}; }
    static Family bounded(int n) { return {std::nullopt, n, false, 1}; }
    static Family in_shape(Partition lam) { return {std::move(lam), std::nullopt, false, 1}; }
};

inline bool member(const PlanePartition& p, const Family& f) {
    if (f.shape && !f.shape->contains(p.shape())) return false;
    if (f.bound && p.max_entry() > *f.bound) return false;
    if (f.symmetric) {
        if (!p.is_symmetric()) return false;
        for (int i = 1; i <= p.shape().length(); ++i)
            if (p.at(i, i) % f.epsilon != 0) return false;
    }
    return true;
}

/// Nonempty partitions inside `outer` with at most `max_size` cells.
inline std::vector<Partition> partitions_within(const std::optional<Partition>& outer, int max_size) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row, int cap, int left) -> void {
        if (!cur.empty()) out.emplace_back(cur);
        if (outer && row > outer->length()) return;
        const int hi = std::min(cap, outer ? outer->part(row) : cap);
        for (int k = 1; k <= std::min(hi, left); ++k) {
            cur.push_back(k);
            self(self, row + 1, k, left - k);
            cur.pop_back();
        }
    };
    rec(rec, 1, outer ? outer->part(1) : max_size, max_size);
    return out;
}

/// Every member of the family with |pi| <= norm_bound, built layer by layer.
inline std::vector<PlanePartition> enumerate_family(const Family& f, int norm_bound) {
    std::vector<PlanePartition> out;
    std::vector<Partition> stack;
    auto rec = [&](auto&& self, const std::optional<Partition>& outer, int left) -> void {
        PlanePartition p = PlanePartition::from_layers(stack);
        if (member(p, f)) out.push_back(std::move(p));
        if (f.bound && static_cast<int>(stack.size()) >= *f.bound) return;
        for (const Partition& lam : partitions_within(outer, left)) {
            if (f.symmetric && !lam.is_self_conjugate()) continue;
            stack.push_back(lam);
            self(self, std::optional<Partition>(lam), left - lam.size());
            stack.pop_back();
        }
    };
    rec(rec, f.shape, norm_bound);
    std::sort(out.begin(), out.end());
    return out;
}

/// Coefficients of q^0..q^N.
inline std::vector<BigInt> norm_generating_function(const Family& f, int norm_bound) {
    std::vector<BigInt> c(norm_bound + 1, 0);
    for (const auto& p : enumerate_family(f, norm_bound)) c[p.norm()] += 1;
    return c;
}

/// prod_{i>=1} (1 - q^i)^{-e_i} up to q^N with e_i = i, or min(i, n) when n is given.
inline std::vector<BigInt> macmahon_product(int norm_bound, std::optional<int> n = std::nullopt) {
    std::vector<BigInt> c(norm_bound + 1, 0);
    c[0] = 1;
    for (int i = 1; i <= norm_bound; ++i) {
        const int e = n ? std::min(i, *n) : i;
        for (int t = 0; t < e; ++t)
            for (int k = i; k <= norm_bound; ++k) c[k] += c[k - i];
    }
    return c;
}

/// The v_r alphabet used for trace series: r in [-window, window] for the
/// general case, r in [0, window] for symmetric families.
struct TraceAlphabet {
    int window = 0;
    bool symmetric = false;

    int nvars() const { return symmetric ? window + 1 : 2 * window + 1; }
    int index(int r) const {
        require(r >= (symmetric ? 0 : -window) && r <= window, "trace index outside the series window");
        return symmetric ? r : r + window;
    }
    std::vector<std::string> names() const {
        std::vector<std::string> out;
        for (int r = symmetric ? 0 : -window; r <= window; ++r) out.push_back("v" + std::to_string(r));
        return out;
    }
};

/// prod_r v_r^{tr_r} (symmetric: tr'_r, with tr'_0 = tr_0 / eps).
inline Monomial trace_monomial(const PlanePartition& p, const TraceAlphabet& ab, int epsilon = 1) {
    Monomial m(ab.nvars(), 0);
    const int lo = ab.symmetric ? 0 : -ab.window;
    for (int r = lo; r <= ab.window; ++r) {
        long long t = p.trace(r);
        if (ab.symmetric && r == 0) t /= epsilon;
        m[ab.index(r)] = static_cast<int>(t);
    }
    return m;
}

inline TruncatedSeries trace_generating_function(const Family& f, int norm_bound) {
    const TraceAlphabet ab{std::max(0, norm_bound - 1), f.symmetric};
    TruncatedSeries s(ab.nvars(), norm_bound);
    for (const auto& p : enumerate_family(f, norm_bound)) s.add_term(trace_monomial(p, ab, f.epsilon), 1);
    return s;
}

/// k with w = -sum_r k_r alpha_r, for a weight with zero Lambda_0 part.
/// Indices sit on a line: eps_{-k} at position -k+1, eps_j at j, so that
/// alpha_r is e_r - e_{r+1} for every r.
inline std::map<int, long long> root_coordinates(const Weight& w) {
    require(w.lambda0() == 0, "root_coordinates: weight has a Lambda_0 part");
    std::map<int, long long> linear;
    for (auto [k, c] : w.eps_coeffs()) linear[k < 0 ? k + 1 : k] = c;
    std::map<int, long long> out;
    long long run = 0;
    if (linear.empty()) return out;
    const int lo = linear.begin()->first, hi = linear.rbegin()->first;
    for (int p = lo; p <= hi; ++p) {
        auto it = linear.find(p);
        if (it != linear.end()) run += it->second;
        if (-run != 0) out[p] = -run;
    }
    require(run == 0, "root_coordinates: weight is not in the root lattice");
    return out;
}

/// Same, in folded roots alpha^_0 = eps alpha_0, alpha^_r = alpha_r + alpha_{-r}.
inline std::map<int, long long> hat_root_coordinates(const Weight& w, int epsilon) {
    std::map<int, long long> k = root_coordinates(w), out;
    for (auto [r, c] : k) {
        if (r == 0) {
            require(c % epsilon == 0, "hat_root_coordinates: alpha_0 coefficient not divisible by epsilon");
            out[0] = c / epsilon;
        } else {
            auto it = k.find(-r);
            require(it != k.end() && it->second == c, "hat_root_coordinates: weight is not symmetric");
            if (r > 0) out[r] = c;
        }
    }
    return out;
}

/// e^{-alpha_r} -> v_r.
inline TruncatedSeries trace_specialize(const WeightPolynomial& p, const TraceAlphabet& ab, int cap) {
    TruncatedSeries s(ab.nvars(), cap);
    for (auto& [w, c] : p.terms()) {
        Monomial m(ab.nvars(), 0);
        for (auto [r, k] : root_coordinates(w)) {
            require(k >= 0, "trace_specialize: negative root coordinate");
            m[ab.index(r)] = static_cast<int>(k);
        }
        s.add_term(m, c);
    }
    return s;
}

/// e^{-alpha^_r} -> v_r for r >= 0.
inline TruncatedSeries hat_trace_specialize(const WeightPolynomial& p, const TraceAlphabet& ab, int epsilon,
                                            int cap) {
    require(ab.symmetric, "hat_trace_specialize needs the symmetric alphabet");
    TruncatedSeries s(ab.nvars(), cap);
    for (auto& [w, c] : p.terms()) {
        Monomial m(ab.nvars(), 0);
        for (auto [r, k] : hat_root_coordinates(w, epsilon)) {
            require(k >= 0, "hat_trace_specialize: negative root coordinate");
            m[ab.index(r)] = static_cast<int>(k);
        }
        s.add_term(m, c);
    }
    return s;
}

/// Trace series of P(lambda)_{<=n} as e^{-n Lambda_0} D_w(e^{n Lambda_0}).
inline TruncatedSeries demazure_trace_series(const Partition& lam, int n, int cap) {
    const GrassmannianElement w(lam);
    WeightPolynomial d = demazure_word(WeightPolynomial::monomial(Weight::Lambda0(n)), reduced_word(w));
    return trace_specialize(d.shifted(Weight::Lambda0(-n)), TraceAlphabet{std::max(0, cap - 1), false}, cap);
}

/// Symmetric version: e^{-n Lambda^_0} D^_w(e^{n Lambda^_0}) in v_0, v_1, ...
inline TruncatedSeries hat_demazure_trace_series(const Partition& lam, int epsilon, int n, int cap) {
    const GrassmannianElement w(lam, Group::Hat, epsilon);
    const Weight top = Weight::Lambda0(static_cast<long long>(epsilon) * n);
    WeightPolynomial d = hat_demazure_word(WeightPolynomial::monomial(top), hat_reduced_word(w), epsilon);
    return hat_trace_specialize(d.shifted(top * -1), TraceAlphabet{std::max(0, cap - 1), true}, epsilon, cap);
}

/// Norm specialization of a symmetric trace series: v_0 -> q^eps, v_r -> q^2.
inline std::vector<BigInt> hat_norm_from_trace(const TruncatedSeries& s, int epsilon, int norm_bound) {
    std::vector<BigInt> c(norm_bound + 1, 0);
    for (auto& [m, k] : s.terms()) {
        long long deg = static_cast<long long>(epsilon) * m[0];
        for (std::size_t r = 1; r < m.size(); ++r) deg += 2LL * m[r];
        if (deg <= norm_bound) c[deg] += k;
    }
    return c;
}

inline std::string pretty(const PlanePartition& p) {
    if (p.rows().empty()) return "(empty)\n";
    int width = 1;
    for (auto& r : p.rows())
        for (int v : r) width = std::max(width, static_cast<int>(std::to_string(v).size()));
    std::string out;
    for (auto& r : p.rows()) {
        std::string line;
        for (std::size_t j = 0; j < r.size(); ++j) {
            std::string v = std::to_string(r[j]);
            if (j) line += " ";
            line += std::string(width - v.size(), ' ') + v;
        }
        out += line + "\n";
    }
    return out;
}

}  // namespace flagrsk
