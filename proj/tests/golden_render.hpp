#pragma once

// Text renderings of the worked examples kept under tests/golden.

#include <fstream>
#include <sstream>
#include <string>

#include <flagrsk/flagrsk.hpp>

namespace golden {

using namespace flagrsk;

inline std::string matrix_text(const SparseMatrix& a) {
    std::string out;
    for (int i = 1; i <= a.max_row(); ++i) {
        for (int j = 1; j <= a.max_col(); ++j) out += (j > 1 ? " " : "") + std::to_string(a.at(i, j));
        out += "\n";
    }
    return out;
}

inline std::string pair_text(const std::string& name, const SparseMatrix& a) {
    const RskPair pq = kappa(a);
    return name + " =\n" + matrix_text(a) + "P(" + name + ") =\n" + pretty(pq.p) + "Q(" + name + ") =\n" + pretty(pq.q);
}

inline std::string rsk_example() {
    return pair_text("A", SparseMatrix::from_dense({{1, 0, 1}, {2, 1, 0}, {0, 2, 0}}));
}

inline const SparseMatrix& four_by_four() {
    static const SparseMatrix m = SparseMatrix::from_dense({{1, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {1, 0, 1, 0}});
    return m;
}

/// kappa of the 4x4 matrix, of e_0 A and of f_0 A.
inline std::string zero_operators_example() {
    const SparseMatrix& a = four_by_four();
    std::string out = pair_text("A", a) + "\n";
    out += pair_text("e_0 A", *matrix_apply(a, 0, Dir::Raise)) + "\n";
    out += pair_text("f_0 A", *matrix_apply(a, 0, Dir::Lower));
    return out;
}

inline std::string bitableau_text(const BiTableau& b) { return "S =\n" + pretty(b.s) + "T =\n" + pretty(b.t); }

/// Signature, good signs and e_0, f_0 on the bitableau of the 4x4 matrix.
inline std::string signature_example() {
    const BiTableau b(kappa(four_by_four()));
    const SignSequence reduced = zero_signature(b);
    std::string out = bitableau_text(b);
    out += "sigma = " + signature_text(raw_zero_signature(b)) + "\n";
    out += "0-signature = " + signature_text(reduced) + "\n";
    out += "good - at sigma_" + std::to_string(good_minus(reduced) + 1) + "\n";
    out += "good + at sigma_" + std::to_string(good_plus(reduced) + 1) + "\n";
    out += "e_0(S,T):\n" + bitableau_text(*bt_apply(b, 0, Dir::Raise));
    out += "f_0(S,T):\n" + bitableau_text(*bt_apply(b, 0, Dir::Lower));
    return out;
}

/// Psi_4 read backwards: the pair (w_<0^v, w_>0) and kappa^{-1} of it.
inline std::string psi_n_example() {
    const AntiTableau wneg = AntiTableau::from_rows(Alphabet::BnegDual, {{-1, -2, -4, -4}, {-1, -3}});
    const AntiTableau wpos = AntiTableau::from_rows(Alphabet::Bpos, {{1, 1, 3, 4}, {1, 3}});
    const SparseMatrix a = kappa_inverse(wneg, wpos);
    std::string out = "w_<0^v =\n" + pretty(wneg) + "w_>0 =\n" + pretty(wpos);
    out += "kappa^-1 =\n" + matrix_text(a);
    out += "in Im Psi_4: " + std::string(psi_image_test(a, 4) ? "yes" : "no") + "\n";
    return out;
}

/// Psi_{(2),(2,2,1,1);4} of the triple (A, -3^v -4^v, T).
inline std::string psi_munu_example() {
    const VermaTriple v(SparseMatrix::from_dense({{1, 1, 0}, {0, 0, 1}, {1, 0, 1}}),
                        AntiTableau::from_rows(Alphabet::BnegDual, {{-3, -4}}),
                        NormalTableau(Alphabet::Bpos, {{1, 2}, {2, 3}, {3}, {5}}));
    const PsiMuNuEncoding e = psi_munu_decode(v, 4);
    std::string out = "A =\n" + matrix_text(v.a) + "S =\n" + pretty(v.s_neg) + "w_>0^+ =\n" + pretty(v.s_pos);
    out += "mu = " + to_string(v.mu()) + ", nu = " + to_string(v.nu()) + ", n = 4\n";
    out += "w_<0^v = P(S <- A) =\n" + pretty(e.w_neg_dual);
    out += "w_>0^- = Q(S <- A) =\n" + pretty(e.w_minus);
    out += "roundtrip: " + std::string(psi_munu_encode(e) == v ? "yes" : "no") + "\n";
    return out;
}

inline std::string support_text(const Support& s) {
    int rows = 0, cols = 0;
    for (const Cell& c : s) rows = std::max(rows, c.row), cols = std::max(cols, c.col);
    std::string out;
    for (int i = 1; i <= rows; ++i) {
        std::string line;
        for (int j = 1; j <= cols; ++j) line += s.count({i, j}) ? '*' : '.';
        out += line + "\n";
    }
    return out;
}

/// Border-strip peeling of S = {(1,1),(1,4),(2,2),(3,1),(3,3),(4,3)}.
inline std::string corners_example() {
    Support rest = {{1, 1}, {1, 4}, {2, 2}, {3, 1}, {3, 3}, {4, 3}};
    const Support s = rest;
    std::string out;
    for (int k = 1; !rest.empty(); ++k) {
        const StripPeel t = theta(rest);
        out += "S^(" + std::to_string(k) + ") =\n" + support_text(rest);
        out += "theta = " + to_string(t.strip.outer) + "/" + to_string(t.strip.inner) + ", c_" + std::to_string(k) +
               " = (" + std::to_string(t.corner.row) + "," + std::to_string(t.corner.col) + ")\n";
        for (auto it = rest.begin(); it != rest.end();)
            it = t.strip.has_cell(*it) ? rest.erase(it) : std::next(it);
    }
    const SupportShape sh = peel_support(s);
    const FrobeniusForm f = frobenius_encode(sh.shape);
    std::string a, b;
    for (std::size_t i = 0; i < f.alpha.size(); ++i) {
        a += (i ? "," : "") + std::to_string(f.alpha[i]);
        b += (i ? "," : "") + std::to_string(f.beta[i]);
    }
    out += "lambda(S) = (" + a + "|" + b + ") = " + to_string(sh.shape) + "\n";
    return out;
}

struct Case {
    const char* file;
    std::string (*render)();
};

inline const std::vector<Case>& cases() {
    static const std::vector<Case> c = {
        {"rsk_example.txt", rsk_example},       {"zero_operators.txt", zero_operators_example},
        {"signature.txt", signature_example},   {"psi_n.txt", psi_n_example},
        {"psi_munu.txt", psi_munu_example},     {"support_corners.txt", corners_example},
    };
    return c;
}

inline std::string read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace golden
