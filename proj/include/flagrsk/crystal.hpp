#pragma once

// Letters of the four ordered alphabets, weights of gl_inf, and the Kashiwara
// operators on words via the signature rule.

#include <compare>
#include <cstdlib>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace flagrsk {

enum class Alphabet { B, Bpos, Bneg, BnegDual };

enum class Dir { Raise, Lower };

inline const char* alphabet_name(Alphabet a) {
    switch (a) {
        case Alphabet::B: return "B";
        case Alphabet::Bpos: return "Bpos";
        case Alphabet::Bneg: return "Bneg";
        case Alphabet::BnegDual: return "BnegDual";
    }
    return "?";
}

/// Whether the alphabet's crystal carries i-arrows at all.
inline bool admits(Alphabet a, int i) {
    switch (a) {
        case Alphabet::B: return true;
        case Alphabet::Bpos: return i > 0;
        case Alphabet::Bneg:
        case Alphabet::BnegDual: return i < 0;
    }
    return false;
}

inline bool valid_value(Alphabet a, int v) {
    switch (a) {
        case Alphabet::B: return v != 0;
        case Alphabet::Bpos: return v > 0;
        case Alphabet::Bneg:
        case Alphabet::BnegDual: return v < 0;
    }
    return false;
}

/// For BnegDual, value -k stands for -k^vee.
struct Letter {
    Alphabet alphabet = Alphabet::B;
    int value = 1;

    Letter() = default;
    Letter(Alphabet a, int v) : alphabet(a), value(v) {
        require(valid_value(a, v), std::string("letter ") + std::to_string(v) + " not in alphabet " + alphabet_name(a));
    }
    bool operator==(const Letter&) const = default;
};

/// Position in the linear order of the letter's alphabet.
inline int order_key(Alphabet a, int v) { return a == Alphabet::BnegDual ? -v : v; }
inline int order_key(const Letter& l) { return order_key(l.alphabet, l.value); }
inline int value_of_key(Alphabet a, int key) { return a == Alphabet::BnegDual ? -key : key; }

inline std::strong_ordering letter_order(const Letter& a, const Letter& b) {
    require(a.alphabet == b.alphabet, "letter_order: letters from different alphabets");
    return order_key(a) <=> order_key(b);
}

/// Element of P: lambda0 * Lambda_0 + sum_i c_i eps_i (i nonzero).
class Weight {
public:
    Weight() = default;

    static Weight eps(int i) {
        require(i != 0, "eps_0 is not defined");
        Weight w;
        w.eps_[i] = 1;
        return w;
    }
    static Weight Lambda0(long long n = 1) {
        Weight w;
        w.lambda0_ = n;
        return w;
    }
    /// Simple root alpha_i.
    static Weight alpha(int i) {
        if (i > 0) return eps(i) - eps(i + 1);
        if (i < 0) return eps(i - 1) - eps(i);
        return eps(-1) - eps(1);
    }

    long long lambda0() const { return lambda0_; }
    const std::map<int, long long>& eps_coeffs() const { return eps_; }

    long long coeff(int i) const {
        auto it = eps_.find(i);
        return it == eps_.end() ? 0 : it->second;
    }

    /// <w, h_i>.
    long long pairing(int i) const {
        long long r = 0;
        if (i > 0) r = coeff(i) - coeff(i + 1);
        else if (i < 0) r = coeff(i - 1) - coeff(i);
        else r = coeff(-1) - coeff(1) + lambda0_;
        return r;
    }

    bool is_zero() const { return lambda0_ == 0 && eps_.empty(); }

    Weight& operator+=(const Weight& o) {
        lambda0_ += o.lambda0_;
        for (auto [k, c] : o.eps_) add(k, c);
        return *this;
    }
    Weight& operator-=(const Weight& o) { return *this += o * -1; }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(Weight a, long long k) {
        if (k == 0) return {};
        a.lambda0_ *= k;
        for (auto& [_, c] : a.eps_) c *= k;
        return a;
    }
    friend Weight operator*(long long k, Weight a) { return a * k; }

    auto operator<=>(const Weight&) const = default;

    std::string to_string() const {
        std::string out;
        auto term = [&](long long c, const std::string& name) {
            if (c == 0) return;
            if (!out.empty()) out += c > 0 ? " + " : " - ";
            else if (c < 0) out += "-";
            long long a = c < 0 ? -c : c;
            if (a != 1) out += std::to_string(a) + "*";
            out += name;
        };
        term(lambda0_, "L0");
        for (auto [k, c] : eps_) term(c, "e" + std::to_string(k));
        return out.empty() ? "0" : out;
    }

private:
    void add(int k, long long c) {
        long long& slot = eps_[k];
        slot += c;
        if (slot == 0) eps_.erase(k);
    }

    long long lambda0_ = 0;
    std::map<int, long long> eps_;
};

inline Weight letter_weight(const Letter& l) {
    Weight w = Weight::eps(l.value);
    return l.alphabet == Alphabet::BnegDual ? w * -1 : w;
}

/// f_i on a single letter; nullopt is the crystal's 0.
inline std::optional<int> letter_lower(Alphabet a, int v, int i) {
    if (!admits(a, i)) return std::nullopt;
    if (a == Alphabet::BnegDual) {
        // -k^vee --(-k)--> -(k+1)^vee
        if (v == i) return v - 1;
        return std::nullopt;
    }
    if (i > 0 && v == i) return i + 1;
    if (i == 0 && v == -1) return a == Alphabet::B ? std::optional<int>(1) : std::nullopt;
    if (i < 0 && v == i - 1) return i;
    return std::nullopt;
}

inline std::optional<int> letter_raise(Alphabet a, int v, int i) {
    if (!admits(a, i)) return std::nullopt;
    if (a == Alphabet::BnegDual) {
        if (v == i - 1) return i;
        return std::nullopt;
    }
    if (i > 0 && v == i + 1) return i;
    if (i == 0 && v == 1) return -1;
    if (i < 0 && v == i) return i - 1;
    return std::nullopt;
}

inline std::optional<int> letter_apply(Alphabet a, int v, int i, Dir d) {
    return d == Dir::Raise ? letter_raise(a, v, i) : letter_lower(a, v, i);
}

/// Integer extended by -infinity, for epsilon/phi of alphabets lacking an arrow.
struct ExtInt {
    bool neg_inf = false;
    long long v = 0;

    static ExtInt minus_infinity() { return {true, 0}; }
    bool operator==(const ExtInt&) const = default;
    bool finite() const { return !neg_inf; }
};

inline ExtInt operator+(ExtInt a, long long k) { return a.neg_inf ? a : ExtInt{false, a.v + k}; }
inline ExtInt operator-(ExtInt a, long long k) { return a + (-k); }
inline ExtInt ext_max(ExtInt a, ExtInt b) {
    if (a.neg_inf) return b;
    if (b.neg_inf) return a;
    return a.v >= b.v ? a : b;
}
/// a >= b with -inf >= -inf.
inline bool ext_ge(ExtInt a, ExtInt b) {
    if (b.neg_inf) return true;
    if (a.neg_inf) return false;
    return a.v >= b.v;
}
inline bool ext_gt(ExtInt a, ExtInt b) { return ext_ge(a, b) && !(a == b); }

struct SignatureResult {
    long long eps = 0;
    long long phi = 0;
    int raise_pos = -1;  ///< factor acted on by e_i, or -1 for 0
    int lower_pos = -1;  ///< factor acted on by f_i, or -1 for 0
};

/// Signature rule on b_1 (x) ... (x) b_r given each factor's (eps_i, phi_i).
/// Factor k contributes eps_k minus signs then phi_k plus signs; a plus to the
/// left of a minus cancels. e_i acts on the rightmost surviving minus, f_i on
/// the leftmost surviving plus.
inline SignatureResult signature(const std::vector<std::pair<long long, long long>>& factors) {
    SignatureResult r;
    // Stack of factors holding unmatched pluses.
    std::vector<std::pair<int, long long>> plus;
    for (int k = 0; k < static_cast<int>(factors.size()); ++k) {
        auto [e, p] = factors[k];
        while (e > 0 && !plus.empty()) {
            long long m = std::min(e, plus.back().second);
            e -= m;
            plus.back().second -= m;
            if (plus.back().second == 0) plus.pop_back();
        }
        if (e > 0) {
            r.eps += e;
            r.raise_pos = k;
        }
        if (p > 0) plus.emplace_back(k, p);
    }
    for (auto& [k, p] : plus) r.phi += p;
    if (!plus.empty()) r.lower_pos = plus.front().first;
    return r;
}

struct Word {
    Alphabet alphabet = Alphabet::B;
    std::vector<int> values;

    Word() = default;
    Word(Alphabet a, std::vector<int> v) : alphabet(a), values(std::move(v)) {
        for (int x : values) (void)Letter(a, x);
    }

    std::size_t size() const { return values.size(); }
    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;
};

inline Weight word_weight(const Word& w) {
    Weight out;
    for (int v : w.values) out += letter_weight(Letter(w.alphabet, v));
    return out;
}

inline std::pair<long long, long long> letter_eps_phi(Alphabet a, int v, int i) {
    return {letter_raise(a, v, i) ? 1 : 0, letter_lower(a, v, i) ? 1 : 0};
}

inline SignatureResult word_signature(Alphabet a, const std::vector<int>& values, int i) {
    std::vector<std::pair<long long, long long>> f;
    f.reserve(values.size());
    for (int v : values) f.push_back(letter_eps_phi(a, v, i));
    return signature(f);
}

/// In-place e_i/f_i on a word; false means the result is 0.
inline bool word_apply_inplace(Alphabet a, std::vector<int>& values, int i, Dir d) {
    if (!admits(a, i)) return false;
    const SignatureResult s = word_signature(a, values, i);
    const int pos = d == Dir::Raise ? s.raise_pos : s.lower_pos;
    if (pos < 0) return false;
    values[pos] = *letter_apply(a, values[pos], i, d);
    return true;
}

inline std::optional<Word> word_apply(const Word& w, int i, Dir d) {
    Word out = w;
    if (!word_apply_inplace(out.alphabet, out.values, i, d)) return std::nullopt;
    return out;
}

struct EpsPhiWt {
    ExtInt eps;
    ExtInt phi;
    Weight wt;
};

inline EpsPhiWt eps_phi_wt(const Word& w, int i) {
    EpsPhiWt r;
    r.wt = word_weight(w);
    if (!admits(w.alphabet, i)) {
        r.eps = r.phi = ExtInt::minus_infinity();
        return r;
    }
    const SignatureResult s = word_signature(w.alphabet, w.values, i);
    r.eps = {false, s.eps};
    r.phi = {false, s.phi};
    return r;
}

/// The one-element crystal T_lambda.
struct WeightShifter {
    Weight lambda;
};

/// epsilon/phi of w (x) t_lambda; operators act on w.
inline EpsPhiWt eps_phi_wt(const Word& w, const WeightShifter& t, int i) {
    EpsPhiWt r = eps_phi_wt(w, i);
    r.phi = ext_max(r.phi + t.lambda.pairing(i), ExtInt::minus_infinity());
    r.wt += t.lambda;
    return r;
}

/// epsilon/phi of t_lambda (x) w.
inline EpsPhiWt eps_phi_wt(const WeightShifter& t, const Word& w, int i) {
    EpsPhiWt r = eps_phi_wt(w, i);
    r.eps = r.eps - t.lambda.pairing(i);
    r.wt += t.lambda;
    return r;
}

inline std::string letter_to_string(Alphabet a, int v) {
    if (a == Alphabet::BnegDual) return std::to_string(v) + "^v";
    return std::to_string(v);
}

}  // namespace flagrsk
