#include <gtest/gtest.h>

#include <functional>

#include <flagrsk/tableau.hpp>

#include "oracles/oracles.hpp"

using namespace flagrsk;

namespace {

std::vector<int> letters_of(Alphabet a) {
    std::vector<int> out;
    for (int v = -4; v <= 4; ++v)
        if (valid_value(a, v)) out.push_back(v);
    return out;
}

void for_each_word(Alphabet a, int max_len, const std::function<void(const Word&)>& fn) {
    const auto ls = letters_of(a);
    std::vector<int> cur;
    auto rec = [&](auto&& self) -> void {
        fn(Word(a, cur));
        if (static_cast<int>(cur.size()) == max_len) return;
        for (int v : ls) {
            cur.push_back(v);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
}

std::vector<char> signs_of(const Word& w, int i) {
    std::vector<char> s;
    for (int v : w.values) {
        if (letter_raise(w.alphabet, v, i)) s.push_back('-');
        if (letter_lower(w.alphabet, v, i)) s.push_back('+');
    }
    return s;
}

Weight simple_root(int i) { return Weight::alpha(i); }

/// The crystal axioms at (w, i) plus the max-formula oracle.
void check_axioms(const Word& w, int i) {
    const EpsPhiWt ep = eps_phi_wt(w, i);
    ASSERT_TRUE(ep.eps.finite());
    const auto [oe, op] = oracle::max_formula(signs_of(w, i));
    ASSERT_EQ(ep.eps.v, oe);
    ASSERT_EQ(ep.phi.v, op);
    ASSERT_EQ(ep.phi.v - ep.eps.v, ep.wt.pairing(i));
    if (auto f = word_apply(w, i, Dir::Lower)) {
        ASSERT_EQ(word_apply(*f, i, Dir::Raise), w);
        const EpsPhiWt fp = eps_phi_wt(*f, i);
        ASSERT_EQ(fp.wt, ep.wt - simple_root(i));
        ASSERT_EQ(fp.eps.v, ep.eps.v + 1);
        ASSERT_EQ(fp.phi.v, ep.phi.v - 1);
    } else {
        ASSERT_EQ(ep.phi.v, 0);
    }
    if (auto e = word_apply(w, i, Dir::Raise)) {
        ASSERT_EQ(word_apply(*e, i, Dir::Lower), w);
        ASSERT_EQ(eps_phi_wt(*e, i).wt, ep.wt + simple_root(i));
    } else {
        ASSERT_EQ(ep.eps.v, 0);
    }
}

}  // namespace

TEST(Letters, Order) {
    EXPECT_EQ(letter_order(Letter(Alphabet::B, -1), Letter(Alphabet::B, 1)), std::strong_ordering::less);
    EXPECT_EQ(letter_order(Letter(Alphabet::BnegDual, -1), Letter(Alphabet::BnegDual, -2)), std::strong_ordering::less);
    EXPECT_EQ(letter_order(Letter(Alphabet::B, 3), Letter(Alphabet::B, 3)), std::strong_ordering::equal);
    EXPECT_THROW(letter_order(Letter(Alphabet::B, 1), Letter(Alphabet::Bpos, 1)), Error);
}

TEST(Letters, Validity) {
    EXPECT_THROW(Letter(Alphabet::B, 0), Error);
    EXPECT_THROW(Letter(Alphabet::Bpos, -1), Error);
    EXPECT_THROW(Letter(Alphabet::BnegDual, 2), Error);
}

TEST(Weight, Pairings) {
    EXPECT_EQ(Weight::Lambda0().pairing(0), 1);
    EXPECT_EQ(Weight::Lambda0().pairing(3), 0);
    EXPECT_EQ(Weight::eps(1).pairing(1), 1);
    EXPECT_EQ(Weight::eps(2).pairing(1), -1);
    EXPECT_EQ(Weight::eps(-1).pairing(0), 1);
    EXPECT_EQ(Weight::eps(1).pairing(0), -1);
    for (int i = -4; i <= 4; ++i) EXPECT_EQ(Weight::alpha(i).pairing(i), 2) << i;
    EXPECT_EQ(Weight::alpha(1).pairing(2), -1);
    EXPECT_EQ(Weight::alpha(0).pairing(-1), -1);
    EXPECT_EQ(Weight::alpha(0).pairing(1), -1);
    EXPECT_EQ(Weight::alpha(0).pairing(2), 0);
}

TEST(Letters, Operators) {
    EXPECT_EQ(word_apply(Word(Alphabet::B, {-1}), 0, Dir::Lower), Word(Alphabet::B, {1}));
    EXPECT_EQ(word_apply(Word(Alphabet::B, {}), 2, Dir::Raise), std::nullopt);
    EXPECT_EQ(word_apply(Word(Alphabet::BnegDual, {-1}), -1, Dir::Lower), Word(Alphabet::BnegDual, {-2}));
    EXPECT_EQ(word_apply(Word(Alphabet::B, {-2}), -1, Dir::Lower), Word(Alphabet::B, {-1}));
    EXPECT_EQ(word_apply(Word(Alphabet::Bpos, {1}), 0, Dir::Lower), std::nullopt);
}

TEST(Words, EpsPhiExamples) {
    const EpsPhiWt one = eps_phi_wt(Word(Alphabet::B, {1}), 1);
    EXPECT_EQ(one.eps.v, 0);
    EXPECT_EQ(one.phi.v, 1);
    EXPECT_EQ(one.wt, Weight::eps(1));
    // -1 (x) 1 at i = 0: the + of -1 sits left of the - of 1 and cancels.
    const EpsPhiWt z = eps_phi_wt(Word(Alphabet::B, {-1, 1}), 0);
    EXPECT_EQ(z.eps.v, 0);
    EXPECT_EQ(z.phi.v, 0);
    // 1 (x) -1 does not cancel.
    const EpsPhiWt z2 = eps_phi_wt(Word(Alphabet::B, {1, -1}), 0);
    EXPECT_EQ(z2.eps.v, 1);
    EXPECT_EQ(z2.phi.v, 1);
}

TEST(Words, MissingArrowsGiveMinusInfinity) {
    const EpsPhiWt r = eps_phi_wt(Word(Alphabet::Bpos, {1, 2}), -1);
    EXPECT_FALSE(r.eps.finite());
    EXPECT_FALSE(r.phi.finite());
}

TEST(Words, HighestWeightReadingWordsAreKilledByRaises) {
    for (const Partition& nu : partitions_inside(Partition({3, 2, 2}))) {
        const Word w = AntiTableau::highest(Alphabet::Bpos, nu).reading_word();
        for (int i = 1; i <= 5; ++i) EXPECT_EQ(word_apply(w, i, Dir::Raise), std::nullopt) << to_string(nu);
    }
}

TEST(CrystalAxioms, WordsOverB) {
    for_each_word(Alphabet::B, 6, [](const Word& w) {
        for (int i = -4; i <= 4; ++i) check_axioms(w, i);
    });
}

TEST(CrystalAxioms, WordsOverHalfAlphabets) {
    for (Alphabet a : {Alphabet::Bpos, Alphabet::Bneg, Alphabet::BnegDual})
        for_each_word(a, 6, [a](const Word& w) {
            for (int i = -4; i <= 4; ++i)
                if (admits(a, i)) check_axioms(w, i);
        });
}

TEST(Signature, RuleMatchesNaiveCancellation) {
    // f acts on the leftmost surviving +, e on the rightmost surviving -.
    for_each_word(Alphabet::B, 6, [](const Word& w) {
        for (int i = -3; i <= 3; ++i) {
            std::vector<oracle::Tagged> s;
            for (int k = 0; k < static_cast<int>(w.size()); ++k) {
                if (letter_raise(w.alphabet, w.values[k], i)) s.push_back({'-', k});
                if (letter_lower(w.alphabet, w.values[k], i)) s.push_back({'+', k});
            }
            const auto rest = oracle::cancel_plus_minus(s);
            int lower = -1, raise = -1;
            for (auto& t : rest)
                if (t.sign == '+' && lower < 0) lower = t.owner;
            for (auto& t : rest)
                if (t.sign == '-') raise = t.owner;
            const SignatureResult r = word_signature(w.alphabet, w.values, i);
            ASSERT_EQ(r.lower_pos, lower);
            ASSERT_EQ(r.raise_pos, raise);
        }
    });
}

TEST(Signature, TensorAssociativity) {
    // Grouping (b1 b2) b3 or b1 (b2 b3) gives the same eps, phi and acting factor.
    const auto ls = letters_of(Alphabet::B);
    for (int x : ls)
        for (int y : ls)
            for (int z : ls)
                for (int i = -4; i <= 4; ++i) {
                    auto f = [&](int v) { return letter_eps_phi(Alphabet::B, v, i); };
                    const SignatureResult xy = signature({f(x), f(y)});
                    const SignatureResult yz = signature({f(y), f(z)});
                    const SignatureResult left = signature({{xy.eps, xy.phi}, f(z)});
                    const SignatureResult right = signature({f(x), {yz.eps, yz.phi}});
                    const SignatureResult flat = signature({f(x), f(y), f(z)});
                    ASSERT_EQ(left.eps, right.eps);
                    ASSERT_EQ(left.phi, right.phi);
                    ASSERT_EQ(flat.eps, left.eps);
                    ASSERT_EQ(flat.phi, left.phi);
                    // Acting factor: resolve the grouped positions back to letters.
                    const int lpos = left.lower_pos < 0 ? -1 : left.lower_pos == 0 ? xy.lower_pos : 2;
                    const int rpos = right.lower_pos < 0 ? -1 : right.lower_pos == 0 ? 0 : 1 + yz.lower_pos;
                    ASSERT_EQ(lpos, flat.lower_pos);
                    ASSERT_EQ(rpos, flat.lower_pos);
                    const int lr = left.raise_pos < 0 ? -1 : left.raise_pos == 0 ? xy.raise_pos : 2;
                    const int rr = right.raise_pos < 0 ? -1 : right.raise_pos == 0 ? 0 : 1 + yz.raise_pos;
                    ASSERT_EQ(lr, flat.raise_pos);
                    ASSERT_EQ(rr, flat.raise_pos);
                }
}

TEST(Tableaux, ReadingWordsStayTableauWords) {
    for (const Partition& nu : partitions_inside(Partition({3, 2, 1}))) {
        for (const AntiTableau& t : enumerate_anti(Alphabet::Bpos, nu, [](int) { return 4; })) {
            for (int i = 1; i <= 4; ++i)
                for (Dir d : {Dir::Raise, Dir::Lower}) {
                    auto w = word_apply(t.reading_word(), i, d);
                    if (!w) continue;
                    const AntiTableau u = t.with_word(*w);
                    ASSERT_TRUE(u.is_semistandard()) << pretty(t);
                    ASSERT_EQ(u.outer_shape(), t.outer_shape());
                }
        }
    }
}

TEST(WeightShifter, TensorWithOneElementCrystal) {
    const Word w(Alphabet::B, {1});
    const WeightShifter t{Weight::Lambda0(2)};
    const EpsPhiWt right = eps_phi_wt(w, t, 0);
    EXPECT_EQ(right.eps.v, 1);
    EXPECT_EQ(right.phi.v, 2);
    const EpsPhiWt left = eps_phi_wt(t, w, 0);
    EXPECT_EQ(left.eps.v, -1);
    EXPECT_EQ(left.phi.v, 0);
    EXPECT_EQ(left.wt, Weight::eps(1) + Weight::Lambda0(2));
}
