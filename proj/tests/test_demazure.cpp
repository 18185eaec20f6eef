#include <gtest/gtest.h>

#include <algorithm>

#include <flagrsk/demazure.hpp>

#include "oracles/oracles.hpp"

using namespace flagrsk;

namespace {

GrassmannianElement gw(const Partition& lam) { return GrassmannianElement(lam); }

std::set<SparseMatrix> closure(const Partition& lam, long long bound) { return generate_Mw(gw(lam), bound); }

/// The i-string through a, from its highest element down; f_0 strings never
/// end, so they are cut at entry sum `cap`.
std::vector<SparseMatrix> string_through(const SparseMatrix& a, int i, long long cap) {
    SparseMatrix top = a;
    while (auto e = matrix_apply(top, i, Dir::Raise)) top = *e;
    std::vector<SparseMatrix> out{top};
    while (auto f = matrix_apply(out.back(), i, Dir::Lower)) {
        if (f->sum() > cap) break;
        out.push_back(*f);
    }
    return out;
}

}  // namespace

TEST(ReducedWord, SingleBox) { EXPECT_EQ(reduced_word(gw(Partition{1})).indices, std::vector<int>{0}); }

TEST(ReducedWord, TwoOneFillings) {
    const GrassmannianElement w = gw(Partition({2, 1}));
    EXPECT_EQ(reduced_word(w, column_reading_standard(w.shape)).indices, (std::vector<int>{1, -1, 0}));
    EXPECT_EQ(reduced_word(w, row_reading_standard(w.shape)).indices, (std::vector<int>{-1, 1, 0}));
    EXPECT_EQ(generate_Mw(reduced_word(w, column_reading_standard(w.shape)), 3),
              generate_Mw(reduced_word(w, row_reading_standard(w.shape)), 3));
}

TEST(ReducedWord, ResiduesOfLargeExample) {
    const GrassmannianElement w = gw(Partition({6, 6, 4, 2, 1}));
    for (const StandardTableau& t : {row_reading_standard(w.shape), column_reading_standard(w.shape)}) {
        std::vector<int> word = reduced_word(w, t).indices;
        ASSERT_EQ(word.size(), 19u);
        std::sort(word.begin(), word.end());
        // Residue table rows: 0..5, -1..4, -2..1, -3..-2, -4.
        std::vector<int> expect = {0, 1, 2, 3, 4, 5, -1, 0, 1, 2, 3, 4, -2, -1, 0, 1, -3, -2, -4};
        std::sort(expect.begin(), expect.end());
        EXPECT_EQ(word, expect);
    }
}

TEST(ReducedWord, RejectsNonStandardFilling) {
    EXPECT_THROW(reduced_word(gw(Partition({2, 1})), StandardTableau{{2, 1}, {3}}), Error);
    EXPECT_THROW(reduced_word(gw(Partition({2, 1})), StandardTableau{{1, 2}}), Error);
}

TEST(Bruhat, ShapeContainment) {
    EXPECT_TRUE(bruhat_leq(gw(Partition{}), gw(Partition({3, 1}))));
    EXPECT_TRUE(bruhat_leq(gw(Partition({2, 1})), gw(Partition({2, 2}))));
    EXPECT_FALSE(bruhat_leq(gw(Partition{3}), gw(Partition({2, 2}))));
}

TEST(InMw, Examples) {
    EXPECT_TRUE(in_Mw(SparseMatrix{}, gw(Partition{})));
    EXPECT_TRUE(in_Mw(SparseMatrix::unit(1, 1, 5), gw(Partition{1})));
    EXPECT_FALSE(in_Mw(SparseMatrix::unit(1, 2), gw(Partition{1})));
    EXPECT_TRUE(in_Mw(SparseMatrix::unit(1, 2), gw(Partition{2})));
    EXPECT_FALSE(in_Mw(SparseMatrix::unit(1, 2), gw(Partition({1, 1}))));
}

TEST(GenerateMw, SingleBox) {
    std::set<SparseMatrix> expect;
    for (int k = 0; k <= 3; ++k) expect.insert(SparseMatrix::unit(1, 1, k));
    EXPECT_EQ(closure(Partition{1}, 3), expect);
}

TEST(GenerateMw, MatchesCharacterizationOnSmallShapes) {
    for (const Partition& lam : partitions_inside(Partition({2, 2, 2})))
        EXPECT_EQ(closure(lam, 3), characterize_Mw(gw(lam), 3)) << to_string(lam);
}

TEST(GenerateMw, CharacterizationAgreesWithBoxEnumeration) {
    // characterize_Mw only enumerates the l(lambda) x lambda_1 box; in_Mw over a larger box sees nothing more.
    for (const Partition& lam : partitions_inside(Partition({2, 2}))) {
        std::set<SparseMatrix> wide;
        for (auto& a : oracle::all_matrices(4, 4, 3))
            if (in_Mw(a, gw(lam))) wide.insert(a);
        EXPECT_EQ(characterize_Mw(gw(lam), 3), wide) << to_string(lam);
    }
}

TEST(GenerateMw, TransposedSupportConventionFails) {
    // Reading lambda(supp A) with rows and columns swapped breaks the equality.
    bool differs = false;
    for (const Partition& lam : partitions_inside(Partition({2, 2}))) {
        std::set<SparseMatrix> swapped;
        for (auto& a : oracle::all_matrices(3, 3, 3))
            if (lam.contains(conjugate(lambda_of_support(a.support())))) swapped.insert(a);
        if (swapped != closure(lam, 3)) differs = true;
    }
    EXPECT_TRUE(differs);
    EXPECT_TRUE(closure(Partition{2}, 1).count(SparseMatrix::unit(1, 2)));
    EXPECT_FALSE(closure(Partition{2}, 1).count(SparseMatrix::unit(2, 1)));
}

TEST(GenerateMw, WordIndependence) {
    const GrassmannianElement w = gw(Partition({2, 2}));
    const auto a = generate_Mw(reduced_word(w, row_reading_standard(w.shape)), 4);
    const auto b = generate_Mw(reduced_word(w, column_reading_standard(w.shape)), 4);
    EXPECT_EQ(a, b);
    const GrassmannianElement v = gw(Partition({3, 2, 1}));
    EXPECT_EQ(generate_Mw(reduced_word(v, row_reading_standard(v.shape)), 3),
              generate_Mw(reduced_word(v, column_reading_standard(v.shape)), 3));
}

TEST(GenerateMw, JobsDoNotChangeTheResult) {
    EXPECT_EQ(generate_Mw(gw(Partition({3, 2})), 4, 1), generate_Mw(gw(Partition({3, 2})), 4, 4));
}

TEST(GenerateMw, MonotoneInBruhatOrder) {
    const auto shapes = partitions_inside(Partition({2, 2, 1}));
    for (auto& a : shapes)
        for (auto& b : shapes)
            if (bruhat_leq(gw(a), gw(b))) {
                const auto sa = closure(a, 3), sb = closure(b, 3);
                EXPECT_TRUE(std::includes(sb.begin(), sb.end(), sa.begin(), sa.end())) << to_string(a) << to_string(b);
            }
}

TEST(GenerateMw, StringTrichotomy) {
    for (const Partition& lam : {Partition{1}, Partition({2, 1}), Partition({2, 2}), Partition({3, 1})}) {
        const GrassmannianElement w = gw(lam);
        for (auto& a : oracle::all_matrices(3, 3, 3))
            for (int i = -3; i <= 3; ++i) {
                const auto s = string_through(a, i, 5);
                std::size_t hits = 0;
                for (auto& x : s) hits += in_Mw(x, w);
                const bool ok = hits == 0 || hits == s.size() || (hits == 1 && in_Mw(s.front(), w));
                ASSERT_TRUE(ok) << to_string(lam) << " i=" << i;
            }
    }
}

TEST(GenerateMw, TriplesWithEmptyShapesAreMatrices) {
    const GrassmannianElement w = gw(Partition({2, 1}));
    std::set<SparseMatrix> got;
    for (auto& v : generate_Mw_triples(Partition{}, Partition{}, reduced_word(w), 3)) got.insert(v.a);
    EXPECT_EQ(got, generate_Mw(w, 3));
}

TEST(GenerateMw, TriplesAreMonotone) {
    const auto small = generate_Mw_triples(Partition{1}, Partition{1}, reduced_word(gw(Partition{1})), 2);
    const auto big = generate_Mw_triples(Partition{1}, Partition{1}, reduced_word(gw(Partition({2, 1}))), 2);
    EXPECT_TRUE(std::includes(big.begin(), big.end(), small.begin(), small.end()));
    EXPECT_TRUE(small.count(VermaTriple::origin(Partition{1}, Partition{1})));
}

TEST(FlagData, Example) {
    const FlagData f = flag_data(Partition({4, 3, 3, 2}));
    EXPECT_EQ(f.alpha, (std::vector<int>{4, 3, 1}));
    EXPECT_EQ(f.beta, (std::vector<int>{4, 2, 1}));
    EXPECT_EQ(f.phi, (std::vector<int>{1, 3, 4}));
    EXPECT_EQ(f.psi, (std::vector<int>{1, 2, 4}));
    EXPECT_EQ(f.d, 3);
}

TEST(EnumerateTw, SingleBox) {
    const auto t = enumerate_Tw(gw(Partition{1}), 3);
    EXPECT_EQ(t.size(), 4u);
    for (auto& b : t) {
        EXPECT_LE(b.shape().length(), 1);
        for (auto& r : b.s.rows_bottom_up())
            for (int v : r) EXPECT_EQ(v, -1);
    }
    std::set<BiTableau> img;
    for (auto& a : closure(Partition{1}, 3)) img.insert(BiTableau(kappa(a)));
    EXPECT_EQ(img, t);
}

TEST(EnumerateTw, KappaImageOfMw) {
    for (const Partition& lam : partitions_inside(Partition({2, 2, 1}))) {
        std::set<BiTableau> img;
        for (auto& a : closure(lam, 4)) img.insert(BiTableau(kappa(a)));
        EXPECT_EQ(img, enumerate_Tw(gw(lam), 4)) << to_string(lam);
    }
}

TEST(EnumerateTw, WorkedPairMembership) {
    const BiTableau b(AntiTableau::from_rows(Alphabet::BnegDual, {{-1, -2, -4, -4}, {-1, -3}}),
                      AntiTableau::from_rows(Alphabet::Bpos, {{1, 1, 3, 4}, {1, 3}}));
    const SparseMatrix a = kappa_inverse(b.s, b.t);
    for (const Partition& lam : partitions_inside(Partition({4, 4, 4, 4}))) {
        const auto tw = enumerate_Tw(gw(lam), 6);
        ASSERT_EQ(tw.count(b) == 1, in_Mw(a, gw(lam))) << to_string(lam);
    }
    EXPECT_TRUE(in_Mw(a, gw(Partition({4, 4, 4, 4}))));
}

TEST(EnumerateBw, BoxedShapes) {
    for (auto& b : enumerate_Bw(gw(Partition({2, 2})), 1, 4)) EXPECT_LE(b.shape().part(1), 1);
    std::set<BiTableau> expect;
    for (auto& a : closure(Partition({2, 2}), 4))
        if (column_count(a) <= 2) expect.insert(BiTableau(kappa(a)));
    EXPECT_EQ(enumerate_Bw(gw(Partition({2, 2})), 2, 4), expect);
}

TEST(Hat, RequiresSelfConjugateShape) {
    EXPECT_THROW(GrassmannianElement(Partition{2}, Group::Hat, 1), Error);
    EXPECT_THROW(GrassmannianElement(Partition{1}, Group::Hat, 3), Error);
    EXPECT_THROW(hat_in_Mw(FoldedMatrix({}, 1), gw(Partition{2})), Error);
}

TEST(Hat, Words) {
    EXPECT_EQ(hat_reduced_word(GrassmannianElement(Partition{1}, Group::Hat)).indices, std::vector<int>{0});
    EXPECT_EQ(hat_reduced_word(GrassmannianElement(Partition({2, 1}), Group::Hat)).indices, (std::vector<int>{1, 0}));
    EXPECT_EQ(hat_reduced_word(GrassmannianElement(Partition({2, 2}), Group::Hat)).indices, (std::vector<int>{0, 1, 0}));
}

TEST(Hat, SingleBox) {
    std::set<SparseMatrix> expect;
    for (int k = 0; k <= 4; ++k) expect.insert(SparseMatrix::unit(1, 1, k));
    EXPECT_EQ(hat_generate(GrassmannianElement(Partition{1}, Group::Hat, 1), 4), expect);
    EXPECT_TRUE(hat_in_Mw(FoldedMatrix({}, 1), GrassmannianElement(Partition{1}, Group::Hat)));
}

TEST(Hat, ClosureIsSymmetricPartOfMw) {
    for (int eps : {1, 2})
        for (const Partition& lam : {Partition{}, Partition{1}, Partition({2, 1}), Partition({2, 2})}) {
            const GrassmannianElement w(lam, Group::Hat, eps);
            EXPECT_EQ(hat_generate(w, 4), hat_characterize(w, eps, 4)) << to_string(lam) << " eps " << eps;
        }
}

TEST(Hat, KappaHatImageIsFlagged) {
    for (int eps : {1, 2})
        for (const Partition& lam : {Partition{1}, Partition({2, 1}), Partition({2, 2})}) {
            const GrassmannianElement w(lam, Group::Hat, eps);
            std::set<AntiTableau> img;
            for (auto& a : hat_generate(w, 6)) img.insert(kappa_hat(FoldedMatrix(a, eps)));
            // Sum at most 6 bounds |nu| by 6 on the symmetric side.
            std::set<AntiTableau> expect;
            for (auto& t : hat_enumerate_image(w, eps, 6)) {
                const SparseMatrix back = kappa_inverse(mirror_dual(t), t);
                if (back.sum() <= 6) expect.insert(t);
            }
            EXPECT_EQ(img, expect) << to_string(lam) << " eps " << eps;
        }
}
