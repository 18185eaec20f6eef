#include <gtest/gtest.h>

#include <flagrsk/bitableau.hpp>

#include "oracles/oracles.hpp"

using namespace flagrsk;

namespace {

const SparseMatrix kRskEx = SparseMatrix::from_dense({{1, 0, 1}, {2, 1, 0}, {0, 2, 0}});
const SparseMatrix kFour = SparseMatrix::from_dense({{1, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {1, 0, 1, 0}});

AntiTableau neg(const std::vector<std::vector<int>>& rows, const Partition& inner = {}) {
    return AntiTableau::from_rows(Alphabet::BnegDual, rows, inner);
}
AntiTableau pos(const std::vector<std::vector<int>>& rows, const Partition& inner = {}) {
    return AntiTableau::from_rows(Alphabet::Bpos, rows, inner);
}

const std::vector<SparseMatrix>& sample() {
    static const std::vector<SparseMatrix> s = oracle::all_matrices(3, 3, 4);
    return s;
}

}  // namespace

TEST(Insert, IntoEmptyTableau) {
    const Insertion r = insert(AntiTableau(Alphabet::BnegDual), Letter(Alphabet::BnegDual, -2));
    EXPECT_EQ(r.tableau, neg({{-2}}));
    ASSERT_EQ(r.path.size(), 1u);
    EXPECT_FALSE(r.path[0].replaced.has_value());
}

TEST(Insert, LargerThanRightmostColumnSitsOnTop) {
    // Column of -3^v under -2^v... inserting -1^v goes on top with no bump.
    const AntiTableau t = neg({{-3}, {-2}});
    const Insertion r = insert(t, Letter(Alphabet::BnegDual, -1));
    EXPECT_EQ(r.tableau, neg({{-3}, {-2}, {-1}}));
    EXPECT_EQ(r.path.size(), 1u);
}

TEST(Insert, BuildsTheExampleP) {
    AntiTableau t(Alphabet::BnegDual);
    for (int v : {-1, -2, -3, -3, -1, -2, -2}) t = insert(t, Letter(Alphabet::BnegDual, v)).tableau;
    EXPECT_EQ(t, neg({{-1, -2, -3, -3}, {-1, -2, -2}}));
}

TEST(Insert, GrowsByOneCellAndStaysSemistandard) {
    for (const Partition& nu : partitions_inside(Partition({3, 2, 1})))
        for (const AntiTableau& t : enumerate_anti(Alphabet::BnegDual, nu, [](int) { return 4; }))
            for (int v = -4; v <= -1; ++v) {
                const AntiTableau u = insert(t, Letter(Alphabet::BnegDual, v)).tableau;
                ASSERT_TRUE(u.is_semistandard());
                ASSERT_EQ(u.size(), t.size() + 1);
                ASSERT_TRUE(u.outer_shape().contains(t.outer_shape()));
            }
}

TEST(Kappa, Examples) {
    EXPECT_EQ(kappa(SparseMatrix{}).p, AntiTableau(Alphabet::BnegDual));
    EXPECT_EQ(kappa(SparseMatrix{}).q, AntiTableau(Alphabet::Bpos));
    const RskPair r = kappa(kRskEx);
    EXPECT_EQ(r.p, neg({{-1, -2, -3, -3}, {-1, -2, -2}}));
    EXPECT_EQ(r.q, pos({{2, 2, 2, 3}, {1, 1, 1}}));
    const RskPair f = kappa(kFour);
    EXPECT_EQ(f.p, neg({{-1, -2, -4, -4}, {-1, -3}}));
    EXPECT_EQ(f.q, pos({{1, 1, 3, 4}, {1, 3}}));
}

TEST(Kappa, InverseExamples) {
    EXPECT_EQ(kappa_inverse(AntiTableau(Alphabet::BnegDual), AntiTableau(Alphabet::Bpos)), SparseMatrix{});
    EXPECT_EQ(kappa_inverse(neg({{-1, -2, -3, -3}, {-1, -2, -2}}), pos({{2, 2, 2, 3}, {1, 1, 1}})), kRskEx);
}

TEST(Kappa, InverseRejectsBadPairs) {
    EXPECT_THROW(kappa_inverse(neg({{-1, -2}}), pos({{1}})), Error);
    EXPECT_THROW(kappa_inverse(neg({{-1}}), pos({{1}}, Partition{1})), Error);
}

TEST(Kappa, RoundtripAndInjective) {
    std::set<RskPair> seen;
    for (auto& a : sample()) {
        const RskPair pq = kappa(a);
        ASSERT_EQ(kappa_inverse(pq), a);
        ASSERT_TRUE(seen.insert(pq).second);
        ASSERT_TRUE(pq.p.is_semistandard());
        ASSERT_TRUE(pq.q.is_semistandard());
    }
}

TEST(Kappa, WeightSplits) {
    for (auto& a : sample()) {
        const RskPair pq = kappa(a);
        ASSERT_EQ(pq.p.weight() + pq.q.weight(), matrix_weight(a));
    }
}

TEST(Kappa, IntertwinesCrystalOperators) {
    for (auto& a : sample()) {
        const BiTableau b(kappa(a));
        for (int i = -3; i <= 3; ++i)
            for (Dir d : {Dir::Raise, Dir::Lower}) {
                const auto lhs = matrix_apply(a, i, d);
                const auto rhs = bt_apply(b, i, d);
                ASSERT_EQ(lhs.has_value(), rhs.has_value());
                if (lhs) {
                    ASSERT_EQ(BiTableau(kappa(*lhs)), *rhs);
                }
            }
    }
}

TEST(ColumnCount, Examples) {
    EXPECT_EQ(column_count(SparseMatrix{}), 0);
    EXPECT_EQ(column_count(kRskEx), 4);
}

TEST(ColumnCount, LongestWeaklyDecreasingSubword) {
    for (auto& a : oracle::all_matrices(3, 3, 5))
        ASSERT_EQ(column_count(a), oracle::longest_weakly_decreasing(oracle::column_reading_rows(a)));
}

TEST(SkewInsert, EmptySeedIsKappa) {
    for (auto& a : oracle::all_matrices(2, 3, 3)) ASSERT_EQ(skew_insert(AntiTableau(Alphabet::BnegDual), a), kappa(a));
}

TEST(SkewInsert, ZeroMatrixKeepsSeed) {
    const AntiTableau s = neg({{-3, -4}});
    const RskPair r = skew_insert(s, SparseMatrix{});
    EXPECT_EQ(r.p, s);
    EXPECT_EQ(r.q.size(), 0u);
    EXPECT_EQ(r.q.outer_shape(), s.outer_shape());
}

TEST(SkewInsert, VermaExample) {
    const RskPair r = skew_insert(neg({{-3, -4}}), SparseMatrix::from_dense({{1, 1, 0}, {0, 0, 1}, {1, 0, 1}}));
    EXPECT_EQ(r.p, neg({{-3, -3, -4}, {-2, -3}, {-1, -1}}));
    EXPECT_EQ(r.q, pos({{1}, {3, 3}, {1, 2}}, Partition{2}));
}

TEST(SkewInsert, UninsertRoundtrip) {
    for (const Partition& mu : partitions_inside(Partition({2, 1})))
        for (const AntiTableau& s : enumerate_anti(Alphabet::BnegDual, mu, [](int) { return 3; }))
            for (auto& a : oracle::all_matrices(3, 3, 3)) {
                const RskPair r = skew_insert(s, a);
                const SkewPreimage back = skew_uninsert(r.p, r.q);
                ASSERT_EQ(back.s, s);
                ASSERT_EQ(back.a, a);
            }
}

TEST(KappaHat, MirrorForSymmetricMatrices) {
    for (auto& a : oracle::all_matrices(3, 3, 4)) {
        if (!a.is_symmetric()) continue;
        const RskPair pq = kappa(a);
        ASSERT_EQ(pq.p, mirror_dual(pq.q));
        ASSERT_EQ(kappa_hat(FoldedMatrix(a, 1)), pq.q);
    }
    const AntiTableau s = kappa_hat(FoldedMatrix(SparseMatrix::unit(1, 1, 2), 2));
    EXPECT_EQ(s, pos({{1, 1}}));
    EXPECT_EQ(kappa_hat(FoldedMatrix({}, 1)).size(), 0u);
}
