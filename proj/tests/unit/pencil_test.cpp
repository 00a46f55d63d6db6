#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace leibniz;
using namespace leibniz::test;

namespace {

std::string inv_text(const Matrix<QI>& m) { return pencil_invariants(m).to_string(); }
std::string inv_text(const std::string& blocks) { return pencil_invariants(direct_sum_matrix(parse_block_list(blocks))).to_string(); }

} // namespace

TEST(Roots, GaussianRationalRoots) {
    const UPoly p = UPoly::linear(QI(2)) * UPoly::linear(QI::i()) * UPoly::linear(QI::ratio(1, 3)) *
                    UPoly({QI(1), QI(1), QI(1)});
    const auto r = qi_roots(p);
    ASSERT_EQ(r.size(), 3u);
    for (const QI& x : {QI(2), QI::i(), QI::ratio(1, 3)})
        EXPECT_NE(std::find(r.begin(), r.end(), x), r.end());
    EXPECT_EQ(root_multiplicity(p * UPoly::linear(QI(2)), QI(2)), 2u);
    EXPECT_TRUE(qi_roots(UPoly({QI(-2), QI(0), QI(1)})).empty());
}

TEST(Smith, InvariantFactorsMatchMinorGcds) {
    // Determinantal-divisor oracle: l*M + M^T for C3 has factors 1, 1, (l+1)^3.
    Matrix<UPoly> p(3, 3);
    const Matrix<QI> m = qmat({{0, 0, 1}, {0, 1, 1}, {1, -1, 0}});
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            p(i, j) = UPoly::affine(m(i, j), m(j, i));
    const auto f = invariant_factors(p);
    ASSERT_EQ(f.size(), 3u);
    EXPECT_EQ(f[0], UPoly(1));
    EXPECT_EQ(f[1], UPoly(1));
    const UPoly l1 = UPoly::linear(QI(-1));
    EXPECT_EQ(f[2], l1 * l1 * l1);
}

TEST(Pencil, SmallestCases) {
    EXPECT_EQ(inv_text(qmat({{0}})), "size 1, rank 0, left [0], right [0], finite [], infinite []");
    EXPECT_EQ(inv_text(qmat({{1}})), "size 1, rank 1, left [], right [], finite [(l+1)], infinite []");
}

TEST(Pencil, SingularBlockA3) {
    EXPECT_EQ(inv_text("A3"), "size 3, rank 2, left [1], right [1], finite [], infinite []");
    EXPECT_EQ(inv_text("A7"), "size 7, rank 6, left [3], right [3], finite [], infinite []");
}

TEST(Pencil, RegularBlocks) {
    EXPECT_EQ(inv_text("B2(2)"), "size 2, rank 2, left [], right [], finite [(l+1/2), (l+2)], infinite []");
    EXPECT_EQ(inv_text("B4(0)"), "size 4, rank 3, left [], right [], finite [(l)^2], infinite [2]");
    EXPECT_EQ(inv_text("C3"), "size 3, rank 3, left [], right [], finite [(l+1)^3], infinite []");
    EXPECT_EQ(inv_text("D4"), "size 4, rank 4, left [], right [], finite [(l+1)^2, (l+1)^2], infinite []");
    EXPECT_EQ(inv_text("E2"), "size 2, rank 2, left [], right [], finite [(l-1)^2], infinite []");
    EXPECT_EQ(inv_text("F2"), "size 2, rank 2, left [], right [], finite [(l-1), (l-1)], infinite []");
    EXPECT_EQ(inv_text("F6"), "size 6, rank 6, left [], right [], finite [(l-1)^3, (l-1)^3], infinite []");
}

TEST(Pencil, IrreducibleFactorKept) {
    EXPECT_EQ(inv_text(qmat({{1, 1}, {0, 1}})),
              "size 2, rank 2, left [], right [], finite [(l*l+l+1)], infinite []");
}

TEST(Pencil, BlockSizesAddUp) {
    for (std::size_t m = 1; m <= 6; ++m)
        for (const auto& ms : block_multisets(m)) {
            auto blocks = ms.blocks;
            int v = 2;
            for (auto& b : blocks)
                if (b.kind == BlockKind::B)
                    b.parameter = Scalar(v++);
            EXPECT_TRUE(pencil_invariants(direct_sum_matrix(blocks)).consistent()) << block_list_to_string(blocks);
        }
}
