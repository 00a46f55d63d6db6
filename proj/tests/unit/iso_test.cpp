#include <random>

#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace leibniz;
using namespace leibniz::test;

namespace {

StructureConstants from_blocks(const std::string& s) { return algebra_from_blocks(parse_block_list(s)); }

StructureConstants family_at(std::size_t k, const Scalar& alpha) {
    return instantiate(dim3_solvable_table().at(k - 1).algebra, {{"alpha", alpha}});
}

} // namespace

TEST(IsoInvariants, FirstDim4Item) {
    const IsoInvariants inv = iso_invariants(fixtures(4).at(0));
    EXPECT_EQ(inv.leib, 1u);
    EXPECT_EQ(inv.derived, 1u);
    EXPECT_EQ(inv.lower3, 0u);
    ASSERT_TRUE(inv.pencil);
    EXPECT_EQ(inv.pencil->to_string(), "size 3, rank 2, left [1], right [1], finite [], infinite []");
}

TEST(IsoInvariants, AbelianAndCyclic) {
    const IsoInvariants ab = iso_invariants(StructureConstants(3));
    EXPECT_EQ(ab.center, 3u);
    EXPECT_EQ(ab.derived, 0u);
    EXPECT_FALSE(ab.pencil);
    const IsoInvariants cy = iso_invariants(sample("cyclic2.json"));
    EXPECT_EQ(cy.derived, 1u);
    EXPECT_FALSE(cy.pencil);
}

TEST(IsoInvariants, StableUnderBasisChange) {
    std::mt19937_64 rng(3);
    const StructureConstants a = family_at(4, Scalar(2));
    const IsoInvariants ref = iso_invariants(a);
    for (int t = 0; t < 20; ++t)
        EXPECT_EQ(iso_invariants(change_of_basis(a, random_invertible(3, rng))), ref);
}

TEST(Isomorphism, ReciprocalBParameter) {
    for (const Scalar& c : {Scalar(2), Scalar(3), Scalar(QI::i())}) {
        const StructureConstants a = algebra_from_blocks({make_block(BlockKind::B, 2, c)});
        const StructureConstants b = algebra_from_blocks({make_block(BlockKind::B, 2, c.inv())});
        const IsoResult r = isomorphic_dim1_nilpotent(a, b);
        EXPECT_TRUE(r.isomorphic);
        ASSERT_TRUE(r.witness) << c.to_string();
        EXPECT_EQ(change_of_basis(a, *r.witness), b);
    }
    EXPECT_FALSE(isomorphic_dim1_nilpotent(from_blocks("B2(2)"), from_blocks("B2(3)")).isomorphic);
}

TEST(Isomorphism, DistinctDim4Items) {
    const auto fx = fixtures(4);
    EXPECT_FALSE(isomorphic_dim1_nilpotent(instantiate(fx[0], {}), fx[5]).isomorphic);
    EXPECT_FALSE(isomorphic_dim1_nilpotent(fx[2], fx[3]).isomorphic);
}

TEST(Isomorphism, Preconditions) {
    EXPECT_THROW(isomorphic_dim1_nilpotent(sample("cyclic2.json"), sample("cyclic2.json")), PreconditionFailed);
    EXPECT_THROW(isomorphic_dim1_nilpotent(fixtures(4)[4], fixtures(4)[4]), PreconditionFailed);
}

TEST(Isomorphism, ReflexiveSymmetricAndBasisInvariant) {
    std::mt19937_64 rng(17);
    for (const char* s : {"A3 C1", "B2(2) E2", "C3 C1 C1", "D4 C1", "A5"}) {
        const StructureConstants a = from_blocks(s);
        EXPECT_TRUE(isomorphic_dim1_nilpotent(a, a).isomorphic);
        for (int t = 0; t < 10; ++t) {
            const StructureConstants b = change_of_basis(a, random_invertible(a.dim(), rng));
            const IsoResult ab = isomorphic_dim1_nilpotent(a, b);
            EXPECT_TRUE(ab.isomorphic) << s;
            EXPECT_TRUE(isomorphic_dim1_nilpotent(b, a).isomorphic) << s;
            if (ab.witness)
                EXPECT_EQ(change_of_basis(a, *ab.witness), b);
        }
    }
}

TEST(Isomorphism, WitnessThroughCanonicalForm) {
    // Permuted and rescaled copy: found through the canonical matrix.
    const StructureConstants a = from_blocks("E2 C1");
    Matrix<Scalar> p(4, 4);
    p(0, 2) = Scalar(2);
    p(1, 0) = Scalar(1);
    p(2, 1) = Scalar(3);
    p(3, 3) = Scalar(1);
    const StructureConstants b = change_of_basis(a, p);
    const IsoResult r = isomorphic_dim1_nilpotent(a, b);
    EXPECT_TRUE(r.isomorphic);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(change_of_basis(a, *r.witness), b);
}

TEST(RatioInvariant, FamilyTwo) {
    auto pair = [](const Scalar& a) {
        const auto r = type2_ratio_invariant(family_at(2, a));
        return r.first.to_string() + "," + r.second.to_string();
    };
    EXPECT_EQ(pair(Scalar(3)), "1/3,3");
    EXPECT_EQ(pair(Scalar(1)), "1,1");
    EXPECT_EQ(pair(Scalar(2)), pair(Scalar(QI::ratio(1, 2))));
    EXPECT_NE(pair(Scalar(2)), pair(Scalar(3)));
}

TEST(RatioInvariant, StableUnderBasisChangeOfSquare) {
    std::mt19937_64 rng(23);
    const StructureConstants a = family_at(2, Scalar(5));
    const auto ref = type2_ratio_invariant(a);
    for (int t = 0; t < 10; ++t) {
        Matrix<Scalar> p = random_invertible(3, rng);
        EXPECT_EQ(type2_ratio_invariant(change_of_basis(a, p)), ref);
    }
}

TEST(RatioInvariant, RejectsOtherShapes) {
    EXPECT_THROW(type2_ratio_invariant(family_at(3, Scalar(1))), PreconditionFailed);
    EXPECT_THROW(type2_ratio_invariant(sample("cyclic2.json")), PreconditionFailed);
    EXPECT_THROW(type2_ratio_invariant(dim3_solvable_table()[1].algebra), PreconditionFailed);
}

TEST(Fuzz, TableEntriesStayConsistent) {
    for (const auto& e : nilpotent_table(5)) {
        const StructureConstants a = instantiate(e.algebra, spot_bindings(e.algebra.parameters()));
        const FuzzReport r = random_basis_fuzz(a, 5, 99);
        EXPECT_TRUE(r.ok()) << r.to_json().dump();
    }
    const FuzzReport f4 = random_basis_fuzz(family_at(4, Scalar(1)), 30, 4);
    EXPECT_TRUE(f4.ok());
    EXPECT_TRUE(random_basis_fuzz(family_at(4, Scalar(1)), 0, 4).ok());
}

TEST(Fuzz, SeedDeterminesReport) {
    const StructureConstants a = from_blocks("A3 C1");
    EXPECT_EQ(random_basis_fuzz(a, 3, 8).to_json(), random_basis_fuzz(a, 3, 8).to_json());
    std::mt19937_64 r1(8), r2(8);
    EXPECT_EQ(random_invertible(4, r1), random_invertible(4, r2));
}

TEST(SolvableSeparation, UnseparatedPairsAreListed) {
    std::vector<StructureConstants> fams;
    for (std::size_t k = 1; k <= 6; ++k)
        fams.push_back(family_at(k, Scalar(2)));
    const auto pairs = unseparated_solvable_pairs(fams);
    // Families 2 and 3 share every dimension invariant; the ratio invariant
    // still tells them apart because family 3 is not diagonalizable.
    ASSERT_EQ(pairs.size(), 1u);
    EXPECT_EQ(pairs[0], (std::pair<std::string, std::string>{"dim3-family2", "dim3-family3"}));
}
