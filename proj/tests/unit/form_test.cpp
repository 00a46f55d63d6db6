#include <map>
#include <random>

#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace leibniz;
using namespace leibniz::test;

namespace {

std::vector<CanonicalBlock> all_blocks(std::size_t max_size) {
    std::vector<CanonicalBlock> out;
    const std::vector<Scalar> params{Scalar(0), Scalar(2), Scalar(3), Scalar(QI::i()), Scalar(-2),
                                     Scalar(QI::ratio(1, 2))};
    for (std::size_t n = 1; n <= max_size; ++n) {
        if (n % 2 == 1) {
            out.push_back(make_block(BlockKind::A, n));
            out.push_back(make_block(BlockKind::C, n));
            continue;
        }
        for (const auto& c : params)
            out.push_back(make_block(BlockKind::B, n, c));
        if ((n / 2) % 2 == 0)
            out.push_back(make_block(BlockKind::D, n));
        out.push_back(make_block(BlockKind::E, n));
        if ((n / 2) % 2 == 1)
            out.push_back(make_block(BlockKind::F, n));
    }
    return out;
}

std::string decomp(const std::string& blocks) {
    return block_list_to_string(canonical_decomposition(direct_sum_matrix(parse_block_list(blocks))));
}

} // namespace

TEST(Blocks, ExactSmallMatrices) {
    EXPECT_EQ(matrix_to_string(canonical_block_matrix(blk("B2(c)"))), "0,1;c,0");
    EXPECT_EQ(matrix_to_string(canonical_block_matrix(blk("C1"))), "1");
    EXPECT_EQ(matrix_to_string(canonical_block_matrix(blk("A1"))), "0");
    EXPECT_EQ(matrix_to_string(canonical_block_matrix(blk("A3"))), "0,0,1;0,0,0;0,1,0");
    EXPECT_EQ(matrix_to_string(canonical_block_matrix(blk("C3"))), "0,0,1;0,1,1;1,-1,0");
    EXPECT_EQ(matrix_to_string(canonical_block_matrix(blk("E2"))), "0,1;-1,1");
    EXPECT_EQ(matrix_to_string(canonical_block_matrix(blk("F2"))), "0,1;-1,0");
    EXPECT_EQ(matrix_to_string(canonical_block_matrix(blk("D4"))), "0,0,0,1;0,0,1,1;0,1,0,0;1,-1,0,0");
    EXPECT_EQ(matrix_to_string(canonical_block_matrix(blk("B4(c)"))), "0,0,0,1;0,0,1,c;0,c,0,0;c,1,0,0");
}

TEST(Blocks, InvalidBlocksRejected) {
    for (const char* bad : {"B2(1)", "B2(-1)", "A2", "C4", "D6", "F4", "E3", "C3(2)", "B2"})
        EXPECT_THROW(parse_block(bad), InvalidBlock) << bad;
    EXPECT_THROW(parse_block("G2"), ParseError);
    EXPECT_THROW(parse_block("B2(2"), ParseError);
}

TEST(Blocks, ListGrammar) {
    const auto b = parse_block_list("F2 B2(c)+C1");
    ASSERT_EQ(b.size(), 3u);
    EXPECT_EQ(block_list_to_string(b), "F2 B2(c) C1");
    EXPECT_EQ(block_list_to_string(parse_block_list("B2(1/(c+2)) A3")), "B2(1/(c+2)) A3");
}

TEST(Form, ExtractionInvertsConstruction) {
    std::mt19937_64 rng(5);
    const auto pool = all_blocks(4);
    for (int t = 0; t < 50; ++t) {
        std::vector<CanonicalBlock> blocks;
        const std::size_t k = 1 + rng() % 3;
        for (std::size_t j = 0; j < k; ++j)
            blocks.push_back(pool[rng() % pool.size()]);
        const FormMatrix m = direct_sum_matrix(blocks);
        if (std::all_of(m.data().begin(), m.data().end(), [](const Scalar& s) { return s.is_zero(); }))
            continue;
        EXPECT_EQ(form_from_algebra(algebra_from_blocks(blocks)).form, m) << block_list_to_string(blocks);
    }
}

TEST(Form, PreconditionsOfExtraction) {
    EXPECT_THROW(form_from_algebra(sample("cyclic2.json")), PreconditionFailed);
    EXPECT_THROW(form_from_algebra(dim3_solvable_table()[0].algebra), PreconditionFailed);
    EXPECT_THROW(form_from_algebra(sample("not_leibniz.json")), PreconditionFailed);
}

TEST(Form, ZeroSummandMeansSplit) {
    EXPECT_TRUE(has_zero_summand(direct_sum_matrix(parse_block_list("C1 A1"))));
    EXPECT_FALSE(has_zero_summand(direct_sum_matrix(parse_block_list("A3"))));
    const auto ideals = zero_summand_ideals(parse_block_list("C1 A1 E2"));
    ASSERT_TRUE(ideals);
    const StructureConstants a = algebra_from_blocks(parse_block_list("C1 A1 E2"));
    EXPECT_TRUE(is_ideal(a, ideals->first));
    EXPECT_TRUE(is_ideal(a, ideals->second));
    EXPECT_EQ(ideals->first.dim() + ideals->second.dim(), a.dim());
    EXPECT_FALSE(zero_summand_ideals(parse_block_list("C1 E2")));
}

TEST(Decomposition, FixesEveryBlockUpToSizeEight) {
    for (const auto& b : all_blocks(8)) {
        const auto got = canonical_decomposition(canonical_block_matrix(b));
        EXPECT_EQ(got, normalize_blocks({b})) << b.name();
    }
}

TEST(Decomposition, NormalizesBParameter) {
    EXPECT_EQ(decomp("B2(2)"), "B2(1/2)");
    EXPECT_EQ(decomp("B2(i)"), "B2(-i)");
    EXPECT_EQ(decomp("B2(-2)"), "B2(-2)");
    EXPECT_EQ(decomp("B2(0)"), "B2(0)");
    EXPECT_EQ(decomp("C1 F2 A3"), "A3 F2 C1");
}

TEST(Decomposition, ZeroMatrix) {
    EXPECT_EQ(block_list_to_string(canonical_decomposition(FormMatrix(3, 3))), "A1 A1 A1");
}

TEST(Decomposition, SymbolicInputRejected) {
    EXPECT_THROW(canonical_decomposition(parse_matrix("0,1;c,0")), ParameterNotSupported);
}

TEST(Decomposition, InvariantUnderRandomCongruence) {
    std::mt19937_64 rng(11);
    const FormMatrix m = direct_sum_matrix(parse_block_list("A3 B2(2) C1"));
    const auto ref = canonical_decomposition(m);
    for (int t = 0; t < 20; ++t)
        EXPECT_EQ(canonical_decomposition(congruence_transform(m, random_invertible(m.rows(), rng))), ref);
}

TEST(Congruence, MonomialWitnessForB2) {
    const auto s = monomial_congruence_witness(to_constant(direct_sum_matrix(parse_block_list("B2(2)"))),
                                               to_constant(direct_sum_matrix(parse_block_list("B2(1/2)"))));
    ASSERT_TRUE(s);
    EXPECT_EQ(matrix_to_string(*s), "0,1/2;1,0");
    EXPECT_TRUE(is_congruent(direct_sum_matrix(parse_block_list("E2")), parse_matrix("0,1;-1,1")));
    EXPECT_FALSE(is_congruent(direct_sum_matrix(parse_block_list("E2")), direct_sum_matrix(parse_block_list("F2"))));
}

TEST(MatrixText, RoundTripAndErrors) {
    for (const char* t : {"0,1;c,0", "1", "0,0,1;0,1,1;1,-1,0", "1/2,i;-i,0"})
        EXPECT_EQ(matrix_to_string(parse_matrix(t)), t);
    EXPECT_THROW(parse_matrix("0,1;1"), ParseError);
    try {
        parse_matrix(read_file(data_path("samples/bad_matrix.txt")));
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
}

// Distinct normalized multisets of size <= 7, A1 included, never share pencil invariants.
TEST(PencilInvariants, SeparateAllSmallMultisets) {
    const std::vector<Scalar> spots{Scalar(2), Scalar(3), Scalar(QI::i()), Scalar(0)};
    std::map<std::string, std::string> seen;
    std::size_t total = 0;
    for (std::size_t m = 1; m <= 7; ++m)
        for (std::size_t a1 = 0; a1 <= m; ++a1) {
            std::vector<BlockMultiset> base = a1 == m ? std::vector<BlockMultiset>{{}} : block_multisets(m - a1);
            for (auto ms : base) {
                std::size_t k = 0;
                for (auto& b : ms.blocks)
                    if (b.kind == BlockKind::B)
                        b.parameter = spots[k++ % spots.size()];
                for (std::size_t z = 0; z < a1; ++z)
                    ms.blocks.push_back(make_block(BlockKind::A, 1));
                const std::string name = block_list_to_string(normalize_blocks(ms.blocks));
                const std::string inv = pencil_invariants(direct_sum_matrix(ms.blocks)).to_string();
                const auto [it, fresh] = seen.emplace(inv, name);
                EXPECT_TRUE(fresh || it->second == name) << name << " and " << it->second << " share " << inv;
                ++total;
            }
        }
    EXPECT_EQ(total, 2u + 6 + 12 + 27 + 50 + 98 + 172);
}
