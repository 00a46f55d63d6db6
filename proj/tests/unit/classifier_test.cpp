#include <set>
#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace leibniz;
using namespace leibniz::test;

TEST(Partitions, DescendingLexicographic) {
    const auto p = partitions(7);
    ASSERT_EQ(p.size(), 15u);
    EXPECT_EQ(p.front(), (Partition{7}));
    EXPECT_EQ(p[1], (Partition{6, 1}));
    EXPECT_EQ(p[2], (Partition{5, 2}));
    EXPECT_EQ(p.back(), (Partition{1, 1, 1, 1, 1, 1, 1}));
    EXPECT_EQ(partitions(1).size(), 1u);
    EXPECT_TRUE(partitions(0).empty());
}

TEST(Multisets, LieOnlyCasesAreAllF2) {
    for (std::size_t m = 1; m <= 7; ++m)
        for (const auto& ms : block_multisets(m)) {
            const bool all_f2 = std::all_of(ms.blocks.begin(), ms.blocks.end(), [](const CanonicalBlock& b) {
                return b.kind == BlockKind::F && b.size == 2;
            });
            EXPECT_EQ(ms.lie_only, all_f2) << block_list_to_string(ms.blocks);
        }
}

TEST(Multisets, ParameterNaming) {
    const auto ms = block_multisets(6);
    auto it = std::find_if(ms.begin(), ms.end(), [](const BlockMultiset& m) {
        return block_list_to_string(m.blocks) == "B2(c1) B2(c2) B2(c3)";
    });
    EXPECT_NE(it, ms.end());
    EXPECT_EQ(block_list_to_string(block_multisets(2).back().blocks), "C1 C1");
}

TEST(NilpotentTable, Counts) {
    const std::vector<std::size_t> expected{6, 14, 23, 47, 74};
    for (std::size_t n = 4; n <= 8; ++n)
        EXPECT_EQ(nilpotent_table(n).size(), expected[n - 4]) << n;
}

TEST(NilpotentTable, EveryEntryIsSound) {
    for (std::size_t n = 2; n <= 8; ++n)
        for (const auto& e : nilpotent_table(n)) {
            const EntryCheck c = check_nilpotent_entry(e);
            EXPECT_TRUE(c.ok()) << e.label << ": " << (c.failures.empty() ? "" : c.failures.front());
        }
}

TEST(NilpotentTable, MatchesTranscribedItemsInOrder) {
    for (std::size_t n = 4; n <= 7; ++n) {
        const auto table = nilpotent_table(n);
        const auto fx = fixtures(n);
        const MatchReport rep = match_paper_table(n, table, fx);
        EXPECT_TRUE(rep.perfect()) << n;
        // The generation order reproduces the item numbering.
        for (std::size_t k = 0; k < table.size() && k < fx.size(); ++k)
            EXPECT_TRUE(match_algebras(table[k].algebra, fx[k])) << table[k].label << " vs " << fx[k].label;
    }
}

TEST(NilpotentTable, MatchesTranscribedBlockTables) {
    const Json t = detail::parse_json_text(read_file(data_path("fixtures/block_tables.json")));
    for (std::size_t n = 5; n <= 8; ++n) {
        const auto rep = compare_block_table(n, t[std::to_string(n)].get<std::vector<std::string>>());
        EXPECT_TRUE(rep.perfect()) << rep.to_json().dump();
    }
}

TEST(Matching, RespectsRenamingAndRejectsDifferentAlgebras) {
    const auto fx = fixtures(5);
    EXPECT_FALSE(match_algebras(fx[0], fx[1]));
    // Item 10 carries c1, c2; swapping the names is a renaming, not a new algebra.
    // A basis permutation may absorb the swap, so only the bijection is checked.
    StructureConstants swapped = fx[9];
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            swapped.at(i, j, 4) = rename_parameters(fx[9].at(i, j, 4), {{"c1", "c2"}, {"c2", "c1"}});
    const auto m = match_algebras(swapped, fx[9]);
    ASSERT_TRUE(m);
    std::set<std::string> targets;
    for (const auto& [from, to] : m->renaming)
        targets.insert(to);
    EXPECT_EQ(targets, (std::set<std::string>{"c1", "c2"}));
    StructureConstants scaled = fx[9];
    scaled.at(0, 1, 4) = Scalar(2);
    EXPECT_FALSE(match_algebras(scaled, fx[9]));
}

TEST(Matching, ReportsDiscrepancies) {
    auto fx = fixtures(4);
    fx.pop_back();
    const MatchReport rep = match_paper_table(4, nilpotent_table(4), fx);
    EXPECT_FALSE(rep.perfect());
    EXPECT_EQ(rep.unmatched_generated, std::vector<std::string>{"dim4:C1+C1+C1"});
    EXPECT_TRUE(rep.unmatched_fixtures.empty());
}

TEST(SolvableTables, CyclicAlgebra) {
    const auto t = solvable_dim1_table();
    ASSERT_EQ(t.size(), 1u);
    EXPECT_EQ(product_list_text(t[0].algebra), "[x1, x1]=x2, [x1, x2]=x2");
    EXPECT_TRUE(check_solvable_entry(t[0], 1).ok());
}

TEST(SolvableTables, ThreeDimensionalFamilies) {
    const auto t = dim3_solvable_table();
    ASSERT_EQ(t.size(), 6u);
    for (const auto& e : t) {
        const EntryCheck c = check_solvable_entry(e, 2);
        EXPECT_TRUE(c.ok()) << e.label << ": " << (c.failures.empty() ? "" : c.failures.front());
    }
    EXPECT_EQ(product_list_text(t[2].algebra), "[x, y]=y-1/4*z, [x, z]=y");
    EXPECT_EQ(t[1].algebra.parameters(), std::set<std::string>{"alpha"});
}

TEST(Distinctness, OnlyReciprocalParametersCoincide) {
    const std::vector<std::size_t> b_params{1, 6, 8};
    for (std::size_t n = 4; n <= 6; ++n) {
        const DistinctnessReport r = distinctness_report(n);
        EXPECT_TRUE(r.collisions.empty()) << n;
        EXPECT_EQ(r.pairs_checked, r.entries * (r.entries - 1) / 2);
        EXPECT_EQ(r.identifications.size(), b_params[n - 4]) << n;
        EXPECT_TRUE(r.clean()) << r.to_json().dump();
    }
}

TEST(Distinctness, SpotCheckThroughDimSeven) {
    const DistinctnessReport r = distinctness_report(7);
    EXPECT_EQ(r.entries, 47u);
    EXPECT_TRUE(r.clean()) << r.to_json().dump();
}

TEST(Markdown, OneItemPerLine) {
    const std::string md = table_markdown("t", nilpotent_table(4));
    EXPECT_EQ(std::count(md.begin(), md.end(), '\n'), 2 + 6);
    EXPECT_NE(md.find("[x1, x2]=x4, [x2, x1]=c*x4, [x3, x3]=x4; c not in {1, -1}"), std::string::npos) << md;
}
