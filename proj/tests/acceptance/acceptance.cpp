// Acceptance checks: one PASS/FAIL line per criterion, non-zero exit on any failure.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "leibniz/leibniz.hpp"

using namespace leibniz;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string data_path(const std::string& rel) { return std::string(LEIBNIZ_DATA_DIR) + "/" + rel; }

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string secs(double s) {
    std::ostringstream o;
    o.precision(2);
    o << std::fixed << s << " s";
    return o.str();
}

Outcome counts() {
    const auto t0 = Clock::now();
    const std::vector<std::size_t> expected{6, 14, 23, 47, 74};
    std::string got;
    bool ok = true;
    for (std::size_t n = 4; n <= 8; ++n) {
        const std::size_t c = nilpotent_table(n).size();
        got += (got.empty() ? "" : " ") + std::to_string(c);
        ok = ok && c == expected[n - 4];
    }
    const double t = seconds_since(t0);
    return {ok && t < 10, "entries " + got + " for dims 4-8 in " + secs(t)};
}

Outcome fixture_matching() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (std::size_t n = 4; n <= 7; ++n) {
        const auto fx = parse_algebra_list(read_file(data_path("fixtures/dim" + std::to_string(n) + ".json")));
        const MatchReport r = match_paper_table(n, nilpotent_table(n), fx);
        ok = ok && r.perfect();
        detail += (detail.empty() ? "" : ", ") + std::string("dim ") + std::to_string(n) + " " +
                  std::to_string(r.matched.size()) + "/" + std::to_string(fx.size());
    }
    const double t = seconds_since(t0);
    return {ok && t < 30, "perfect matchings " + detail + " in " + secs(t)};
}

Outcome symbolic_soundness() {
    std::size_t entries = 0, failures = 0;
    std::string first;
    for (std::size_t n = 2; n <= 8; ++n)
        for (const auto& e : nilpotent_table(n)) {
            ++entries;
            const auto& a = e.algebra;
            std::string why;
            if (!verify_leibniz(a))
                why = "Leibniz identity";
            else if (is_lie(a))
                why = "Lie";
            else if (!is_nilpotent(a))
                why = "not nilpotent";
            else if (derived_algebra(a).dim() != 1)
                why = "dim A^2";
            else if (has_zero_summand(form_from_algebra(a).form))
                why = "zero summand";
            if (!why.empty()) {
                ++failures;
                if (first.empty())
                    first = e.label + " (" + why + ")";
            }
        }
    return {failures == 0, std::to_string(entries) + " parametric entries, dims 2-8, " + std::to_string(failures) +
                               " failures" + (first.empty() ? "" : ", first " + first)};
}

Outcome cyclic_algebra() {
    const auto t = solvable_dim1_table();
    StructureConstants expected(2);
    expected.at(0, 0, 1) = Scalar(1);
    expected.at(0, 1, 1) = Scalar(1);
    bool ok = t.size() == 1 && t[0].algebra == expected;
    if (ok) {
        const auto& a = t[0].algebra;
        ok = verify_leibniz(a) && is_solvable(a) && !is_nilpotent(a) && !is_lie(a) && derived_algebra(a).dim() == 1;
    }
    return {ok, std::to_string(t.size()) + " entry: " + (t.empty() ? "" : product_list_text(t[0].algebra))};
}

Outcome solvable_families() {
    std::size_t failures = 0;
    std::string dims;
    for (const auto& e : dim3_solvable_table()) {
        if (!check_solvable_entry(e, 2).ok())
            ++failures;
        const std::size_t d3 = series_term(derived_series(e.algebra), 3).dim();
        dims += std::to_string(d3);
        if (d3 != (e.family == "6" ? 1u : 0u))
            ++failures;
    }
    return {failures == 0, "6 families symbolic in alpha, dim A^(3) by family " + dims + ", " +
                               std::to_string(failures) + " failures"};
}

Outcome ratio_criterion() {
    const std::vector<QI> grid{QI(2), QI::ratio(1, 2), QI(3), QI::ratio(1, 3), QI(-2), QI::ratio(-1, 2),
                               QI(5), QI::ratio(1, 5), QI(-3), QI(4), QI(1), QI(-1)};
    const StructureConstants fam = dim3_solvable_table()[1].algebra;
    std::vector<std::pair<Scalar, Scalar>> pairs;
    for (const QI& a : grid)
        pairs.push_back(type2_ratio_invariant(instantiate(fam, {{"alpha", Scalar(a)}})));
    std::size_t checked = 0, wrong = 0, iso = 0;
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = 0; j < grid.size(); ++j) {
            ++checked;
            const bool expect = grid[i] == grid[j] || grid[i] * grid[j] == QI(1);
            const bool got = pairs[i] == pairs[j];
            iso += got;
            wrong += expect != got;
        }
    return {wrong == 0, std::to_string(checked) + " ordered pairs over 12 values, " + std::to_string(iso) +
                            " declared isomorphic, " + std::to_string(wrong) + " disagreements"};
}

std::vector<std::vector<CanonicalBlock>> multisets_with_a1(std::size_t m) {
    std::vector<std::vector<CanonicalBlock>> out;
    const std::vector<Scalar> spots{Scalar(2), Scalar(3), Scalar(QI::i()), Scalar(0)};
    for (std::size_t a1 = 0; a1 <= m; ++a1) {
        const std::size_t rest = m - a1;
        std::vector<BlockMultiset> base;
        if (rest == 0)
            base.push_back({});
        else
            base = block_multisets(rest);
        for (auto ms : base) {
            std::size_t k = 0;
            for (auto& b : ms.blocks)
                if (b.kind == BlockKind::B)
                    b.parameter = spots[k++ % spots.size()];
            for (std::size_t z = 0; z < a1; ++z)
                ms.blocks.push_back(make_block(BlockKind::A, 1));
            out.push_back(ms.blocks);
        }
    }
    return out;
}

Outcome congruence_engine() {
    const auto t0 = Clock::now();
    std::size_t sets = 0, failures = 0;
    std::string first;
    for (std::size_t m = 1; m <= 6; ++m)
        for (const auto& blocks : multisets_with_a1(m)) {
            ++sets;
            const FuzzReport r = congruence_fuzz(direct_sum_matrix(blocks), 100, 1000 + sets, block_list_to_string(blocks));
            if (!r.ok()) {
                ++failures;
                if (first.empty())
                    first = r.subject;
            }
        }
    std::size_t blocks_checked = 0;
    const std::vector<Scalar> params{Scalar(0), Scalar(2), Scalar(3), Scalar(QI::i()), Scalar(-2), Scalar(QI::ratio(1, 2))};
    for (std::size_t n = 1; n <= 8; ++n)
        for (BlockKind k : {BlockKind::A, BlockKind::B, BlockKind::C, BlockKind::D, BlockKind::E, BlockKind::F}) {
            std::vector<CanonicalBlock> cands;
            if (k == BlockKind::B && n % 2 == 0) {
                for (const auto& c : params)
                    cands.push_back({k, n, c});
            } else {
                cands.push_back({k, n, std::nullopt});
            }
            for (const auto& b : cands) {
                try {
                    b.validate();
                } catch (const InvalidBlock&) {
                    continue;
                }
                ++blocks_checked;
                if (canonical_decomposition(canonical_block_matrix(b)) != normalize_blocks({b})) {
                    ++failures;
                    if (first.empty())
                        first = b.name();
                }
            }
        }
    std::size_t witnesses = 0;
    for (const Scalar& c : {Scalar(2), Scalar(3), Scalar(QI::i())}) {
        const FormMatrix m = canonical_block_matrix(make_block(BlockKind::B, 2, c));
        const FormMatrix n = canonical_block_matrix(make_block(BlockKind::B, 2, c.inv()));
        const auto s = monomial_congruence_witness(to_constant(m), to_constant(n));
        const IsoResult r = isomorphic_dim1_nilpotent(algebra_from_blocks({make_block(BlockKind::B, 2, c)}),
                                                      algebra_from_blocks({make_block(BlockKind::B, 2, c.inv())}));
        if (s && congruence_transform(to_constant(m), *s) == to_constant(n) && r.isomorphic && r.witness)
            ++witnesses;
        else if (first.empty())
            first = "witness for c = " + c.to_string();
    }
    failures += 3 - witnesses;
    const double t = seconds_since(t0);
    return {failures == 0 && t < 60,
            std::to_string(sets) + " multisets x 100 congruences, " + std::to_string(blocks_checked) +
                " blocks fixed, " + std::to_string(witnesses) + "/3 reciprocal witnesses, " + std::to_string(failures) +
                " failures" + (first.empty() ? "" : " (first " + first + ")") + " in " + secs(t)};
}

Outcome distinctness() {
    bool ok = true;
    std::string detail;
    for (std::size_t n = 4; n <= 6; ++n) {
        const DistinctnessReport r = distinctness_report(n);
        std::size_t b_params = 0;
        for (const auto& e : nilpotent_table(n))
            b_params += e.algebra.parameters().size();
        ok = ok && r.clean() && r.identifications.size() == b_params;
        detail += (detail.empty() ? "" : ", ") + std::string("dim ") + std::to_string(n) + ": " +
                  std::to_string(r.pairs_checked) + " pairs, " + std::to_string(r.collisions.size()) + " collisions, " +
                  std::to_string(r.identifications.size()) + " c<->1/c";
    }
    return {ok, detail};
}

Outcome round_trips() {
    std::size_t files = 0, forms = 0, lists = 0, failures = 0;
    for (std::size_t n = 4; n <= 7; ++n) {
        const std::string text = read_file(data_path("fixtures/dim" + std::to_string(n) + ".json"));
        const auto algebras = parse_algebra_list(text);
        ++files;
        failures += algebra_list_to_string(algebras) != text;
        for (const auto& a : algebras) {
            failures += algebra_to_string(parse_algebra(algebra_to_string(a))) != algebra_to_string(a);
            const std::string m = matrix_to_string(form_from_algebra(a).form);
            failures += matrix_to_string(parse_matrix(m)) != m;
            ++forms;
        }
    }
    std::mt19937_64 rng(2024);
    const std::vector<std::string> pool{"A1", "A3", "A5", "B2(c)", "B2(2)", "B2(i)", "B4(0)", "C1", "C3",
                                        "C5", "D4", "E2", "E4", "F2", "F6", "B2(-1/3)"};
    while (lists < 50) {
        std::vector<CanonicalBlock> blocks;
        const std::size_t k = 1 + rng() % 4;
        for (std::size_t j = 0; j < k; ++j)
            blocks.push_back(parse_block(pool[rng() % pool.size()]));
        if (std::count_if(blocks.begin(), blocks.end(), [](const CanonicalBlock& b) { return b.parameter && !b.parameter->is_constant(); }) > 1)
            continue;
        const FormMatrix m = direct_sum_matrix(blocks);
        if (std::all_of(m.data().begin(), m.data().end(), [](const Scalar& s) { return s.is_zero(); }))
            continue;
        ++lists;
        failures += !(form_from_algebra(algebra_from_blocks(blocks)).form == m);
    }
    return {failures == 0, std::to_string(files) + " fixture files, " + std::to_string(forms) + " forms, " +
                               std::to_string(lists) + " random block lists, " + std::to_string(failures) + " failures"};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"table counts", counts},
        {"fixture matching", fixture_matching},
        {"symbolic soundness", symbolic_soundness},
        {"cyclic solvable algebra", cyclic_algebra},
        {"3-dim solvable families", solvable_families},
        {"eigenvalue ratio criterion", ratio_criterion},
        {"congruence engine", congruence_engine},
        {"distinctness", distinctness},
        {"round trips", round_trips},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << (k + 1) << " " << criteria[k].first << ": " << o.detail
                  << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
