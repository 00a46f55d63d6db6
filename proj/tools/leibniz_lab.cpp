#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "leibniz/leibniz.hpp"

#ifndef LEIBNIZ_DATA_DIR
#define LEIBNIZ_DATA_DIR "data"
#endif

using namespace leibniz;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

Json vec_json(const Vec& v) {
    Json j = Json::array();
    for (const auto& s : v)
        j.push_back(s.to_string());
    return j;
}

int run_analyze(const std::string& path) {
    const StructureConstants a = load_algebra(path);
    Json out;
    out["label"] = a.label;
    out["dim"] = a.dim();
    const bool leib = verify_leibniz(a);
    out["leibniz"] = leib;
    if (!leib) {
        std::cout << out.dump(2) << "\n";
        return kVerificationFailed;
    }
    out["lie"] = is_lie(a);
    out["nilpotent"] = is_nilpotent(a);
    out["solvable"] = is_solvable(a);
    Json lb = Json::array();
    for (const auto& v : leib_ideal(a).vectors())
        lb.push_back(vec_json(v));
    out["leib_basis"] = lb;
    out["invariants"] = iso_invariants(a).to_json();
    if (a.is_constant() && pencil_eligible(a)) {
        const FormExtraction e = form_from_algebra(a);
        out["form"] = matrix_to_string(e.form);
        out["canonical_form"] = block_list_to_string(canonical_decomposition(e.form));
    }
    std::cout << out.dump(2) << "\n";
    return kOk;
}

int run_canonical_form(const std::string& path) {
    const FormMatrix m = parse_matrix(read_file(path));
    std::cout << block_list_to_string(canonical_decomposition(m)) << "\n";
    return kOk;
}

int run_classify(std::size_t dim, const std::string& format, bool solvable) {
    std::vector<ClassificationEntry> table;
    std::vector<EntryCheck> checks;
    std::string title;
    if (solvable) {
        if (dim == 2) {
            table = solvable_dim1_table();
            title = "solvable, dim 2, dim A^2 = 1";
        } else if (dim == 3) {
            table = dim3_solvable_table();
            title = "solvable, dim 3, dim A^2 = 2";
        } else {
            throw CLI::ValidationError("--solvable", "solvable tables exist for --dim 2 and --dim 3");
        }
        for (const auto& e : table)
            checks.push_back(check_solvable_entry(e, dim - 1));
    } else {
        if (dim < 2 || dim > 10)
            throw CLI::ValidationError("--dim", "nilpotent tables are generated for 2 <= dim <= 10");
        table = nilpotent_table(dim);
        title = "nilpotent, dim " + std::to_string(dim) + ", dim A^2 = 1";
        for (const auto& e : table)
            checks.push_back(check_nilpotent_entry(e));
    }
    if (format == "md") {
        std::cout << table_markdown(title, table);
    } else {
        std::vector<StructureConstants> algebras;
        for (const auto& e : table)
            algebras.push_back(e.algebra);
        std::cout << algebra_list_to_string(algebras);
    }
    int rc = kOk;
    for (const auto& c : checks)
        for (const auto& f : c.failures) {
            std::cerr << c.label << ": " << f << "\n";
            rc = kVerificationFailed;
        }
    return rc;
}

int run_match_paper(std::size_t dim, const std::string& fixtures) {
    Json out;
    bool ok = true;
    bool any = false;
    const std::string items = fixtures + "/dim" + std::to_string(dim) + ".json";
    if (std::ifstream(items).good()) {
        const auto report = match_paper_table(dim, nilpotent_table(dim), parse_algebra_list(read_file(items)));
        out["items"] = report.to_json();
        ok = ok && report.perfect();
        any = true;
    }
    const std::string tables = fixtures + "/block_tables.json";
    if (std::ifstream(tables).good()) {
        const Json t = detail::parse_json_text(read_file(tables));
        const std::string key = std::to_string(dim);
        if (t.contains(key)) {
            const auto report = compare_block_table(dim, t[key].get<std::vector<std::string>>());
            out["block_table"] = report.to_json();
            ok = ok && report.perfect();
            any = true;
        }
    }
    if (!any)
        throw Error("no fixtures for dim " + std::to_string(dim) + " under " + fixtures);
    if (dim >= 4 && dim <= 6)
        out["distinctness"] = distinctness_report(dim).to_json();
    out["perfect"] = ok;
    std::cout << out.dump(2) << "\n";
    return ok ? kOk : kVerificationFailed;
}

int run_check_iso(const std::string& first, const std::string& second) {
    std::cout << iso_report(load_algebra(first), load_algebra(second)).dump(2) << "\n";
    return kOk;
}

int run_fuzz(const std::string& path, std::size_t trials, std::uint64_t seed) {
    const FuzzReport rep = random_basis_fuzz(load_algebra(path), trials, seed);
    std::cout << rep.to_json().dump(2) << "\n";
    return rep.ok() ? kOk : kVerificationFailed;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("LEIBNIZ_LAB_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw CLI::ValidationError("LEIBNIZ_LAB_SEED", "must be a non-negative integer");
        }
    }
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for low-dimensional Leibniz algebras"};
    app.require_subcommand(1, 1);

    std::string path, other;
    std::size_t dim = 0;
    std::string format = "json";
    bool solvable = false;
    std::string fixtures = std::string(LEIBNIZ_DATA_DIR) + "/fixtures";
    std::size_t trials = 100;
    std::uint64_t seed = 0;

    auto* analyze = app.add_subcommand("analyze", "Invariants and structure of an algebra file");
    analyze->add_option("algebra", path, "Algebra JSON file")->required()->check(CLI::ExistingFile);

    auto* canon = app.add_subcommand("canonical-form", "Congruence canonical form of a matrix file");
    canon->add_option("matrix", path, "Matrix file, rows split by ';', entries by ','")
        ->required()
        ->check(CLI::ExistingFile);

    auto* classify = app.add_subcommand("classify", "Emit a classification table");
    classify->add_option("--dim", dim, "Algebra dimension")->required();
    classify->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "md"}));
    classify->add_flag("--solvable", solvable, "Non-nilpotent solvable tables (dim 2 or 3)");

    auto* match = app.add_subcommand("match-paper", "Match a generated table against transcribed fixtures");
    match->add_option("--dim", dim, "Algebra dimension")->required();
    match->add_option("--fixtures", fixtures, "Fixture directory")->check(CLI::ExistingDirectory);

    auto* iso = app.add_subcommand("check-iso", "Isomorphism verdict for two algebra files");
    iso->add_option("first", path, "First algebra")->required()->check(CLI::ExistingFile);
    iso->add_option("second", other, "Second algebra")->required()->check(CLI::ExistingFile);

    auto* fuzz = app.add_subcommand("fuzz", "Random basis changes against invariants");
    fuzz->add_option("algebra", path, "Algebra JSON file")->required()->check(CLI::ExistingFile);
    fuzz->add_option("--trials", trials, "Number of basis changes");
    auto* seed_opt = fuzz->add_option("--seed", seed, "RNG seed (default: LEIBNIZ_LAB_SEED or 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*analyze)
            return run_analyze(path);
        if (*canon)
            return run_canonical_form(path);
        if (*classify)
            return run_classify(dim, format, solvable);
        if (*match)
            return run_match_paper(dim, fixtures);
        if (*iso)
            return run_check_iso(path, other);
        if (*fuzz)
            return run_fuzz(path, trials, seed_opt->count() ? seed : default_seed());
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
