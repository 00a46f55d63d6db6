#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "leibniz/algebra_io.hpp"
#include "leibniz/form.hpp"

namespace leibniz {

struct ClassificationEntry {
    StructureConstants algebra;
    std::vector<CanonicalBlock> blocks; // nilpotent entries
    std::string family;                 // solvable entries
    std::string label;
};

using Partition = std::vector<std::size_t>;

/// All partitions of m, parts non-increasing, in descending lexicographic order.
inline std::vector<Partition> partitions(std::size_t m) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t max_part) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t p = std::min(left, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    if (m > 0)
        rec(m, m);
    return out;
}

/// Block kinds available at a given size, in table order (A1 excluded).
inline std::vector<BlockKind> kinds_of_size(std::size_t s) {
    if (s % 2 == 1)
        return s == 1 ? std::vector<BlockKind>{BlockKind::C} : std::vector<BlockKind>{BlockKind::A, BlockKind::C};
    if (s == 2)
        return {BlockKind::F, BlockKind::E, BlockKind::B};
    std::vector<BlockKind> k{BlockKind::B};
    if ((s / 2) % 2 == 0)
        k.push_back(BlockKind::D);
    k.push_back(BlockKind::E);
    if ((s / 2) % 2 == 1)
        k.push_back(BlockKind::F);
    return k;
}

struct BlockMultiset {
    std::vector<CanonicalBlock> blocks;
    bool lie_only = false;
};

inline bool is_skew(const FormMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!(m(i, j) + m(j, i)).is_zero())
                return false;
    return true;
}

/// Every multiset of non-A1 blocks whose sizes partition m. B parameters are
/// c for a single B block, otherwise c1, c2, ... in block order.
inline std::vector<BlockMultiset> block_multisets(std::size_t m) {
    std::vector<BlockMultiset> out;
    for (const auto& part : partitions(m)) {
        // Group equal sizes; each group picks a multiset of kinds.
        std::vector<std::pair<std::size_t, std::size_t>> groups;
        for (auto s : part) {
            if (!groups.empty() && groups.back().first == s)
                ++groups.back().second;
            else
                groups.emplace_back(s, 1);
        }
        std::vector<std::vector<std::vector<BlockKind>>> choices;
        for (const auto& [size, count] : groups) {
            const auto kinds = kinds_of_size(size);
            std::vector<std::vector<BlockKind>> combos;
            std::vector<BlockKind> cur;
            std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t from, std::size_t left) {
                if (left == 0) {
                    combos.push_back(cur);
                    return;
                }
                for (std::size_t k = from; k < kinds.size(); ++k) {
                    cur.push_back(kinds[k]);
                    rec(k, left - 1);
                    cur.pop_back();
                }
            };
            rec(0, count);
            choices.push_back(std::move(combos));
        }
        std::vector<std::size_t> pick(groups.size(), 0);
        for (;;) {
            BlockMultiset ms;
            for (std::size_t g = 0; g < groups.size(); ++g)
                for (BlockKind k : choices[g][pick[g]])
                    ms.blocks.push_back({k, groups[g].first, std::nullopt});
            const auto b_count = std::count_if(ms.blocks.begin(), ms.blocks.end(),
                                               [](const CanonicalBlock& b) { return b.kind == BlockKind::B; });
            int next = 1;
            for (auto& b : ms.blocks)
                if (b.kind == BlockKind::B)
                    b.parameter = Scalar::param(b_count == 1 ? "c" : "c" + std::to_string(next++));
            ms.lie_only = is_skew(direct_sum_matrix(ms.blocks));
            out.push_back(std::move(ms));
            // Odometer, last group fastest.
            std::size_t g = groups.size();
            while (g > 0) {
                --g;
                if (++pick[g] < choices[g].size())
                    break;
                pick[g] = 0;
                if (g == 0) {
                    g = groups.size() + 1;
                    break;
                }
            }
            if (g == groups.size() + 1 || groups.empty())
                break;
        }
    }
    return out;
}

/// Non-split non-Lie nilpotent algebras of dimension n with dim A^2 = 1.
inline std::vector<ClassificationEntry> nilpotent_table(std::size_t n) {
    if (n < 2)
        throw PreconditionFailed("dimension must be at least 2");
    std::vector<ClassificationEntry> out;
    for (auto& ms : block_multisets(n - 1)) {
        if (ms.lie_only)
            continue;
        ClassificationEntry e;
        e.algebra = algebra_from_blocks(ms.blocks);
        e.label = "dim" + std::to_string(n) + ":" + block_list_to_string(ms.blocks, "+");
        e.algebra.label = e.label;
        e.blocks = std::move(ms.blocks);
        out.push_back(std::move(e));
    }
    return out;
}

namespace detail {

inline StructureConstants algebra_with_products(
    std::size_t n, const std::string& label, const std::vector<std::string>& names,
    const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>>& products) {
    StructureConstants a(n);
    for (const auto& [i, j, k, v] : products)
        a.at(i, j, k) += v;
    a.label = label;
    if (!names.empty())
        a.set_basis_names(names);
    return a;
}

} // namespace detail

/// The non-nilpotent solvable case with dim A^2 = 1: the 2-dimensional cyclic algebra.
inline std::vector<ClassificationEntry> solvable_dim1_table() {
    ClassificationEntry e;
    e.label = "dim2-cyclic";
    e.family = "cyclic";
    e.algebra = detail::algebra_with_products(2, e.label, {}, {{0, 0, 1, Scalar(1)}, {0, 1, 1, Scalar(1)}});
    return {e};
}

/// The six 3-dimensional non-nilpotent solvable families with dim A^2 = 2
/// (basis x, y, z).
inline std::vector<ClassificationEntry> dim3_solvable_table() {
    const std::size_t x = 0, y = 1, z = 2;
    const Scalar alpha = Scalar::param("alpha");
    const std::vector<std::string> names{"x", "y", "z"};
    using P = std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>>;
    const std::vector<P> families{
        {{x, x, z, 1}, {x, z, y, 1}, {x, y, y, 1}},
        {{x, z, z, alpha}, {x, y, y, 1}},
        {{x, z, y, 1}, {x, y, z, Scalar(QI::ratio(-1, 4))}, {x, y, y, 1}},
        {{x, x, z, 1}, {x, y, y, 1}, {y, x, y, -1}},
        {{x, z, z, alpha}, {x, y, y, 1}, {y, x, y, -1}},
        {{x, x, z, 1}, {x, y, y, 1}, {y, x, y, -1}, {x, z, z, 2}, {y, y, z, 1}},
    };
    std::vector<ClassificationEntry> out;
    for (std::size_t f = 0; f < families.size(); ++f) {
        ClassificationEntry e;
        e.family = std::to_string(f + 1);
        e.label = "dim3-family" + e.family;
        e.algebra = detail::algebra_with_products(3, e.label, names, families[f]);
        if (f == 1 || f == 4)
            e.algebra.constraints = {ParameterConstraint{"alpha", {Scalar(0)}}};
        out.push_back(std::move(e));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Entry checks

struct EntryCheck {
    std::string label;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Properties every nilpotent table entry must have, checked identically in
/// the parameters.
inline EntryCheck check_nilpotent_entry(const ClassificationEntry& e) {
    EntryCheck r{e.label, {}};
    const StructureConstants& a = e.algebra;
    auto fail = [&](const std::string& what) { r.failures.push_back(what); };
    if (!verify_leibniz(a)) {
        fail("Leibniz identity fails");
        return r;
    }
    if (is_lie(a))
        fail("algebra is Lie");
    if (!is_nilpotent(a))
        fail("not nilpotent");
    const Subspace d = derived_algebra(a);
    if (d.dim() != 1)
        fail("dim A^2 = " + std::to_string(d.dim()));
    const Subspace leib = leib_ideal(a);
    if (!(leib == d))
        fail("Leib(A) differs from A^2");
    if (!series_term(lower_central_series(a), 3).is_zero())
        fail("A^3 is not zero");
    const Subspace whole = Subspace::whole(a.dim());
    if (!subspace_product(a, leib, whole).is_zero())
        fail("[Leib(A), A] is not zero");
    if (!is_ideal(a, leib) || !subspace_product(a, leib, leib).is_zero())
        fail("Leib(A) is not an abelian ideal");
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Vec s = a.product(i, j);
            Vec t = a.product(j, i);
            for (std::size_t k = 0; k < s.size(); ++k)
                s[k] += t[k];
            if (!leib.contains(s))
                fail("A/Leib(A) is not skew");
        }
    if (d.dim() == 1 && is_nilpotent(a) && has_zero_summand(form_from_algebra(a).form))
        fail("form has a zero summand (split)");
    return r;
}

inline EntryCheck check_solvable_entry(const ClassificationEntry& e, std::size_t derived_dim) {
    EntryCheck r{e.label, {}};
    const StructureConstants& a = e.algebra;
    auto fail = [&](const std::string& what) { r.failures.push_back(what); };
    if (!verify_leibniz(a)) {
        fail("Leibniz identity fails");
        return r;
    }
    if (!is_solvable(a))
        fail("not solvable");
    if (is_nilpotent(a))
        fail("nilpotent");
    if (is_lie(a))
        fail("algebra is Lie");
    if (derived_algebra(a).dim() != derived_dim)
        fail("dim A^2 = " + std::to_string(derived_algebra(a).dim()));
    return r;
}

// ---------------------------------------------------------------------------
// Matching against transcribed item lists

struct AlgebraMatch {
    std::vector<std::size_t> permutation;          // fixture index i <-> generated index permutation[i]
    std::map<std::string, std::string> renaming;   // generated parameter -> fixture parameter
};

namespace detail {

inline std::string generic_text(const Scalar& s) {
    std::map<std::string, std::string> all;
    for (const auto& p : s.parameters())
        all[p] = "p";
    return rename_parameters(s, all).to_string();
}

/// Parameter-blind profile of a basis vector: the entries it takes part in.
inline std::vector<std::string> profile(const StructureConstants& a, std::size_t v) {
    std::vector<std::string> out;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& s = a.at(i, j, k);
                if (s.is_zero() || (i != v && j != v && k != v))
                    continue;
                out.push_back(std::string(i == v ? "L" : "") + (j == v ? "R" : "") + (k == v ? "O" : "") + ":" +
                              generic_text(s));
            }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

/// g and f agree after a basis permutation and a renaming of parameters.
inline std::optional<AlgebraMatch> match_algebras(const StructureConstants& g, const StructureConstants& f) {
    const std::size_t n = g.dim();
    if (f.dim() != n)
        return std::nullopt;
    const auto pg = g.parameters(), pf = f.parameters();
    if (pg.size() != pf.size())
        return std::nullopt;
    std::vector<std::vector<std::string>> prof_g(n), prof_f(n);
    for (std::size_t v = 0; v < n; ++v) {
        prof_g[v] = detail::profile(g, v);
        prof_f[v] = detail::profile(f, v);
    }
    {
        auto a = prof_g, b = prof_f;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            return std::nullopt;
    }
    std::vector<std::string> gnames(pg.begin(), pg.end()), fnames(pf.begin(), pf.end());
    do {
        std::map<std::string, std::string> ren;
        for (std::size_t k = 0; k < gnames.size(); ++k)
            ren[gnames[k]] = fnames[k];
        std::vector<Scalar> gt(n * n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    gt[(i * n + j) * n + k] = rename_parameters(g.at(i, j, k), ren);
        std::vector<std::size_t> perm(n);
        std::vector<bool> used(n, false);
        std::function<bool(std::size_t)> assign = [&](std::size_t t) {
            if (t == n)
                return true;
            for (std::size_t c = 0; c < n; ++c) {
                if (used[c] || prof_g[c] != prof_f[t])
                    continue;
                perm[t] = c;
                bool ok = true;
                for (std::size_t a = 0; a <= t && ok; ++a)
                    for (std::size_t b = 0; b <= t && ok; ++b)
                        for (std::size_t k = 0; k <= t && ok; ++k) {
                            if (a != t && b != t && k != t)
                                continue;
                            ok = gt[(perm[a] * n + perm[b]) * n + perm[k]] == f.at(a, b, k);
                        }
                if (!ok)
                    continue;
                used[c] = true;
                if (assign(t + 1))
                    return true;
                used[c] = false;
            }
            return false;
        };
        if (assign(0))
            return AlgebraMatch{perm, ren};
    } while (std::next_permutation(fnames.begin(), fnames.end()));
    return std::nullopt;
}

struct MatchReport {
    std::size_t dim = 0;
    std::vector<std::pair<std::string, std::string>> matched; // generated label, fixture label
    std::vector<std::string> unmatched_generated;
    std::vector<std::string> unmatched_fixtures;

    bool perfect() const { return unmatched_generated.empty() && unmatched_fixtures.empty(); }

    Json to_json() const {
        Json j;
        j["dim"] = dim;
        j["perfect"] = perfect();
        Json m = Json::array();
        for (const auto& [g, f] : matched)
            m.push_back(Json{{"generated", g}, {"fixture", f}});
        j["matched"] = m;
        j["unmatched_generated"] = unmatched_generated;
        j["unmatched_fixtures"] = unmatched_fixtures;
        return j;
    }
};

/// Perfect matching between generated entries and fixture algebras, found by
/// augmenting paths over the "same up to permutation and renaming" relation.
inline MatchReport match_paper_table(std::size_t n, const std::vector<ClassificationEntry>& entries,
                                     const std::vector<StructureConstants>& fixtures) {
    MatchReport rep;
    rep.dim = n;
    const std::size_t ng = entries.size(), nf = fixtures.size();
    std::vector<std::vector<std::size_t>> adj(ng);
    for (std::size_t g = 0; g < ng; ++g)
        for (std::size_t f = 0; f < nf; ++f)
            if (match_algebras(entries[g].algebra, fixtures[f]))
                adj[g].push_back(f);
    std::vector<long> owner(nf, -1);
    std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t g, std::vector<bool>& seen) {
        for (auto f : adj[g]) {
            if (seen[f])
                continue;
            seen[f] = true;
            if (owner[f] < 0 || augment(static_cast<std::size_t>(owner[f]), seen)) {
                owner[f] = static_cast<long>(g);
                return true;
            }
        }
        return false;
    };
    std::vector<long> partner(ng, -1);
    for (std::size_t g = 0; g < ng; ++g) {
        std::vector<bool> seen(nf, false);
        augment(g, seen);
    }
    for (std::size_t f = 0; f < nf; ++f)
        if (owner[f] >= 0)
            partner[static_cast<std::size_t>(owner[f])] = static_cast<long>(f);
    for (std::size_t g = 0; g < ng; ++g) {
        if (partner[g] >= 0)
            rep.matched.emplace_back(entries[g].label, fixtures[static_cast<std::size_t>(partner[g])].label);
        else
            rep.unmatched_generated.push_back(entries[g].label);
    }
    for (std::size_t f = 0; f < nf; ++f)
        if (owner[f] < 0)
            rep.unmatched_fixtures.push_back(fixtures[f].label);
    return rep;
}

/// Generated block multisets of size n - 1 against a transcribed table of
/// block names (parameters dropped, A1 never present).
struct BlockTableReport {
    std::size_t dim = 0;
    std::size_t generated = 0;
    std::size_t transcribed = 0;
    std::vector<std::string> missing; // generated, absent from the table
    std::vector<std::string> extra;   // in the table, not generated

    bool perfect() const { return missing.empty() && extra.empty() && generated == transcribed; }

    Json to_json() const {
        return Json{{"dim", dim},         {"generated", generated}, {"transcribed", transcribed},
                    {"perfect", perfect()}, {"missing", missing},     {"extra", extra}};
    }
};

inline BlockTableReport compare_block_table(std::size_t n, const std::vector<std::string>& rows) {
    auto key = [](std::vector<CanonicalBlock> blocks) {
        for (auto& b : blocks)
            b.parameter.reset();
        std::vector<std::string> names;
        for (const auto& b : blocks)
            names.push_back(kind_letter(b.kind) + std::to_string(b.size));
        std::sort(names.begin(), names.end());
        std::string k;
        for (const auto& s : names)
            k += (k.empty() ? "" : " ") + s;
        return k;
    };
    BlockTableReport rep;
    rep.dim = n;
    std::multiset<std::string> gen, table;
    for (const auto& ms : block_multisets(n - 1))
        gen.insert(key(ms.blocks));
    for (const auto& row : rows) {
        // Table rows name B blocks without their parameter.
        std::vector<CanonicalBlock> blocks;
        std::istringstream in(row);
        for (std::string tok; in >> tok;) {
            if (tok.size() < 2 || tok[0] < 'A' || tok[0] > 'F')
                throw ParseError("bad block name in table row: " + tok);
            blocks.push_back({static_cast<BlockKind>(tok[0] - 'A'), std::stoul(tok.substr(1)), std::nullopt});
        }
        table.insert(key(blocks));
    }
    rep.generated = gen.size();
    rep.transcribed = table.size();
    std::set_difference(gen.begin(), gen.end(), table.begin(), table.end(), std::back_inserter(rep.missing));
    std::set_difference(table.begin(), table.end(), gen.begin(), gen.end(), std::back_inserter(rep.extra));
    return rep;
}

// ---------------------------------------------------------------------------
// Distinctness at constant parameters

/// Spot values used when a parametric entry must be made constant.
inline Bindings spot_bindings(const std::set<std::string>& params) {
    static const std::map<std::string, int> values{{"c", 2}, {"c1", 2}, {"c2", 3}, {"c3", 5}, {"alpha", 2}};
    Bindings b;
    int fallback = 7;
    for (const auto& p : params) {
        auto it = values.find(p);
        b[p] = Scalar(it == values.end() ? fallback++ : it->second);
    }
    return b;
}

struct DistinctnessReport {
    struct Identification {
        std::string label;
        std::string parameter;
        std::string value;
        std::string inverse;
        std::string decomposition;
        bool verified = false;
    };

    std::size_t dim = 0;
    std::size_t entries = 0;
    std::size_t pairs_checked = 0;
    std::vector<std::pair<std::string, std::string>> collisions;
    std::vector<Identification> identifications;

    bool clean() const {
        return collisions.empty() && std::all_of(identifications.begin(), identifications.end(),
                                                 [](const Identification& i) { return i.verified; });
    }

    Json to_json() const {
        Json j;
        j["dim"] = dim;
        j["entries"] = entries;
        j["pairs_checked"] = pairs_checked;
        Json c = Json::array();
        for (const auto& [a, b] : collisions)
            c.push_back(Json::array({a, b}));
        j["collisions"] = c;
        Json ids = Json::array();
        for (const auto& i : identifications)
            ids.push_back(Json{{"label", i.label},
                               {"parameter", i.parameter},
                               {"value", i.value},
                               {"inverse", i.inverse},
                               {"decomposition", i.decomposition},
                               {"verified", i.verified}});
        j["double_counted_parameters"] = ids;
        return j;
    }
};

/// Separates all entries of one table by canonical decomposition at spot
/// parameter values, and records each B parameter whose printed range counts
/// both c and 1/c.
inline DistinctnessReport distinctness_report(std::size_t n) {
    DistinctnessReport rep;
    rep.dim = n;
    const auto table = nilpotent_table(n);
    rep.entries = table.size();
    std::vector<std::vector<CanonicalBlock>> decomps;
    for (const auto& e : table) {
        const StructureConstants a = instantiate(e.algebra, spot_bindings(e.algebra.parameters()));
        decomps.push_back(canonical_decomposition(form_from_algebra(a).form));
    }
    for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t j = i + 1; j < table.size(); ++j) {
            ++rep.pairs_checked;
            if (decomps[i] == decomps[j])
                rep.collisions.emplace_back(table[i].label, table[j].label);
        }
    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto params = table[i].algebra.parameters();
        for (const auto& p : params) {
            Bindings b = spot_bindings(params);
            const Scalar v = b[p];
            b[p] = v.inv();
            const auto d = canonical_decomposition(form_from_algebra(instantiate(table[i].algebra, b)).form);
            rep.identifications.push_back(
                {table[i].label, p, v.to_string(), v.inv().to_string(), block_list_to_string(d), d == decomps[i]});
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Text renderings

/// `[x1, x3]=x4, [x3, x2]=-x4` style product list.
inline std::string product_list_text(const StructureConstants& a) {
    const auto names = a.basis_names();
    std::string out;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (a.product_is_zero(i, j))
                continue;
            std::string rhs;
            for (std::size_t k = 0; k < a.dim(); ++k) {
                const Scalar& s = a.at(i, j, k);
                if (s.is_zero())
                    continue;
                std::string term;
                if (s.is_one())
                    term = names[k];
                else if (s == Scalar(-1))
                    term = "-" + names[k];
                else {
                    std::string t = s.to_string();
                    const bool simple = s.is_constant() || t.find_first_of("+-/*", 1) == std::string::npos;
                    term = (simple ? t : "(" + t + ")") + "*" + names[k];
                }
                if (!rhs.empty() && term.front() != '-')
                    rhs += "+";
                rhs += term;
            }
            if (!out.empty())
                out += ", ";
            out += "[" + names[i] + ", " + names[j] + "]=" + rhs;
        }
    return out.empty() ? "(abelian)" : out;
}

inline std::string constraint_text(const std::vector<ParameterConstraint>& cs) {
    std::string out;
    for (const auto& c : cs) {
        std::string ex;
        for (const auto& v : c.excluded)
            ex += (ex.empty() ? "" : ", ") + v.to_string();
        out += (out.empty() ? "" : "; ") + c.param + " not in {" + ex + "}";
    }
    return out;
}

inline std::string table_markdown(const std::string& title, const std::vector<ClassificationEntry>& table) {
    std::string out = "## " + title + " (" + std::to_string(table.size()) + " entries)\n\n";
    for (std::size_t k = 0; k < table.size(); ++k) {
        const auto& e = table[k];
        out += std::to_string(k + 1) + ". `" + e.label + "` " + product_list_text(e.algebra);
        if (!e.algebra.constraints.empty())
            out += "; " + constraint_text(e.algebra.constraints);
        out += "\n";
    }
    return out;
}

} // namespace leibniz
