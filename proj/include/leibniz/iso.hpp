#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/algebra_io.hpp"
#include "leibniz/form.hpp"

namespace leibniz {

struct IsoInvariants {
    std::size_t dim = 0;
    std::size_t derived = 0;       // A^2
    std::size_t lower3 = 0;        // A^3
    std::size_t derived2 = 0;      // A^(2)
    std::size_t derived3 = 0;      // A^(3)
    std::size_t leib = 0;
    std::size_t center = 0;
    std::size_t left_center = 0;
    std::size_t right_center = 0;
    std::optional<PencilInvariants> pencil;

    friend bool operator==(const IsoInvariants&, const IsoInvariants&) = default;

    Json to_json() const {
        Json j;
        j["dim"] = dim;
        j["dim_A2"] = derived;
        j["dim_A3"] = lower3;
        j["dim_A(2)"] = derived2;
        j["dim_A(3)"] = derived3;
        j["dim_leib"] = leib;
        j["dim_center"] = center;
        j["dim_left_center"] = left_center;
        j["dim_right_center"] = right_center;
        j["pencil"] = pencil ? Json(pencil->to_string()) : Json(nullptr);
        return j;
    }
};

inline bool pencil_eligible(const StructureConstants& a) {
    return a.is_constant() && derived_algebra(a).dim() == 1 && is_nilpotent(a);
}

inline IsoInvariants iso_invariants(const StructureConstants& a) {
    IsoInvariants r;
    r.dim = a.dim();
    const auto lcs = lower_central_series(a);
    const auto ds = derived_series(a);
    r.derived = series_term(lcs, 2).dim();
    r.lower3 = series_term(lcs, 3).dim();
    r.derived2 = series_term(ds, 2).dim();
    r.derived3 = series_term(ds, 3).dim();
    r.leib = leib_ideal(a).dim();
    r.center = center(a).dim();
    r.left_center = left_center(a).dim();
    r.right_center = right_center(a).dim();
    if (pencil_eligible(a))
        r.pencil = pencil_invariants(form_from_algebra(a).form);
    return r;
}

struct IsoResult {
    bool isomorphic = false;
    std::optional<Matrix<Scalar>> witness; // rows: images of B's basis in A's coordinates
};

namespace detail {

inline void require_eligible(const StructureConstants& a, const char* side) {
    if (!a.is_constant())
        throw PreconditionFailed(std::string(side) + " has symbolic parameters");
    if (!verify_leibniz(a))
        throw PreconditionFailed(std::string(side) + " is not a Leibniz algebra");
    if (derived_algebra(a).dim() != 1 || !is_nilpotent(a))
        throw PreconditionFailed(std::string(side) + " is not nilpotent with dim A^2 = 1");
}

/// Some S with S^T F_A S = F_B, from monomial matches directly or through the
/// canonical matrix of the common decomposition.
inline std::optional<Matrix<QI>> congruence_witness(const Matrix<QI>& fa, const Matrix<QI>& fb) {
    if (auto s = monomial_congruence_witness(fa, fb))
        return s;
    const Matrix<QI> canon = to_constant(direct_sum_matrix(canonical_decomposition(fa)));
    auto s1 = monomial_congruence_witness(fa, canon);
    auto s2 = monomial_congruence_witness(fb, canon);
    if (!s1 || !s2)
        return std::nullopt;
    return *s1 * inverse(*s2);
}

/// Extends a form congruence to an algebra isomorphism B -> A.
inline Matrix<Scalar> extend_witness(const FormExtraction& ea, const FormExtraction& eb, const Matrix<QI>& s,
                                     std::size_t n) {
    const std::size_t m = ea.complement.size();
    std::vector<Vec> v(m, Vec(n, Scalar(0)));
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l)
            v[k][ea.complement[l]] = Scalar(s(l, k));
    Matrix<Scalar> p(n, n);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t c = 0; c < n; ++c)
            p(eb.complement[k], c) = v[k][c];
    for (std::size_t c = 0; c < n; ++c) {
        Scalar x = ea.derived[c];
        for (std::size_t k = 0; k < m; ++k)
            x -= eb.derived[eb.complement[k]] * v[k][c];
        p(eb.pivot, c) = x;
    }
    return p;
}

} // namespace detail

/// Isomorphism of constant nilpotent algebras with one-dimensional square,
/// decided by congruence of their forms. The witness is re-checked.
inline IsoResult isomorphic_dim1_nilpotent(const StructureConstants& a, const StructureConstants& b) {
    detail::require_eligible(a, "first algebra");
    detail::require_eligible(b, "second algebra");
    IsoResult r;
    if (a.dim() != b.dim())
        return r;
    const FormExtraction ea = form_from_algebra(a), eb = form_from_algebra(b);
    const Matrix<QI> fa = to_constant(ea.form), fb = to_constant(eb.form);
    r.isomorphic = pencil_invariants(fa) == pencil_invariants(fb);
    if (!r.isomorphic || a.dim() > 8)
        return r;
    if (auto s = detail::congruence_witness(fa, fb)) {
        Matrix<Scalar> p = detail::extend_witness(ea, eb, *s, a.dim());
        if (change_of_basis(a, p) == b)
            r.witness = std::move(p);
    }
    return r;
}

/// Unordered eigenvalue-ratio pair of a generator acting on a two-dimensional
/// square, for three-dimensional algebras shaped like [x,y]=y, [x,z]=alpha z.
inline std::pair<Scalar, Scalar> type2_ratio_invariant(const StructureConstants& a) {
    if (!a.is_constant())
        throw PreconditionFailed("ratio invariant needs constant parameters");
    const Subspace d = derived_algebra(a);
    if (a.dim() != 3 || d.dim() != 2)
        throw PreconditionFailed("ratio invariant needs dim A = 3 and dim A^2 = 2");
    std::size_t g = 0;
    while (std::find(d.pivots().begin(), d.pivots().end(), g) != d.pivots().end())
        ++g;
    const auto basis = d.vectors();
    // Coordinates of an element of A^2 in the echelon basis.
    auto coords = [&](const Vec& v) {
        if (!d.contains(v))
            throw PreconditionFailed("product leaves A^2");
        return std::array<QI, 2>{v[d.pivots()[0]].constant_value(), v[d.pivots()[1]].constant_value()};
    };
    auto left_mult = [&](const Vec& u, const Vec& w) { return bracket(a, u, w); };
    for (const auto& w : basis)
        for (const auto& u : basis)
            if (!is_zero_vector(left_mult(w, u)))
                throw PreconditionFailed("A^2 does not act trivially on itself");
    const Vec gx = basis_vector(a.dim(), g);
    Matrix<QI> l(2, 2);
    for (std::size_t c = 0; c < 2; ++c) {
        const auto col = coords(left_mult(gx, basis[c]));
        l(0, c) = col[0];
        l(1, c) = col[1];
    }
    const QI tr = l(0, 0) + l(1, 1);
    const QI det = l(0, 0) * l(1, 1) - l(0, 1) * l(1, 0);
    const UPoly chi({det, -tr, QI(1)});
    const auto roots = qi_roots(chi);
    QI l1, l2;
    if (roots.size() == 2) {
        l1 = roots[0];
        l2 = roots[1];
    } else if (roots.size() == 1 && root_multiplicity(chi, roots[0]) == 2) {
        l1 = l2 = roots[0];
        if (!l(0, 1).is_zero() || !l(1, 0).is_zero())
            throw PreconditionFailed("generator is not diagonalizable on A^2");
    } else {
        throw PreconditionFailed("eigenvalues outside the scalar field");
    }
    if (l1.is_zero() || l2.is_zero())
        throw PreconditionFailed("generator has a zero eigenvalue on A^2");
    QI r1 = l1 / l2, r2 = l2 / l1;
    if (r2 < r1)
        std::swap(r1, r2);
    return {Scalar(r1), Scalar(r2)};
}

// ---------------------------------------------------------------------------
// Random basis changes

/// L * U * permutation with small integer entries and unit diagonals.
inline Matrix<Scalar> random_invertible(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(-2, 2);
    Matrix<Scalar> lo = Matrix<Scalar>::identity(n), up = Matrix<Scalar>::identity(n), perm(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            lo(i, j) = Scalar(entry(rng));
            up(j, i) = Scalar(entry(rng));
        }
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i)
        p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    for (std::size_t i = 0; i < n; ++i)
        perm(i, p[i]) = Scalar(1);
    return lo * up * perm;
}

struct FuzzReport {
    std::string subject;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }

    Json to_json() const {
        Json j;
        j["subject"] = subject;
        j["trials"] = trials;
        j["seed"] = seed;
        j["verdict"] = ok() ? "consistent" : "inconsistent";
        j["failures"] = failures;
        return j;
    }
};

/// Applies random basis changes and checks that the invariants, and for the
/// eligible class the isomorphism verdict, do not move.
inline FuzzReport random_basis_fuzz(const StructureConstants& a, std::size_t trials, std::uint64_t seed) {
    if (!a.is_constant())
        throw PreconditionFailed("fuzzing needs constant parameters");
    FuzzReport rep{a.label, trials, seed, {}};
    std::mt19937_64 rng(seed);
    const IsoInvariants ref = iso_invariants(a);
    const bool eligible = pencil_eligible(a);
    for (std::size_t t = 0; t < trials; ++t) {
        const Matrix<Scalar> p = random_invertible(a.dim(), rng);
        const StructureConstants b = change_of_basis(a, p);
        const std::string tag = "trial " + std::to_string(t + 1) + ": ";
        if (!(iso_invariants(b) == ref))
            rep.failures.push_back(tag + "invariants changed");
        if (eligible) {
            const IsoResult r = isomorphic_dim1_nilpotent(a, b);
            if (!r.isomorphic)
                rep.failures.push_back(tag + "not recognized as isomorphic");
            if (canonical_decomposition(form_from_algebra(a).form) != canonical_decomposition(form_from_algebra(b).form))
                rep.failures.push_back(tag + "canonical decomposition changed");
        }
    }
    return rep;
}

/// Congruence invariance of canonical_decomposition under random S.
inline FuzzReport congruence_fuzz(const FormMatrix& m, std::size_t trials, std::uint64_t seed,
                                  const std::string& subject) {
    FuzzReport rep{subject, trials, seed, {}};
    std::mt19937_64 rng(seed);
    const auto ref = canonical_decomposition(m);
    for (std::size_t t = 0; t < trials; ++t) {
        const FormMatrix s = random_invertible(m.rows(), rng);
        if (canonical_decomposition(congruence_transform(m, s)) != ref)
            rep.failures.push_back("trial " + std::to_string(t + 1) + ": decomposition changed");
    }
    return rep;
}

/// JSON verdict document for a pair of algebras.
inline Json iso_report(const StructureConstants& a, const StructureConstants& b) {
    Json j;
    const IsoInvariants ia = iso_invariants(a), ib = iso_invariants(b);
    if (pencil_eligible(a) && pencil_eligible(b)) {
        const IsoResult r = isomorphic_dim1_nilpotent(a, b);
        j["verdict"] = r.isomorphic ? "isomorphic" : "not isomorphic";
        j["witness"] = r.witness ? Json(matrix_to_string(*r.witness)) : Json(nullptr);
    } else if (!(ia == ib)) {
        j["verdict"] = "not isomorphic";
        j["witness"] = nullptr;
    } else {
        j["verdict"] = "undetermined";
        j["witness"] = nullptr;
    }
    j["invariants"] = Json{{"first", ia.to_json()}, {"second", ib.to_json()}};
    j["seed"] = nullptr;
    return j;
}

/// Pairs of three-dimensional solvable families (alpha fixed at 2) whose
/// invariants coincide.
inline std::vector<std::pair<std::string, std::string>> unseparated_solvable_pairs(
    const std::vector<StructureConstants>& families) {
    std::vector<IsoInvariants> inv;
    for (const auto& f : families)
        inv.push_back(iso_invariants(f));
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < families.size(); ++i)
        for (std::size_t j = i + 1; j < families.size(); ++j)
            if (inv[i] == inv[j])
                out.emplace_back(families[i].label, families[j].label);
    return out;
}

} // namespace leibniz
