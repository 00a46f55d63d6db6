#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "leibniz/matrix.hpp"
#include "leibniz/roots.hpp"
#include "leibniz/upoly.hpp"

namespace leibniz {

/// Total order on polynomials: degree, then coefficients from the top down.
inline bool upoly_less(const UPoly& a, const UPoly& b) {
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (std::size_t k = a.coeffs().size(); k-- > 0;) {
        auto c = a.coeffs()[k] <=> b.coeffs()[k];
        if (c != 0)
            return c < 0;
    }
    return false;
}

struct ElementaryDivisor {
    UPoly base; // monic, x - r for roots in Q(i)
    unsigned exponent = 1;

    friend bool operator==(const ElementaryDivisor&, const ElementaryDivisor&) = default;
    friend bool operator<(const ElementaryDivisor& a, const ElementaryDivisor& b) {
        if (!(a.base == b.base))
            return upoly_less(a.base, b.base);
        return a.exponent < b.exponent;
    }
};

/// Strict-equivalence data of the pencil lambda*M + mu*M^T.
struct PencilInvariants {
    std::size_t size = 0;
    std::size_t rank = 0;
    std::vector<unsigned> left_indices;
    std::vector<unsigned> right_indices;
    std::vector<ElementaryDivisor> finite;
    std::vector<unsigned> infinite;

    friend bool operator==(const PencilInvariants&, const PencilInvariants&) = default;

    /// Kronecker block sizes add up to the pencil size.
    bool consistent() const {
        if (left_indices.size() != right_indices.size())
            return false;
        std::size_t total = left_indices.size();
        for (auto e : left_indices)
            total += e;
        for (auto e : right_indices)
            total += e;
        for (const auto& d : finite)
            total += static_cast<std::size_t>(d.base.degree()) * d.exponent;
        for (auto e : infinite)
            total += e;
        return total == size;
    }

    std::string to_string() const {
        auto list = [](const std::vector<unsigned>& v) {
            std::string s = "[";
            for (std::size_t k = 0; k < v.size(); ++k)
                s += (k ? "," : "") + std::to_string(v[k]);
            return s + "]";
        };
        std::string fin = "[";
        for (std::size_t k = 0; k < finite.size(); ++k) {
            fin += (k ? ", " : "") + std::string("(") + finite[k].base.to_string("l") + ")";
            if (finite[k].exponent > 1)
                fin += "^" + std::to_string(finite[k].exponent);
        }
        fin += "]";
        return "size " + std::to_string(size) + ", rank " + std::to_string(rank) + ", left " + list(left_indices) +
               ", right " + list(right_indices) + ", finite " + fin + ", infinite " + list(infinite);
    }
};

/// Monic invariant factors (nonzero diagonal of the Smith form) of a square
/// polynomial matrix.
inline std::vector<UPoly> invariant_factors(Matrix<UPoly> a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<UPoly> out;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // Pivot of least degree.
            std::size_t pi = rows, pj = cols;
            int best = -1;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (!a(i, j).is_zero() && (best < 0 || a(i, j).degree() < best)) {
                        best = a(i, j).degree();
                        pi = i;
                        pj = j;
                    }
            if (best < 0)
                return out;
            a.swap_rows(t, pi);
            if (pj != t)
                for (std::size_t i = 0; i < rows; ++i)
                    std::swap(a(i, t), a(i, pj));

            const UPoly p = a(t, t);
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t).is_zero())
                    continue;
                auto [q, r] = divmod(a(i, t), p);
                for (std::size_t j = t; j < cols; ++j)
                    if (!a(t, j).is_zero())
                        a(i, j).submul(q, a(t, j));
                dirty = dirty || !r.is_zero();
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j).is_zero())
                    continue;
                auto [q, r] = divmod(a(t, j), p);
                for (std::size_t i = t; i < rows; ++i)
                    if (!a(i, t).is_zero())
                        a(i, j).submul(q, a(i, t));
                dirty = dirty || !r.is_zero();
            }
            if (dirty)
                continue;
            // The pivot must divide the rest of the submatrix.
            bool fixed = false;
            for (std::size_t i = t + 1; i < rows && !fixed; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!(a(i, j) % p).is_zero()) {
                        for (std::size_t k = t; k < cols; ++k)
                            a(t, k) = a(t, k) + a(i, k);
                        fixed = true;
                        break;
                    }
            if (!fixed)
                break;
        }
        out.push_back(a(t, t).monic());
    }
    return out;
}

namespace detail {

/// Dimension of the space of polynomial solutions of degree <= k of
/// (lambda*A + B) x = 0.
inline std::size_t solution_dim(const Matrix<QI>& a, const Matrix<QI>& b, std::size_t k) {
    const std::size_t n = a.rows(), m = a.cols();
    Matrix<QI> t((k + 2) * n, (k + 1) * m);
    for (std::size_t j = 0; j <= k; ++j)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < m; ++c) {
                t(j * n + r, j * m + c) = b(r, c);
                t((j + 1) * n + r, j * m + c) = a(r, c);
            }
    return (k + 1) * m - rank(t);
}

/// Right minimal indices of lambda*A + B, given the number of them.
inline std::vector<unsigned> right_minimal_indices(const Matrix<QI>& a, const Matrix<QI>& b, std::size_t count) {
    std::vector<unsigned> idx;
    std::size_t prev_d = 0, prev_n = 0;
    for (std::size_t k = 0; idx.size() < count; ++k) {
        const std::size_t d = solution_dim(a, b, k);
        const std::size_t nk = d - prev_d; // indices <= k
        for (std::size_t e = prev_n; e < nk; ++e)
            idx.push_back(static_cast<unsigned>(k));
        prev_d = d;
        prev_n = nk;
        if (k > a.cols() + 1)
            throw Error("minimal index computation did not terminate");
    }
    return idx;
}

/// Coprime base of a list of monic polynomials (none of them zero).
inline std::vector<UPoly> coprime_base(std::vector<UPoly> polys) {
    std::vector<UPoly> base;
    for (auto& p : polys)
        if (p.degree() >= 1)
            base.push_back(squarefree_part(p));
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < base.size() && !changed; ++i)
            for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
                UPoly g = gcd(base[i], base[j]);
                if (g.degree() < 1)
                    continue;
                UPoly a = base[i] / g, b = base[j] / g;
                base.erase(base.begin() + static_cast<long>(j));
                base.erase(base.begin() + static_cast<long>(i));
                for (auto* q : {&g, &a, &b})
                    if (q->degree() >= 1)
                        base.push_back(q->monic());
                changed = true;
            }
    }
    std::sort(base.begin(), base.end(), upoly_less);
    base.erase(std::unique(base.begin(), base.end()), base.end());
    return base;
}

inline unsigned multiplicity(UPoly p, const UPoly& f) {
    unsigned m = 0;
    while (p.degree() >= f.degree()) {
        auto [q, r] = divmod(p, f);
        if (!r.is_zero())
            break;
        p = std::move(q);
        ++m;
    }
    return m;
}

} // namespace detail

/// Kronecker invariants of lambda*M + mu*M^T for a constant square matrix.
inline PencilInvariants pencil_invariants(const Matrix<QI>& m) {
    if (!m.is_square())
        throw DimensionMismatch("pencil needs a square matrix");
    const std::size_t n = m.rows();
    const Matrix<QI> mt = m.transpose();
    PencilInvariants inv;
    inv.size = n;
    inv.rank = rank(m);

    Matrix<UPoly> p(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            p(i, j) = UPoly::affine(m(i, j), mt(i, j));
    const std::vector<UPoly> factors = invariant_factors(p);
    const std::size_t normal_rank = factors.size();

    if (normal_rank > 0) {
        const UPoly& top = factors.back();
        std::vector<UPoly> residual = factors;
        for (const QI& r : qi_roots(top)) {
            const UPoly lin = UPoly::linear(r);
            for (auto& d : residual) {
                unsigned e = detail::multiplicity(d, lin);
                if (e == 0)
                    continue;
                for (unsigned k = 0; k < e; ++k)
                    d = d / lin;
                inv.finite.push_back({lin, e});
                // The reversed pencil M + mu*M^T is the transpose of the
                // pencil itself, so its divisors at mu = 0 are those at 0 here.
                if (r.is_zero())
                    inv.infinite.push_back(e);
            }
        }
        for (const auto& b : detail::coprime_base(residual))
            for (const auto& d : residual)
                if (unsigned e = detail::multiplicity(d, b); e > 0)
                    inv.finite.push_back({b, e});
    }

    if (normal_rank < n) {
        // Left indices of lambda*M + M^T are the right indices of its
        // transpose, which is the same pencil reversed; reversal keeps them.
        inv.right_indices = detail::right_minimal_indices(m, mt, n - normal_rank);
        inv.left_indices = inv.right_indices;
    }
    std::sort(inv.finite.begin(), inv.finite.end());
    std::sort(inv.infinite.begin(), inv.infinite.end());
    std::sort(inv.left_indices.begin(), inv.left_indices.end());
    std::sort(inv.right_indices.begin(), inv.right_indices.end());
    return inv;
}

} // namespace leibniz
