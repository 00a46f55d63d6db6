#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "leibniz/subspace.hpp"

namespace leibniz {

/// An n-dimensional algebra given by structure constants:
/// [x_i, x_j] = sum_k c(i, j, k) x_k (indices 0-based).
class StructureConstants {
public:
    StructureConstants() = default;
    explicit StructureConstants(std::size_t dim) : dim_(dim), tensor_(dim * dim * dim, Scalar(0)) {}

    std::size_t dim() const { return dim_; }

    Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return tensor_[(i * dim_ + j) * dim_ + k]; }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return tensor_[(i * dim_ + j) * dim_ + k]; }

    Vec product(std::size_t i, std::size_t j) const {
        return Vec(tensor_.begin() + (i * dim_ + j) * dim_, tensor_.begin() + (i * dim_ + j + 1) * dim_);
    }

    void set_product(std::size_t i, std::size_t j, const Vec& v) {
        if (v.size() != dim_)
            throw DimensionMismatch("product vector has wrong length");
        std::copy(v.begin(), v.end(), tensor_.begin() + (i * dim_ + j) * dim_);
    }

    bool product_is_zero(std::size_t i, std::size_t j) const {
        for (std::size_t k = 0; k < dim_; ++k)
            if (!at(i, j, k).is_zero())
                return false;
        return true;
    }

    std::set<std::string> parameters() const {
        std::set<std::string> ps;
        for (const auto& s : tensor_) {
            auto p = s.parameters();
            ps.insert(p.begin(), p.end());
        }
        return ps;
    }

    bool is_constant() const {
        return std::all_of(tensor_.begin(), tensor_.end(), [](const Scalar& s) { return s.is_constant(); });
    }

    /// Basis names; x1..xn unless overridden.
    std::vector<std::string> basis_names() const {
        if (!names_.empty())
            return names_;
        std::vector<std::string> n;
        for (std::size_t i = 0; i < dim_; ++i)
            n.push_back("x" + std::to_string(i + 1));
        return n;
    }
    bool has_custom_names() const { return !names_.empty(); }
    void set_basis_names(std::vector<std::string> names) {
        if (!names.empty() && names.size() != dim_)
            throw DimensionMismatch("basis name count does not match dimension");
        names_ = std::move(names);
    }

    std::vector<ParameterConstraint> constraints;
    std::string label;

    const std::vector<Scalar>& tensor() const { return tensor_; }

    /// Structural equality of dimension and products (labels and constraints ignored).
    friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
        return a.dim_ == b.dim_ && a.tensor_ == b.tensor_;
    }

private:
    std::size_t dim_ = 0;
    std::vector<Scalar> tensor_;
    std::vector<std::string> names_;
};

inline Vec basis_vector(std::size_t n, std::size_t i) {
    Vec v(n, Scalar(0));
    v[i] = Scalar(1);
    return v;
}

inline bool is_zero_vector(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

/// Bilinear extension of the bracket.
inline Vec bracket(const StructureConstants& a, const Vec& u, const Vec& v) {
    const std::size_t n = a.dim();
    if (u.size() != n || v.size() != n)
        throw DimensionMismatch("bracket: vectors must have length " + std::to_string(n));
    Vec out(n, Scalar(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i].is_zero())
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (v[j].is_zero())
                continue;
            Scalar uv = u[i] * v[j];
            for (std::size_t k = 0; k < n; ++k)
                if (!a.at(i, j, k).is_zero())
                    out[k] += uv * a.at(i, j, k);
        }
    }
    return out;
}

/// Left Leibniz identity [a,[b,c]] = [[a,b],c] + [b,[a,c]] on all basis triples,
/// as an identity in the parameters.
inline bool verify_leibniz(const StructureConstants& a) {
    const std::size_t n = a.dim();
    if (a.is_constant()) {
        // Constant case on a dense Q(i) tensor: sum_m c(y,z,m) c(x,m,k) - c(x,y,m) c(m,z,k) - c(x,z,m) c(y,m,k).
        std::vector<QI> c(n * n * n);
        for (std::size_t t = 0; t < c.size(); ++t)
            c[t] = a.tensor()[t].constant_value();
        auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> const QI& { return c[(i * n + j) * n + k]; };
        QI acc;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z)
                    for (std::size_t k = 0; k < n; ++k) {
                        acc = QI(0);
                        for (std::size_t m = 0; m < n; ++m) {
                            if (!at(y, z, m).is_zero() && !at(x, m, k).is_zero())
                                acc.addmul(at(y, z, m), at(x, m, k));
                            if (!at(x, y, m).is_zero() && !at(m, z, k).is_zero())
                                acc.submul(at(x, y, m), at(m, z, k));
                            if (!at(x, z, m).is_zero() && !at(y, m, k).is_zero())
                                acc.submul(at(x, z, m), at(y, m, k));
                        }
                        if (!acc.is_zero())
                            return false;
                    }
        return true;
    }
    for (std::size_t x = 0; x < n; ++x) {
        const Vec ex = basis_vector(n, x);
        for (std::size_t y = 0; y < n; ++y) {
            const Vec ey = basis_vector(n, y);
            const Vec xy = a.product(x, y);
            for (std::size_t z = 0; z < n; ++z) {
                const Vec ez = basis_vector(n, z);
                Vec lhs = bracket(a, ex, a.product(y, z));
                Vec r1 = bracket(a, xy, ez);
                Vec r2 = bracket(a, ey, a.product(x, z));
                for (std::size_t k = 0; k < n; ++k)
                    if (!(lhs[k] - r1[k] - r2[k]).is_zero())
                        return false;
            }
        }
    }
    return true;
}

/// span{[u, w] : u in U, w in W}.
inline Subspace subspace_product(const StructureConstants& a, const Subspace& u, const Subspace& w) {
    std::vector<Vec> prods;
    for (const auto& x : u.vectors())
        for (const auto& y : w.vectors()) {
            Vec p = bracket(a, x, y);
            if (!is_zero_vector(p))
                prods.push_back(std::move(p));
        }
    return Subspace::span(prods, a.dim());
}

/// A^2 = span of all products.
inline Subspace derived_algebra(const StructureConstants& a) {
    std::vector<Vec> prods;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (!a.product_is_zero(i, j))
                prods.push_back(a.product(i, j));
    return Subspace::span(prods, a.dim());
}

/// Leib(A) = span{[u,u]}, via the polarization span {[x_i,x_i]} and {[x_i,x_j]+[x_j,x_i]}.
inline Subspace leib_ideal(const StructureConstants& a) {
    const std::size_t n = a.dim();
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < n; ++i) {
        gens.push_back(a.product(i, i));
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec s = a.product(i, j);
            Vec t = a.product(j, i);
            for (std::size_t k = 0; k < n; ++k)
                s[k] += t[k];
            gens.push_back(std::move(s));
        }
    }
    return Subspace::span(gens, n);
}

/// A^1 = A, A^i = [A, A^(i-1)], until two consecutive terms agree. The last
/// element is the stable term.
inline std::vector<Subspace> lower_central_series(const StructureConstants& a) {
    const Subspace whole = Subspace::whole(a.dim());
    std::vector<Subspace> chain{whole};
    for (;;) {
        Subspace next = subspace_product(a, whole, chain.back());
        if (next == chain.back())
            return chain;
        chain.push_back(std::move(next));
    }
}

/// A^(1) = A, A^(i) = [A^(i-1), A^(i-1)], until stable.
inline std::vector<Subspace> derived_series(const StructureConstants& a) {
    std::vector<Subspace> chain{Subspace::whole(a.dim())};
    for (;;) {
        Subspace next = subspace_product(a, chain.back(), chain.back());
        if (next == chain.back())
            return chain;
        chain.push_back(std::move(next));
    }
}

/// i-th term (1-based) of a stabilized chain.
inline const Subspace& series_term(const std::vector<Subspace>& chain, std::size_t i) {
    if (i == 0)
        throw PreconditionFailed("series terms are 1-based");
    return chain[std::min(i, chain.size()) - 1];
}

inline bool is_nilpotent(const StructureConstants& a) { return lower_central_series(a).back().is_zero(); }
inline bool is_solvable(const StructureConstants& a) { return derived_series(a).back().is_zero(); }
inline bool is_lie(const StructureConstants& a) { return leib_ideal(a).is_zero(); }

/// {v : [v, x] = 0 for all x}.
inline Subspace left_center(const StructureConstants& a) {
    const std::size_t n = a.dim();
    Matrix<Scalar> sys(n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                sys(j * n + k, i) = a.at(i, j, k);
    return Subspace::span(null_space(sys), n);
}

/// {v : [x, v] = 0 for all x}.
inline Subspace right_center(const StructureConstants& a) {
    const std::size_t n = a.dim();
    Matrix<Scalar> sys(n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                sys(j * n + k, i) = a.at(j, i, k);
    return Subspace::span(null_space(sys), n);
}

inline Subspace center(const StructureConstants& a) {
    const std::size_t n = a.dim();
    Matrix<Scalar> sys(2 * n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) {
                sys(j * n + k, i) = a.at(i, j, k);
                sys(n * n + j * n + k, i) = a.at(j, i, k);
            }
    return Subspace::span(null_space(sys), n);
}

/// Two-sided ideal test: [A, S] and [S, A] lie in S.
inline bool is_ideal(const StructureConstants& a, const Subspace& s) {
    const Subspace whole = Subspace::whole(a.dim());
    return s.contains(subspace_product(a, whole, s)) && s.contains(subspace_product(a, s, whole));
}

/// Structure constants in the basis y_i = sum_j P(i, j) x_j.
inline StructureConstants change_of_basis(const StructureConstants& a, const Matrix<Scalar>& p) {
    const std::size_t n = a.dim();
    if (p.rows() != n || p.cols() != n)
        throw DimensionMismatch("change_of_basis: matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    const Matrix<Scalar> q = inverse(p);
    // t1(a, b, l) = sum_k c(a, b, k) q(k, l)
    std::vector<Scalar> t1(n * n * n, Scalar(0));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = a.at(x, y, k);
                if (c.is_zero())
                    continue;
                for (std::size_t l = 0; l < n; ++l)
                    if (!q(k, l).is_zero())
                        t1[(x * n + y) * n + l] += c * q(k, l);
            }
    // t2(i, b, l) = sum_a p(i, a) t1(a, b, l)
    std::vector<Scalar> t2(n * n * n, Scalar(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t x = 0; x < n; ++x) {
            if (p(i, x).is_zero())
                continue;
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t l = 0; l < n; ++l)
                    if (!t1[(x * n + y) * n + l].is_zero())
                        t2[(i * n + y) * n + l] += p(i, x) * t1[(x * n + y) * n + l];
        }
    StructureConstants out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t y = 0; y < n; ++y) {
                if (p(j, y).is_zero())
                    continue;
                for (std::size_t l = 0; l < n; ++l)
                    if (!t2[(i * n + y) * n + l].is_zero())
                        out.at(i, j, l) += p(j, y) * t2[(i * n + y) * n + l];
            }
    out.constraints = a.constraints;
    out.label = a.label;
    return out;
}

/// Block tensor of two algebras; both summands are ideals of the result.
inline StructureConstants direct_sum(const StructureConstants& a, const StructureConstants& b) {
    const std::size_t na = a.dim(), nb = b.dim();
    StructureConstants s(na + nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < na; ++k)
                s.at(i, j, k) = a.at(i, j, k);
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t k = 0; k < nb; ++k)
                s.at(na + i, na + j, na + k) = b.at(i, j, k);
    s.constraints = merge_constraints(a.constraints, b.constraints);
    if (!a.label.empty() || !b.label.empty())
        s.label = a.label + "+" + b.label;
    return s;
}

/// Substitutes constants for parameters; constraints on bound parameters are
/// checked and dropped.
inline StructureConstants instantiate(const StructureConstants& a, const Bindings& bindings) {
    StructureConstants out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (!a.at(i, j, k).is_zero())
                    out.at(i, j, k) = substitute(a.at(i, j, k), bindings, a.constraints);
    for (const auto& c : a.constraints)
        if (!bindings.count(c.param))
            out.constraints.push_back(c);
    for (const auto& [name, value] : bindings)
        for (const auto& c : a.constraints)
            if (c.param == name)
                for (const auto& ex : c.excluded)
                    if (ex == value)
                        throw ConstraintViolation("parameter " + name + " may not take the value " + value.to_string());
    out.label = a.label;
    if (a.has_custom_names())
        out.set_basis_names(a.basis_names());
    return out;
}

} // namespace leibniz
