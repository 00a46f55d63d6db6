#pragma once

#include <algorithm>
#include <vector>

#include "leibniz/matrix.hpp"
#include "leibniz/scalar.hpp"

namespace leibniz {

using Vec = std::vector<Scalar>;

inline bool is_constant_matrix(const Matrix<Scalar>& m) {
    return std::all_of(m.data().begin(), m.data().end(), [](const Scalar& s) { return s.is_constant(); });
}

/// Elimination on constant matrices runs over Q(i) directly.
inline std::vector<std::size_t> rref_in_place(Matrix<Scalar>& m) {
    if (!is_constant_matrix(m))
        return rref_in_place<Scalar>(m);
    auto q = map_matrix<QI>(m, [](const Scalar& s) { return s.constant_value(); });
    auto pivots = rref_in_place<QI>(q);
    m = map_matrix<Scalar>(q, [](const QI& x) { return Scalar(x); });
    return pivots;
}

inline std::size_t rank(const Matrix<Scalar>& m) {
    if (!is_constant_matrix(m))
        return rank<Scalar>(m);
    return rank<QI>(map_matrix<QI>(m, [](const Scalar& s) { return s.constant_value(); }));
}

/// Subspace of an n-dimensional coordinate space, stored as the reduced row
/// echelon form of a spanning set. Equal subspaces have equal bases.
class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient) {
        Subspace s(ambient);
        if (vectors.empty())
            return s;
        s.basis_ = Matrix<Scalar>::from_rows(vectors, ambient);
        s.pivots_ = rref_in_place(s.basis_);
        return s;
    }

    static Subspace whole(std::size_t ambient) {
        std::vector<Vec> e;
        for (std::size_t i = 0; i < ambient; ++i) {
            Vec v(ambient, Scalar(0));
            v[i] = Scalar(1);
            e.push_back(std::move(v));
        }
        return span(e, ambient);
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    const Matrix<Scalar>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    std::vector<Vec> vectors() const {
        std::vector<Vec> out;
        for (std::size_t i = 0; i < dim(); ++i)
            out.push_back(basis_.row_vector(i));
        return out;
    }

    bool contains(const Vec& v) const {
        // Reduce v against the echelon basis.
        Vec r = v;
        for (std::size_t k = 0; k < pivots_.size(); ++k) {
            const Scalar f = r[pivots_[k]];
            if (f.is_zero())
                continue;
            for (std::size_t j = 0; j < ambient_; ++j)
                if (!basis_(k, j).is_zero())
                    r[j] -= f * basis_(k, j);
        }
        for (const auto& x : r)
            if (!x.is_zero())
                return false;
        return true;
    }

    bool contains(const Subspace& other) const {
        for (std::size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_.row_vector(i)))
                return false;
        return true;
    }

    friend Subspace operator+(const Subspace& a, const Subspace& b) {
        auto v = a.vectors();
        auto w = b.vectors();
        v.insert(v.end(), w.begin(), w.end());
        return span(v, a.ambient_);
    }

    friend Subspace intersect(const Subspace& a, const Subspace& b) {
        // x in a ∩ b iff x = sum s_i a_i = sum t_j b_j.
        const std::size_t da = a.dim(), db = b.dim(), n = a.ambient_;
        if (da == 0 || db == 0)
            return Subspace(n);
        Matrix<Scalar> sys(n, da + db);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < da; ++i)
                sys(j, i) = a.basis_(i, j);
            for (std::size_t i = 0; i < db; ++i)
                sys(j, da + i) = -b.basis_(i, j);
        }
        std::vector<Vec> out;
        for (const auto& coeffs : null_space(sys)) {
            Vec x(n, Scalar(0));
            for (std::size_t i = 0; i < da; ++i)
                if (!coeffs[i].is_zero())
                    for (std::size_t j = 0; j < n; ++j)
                        x[j] += coeffs[i] * a.basis_(i, j);
            out.push_back(std::move(x));
        }
        return span(out, n);
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_;
    Matrix<Scalar> basis_;
    std::vector<std::size_t> pivots_;
};

} // namespace leibniz
