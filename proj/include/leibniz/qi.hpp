#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "leibniz/error.hpp"

namespace leibniz {

/// Exact Gaussian rational re + im*i.
class QI {
public:
    QI() = default;
    QI(int v) : re_(v) {}
    QI(long v) : re_(v) {}
    explicit QI(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static QI i() { return QI(mpq_class(0), mpq_class(1)); }
    static QI ratio(long p, long q) { return QI(mpq_class(p, q)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    QI conj() const { return QI(re_, -im_); }
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    QI operator-() const {
        QI r;
        r.re_ = -re_;
        r.im_ = -im_;
        return r;
    }

    QI& operator+=(const QI& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    QI& operator-=(const QI& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    QI& operator*=(const QI& o) {
        if (sgn(im_) == 0 && sgn(o.im_) == 0) {
            re_ *= o.re_;
            return *this;
        }
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }
    QI& operator/=(const QI& o) {
        if (o.is_zero())
            throw DivisionByZero();
        if (sgn(im_) == 0 && sgn(o.im_) == 0) {
            re_ /= o.re_;
            return *this;
        }
        mpq_class n = o.norm();
        mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
        mpq_class m = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }

    QI inv() const { return QI(1) / *this; }

    /// *this -= f * x without temporaries on the real path.
    QI& submul(const QI& f, const QI& x) {
        if (sgn(f.im_) == 0 && sgn(x.im_) == 0) {
            thread_local mpq_class t;
            mpq_mul(t.get_mpq_t(), f.re_.get_mpq_t(), x.re_.get_mpq_t());
            mpq_sub(re_.get_mpq_t(), re_.get_mpq_t(), t.get_mpq_t());
            return *this;
        }
        return *this -= f * x;
    }

    /// *this += f * x.
    QI& addmul(const QI& f, const QI& x) {
        if (sgn(f.im_) == 0 && sgn(x.im_) == 0) {
            thread_local mpq_class t;
            mpq_mul(t.get_mpq_t(), f.re_.get_mpq_t(), x.re_.get_mpq_t());
            mpq_add(re_.get_mpq_t(), re_.get_mpq_t(), t.get_mpq_t());
            return *this;
        }
        return *this += f * x;
    }

    friend QI operator+(QI a, const QI& b) { return a += b; }
    friend QI operator-(QI a, const QI& b) { return a -= b; }
    friend QI operator*(QI a, const QI& b) { return a *= b; }
    friend QI operator/(QI a, const QI& b) { return a /= b; }

    friend bool operator==(const QI& a, const QI& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

    /// Total order: real part first, then imaginary part.
    friend std::strong_ordering operator<=>(const QI& a, const QI& b) {
        int c = cmp(a.re_, b.re_);
        if (c == 0)
            c = cmp(a.im_, b.im_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// Canonical text: `-1`, `1/2+3/4*i`, `i`, `-2*i`.
    std::string to_string() const {
        if (sgn(im_) == 0)
            return re_.get_str();
        std::string imag = imag_text(im_);
        if (sgn(re_) == 0)
            return imag;
        if (imag.front() == '-')
            return re_.get_str() + imag;
        return re_.get_str() + "+" + imag;
    }

    friend std::ostream& operator<<(std::ostream& os, const QI& q) { return os << q.to_string(); }

private:
    static std::string imag_text(const mpq_class& v) {
        if (v == 1)
            return "i";
        if (v == -1)
            return "-i";
        return v.get_str() + "*i";
    }

    mpq_class re_{0};
    mpq_class im_{0};
};

inline bool is_zero(const QI& q) { return q.is_zero(); }
inline void submul(QI& a, const QI& f, const QI& b) { a.submul(f, b); }

/// Square root of a nonnegative rational when it is rational.
inline std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (sgn(q) < 0)
        return std::nullopt;
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    return mpq_class(sqrt(n), sqrt(d));
}

/// A square root of q inside Q(i), if one exists. Returns the root with
/// nonnegative real part (and nonnegative imaginary part when real part is 0).
inline std::optional<QI> qi_sqrt(const QI& q) {
    if (q.is_zero())
        return QI(0);
    if (q.is_real()) {
        if (sgn(q.re()) > 0) {
            if (auto r = rational_sqrt(q.re()))
                return QI(*r);
            return std::nullopt;
        }
        if (auto r = rational_sqrt(-q.re()))
            return QI(mpq_class(0), *r);
        return std::nullopt;
    }
    auto modulus = rational_sqrt(q.norm());
    if (!modulus)
        return std::nullopt;
    auto x = rational_sqrt((q.re() + *modulus) / 2);
    if (!x || sgn(*x) == 0)
        return std::nullopt;
    mpq_class y = q.im() / (2 * *x);
    return QI(*x, y);
}

} // namespace leibniz
