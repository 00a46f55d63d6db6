#pragma once

#include <string>
#include <utility>
#include <vector>

#include "leibniz/qi.hpp"

namespace leibniz {

/// Univariate polynomial over Q(i); coefficients low degree first, no trailing zeros.
class UPoly {
public:
    UPoly() = default;
    UPoly(const QI& c) {
        if (!c.is_zero())
            c_.push_back(c);
    }
    UPoly(int c) : UPoly(QI(c)) {}
    explicit UPoly(std::vector<QI> coeffs) : c_(std::move(coeffs)) { trim(); }

    /// x - r
    static UPoly linear(const QI& root) { return UPoly({-root, QI(1)}); }
    /// a*x + b
    static UPoly affine(const QI& a, const QI& b) { return UPoly({b, a}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<QI>& coeffs() const { return c_; }
    const QI& lead() const { return c_.back(); }
    QI coeff(std::size_t k) const { return k < c_.size() ? c_[k] : QI(0); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

    QI operator()(const QI& x) const {
        QI acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    UPoly operator-() const {
        UPoly p = *this;
        for (auto& x : p.c_)
            x = -x;
        return p;
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<QI> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < c.size(); ++k)
            c[k] = a.coeff(k) + b.coeff(k);
        return UPoly(std::move(c));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero())
            return UPoly();
        std::vector<QI> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero())
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j].addmul(a.c_[i], b.c_[j]);
        }
        return UPoly(std::move(c));
    }

    UPoly scaled(const QI& s) const {
        if (s.is_zero())
            return UPoly();
        UPoly p = *this;
        for (auto& x : p.c_)
            x *= s;
        return p;
    }

    UPoly monic() const { return is_zero() ? *this : scaled(lead().inv()); }

    UPoly derivative() const {
        std::vector<QI> d;
        for (std::size_t k = 1; k < c_.size(); ++k)
            d.push_back(c_[k] * QI(static_cast<int>(k)));
        return UPoly(std::move(d));
    }

    /// *this -= q * p in place.
    UPoly& submul(const UPoly& q, const UPoly& p) {
        if (q.is_zero() || p.is_zero())
            return *this;
        if (c_.size() < q.c_.size() + p.c_.size() - 1)
            c_.resize(q.c_.size() + p.c_.size() - 1);
        for (std::size_t i = 0; i < q.c_.size(); ++i) {
            if (q.c_[i].is_zero())
                continue;
            for (std::size_t j = 0; j < p.c_.size(); ++j)
                c_[i + j].submul(q.c_[i], p.c_[j]);
        }
        trim();
        return *this;
    }

    friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
        if (b.is_zero())
            throw DivisionByZero();
        if (a.degree() < b.degree())
            return {UPoly(), a};
        std::vector<QI> r = a.c_;
        std::vector<QI> q(a.c_.size() - b.c_.size() + 1);
        const QI inv = b.lead().inv();
        for (std::size_t k = q.size(); k-- > 0;) {
            QI f = r[k + b.c_.size() - 1] * inv;
            q[k] = f;
            if (f.is_zero())
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[k + j].submul(f, b.c_[j]);
        }
        r.resize(b.c_.size() - 1);
        return {UPoly(std::move(q)), UPoly(std::move(r))};
    }

    friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }
    friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    /// Text in the variable `var`, highest degree first, e.g. `x*x+1/2*x-1`.
    std::string to_string(const std::string& var = "x") const {
        if (c_.empty())
            return "0";
        std::string out;
        for (std::size_t k = c_.size(); k-- > 0;) {
            const QI& a = c_[k];
            if (a.is_zero())
                continue;
            std::string mono;
            for (std::size_t e = 0; e < k; ++e)
                mono += (mono.empty() ? "" : "*") + var;
            std::string term;
            if (k == 0)
                term = a.to_string();
            else if (a.is_one())
                term = mono;
            else if (a == QI(-1))
                term = "-" + mono;
            else if (a.is_real() || sgn(a.re()) == 0)
                term = a.to_string() + "*" + mono;
            else
                term = "(" + a.to_string() + ")*" + mono;
            if (out.empty())
                out = term;
            else if (term.front() == '-')
                out += term;
            else
                out += "+" + term;
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }

    std::vector<QI> c_;
};

inline bool is_zero(const UPoly& p) { return p.is_zero(); }

inline UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

} // namespace leibniz
