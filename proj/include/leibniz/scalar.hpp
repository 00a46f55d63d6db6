#pragma once

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/polynomial.hpp"

namespace leibniz {

/// Element of Q(i)(p1, ..., pm): a reduced quotient of polynomials in named
/// parameters. The denominator is monic under grlex and coprime to the
/// numerator, so two Scalars are equal iff they are structurally equal.
class Scalar {
public:
    Scalar() : den_(1) {}
    Scalar(int v) : num_(v), den_(1) {}
    Scalar(const QI& v) : num_(v), den_(1) {}

    static Scalar param(const std::string& name) {
        Scalar s;
        s.num_ = Poly::variable(name);
        return s;
    }

    /// num/den, reduced.
    static Scalar fraction(Poly num, Poly den) {
        if (den.is_zero())
            throw DivisionByZero();
        Scalar s;
        s.num_ = std::move(num);
        s.den_ = std::move(den);
        s.canonicalize();
        return s;
    }

    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    /// Value of a constant Scalar.
    QI constant_value() const {
        if (!is_constant())
            throw ParameterNotSupported("scalar is not constant: " + to_string());
        return num_.constant_value();
    }

    std::set<std::string> parameters() const {
        auto vs = num_.variables();
        auto vd = den_.variables();
        vs.insert(vd.begin(), vd.end());
        return vs;
    }

    Scalar operator-() const {
        Scalar s = *this;
        s.num_ = -s.num_;
        return s;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.is_zero())
            return b;
        if (b.is_zero())
            return a;
        if (a.is_constant() && b.is_constant())
            return Scalar(a.num_.constant_value() + b.num_.constant_value());
        if (a.den_.is_one() && b.den_.is_one())
            return polynomial(a.num_ + b.num_);
        if (a.den_ == b.den_)
            return fraction(a.num_ + b.num_, a.den_);
        return fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.is_zero() || b.is_zero())
            return Scalar();
        if (a.is_constant() && b.is_constant())
            return Scalar(a.num_.constant_value() * b.num_.constant_value());
        if (a.den_.is_one() && b.den_.is_one())
            return polynomial(a.num_ * b.num_);
        return fraction(a.num_ * b.num_, a.den_ * b.den_);
    }

    Scalar inv() const {
        if (is_zero())
            throw DivisionByZero();
        if (is_constant())
            return Scalar(num_.constant_value().inv());
        return fraction(den_, num_);
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    /// Reduces num/den and normalizes the denominator to be monic. Idempotent.
    void canonicalize() {
        if (den_.is_zero())
            throw DivisionByZero();
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        if (!den_.is_constant()) {
            Poly g = gcd(num_, den_);
            if (!g.is_one()) {
                num_ = exact_div(num_, g);
                den_ = exact_div(den_, g);
            }
        }
        QI lc = den_.leading_coef();
        if (!lc.is_one()) {
            QI inv = lc.inv();
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    /// Canonical text in the scalar grammar; parses back to an equal Scalar.
    std::string to_string() const {
        std::string n = poly_text(num_);
        if (den_.is_one())
            return n;
        if (needs_parens(num_))
            n = "(" + n + ")";
        std::string d = poly_text(den_);
        if (!is_bare_atom(den_))
            d = "(" + d + ")";
        return n + "/" + d;
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

    static std::string poly_text(const Poly& p) {
        if (p.is_zero())
            return "0";
        std::string out;
        for (const auto& t : p.terms()) {
            std::string term = term_text(t);
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
    static Scalar polynomial(Poly p) {
        Scalar s;
        s.num_ = std::move(p);
        return s;
    }

    static std::string term_text(const Poly::Term& t) {
        const QI& c = t.coef;
        if (t.mono.is_one())
            return c.to_string();
        std::string m = t.mono.to_string();
        if (c.is_one())
            return m;
        if (c == QI(-1))
            return "-" + m;
        if (c.is_real() || sgn(c.re()) == 0)
            return c.to_string() + "*" + m;
        return "(" + c.to_string() + ")*" + m;
    }

    static bool needs_parens(const Poly& p) {
        if (p.terms().size() > 1)
            return true;
        const QI& c = p.terms().front().coef;
        return !c.is_real() && sgn(c.re()) != 0 && p.is_constant();
    }

    static bool is_bare_atom(const Poly& p) {
        if (p.terms().size() != 1)
            return false;
        const auto& t = p.terms().front();
        if (!t.coef.is_one())
            return false;
        return t.mono.factors().size() == 1 && t.mono.factors()[0].second == 1;
    }

    Poly num_;
    Poly den_;
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

/// Excluded values for a named parameter, e.g. c not in {1, -1}.
struct ParameterConstraint {
    std::string param;
    std::vector<Scalar> excluded;

    friend bool operator==(const ParameterConstraint&, const ParameterConstraint&) = default;
};

/// The constraint carried by every symbolic B-block parameter.
inline ParameterConstraint b_parameter_constraint(const std::string& name) {
    return {name, {Scalar(1), Scalar(-1)}};
}

/// Merges constraint lists; the result is sorted by parameter name.
inline std::vector<ParameterConstraint> merge_constraints(std::vector<ParameterConstraint> a,
                                                          const std::vector<ParameterConstraint>& b) {
    for (const auto& c : b) {
        auto it = std::find_if(a.begin(), a.end(), [&](const auto& x) { return x.param == c.param; });
        if (it == a.end()) {
            a.push_back(c);
            continue;
        }
        for (const auto& v : c.excluded)
            if (std::find(it->excluded.begin(), it->excluded.end(), v) == it->excluded.end())
                it->excluded.push_back(v);
    }
    std::sort(a.begin(), a.end(), [](const auto& x, const auto& y) { return x.param < y.param; });
    return a;
}

/// Renames parameters (a bijection on the names involved).
inline Scalar rename_parameters(const Scalar& a, const std::map<std::string, std::string>& names) {
    if (a.is_constant() || names.empty())
        return a;
    auto rename = [&](const Poly& p) {
        Poly out;
        for (const auto& t : p.terms()) {
            Poly term(t.coef);
            for (const auto& [var, exp] : t.mono.factors()) {
                auto it = names.find(var);
                const Poly v = Poly::variable(it == names.end() ? var : it->second);
                for (unsigned e = 0; e < exp; ++e)
                    term = term * v;
            }
            out = out + term;
        }
        return out;
    };
    return Scalar::fraction(rename(a.numerator()), rename(a.denominator()));
}

using Bindings = std::map<std::string, Scalar>;

/// Replaces parameters by constants. Constraint checks come first, then the
/// denominator check.
inline Scalar substitute(const Scalar& a, const Bindings& bindings,
                         const std::vector<ParameterConstraint>& constraints = {}) {
    std::map<std::string, QI> values;
    for (const auto& [name, value] : bindings) {
        if (!value.is_constant())
            throw ParameterNotSupported("binding for '" + name + "' is not a constant");
        for (const auto& c : constraints) {
            if (c.param != name)
                continue;
            for (const auto& ex : c.excluded)
                if (ex == value)
                    throw ConstraintViolation("parameter " + name + " may not take the value " + value.to_string());
        }
        values.emplace(name, value.constant_value());
    }
    Poly num = a.numerator().evaluate(values);
    Poly den = a.denominator().evaluate(values);
    if (den.is_zero())
        throw DenominatorVanishes("denominator of " + a.to_string() + " vanishes");
    return Scalar::fraction(std::move(num), std::move(den));
}

} // namespace leibniz
