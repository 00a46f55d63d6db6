#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/qi.hpp"

namespace leibniz {

/// Power product of named variables, kept sorted by variable name.
class Monomial {
public:
    using Factor = std::pair<std::string, unsigned>;

    Monomial() = default;
    explicit Monomial(std::string var, unsigned exp = 1) {
        if (exp > 0)
            factors_.emplace_back(std::move(var), exp);
    }

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    unsigned degree() const {
        unsigned d = 0;
        for (const auto& f : factors_)
            d += f.second;
        return d;
    }

    unsigned degree_in(const std::string& var) const {
        for (const auto& f : factors_)
            if (f.first == var)
                return f.second;
        return 0;
    }

    Monomial without(const std::string& var) const {
        Monomial m;
        for (const auto& f : factors_)
            if (f.first != var)
                m.factors_.push_back(f);
        return m;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m;
        auto i = a.factors_.begin();
        auto j = b.factors_.begin();
        while (i != a.factors_.end() || j != b.factors_.end()) {
            if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
                m.factors_.push_back(*i++);
            } else if (i == a.factors_.end() || j->first < i->first) {
                m.factors_.push_back(*j++);
            } else {
                m.factors_.emplace_back(i->first, i->second + j->second);
                ++i;
                ++j;
            }
        }
        return m;
    }

    /// a / b when b divides a.
    static std::optional<Monomial> divide(const Monomial& a, const Monomial& b) {
        Monomial m;
        auto i = a.factors_.begin();
        auto j = b.factors_.begin();
        while (j != b.factors_.end()) {
            while (i != a.factors_.end() && i->first < j->first)
                m.factors_.push_back(*i++);
            if (i == a.factors_.end() || i->first != j->first || i->second < j->second)
                return std::nullopt;
            if (i->second > j->second)
                m.factors_.emplace_back(i->first, i->second - j->second);
            ++i;
            ++j;
        }
        while (i != a.factors_.end())
            m.factors_.push_back(*i++);
        return m;
    }

    /// Graded lexicographic comparison; variables ordered by name, earlier names dominate.
    friend int grlex_compare(const Monomial& a, const Monomial& b) {
        unsigned da = a.degree(), db = b.degree();
        if (da != db)
            return da < db ? -1 : 1;
        auto i = a.factors_.begin();
        auto j = b.factors_.begin();
        while (i != a.factors_.end() && j != b.factors_.end()) {
            if (i->first != j->first)
                return i->first < j->first ? 1 : -1;
            if (i->second != j->second)
                return i->second < j->second ? -1 : 1;
            ++i;
            ++j;
        }
        if (i != a.factors_.end())
            return 1;
        if (j != b.factors_.end())
            return -1;
        return 0;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

    /// `c*c*d`; empty for the unit monomial.
    std::string to_string() const {
        std::string s;
        for (const auto& [var, exp] : factors_) {
            for (unsigned k = 0; k < exp; ++k) {
                if (!s.empty())
                    s += '*';
                s += var;
            }
        }
        return s;
    }

private:
    std::vector<Factor> factors_;
};

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

/// Multivariate polynomial over Q(i). Terms are stored in descending grlex order
/// with nonzero coefficients, so structural equality is polynomial equality.
class Poly {
public:
    struct Term {
        Monomial mono;
        QI coef;
        friend bool operator==(const Term&, const Term&) = default;
    };

    Poly() = default;
    Poly(const QI& c) {
        if (!c.is_zero())
            terms_.push_back({Monomial(), c});
    }
    Poly(int c) : Poly(QI(c)) {}

    static Poly variable(const std::string& name) {
        Poly p;
        p.terms_.push_back({Monomial(name), QI(1)});
        return p;
    }

    static Poly from_map(std::map<Monomial, QI, GrlexGreater>&& m) {
        Poly p;
        p.terms_.reserve(m.size());
        for (auto& [mono, coef] : m)
            if (!coef.is_zero())
                p.terms_.push_back({mono, std::move(coef)});
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    QI constant_value() const { return terms_.empty() ? QI(0) : terms_.back().mono.is_one() ? terms_.back().coef : QI(0); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coef.is_one(); }

    const QI& leading_coef() const { return terms_.front().coef; }
    const Monomial& leading_mono() const { return terms_.front().mono; }

    std::set<std::string> variables() const {
        std::set<std::string> vs;
        for (const auto& t : terms_)
            for (const auto& f : t.mono.factors())
                vs.insert(f.first);
        return vs;
    }

    unsigned degree_in(const std::string& var) const {
        unsigned d = 0;
        for (const auto& t : terms_)
            d = std::max(d, t.mono.degree_in(var));
        return d;
    }

    Poly operator-() const {
        Poly p = *this;
        for (auto& t : p.terms_)
            t.coef = -t.coef;
        return p;
    }

    friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
    friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero())
            return Poly();
        if (a.is_constant())
            return b.scaled(a.terms_[0].coef);
        if (b.is_constant())
            return a.scaled(b.terms_[0].coef);
        std::map<Monomial, QI, GrlexGreater> acc;
        for (const auto& s : a.terms_)
            for (const auto& t : b.terms_)
                acc[s.mono * t.mono] += s.coef * t.coef;
        return from_map(std::move(acc));
    }

    Poly scaled(const QI& c) const {
        if (c.is_zero())
            return Poly();
        Poly p = *this;
        for (auto& t : p.terms_)
            t.coef *= c;
        return p;
    }

    Poly times_monomial(const Monomial& m) const {
        Poly p = *this;
        for (auto& t : p.terms_)
            t.mono = t.mono * m;
        return p;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    /// Division by a single divisor: returns (quotient, remainder) with respect to grlex.
    friend std::pair<Poly, Poly> divmod(Poly f, const Poly& g) {
        if (g.is_zero())
            throw DivisionByZero();
        std::map<Monomial, QI, GrlexGreater> q, r;
        const Monomial& lg = g.leading_mono();
        const QI lc_inv = g.leading_coef().inv();
        while (!f.is_zero()) {
            const Term lead = f.terms_.front();
            if (auto m = Monomial::divide(lead.mono, lg)) {
                QI c = lead.coef * lc_inv;
                q[*m] += c;
                f = f - g.times_monomial(*m).scaled(c);
            } else {
                r[lead.mono] += lead.coef;
                f.terms_.erase(f.terms_.begin());
            }
        }
        return {from_map(std::move(q)), from_map(std::move(r))};
    }

    /// Exact quotient; the caller guarantees divisibility.
    friend Poly exact_div(const Poly& f, const Poly& g) {
        if (g.is_constant())
            return f.scaled(g.constant_value().inv());
        auto [q, r] = divmod(f, g);
        if (!r.is_zero())
            throw Error("exact_div: inexact polynomial division");
        return q;
    }

    /// Coefficients as a polynomial in `var`, index = degree.
    std::vector<Poly> coeffs_in(const std::string& var) const {
        std::vector<std::map<Monomial, QI, GrlexGreater>> parts(degree_in(var) + 1);
        for (const auto& t : terms_)
            parts[t.mono.degree_in(var)][t.mono.without(var)] += t.coef;
        std::vector<Poly> out;
        out.reserve(parts.size());
        for (auto& m : parts)
            out.push_back(from_map(std::move(m)));
        return out;
    }

    static Poly from_coeffs(const std::vector<Poly>& cs, const std::string& var) {
        Poly p;
        for (std::size_t k = 0; k < cs.size(); ++k)
            if (!cs[k].is_zero())
                p = p + cs[k].times_monomial(Monomial(var, static_cast<unsigned>(k)));
        return p;
    }

    /// Substitutes constants for some variables.
    Poly evaluate(const std::map<std::string, QI>& values) const {
        std::map<Monomial, QI, GrlexGreater> acc;
        for (const auto& t : terms_) {
            QI c = t.coef;
            Monomial rest;
            for (const auto& [var, exp] : t.mono.factors()) {
                auto it = values.find(var);
                if (it == values.end()) {
                    rest = rest * Monomial(var, exp);
                } else {
                    for (unsigned k = 0; k < exp; ++k)
                        c *= it->second;
                }
            }
            acc[rest] += c;
        }
        return from_map(std::move(acc));
    }

    /// Makes the grlex-leading coefficient 1.
    Poly monic() const {
        if (is_zero())
            return *this;
        return scaled(leading_coef().inv());
    }

private:
    static Poly merge(const Poly& a, const Poly& b, bool subtract) {
        Poly p;
        p.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto i = a.terms_.begin();
        auto j = b.terms_.begin();
        while (i != a.terms_.end() || j != b.terms_.end()) {
            int c;
            if (i == a.terms_.end())
                c = -1;
            else if (j == b.terms_.end())
                c = 1;
            else
                c = grlex_compare(i->mono, j->mono);
            if (c > 0) {
                p.terms_.push_back(*i++);
            } else if (c < 0) {
                p.terms_.push_back({j->mono, subtract ? -j->coef : j->coef});
                ++j;
            } else {
                QI s = subtract ? i->coef - j->coef : i->coef + j->coef;
                if (!s.is_zero())
                    p.terms_.push_back({i->mono, std::move(s)});
                ++i;
                ++j;
            }
        }
        return p;
    }

    std::vector<Term> terms_;
};

namespace detail {

inline Poly poly_gcd_impl(const Poly& a, const Poly& b);

/// gcd of the coefficients of p viewed as a polynomial in var.
inline Poly content_in(const Poly& p, const std::string& var) {
    Poly g;
    for (const auto& c : p.coeffs_in(var)) {
        if (c.is_zero())
            continue;
        g = g.is_zero() ? c.monic() : poly_gcd_impl(g, c);
        if (g.is_constant())
            return Poly(1);
    }
    return g;
}

/// Pseudo-remainder of a by b in var (neither zero, deg_var(b) >= 1).
inline Poly pseudo_remainder(const Poly& a, const Poly& b, const std::string& var) {
    std::vector<Poly> bc = b.coeffs_in(var);
    const std::size_t db = bc.size() - 1;
    const Poly& lb = bc.back();
    std::vector<Poly> r = a.coeffs_in(var);
    while (r.size() > db && !r.empty()) {
        Poly lr = r.back();
        std::size_t shift = r.size() - 1 - db;
        for (auto& c : r)
            c = c * lb;
        for (std::size_t k = 0; k <= db; ++k)
            r[k + shift] = r[k + shift] - lr * bc[k];
        while (!r.empty() && r.back().is_zero())
            r.pop_back();
    }
    return Poly::from_coeffs(r, var);
}

inline Poly poly_gcd_impl(const Poly& a, const Poly& b) {
    if (a.is_zero())
        return b.monic();
    if (b.is_zero())
        return a.monic();
    if (a.is_constant() || b.is_constant())
        return Poly(1);
    if (a == b)
        return a.monic();
    std::set<std::string> va = a.variables(), vb = b.variables();
    std::string var;
    for (const auto& v : va)
        if (vb.count(v)) {
            var = v;
            break;
        }
    if (var.empty())
        return poly_gcd_impl(content_in(a, *va.begin()), b);
    Poly ca = content_in(a, var), cb = content_in(b, var);
    Poly g = poly_gcd_impl(ca, cb);
    Poly pa = exact_div(a, ca), pb = exact_div(b, cb);
    if (pa.degree_in(var) < pb.degree_in(var))
        std::swap(pa, pb);
    while (!pb.is_zero()) {
        Poly r = pseudo_remainder(pa, pb, var);
        pa = std::move(pb);
        if (r.is_zero() || r.degree_in(var) == 0) {
            pb = Poly();
            if (!r.is_zero())
                pa = Poly(1);
        } else {
            pb = exact_div(r, content_in(r, var));
        }
    }
    if (pa.degree_in(var) == 0)
        return g.monic();
    pa = exact_div(pa, content_in(pa, var));
    return (g * pa).monic();
}

} // namespace detail

/// Monic greatest common divisor (grlex leading coefficient 1).
inline Poly gcd(const Poly& a, const Poly& b) { return detail::poly_gcd_impl(a, b); }

} // namespace leibniz
