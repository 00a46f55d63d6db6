#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "leibniz/upoly.hpp"

namespace leibniz {

namespace detail {

/// Gaussian integer a + b i.
struct GaussInt {
    mpz_class re{0}, im{0};

    mpz_class norm() const { return re * re + im * im; }
    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

    friend GaussInt operator*(const GaussInt& x, const GaussInt& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }

    /// x / y when exact.
    friend std::optional<GaussInt> exact_quotient(const GaussInt& x, const GaussInt& y) {
        mpz_class n = y.norm();
        mpz_class r = x.re * y.re + x.im * y.im;
        mpz_class m = x.im * y.re - x.re * y.im;
        if (!mpz_divisible_p(r.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(m.get_mpz_t(), n.get_mpz_t()))
            return std::nullopt;
        return GaussInt{r / n, m / n};
    }

    QI to_qi() const { return QI(mpq_class(re), mpq_class(im)); }
};

/// Rational prime factorization by trial division with a probabilistic-prime
/// check on the cofactor. Throws when the cofactor cannot be resolved.
inline std::map<mpz_class, unsigned> factor_integer(mpz_class n) {
    std::map<mpz_class, unsigned> f;
    if (n < 0)
        n = -n;
    if (n <= 1)
        return f;
    for (unsigned long p = 2; p < 1000000 && mpz_class(p) * p <= n; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++f[mpz_class(p)];
            n /= p;
        }
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
            ++f[n];
        } else if (mpz_perfect_square_p(n.get_mpz_t()) && mpz_probab_prime_p(mpz_class(sqrt(n)).get_mpz_t(), 30) > 0) {
            f[mpz_class(sqrt(n))] += 2;
        } else {
            throw Error("integer factorization beyond supported size: " + n.get_str());
        }
    }
    return f;
}

/// Gaussian primes above the rational prime p (one per associate class).
inline std::vector<GaussInt> gaussian_primes_over(const mpz_class& p) {
    if (p == 2)
        return {GaussInt{1, 1}};
    if (p % 4 == 3)
        return {GaussInt{p, 0}};
    for (mpz_class a = 1; a * a < p; ++a) {
        mpz_class b2 = p - a * a;
        if (mpz_perfect_square_p(b2.get_mpz_t())) {
            mpz_class b = sqrt(b2);
            return {GaussInt{a, b}, GaussInt{a, -b}};
        }
    }
    throw Error("no two-square decomposition for prime " + p.get_str());
}

/// All divisors of z up to units.
inline std::vector<GaussInt> gaussian_divisors(const GaussInt& z) {
    std::vector<GaussInt> divs{GaussInt{1, 0}};
    GaussInt rest = z;
    for (const auto& [p, e] : factor_integer(z.norm())) {
        (void)e;
        for (const auto& pi : gaussian_primes_over(p)) {
            unsigned k = 0;
            while (auto q = exact_quotient(rest, pi)) {
                rest = *q;
                ++k;
            }
            std::vector<GaussInt> next;
            for (const auto& d : divs) {
                GaussInt m = d;
                next.push_back(m);
                for (unsigned t = 0; t < k; ++t) {
                    m = m * pi;
                    next.push_back(m);
                }
            }
            divs = std::move(next);
        }
    }
    return divs;
}

inline mpz_class lcm_of_denominators(const UPoly& p) {
    mpz_class l = 1;
    for (const auto& c : p.coeffs()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().get_den_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im().get_den_mpz_t());
    }
    return l;
}

} // namespace detail

/// p / gcd(p, p'), monic.
inline UPoly squarefree_part(const UPoly& p) {
    if (p.degree() <= 0)
        return p.monic();
    return (p / gcd(p, p.derivative())).monic();
}

/// Distinct roots of p lying in Q(i), sorted by the QI order.
inline std::vector<QI> qi_roots(const UPoly& p) {
    std::vector<QI> roots;
    if (p.degree() <= 0)
        return roots;
    UPoly s = squarefree_part(p);
    if (s.coeff(0).is_zero()) {
        roots.push_back(QI(0));
        s = s / UPoly::linear(QI(0));
    }
    if (s.degree() >= 1) {
        mpz_class l = detail::lcm_of_denominators(s);
        auto to_gauss = [&](const QI& q) {
            mpq_class r = q.re() * l, m = q.im() * l;
            return detail::GaussInt{r.get_num(), m.get_num()};
        };
        const detail::GaussInt a0 = to_gauss(s.coeff(0));
        const detail::GaussInt an = to_gauss(s.lead());
        const auto num_divs = detail::gaussian_divisors(a0);
        const auto den_divs = detail::gaussian_divisors(an);
        const detail::GaussInt units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        for (const auto& v : den_divs) {
            for (const auto& u0 : num_divs) {
                for (const auto& unit : units) {
                    if (s.degree() < 1)
                        break;
                    QI r = (u0 * unit).to_qi() / v.to_qi();
                    if (s(r).is_zero()) {
                        roots.push_back(r);
                        s = s / UPoly::linear(r);
                    }
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

/// Multiplicity of r as a root of p (p nonzero).
inline unsigned root_multiplicity(UPoly p, const QI& r) {
    unsigned m = 0;
    const UPoly lin = UPoly::linear(r);
    while (p.degree() >= 1) {
        auto [q, rem] = divmod(p, lin);
        if (!rem.is_zero())
            break;
        p = std::move(q);
        ++m;
    }
    return m;
}

} // namespace leibniz
