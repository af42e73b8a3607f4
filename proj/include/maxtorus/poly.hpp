#ifndef MAXTORUS_POLY_HPP
#define MAXTORUS_POLY_HPP

#include "maxtorus/arith.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace maxtorus {

// Dense univariate polynomial over Q, coefficients stored low degree first.
// The zero polynomial has no coefficients and degree -1.
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(std::vector<Rational> coeffs);
    PolyQ(std::initializer_list<long> coeffs);

    static PolyQ constant(const Rational& c);
    static PolyQ monomial(const Rational& c, std::size_t k);
    static PolyQ x() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const Rational& lc() const;
    // Coefficient of x^i, zero past the degree.
    Rational operator[](std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;
    PolyQ derivative() const;
    PolyQ monic() const;
    // p(x) -> p(x^2)
    PolyQ in_square() const;
    // True when only even powers of x occur.
    bool is_even() const;

    PolyQ& operator+=(const PolyQ& o);
    PolyQ& operator-=(const PolyQ& o);
    PolyQ& operator*=(const Rational& s);
    friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
    friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator*(PolyQ a, const Rational& s) { return a *= s; }
    friend PolyQ operator-(const PolyQ& a);
    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PolyQ& a, const PolyQ& b) { return a.c_ != b.c_; }

    // Human form, e.g. "x^4 - 2".
    std::string to_string(const char* var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Euclidean division; throws std::domain_error on a zero divisor.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);
PolyQ operator%(const PolyQ& a, const PolyQ& b);
PolyQ operator/(const PolyQ& a, const PolyQ& b);

// Monic gcd (zero if both inputs are zero).
PolyQ gcd(const PolyQ& a, const PolyQ& b);

// Squarefree part f / gcd(f, f'), made monic.
PolyQ squarefree_kernel(const PolyQ& f);

// Exact resultant by the Euclidean remainder sequence over Q.
Rational resultant(const PolyQ& f, const PolyQ& g);

// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f).
Rational poly_discriminant(const PolyQ& f);

// Polynomial in y whose coefficients are polynomials in x:
// g(x, y) = sum_k coeffs[k](x) y^k.
struct BivariatePolyQ {
    std::vector<PolyQ> coeffs;
    int degree_y() const { return static_cast<int>(coeffs.size()) - 1; }
    int degree_x() const;
};

// Res_y(f(y), g(x, y)) as a polynomial in x. Computed from the Sylvester
// determinant evaluated at enough integer points and interpolated, so the
// formal y-degrees are honoured even where leading terms vanish.
PolyQ resultant_y(const PolyQ& f, const BivariatePolyQ& g);

// Q-irreducibility by Zassenhaus: factor modulo a good prime, Hensel lift,
// recombine. Degree-pattern intersection across several primes is tried
// first and usually settles the question without lifting.
bool is_irreducible_over_q(const PolyQ& f);

} // namespace maxtorus

#endif
