#ifndef MAXTORUS_POLY_FP_HPP
#define MAXTORUS_POLY_FP_HPP

#include "maxtorus/arith.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace maxtorus {

// Dense polynomial over F_p for a word-sized prime p, low degree first.
class PolyFp {
public:
    PolyFp() = default;
    PolyFp(std::uint64_t p, std::vector<std::uint64_t> coeffs);
    // Reduction of a rational polynomial; throws std::domain_error when p
    // divides a denominator.
    static PolyFp reduce(std::uint64_t p, const std::vector<Rational>& coeffs);

    std::uint64_t modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    std::uint64_t lc() const { return c_.back(); }
    std::uint64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }

    PolyFp monic() const;
    PolyFp derivative() const;

    friend PolyFp operator+(const PolyFp& a, const PolyFp& b);
    friend PolyFp operator-(const PolyFp& a, const PolyFp& b);
    friend PolyFp operator*(const PolyFp& a, const PolyFp& b);
    friend bool operator==(const PolyFp& a, const PolyFp& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
    friend bool operator!=(const PolyFp& a, const PolyFp& b) { return !(a == b); }

    std::string to_string(const char* var = "x") const;

private:
    void trim();
    std::uint64_t p_ = 2;
    std::vector<std::uint64_t> c_;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

std::pair<PolyFp, PolyFp> divmod(const PolyFp& a, const PolyFp& b);
PolyFp operator%(const PolyFp& a, const PolyFp& b);
PolyFp operator/(const PolyFp& a, const PolyFp& b);
PolyFp gcd(const PolyFp& a, const PolyFp& b); // monic
// base^e mod m
PolyFp powmod(const PolyFp& base, const Integer& e, const PolyFp& m);

struct FpFactor {
    PolyFp factor; // monic irreducible
    unsigned multiplicity;
};

// Squarefree decomposition, distinct-degree split, then equal-degree
// splitting (Cantor-Zassenhaus for odd p, trace map for p = 2) driven by a
// pseudo-random stream seeded from the input. Factors are sorted by degree,
// then lexicographically by coefficients. The unit is dropped.
std::vector<FpFactor> poly_factor_mod_p(const PolyFp& f);

// Whether e is a nonzero square in F_p[x]/(g) for odd p and g irreducible:
// e^((p^k - 1)/2) == 1 with k = deg g. Throws std::domain_error when p is 2
// or e vanishes in the residue field.
bool ff_is_square(const PolyFp& e, const PolyFp& g);

} // namespace maxtorus

#endif
