#ifndef MAXTORUS_ARITH_HPP
#define MAXTORUS_ARITH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace maxtorus {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& n);
std::string to_string(const Rational& x); // "p" or "p/q"

// ---------------------------------------------------------------------------
// Integer factorization

struct PrimePower {
    Integer prime;
    unsigned exponent;
};

struct Factorization {
    int sign = 1;                   // +1 or -1
    std::vector<PrimePower> factors; // increasing primes
};

// Miller-Rabin with the first 20 prime bases. Deterministic below 3.3e24,
// error probability below 4^-20 beyond.
bool is_probable_prime(const Integer& n);

// Trial division up to 10^4, then Pollard-rho (Brent) splitting with
// Miller-Rabin certification of every reported factor. Throws
// std::domain_error on n == 0.
Factorization factor_integer(const Integer& n);

// ---------------------------------------------------------------------------
// Square classes Q*/Q*^2

// An element of Q*/Q*^2 represented by its signed squarefree integer. The
// prime divisors of the representative are kept alongside so that local
// computations never refactor.
class SquareClass {
public:
    SquareClass() : rep_(1) {}

    // Square class of a nonzero rational. Throws std::domain_error on zero.
    static SquareClass of(const Rational& x);
    static SquareClass of(long x) { return of(Rational(x)); }

    const Integer& rep() const { return rep_; }
    const std::vector<Integer>& primes() const { return primes_; }
    int sign() const { return sgn(rep_); }
    bool is_trivial() const { return rep_ == 1; }

    SquareClass operator*(const SquareClass& other) const;
    SquareClass operator-() const;

    friend bool operator==(const SquareClass& a, const SquareClass& b) { return a.rep_ == b.rep_; }
    friend bool operator!=(const SquareClass& a, const SquareClass& b) { return a.rep_ != b.rep_; }
    friend bool operator<(const SquareClass& a, const SquareClass& b) { return a.rep_ < b.rep_; }

private:
    Integer rep_;
    std::vector<Integer> primes_;
};

SquareClass squarefree_part(const Rational& x);

// ---------------------------------------------------------------------------
// Places of Q

class Place {
public:
    static Place infinity() { return Place(Integer(0)); }
    // Throws std::domain_error unless p passes is_probable_prime.
    static Place finite(const Integer& p);
    static Place finite(unsigned long p) { return finite(Integer(p)); }

    bool is_infinite() const { return prime_ == 0; }
    bool is_dyadic() const { return prime_ == 2; }
    // Zero for the real place.
    const Integer& prime() const { return prime_; }

    std::string to_string() const; // "inf" or the decimal prime
    // Inverse of to_string. Throws std::domain_error on anything else.
    static Place parse(const std::string& text);

    // The real place sorts first, then primes in increasing order.
    friend bool operator<(const Place& a, const Place& b) { return a.prime_ < b.prime_; }
    friend bool operator==(const Place& a, const Place& b) { return a.prime_ == b.prime_; }
    friend bool operator!=(const Place& a, const Place& b) { return a.prime_ != b.prime_; }

private:
    explicit Place(Integer p) : prime_(std::move(p)) {}
    Integer prime_;
};

using PlaceSet = std::set<Place>;

PlaceSet symmetric_difference(const PlaceSet& a, const PlaceSet& b);
std::string to_string(const PlaceSet& places);

// ---------------------------------------------------------------------------
// Symbols

// Quadratic residue symbol (a/p) for an odd prime p: -1, 0 or +1.
// Throws std::domain_error for p == 2.
int legendre_symbol(const Integer& a, const Integer& p);

// Local Hilbert symbol written additively: 0 if (a,b) splits over Q_v,
// 1 otherwise. Throws std::domain_error on zero arguments.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);
int hilbert_symbol(const SquareClass& a, const SquareClass& b, const Place& v);

// Whether the class is a square in Q_v.
bool is_local_square(const SquareClass& c, const Place& v);

// Primes p <= bound, increasing.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

// Next prime strictly greater than n.
Integer next_prime(const Integer& n);

} // namespace maxtorus

#endif
