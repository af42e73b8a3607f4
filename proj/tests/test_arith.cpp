#include "maxtorus/arith.hpp"
#include "maxtorus/selfcheck.hpp"

#include <doctest.h>

#include <random>

using namespace maxtorus;

namespace {

// Euler's criterion, computed with GMP modular powering.
int euler_criterion(const Integer& a, const Integer& p)
{
    Integer r;
    Integer am = a % p;
    if (am < 0)
        am += p;
    if (am == 0)
        return 0;
    const Integer e = (p - 1) / 2;
    mpz_powm(r.get_mpz_t(), am.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return r == 1 ? 1 : -1;
}

bool slow_is_prime(long n)
{
    if (n < 2)
        return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Integer product_of(const Factorization& f)
{
    Integer n = f.sign;
    for (const auto& [p, e] : f.factors)
        for (unsigned k = 0; k < e; ++k)
            n *= p;
    return n;
}

std::vector<Place> small_places()
{
    std::vector<Place> out{Place::infinity()};
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul, 41ul, 43ul, 47ul})
        out.push_back(Place::finite(p));
    return out;
}

} // namespace

TEST_CASE("squarefree parts")
{
    CHECK(squarefree_part(18).rep() == 2);
    CHECK(squarefree_part(-9).rep() == -1);
    CHECK(squarefree_part(Rational(12, 49)).rep() == 3);
    CHECK(squarefree_part(Rational(-5, 8)).rep() == -10);
    CHECK_THROWS_AS(SquareClass::of(Rational(0)), std::domain_error);
}

TEST_CASE("square classes multiply as a group of exponent two")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dist(-300, 300);
    for (int k = 0; k < 200; ++k) {
        long a = dist(rng), b = dist(rng);
        if (a == 0 || b == 0)
            continue;
        const SquareClass ca = SquareClass::of(a), cb = SquareClass::of(b);
        CHECK(ca * cb == SquareClass::of(a * b));
        CHECK((ca * ca).is_trivial());
        CHECK(-ca == SquareClass::of(-a));
        // The stored primes are exactly the primes of the representative.
        Integer prod = 1;
        for (const auto& p : ca.primes())
            prod *= p;
        CHECK(prod == abs(ca.rep()));
    }
}

TEST_CASE("integer factorization")
{
    CHECK(factor_integer(1).factors.empty());
    const Factorization f = factor_integer(-2048);
    CHECK(f.sign == -1);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].prime == 2);
    CHECK(f.factors[0].exponent == 11);

    const Factorization g = factor_integer(17000051);
    REQUIRE(g.factors.size() == 2);
    CHECK(g.factors[0].prime == 17);
    CHECK(g.factors[1].prime == 1000003);
    CHECK_THROWS_AS(factor_integer(0), std::domain_error);

    // Semiprime beyond trial division range.
    const Integer p("1000000007"), q("998244353");
    const Factorization h = factor_integer(p * q * q);
    REQUIRE(h.factors.size() == 2);
    CHECK(h.factors[0].prime == q);
    CHECK(h.factors[0].exponent == 2);
    CHECK(h.factors[1].prime == p);
}

TEST_CASE("factorization reassembles and reports primes")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> dist(-2000000, 2000000);
    for (int k = 0; k < 300; ++k) {
        const long n = dist(rng);
        if (n == 0)
            continue;
        const Factorization f = factor_integer(n);
        CHECK(product_of(f) == n);
        for (std::size_t i = 0; i < f.factors.size(); ++i) {
            CHECK(slow_is_prime(f.factors[i].prime.get_si()));
            if (i > 0)
                CHECK(f.factors[i - 1].prime < f.factors[i].prime);
        }
    }
}

TEST_CASE("primality agrees with trial division")
{
    for (long n = -5; n < 5000; ++n)
        CHECK_MESSAGE(is_probable_prime(n) == slow_is_prime(n), n);
    CHECK(next_prime(13) == 17);
    CHECK(next_prime(1) == 2);
    CHECK(primes_up_to(30) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("legendre symbol")
{
    CHECK(legendre_symbol(-1, 5) == 1);
    CHECK(legendre_symbol(-1, 3) == -1);
    CHECK(legendre_symbol(15, 5) == 0);
    CHECK_THROWS_AS(legendre_symbol(3, 2), std::domain_error);
    for (long p : {3, 5, 7, 11, 13, 101, 997})
        for (long a = -60; a <= 60; ++a)
            CHECK(legendre_symbol(a, p) == euler_criterion(a, p));
}

TEST_CASE("places")
{
    const Place inf = Place::infinity();
    const Place two = Place::finite(2);
    CHECK(inf.is_infinite());
    CHECK(two.is_dyadic());
    CHECK(inf < two);
    CHECK(Place::finite(3) < Place::finite(5));
    CHECK(Place::parse("inf") == inf);
    CHECK(Place::parse("7") == Place::finite(7));
    CHECK(Place::finite(7).to_string() == "7");
    CHECK_THROWS_AS(Place::finite(9), std::domain_error);
    CHECK_THROWS(Place::parse("x"));
    const PlaceSet a{inf, two}, b{two, Place::finite(3)};
    CHECK(symmetric_difference(a, b) == PlaceSet{inf, Place::finite(3)});
}

TEST_CASE("hilbert symbol reference values")
{
    for (const Place& v : small_places())
        CHECK(hilbert_symbol(1, 7, v) == 0);
    CHECK(hilbert_symbol(-1, -1, Place::infinity()) == 1);
    CHECK(hilbert_symbol(-1, -1, Place::finite(2)) == 1);
    CHECK(hilbert_symbol(-1, -1, Place::finite(5)) == 0);
    CHECK(hilbert_symbol(2, 3, Place::finite(3)) == 1);  // 2 is not a square mod 3
    CHECK(hilbert_symbol(-1, -3, Place::finite(3)) == 1);
    CHECK(hilbert_symbol(-1, -3, Place::finite(2)) == 0);
    CHECK_THROWS_AS(hilbert_symbol(0, 3, Place::finite(3)), std::domain_error);
}

TEST_CASE("hilbert symbol agrees with solvability search")
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> dist(-50, 50);
    const auto places = small_places();
    int cases = 0;
    while (cases < 200) {
        const long a = dist(rng), b = dist(rng);
        if (a == 0 || b == 0)
            continue;
        ++cases;
        int total = 0;
        for (const Place& v : places) {
            const int h = hilbert_symbol(a, b, v);
            if (v.is_infinite() || v.prime() <= 13)
                CHECK_MESSAGE(h == hilbert_symbol_brute_force(a, b, v),
                              "(" << a << "," << b << ")_" << v.to_string());
            total += h;
        }
        // Every prime dividing 2ab is among the places above.
        CHECK(total % 2 == 0);
    }
}

TEST_CASE("hilbert symbol laws")
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> dist(-40, 40);
    const auto places = small_places();
    for (int k = 0; k < 150; ++k) {
        long a = dist(rng), b = dist(rng), c = dist(rng);
        if (a == 0 || b == 0 || c == 0)
            continue;
        for (const Place& v : places) {
            CHECK(hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v));
            CHECK((hilbert_symbol(a, b * c, v) == (hilbert_symbol(a, b, v) ^ hilbert_symbol(a, c, v))));
            CHECK(hilbert_symbol(a, -a, v) == 0);
            if (a != 1)
                CHECK(hilbert_symbol(a, 1 - a, v) == 0);
            // Scaling by squares changes nothing.
            CHECK(hilbert_symbol(Rational(a * 9, 4), b, v) == hilbert_symbol(a, b, v));
            CHECK(hilbert_symbol(SquareClass::of(a), SquareClass::of(b), v) == hilbert_symbol(a, b, v));
        }
    }
}

TEST_CASE("local squares")
{
    CHECK(is_local_square(SquareClass::of(-1), Place::finite(5)));
    CHECK_FALSE(is_local_square(SquareClass::of(-1), Place::finite(3)));
    CHECK_FALSE(is_local_square(SquareClass::of(-1), Place::infinity()));
    CHECK(is_local_square(SquareClass::of(17), Place::finite(2)));
    CHECK_FALSE(is_local_square(SquareClass::of(5), Place::finite(2)));
    CHECK_FALSE(is_local_square(SquareClass::of(3), Place::finite(3)));
}
