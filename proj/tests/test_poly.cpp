#include "maxtorus/poly.hpp"
#include "maxtorus/poly_fp.hpp"
#include "maxtorus/real_roots.hpp"
#include "maxtorus/selfcheck.hpp"

#include <doctest.h>

#include <random>

using namespace maxtorus;

namespace {

// Determinant by fraction-exact Gaussian elimination.
Rational determinant(std::vector<std::vector<Rational>> m)
{
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k)
                m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

Rational sylvester_resultant(const PolyQ& f, const PolyQ& g)
{
    const int m = f.degree(), n = g.degree();
    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, 0));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k)
            s[r][r + k] = f[static_cast<std::size_t>(m - k)];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k)
            s[n + r][r + k] = g[static_cast<std::size_t>(n - k)];
    return determinant(s);
}

PolyQ random_poly(std::mt19937_64& rng, int degree, long bound)
{
    std::uniform_int_distribution<long> dist(-bound, bound);
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c)
        x = dist(rng);
    if (c.back() == 0)
        c.back() = 1;
    return PolyQ(c);
}

PolyFp expand(const std::vector<FpFactor>& factors, std::uint64_t p)
{
    PolyFp out(p, {1});
    for (const auto& f : factors)
        for (unsigned k = 0; k < f.multiplicity; ++k)
            out = out * f.factor;
    return out;
}

} // namespace

TEST_CASE("polynomial arithmetic")
{
    const PolyQ f{-2, 0, 1};
    CHECK(f.degree() == 2);
    CHECK(f.eval(3) == 7);
    CHECK(f.derivative() == PolyQ{0, 2});
    CHECK(f.in_square() == PolyQ{-2, 0, 0, 0, 1});
    CHECK(PolyQ{1, 0, 3}.is_even());
    CHECK_FALSE(f.derivative().is_even());
    CHECK(PolyQ().is_zero());
    CHECK(PolyQ().degree() == -1);
    CHECK(f.to_string() == "x^2 - 2");

    std::mt19937_64 rng(5);
    for (int k = 0; k < 100; ++k) {
        const PolyQ a = random_poly(rng, 5, 9), b = random_poly(rng, 3, 9);
        const auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
        const PolyQ g = gcd(a * b, b * b);
        CHECK(g == b.monic());
    }
    CHECK_THROWS_AS(divmod(f, PolyQ()), std::domain_error);
}

TEST_CASE("squarefree kernel")
{
    const PolyQ a{1, 1}, b{-2, 0, 1};
    CHECK(squarefree_kernel(a * a * b) == (a * b).monic());
}

TEST_CASE("discriminants")
{
    CHECK(poly_discriminant(PolyQ{1, 0, 1}) == -4);
    CHECK(poly_discriminant(PolyQ{-5, 0, 1}) == 20);
    CHECK(poly_discriminant(PolyQ{-2, 0, 0, 0, 1}) == -2048);
    CHECK(poly_discriminant(PolyQ{1, 1, 1}) == -3);
    // Cubic: -4p^3 - 27q^2 for x^3 + p x + q.
    CHECK(poly_discriminant(PolyQ{-2, 0, 0, 1}) == -108);
    CHECK(poly_discriminant(PolyQ{1, -1, 0, 1}) == -23);
}

TEST_CASE("resultant agrees with the Sylvester determinant")
{
    std::mt19937_64 rng(17);
    for (int k = 0; k < 100; ++k) {
        const PolyQ f = random_poly(rng, 1 + static_cast<int>(rng() % 5), 7);
        const PolyQ g = random_poly(rng, 1 + static_cast<int>(rng() % 4), 7);
        CHECK(resultant(f, g) == sylvester_resultant(f, g));
    }
    // Common root gives zero.
    CHECK(resultant(PolyQ{-1, 0, 1}, PolyQ{-1, 1}) == 0);
}

TEST_CASE("bivariate resultant eliminates y")
{
    // Res_y(y^2 - 2, x^2 - y) = x^4 - 2.
    const BivariatePolyQ g{{PolyQ{0, 0, 1}, PolyQ{-1}}};
    CHECK(resultant_y(PolyQ{-2, 0, 1}, g) == PolyQ{-2, 0, 0, 0, 1});

    // Res_y(y^2 - 2, x^2 - (-y - 2)) = (x^2 + 2)^2 - 2.
    const BivariatePolyQ h{{PolyQ{2, 0, 1}, PolyQ{1}}};
    CHECK(resultant_y(PolyQ{-2, 0, 1}, h) == PolyQ{2, 0, 4, 0, 1});

    // Specializing x reproduces the univariate resultant.
    std::mt19937_64 rng(3);
    for (int k = 0; k < 20; ++k) {
        const PolyQ f = random_poly(rng, 3, 5);
        const PolyQ theta = random_poly(rng, 2, 5);
        const BivariatePolyQ b{{PolyQ{0, 0, 1} - PolyQ::constant(theta[0]), PolyQ::constant(-theta[1]),
                                PolyQ::constant(-theta[2])}};
        const PolyQ r = resultant_y(f, b);
        for (long x = -3; x <= 3; ++x) {
            const PolyQ spec = PolyQ::constant(Rational(x * x)) - theta;
            CHECK(r.eval(x) == resultant(f, spec));
        }
    }
}

TEST_CASE("irreducibility over Q")
{
    CHECK(is_irreducible_over_q(PolyQ{-2, 0, 0, 0, 1}));
    CHECK(is_irreducible_over_q(PolyQ{1, 0, 1}));
    CHECK_FALSE(is_irreducible_over_q(PolyQ{-4, 0, 1}));
    // x^4 + 4 = (x^2 + 2x + 2)(x^2 - 2x + 2): no rational root.
    CHECK_FALSE(is_irreducible_over_q(PolyQ{4, 0, 0, 0, 1}));
    // x^4 + 1 is reducible modulo every prime but irreducible over Q.
    CHECK(is_irreducible_over_q(PolyQ{1, 0, 0, 0, 1}));
    CHECK_FALSE(is_irreducible_over_q(PolyQ{1, 0, 1} * PolyQ{-3, 0, 0, 1}));
    CHECK(is_irreducible_over_q(PolyQ{2, 0, 4, 0, 1}));
}

TEST_CASE("factorization mod p")
{
    const auto f5 = poly_factor_mod_p(PolyFp(5, {1, 0, 1}));
    REQUIRE(f5.size() == 2);
    CHECK(f5[0].factor == PolyFp(5, {2, 1}));
    CHECK(f5[1].factor == PolyFp(5, {3, 1}));
    const auto f3 = poly_factor_mod_p(PolyFp(3, {1, 0, 1}));
    REQUIRE(f3.size() == 1);
    CHECK(f3[0].factor.degree() == 2);

    const PolyFp q(7, {5, 0, 0, 0, 1}); // x^4 - 2
    const auto f7 = poly_factor_mod_p(q);
    int degrees = 0;
    for (const auto& f : f7)
        degrees += f.factor.degree() * static_cast<int>(f.multiplicity);
    CHECK(degrees == 4);
    CHECK(expand(f7, 7) == q);
}

TEST_CASE("factorization mod p re-expands to the input")
{
    std::mt19937_64 rng(41);
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 13ull, 101ull, 65537ull}) {
        for (int k = 0; k < 40; ++k) {
            std::vector<std::uint64_t> c(1 + rng() % 9);
            for (auto& x : c)
                x = rng() % p;
            c.push_back(1);
            const PolyFp f(p, c);
            const auto factors = poly_factor_mod_p(f);
            CHECK(expand(factors, p) == f);
            for (const auto& fac : factors) {
                CHECK(fac.factor.lc() == 1);
                CHECK(is_irreducible_mod_p(fac.factor));
            }
        }
    }
}

TEST_CASE("squares in finite fields")
{
    const PolyFp lin7(7, {0, 1});
    CHECK(ff_is_square(PolyFp(7, {4}), lin7));
    CHECK_FALSE(ff_is_square(PolyFp(7, {3}), lin7));
    CHECK(ff_is_square(PolyFp(3, {0, 1}), PolyFp(3, {1, 0, 1})));
    // Every element of F_p is a square in F_{p^2}.
    CHECK(ff_is_square(PolyFp(3, {2}), PolyFp(3, {1, 0, 1})));
    CHECK_THROWS_AS(ff_is_square(PolyFp(7, {0}), lin7), std::domain_error);

    for (std::uint64_t p : {3ull, 5ull, 11ull, 13ull}) {
        std::vector<bool> square(p, false);
        for (std::uint64_t x = 1; x < p; ++x)
            square[x * x % p] = true;
        for (std::uint64_t a = 1; a < p; ++a)
            CHECK(ff_is_square(PolyFp(p, {a}), PolyFp(p, {0, 1})) == square[a]);
    }
}

TEST_CASE("real root isolation")
{
    const auto r2 = sturm_real_roots(PolyQ{-2, 0, 1});
    REQUIRE(r2.size() == 2);
    CHECK(r2[0].lo < Rational(-1414, 1000));
    CHECK(r2[0].hi >= Rational(-1415, 1000));
    CHECK(r2[1].lo < Rational(1415, 1000));
    CHECK(r2[1].hi >= Rational(1414, 1000));
    CHECK(sturm_real_roots(PolyQ{1, 0, 1}).empty());
    CHECK(sturm_real_roots(PolyQ{-2, 0, 0, 0, 1}).size() == 2);

    // Roots 1..5 with multiplicities are reported once each.
    PolyQ f{1};
    for (long r = 1; r <= 5; ++r)
        f = f * PolyQ{-r, 1};
    f = f * PolyQ{-3, 1};
    RealRootIsolator iso(f);
    REQUIRE(iso.roots().size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        const Rational root = static_cast<long>(i) + 1;
        CHECK(iso.roots()[i].lo < root);
        CHECK(iso.roots()[i].hi >= root);
    }
    CHECK(iso.count_in(Rational(3, 2), Rational(7, 2)) == 2);
    // Sign of x - 5/2 at each root.
    const PolyQ g = PolyQ{-5, 2};
    CHECK(iso.sign_at(1, g) == -1);
    CHECK(iso.sign_at(2, g) == 1);
    iso.refine(4, Rational(1, 1000));
    CHECK(iso.roots()[4].hi - iso.roots()[4].lo <= Rational(1, 1000));
}
