#include "maxtorus/error.hpp"
#include "maxtorus/oracle.hpp"
#include "maxtorus/selfcheck.hpp"

#include <doctest.h>

#include <random>

using namespace maxtorus;

namespace {

Component quad(long d) { return validate_component(QuadSpec{Integer(d)}); }
Component general(PolyQ f, PolyQ theta) { return validate_component(GeneralSpec{std::move(f), std::move(theta)}); }
EtaleAlgebra algebra(std::vector<Component> c) { return EtaleAlgebra(std::move(c)); }

QuadraticSpace diag(std::initializer_list<long> entries)
{
    std::vector<Rational> d;
    for (long e : entries)
        d.emplace_back(e);
    return QuadraticSpace(d);
}

// Power sums p_0..p_count of the roots of h by Newton's identities.
std::vector<Rational> power_sums(const PolyQ& h, std::size_t count)
{
    const PolyQ m = h.monic();
    const std::size_t n = static_cast<std::size_t>(m.degree());
    auto a = [&](std::size_t i) { return m[n - i]; }; // x^n + a_1 x^(n-1) + ...
    std::vector<Rational> p(count + 1, 0);
    p[0] = static_cast<long>(n);
    for (std::size_t k = 1; k <= count; ++k) {
        Rational s = 0;
        for (std::size_t i = 1; i < k && i <= n; ++i)
            s += a(i) * p[k - i];
        if (k <= n)
            s += static_cast<long>(k) * a(k);
        p[k] = -s;
    }
    return p;
}

// Gram matrix of Tr(alpha x sigma(y)) in the basis y_i^t, block by block.
RationalMatrix reference_gram(const EtaleAlgebra& e, const AlgebraElement& alpha)
{
    const std::size_t total = e.rank();
    RationalMatrix g(total, std::vector<Rational>(total, 0));
    std::size_t offset = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        const PolyQ& h = e[i].min_poly();
        const std::size_t n = e[i].degree();
        const PolyQ& a = alpha.parts[i];
        const auto p = power_sums(h, 2 * n + static_cast<std::size_t>(std::max(a.degree(), 0)));
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v) {
                Rational t = 0;
                for (std::size_t k = 0; k < a.coeffs().size(); ++k)
                    t += a[k] * p[k + u + v];
                g[offset + u][offset + v] = (v % 2 ? -t : t);
            }
        offset += n;
    }
    return g;
}

AlgebraElement random_element(const EtaleAlgebra& e, std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> dist(-5, 5);
    AlgebraElement x;
    for (const auto& c : e.components()) {
        std::vector<Rational> coeffs(c.degree());
        for (auto& v : coeffs)
            v = dist(rng);
        x.parts.emplace_back(coeffs);
    }
    return reduce(e, x);
}

} // namespace

TEST_CASE("involution")
{
    const EtaleAlgebra e = algebra({quad(-1)});
    AlgebraElement y{{PolyQ{0, 1}}};
    CHECK(sigma_apply(e, y) == AlgebraElement{{PolyQ{0, -1}}});
    AlgebraElement fixed = reduce(e, AlgebraElement{{PolyQ{1, 0, 1}}});
    CHECK(is_sigma_fixed(e, fixed));
    CHECK_FALSE(is_sigma_fixed(e, y));

    std::mt19937_64 rng(4);
    for (const auto& [name, alg] : algebra_pool())
        for (int k = 0; k < 10; ++k) {
            const AlgebraElement x = random_element(alg, rng);
            CHECK_MESSAGE(sigma_apply(alg, sigma_apply(alg, x)) == x, name);
            // x + sigma(x) is fixed.
            AlgebraElement s = x;
            const AlgebraElement sx = sigma_apply(alg, x);
            for (std::size_t i = 0; i < s.parts.size(); ++i)
                s.parts[i] += sx.parts[i];
            CHECK(is_sigma_fixed(alg, s));
        }
}

TEST_CASE("multiplication and units")
{
    const EtaleAlgebra e = algebra({quad(-1)});
    const AlgebraElement i{{PolyQ{0, 1}}};
    CHECK(multiply(e, i, i) == AlgebraElement{{PolyQ{-1}}});
    CHECK(is_unit(e, AlgebraElement{{PolyQ{1, 1}}}));
    CHECK_FALSE(is_unit(e, AlgebraElement{{PolyQ{}}}));
    const EtaleAlgebra g = algebra({general(PolyQ{-2, 0, 1}, PolyQ{0, 1})});
    // y^2 is sqrt2 in Q(2^(1/4)), so y^4 - 2 reduces to zero.
    CHECK_FALSE(is_unit(g, reduce(g, AlgebraElement{{PolyQ{-2, 0, 0, 0, 1}}})));
    CHECK(is_unit(g, fixed_element({{1, 1}})));
    CHECK(component_trace(PolyQ{1, 0, 1}, PolyQ{1}) == 2);
    CHECK(component_trace(PolyQ{-2, 0, 0, 0, 1}, PolyQ{0, 0, 0, 0, 1}) == 8);
}

TEST_CASE("trace forms on Q(i)")
{
    const EtaleAlgebra e = algebra({quad(-1)});
    const TraceFormResult one = trace_form(e, fixed_element({{1}}));
    CHECK(one.gram == RationalMatrix{{2, 0}, {0, 2}});
    CHECK(equivalent_over_q(one.diagonalized, diag({1, 1})));
    const TraceFormResult minus = trace_form(e, fixed_element({{-1}}));
    CHECK(minus.invariants.signature == Signature{0, 2});
    CHECK(equivalent_over_q(minus.diagonalized, diag({-2, -2})));

    CHECK_THROWS_AS(trace_form(e, AlgebraElement{{PolyQ{0, 1}}}), std::domain_error);
    CHECK_THROWS_AS(trace_form(e, AlgebraElement{{PolyQ{}}}), InputError);
}

TEST_CASE("trace form matches the power-sum reference")
{
    std::mt19937_64 rng(77);
    for (const auto& [name, e] : algebra_pool())
        for (int k = 0; k < 6; ++k) {
            const AlgebraElement alpha = random_fixed_unit(e, rng, 4);
            const TraceFormResult t = trace_form(e, alpha);
            CHECK_MESSAGE(t.gram == reference_gram(e, alpha), name);
            CHECK(invariants(diagonalize_gram(t.gram)) == t.invariants);
        }
}

TEST_CASE("trace forms have the algebra discriminant and predicted signature")
{
    std::mt19937_64 rng(78);
    const auto pool = algebra_pool();
    for (int k = 0; k < 60; ++k) {
        const auto& [name, e] = pool[k % pool.size()];
        const AlgebraElement alpha = random_fixed_unit(e, rng, 6);
        const TraceFormResult t = trace_form(e, alpha);
        CHECK_MESSAGE(t.invariants.disc == algebra_disc_class(e), name);
        CHECK_MESSAGE(t.invariants.signature == predicted_signature(e, alpha), name);
        // Signature shape: both halves congruent to rho mod 2.
        const unsigned rho = rho_infinity(e);
        CHECK(t.invariants.signature.positive >= rho);
        CHECK((t.invariants.signature.positive - rho) % 2 == 0);
        CHECK((t.invariants.signature.negative - rho) % 2 == 0);
    }
}

TEST_CASE("trace forms are hyperbolic where the algebra splits")
{
    std::mt19937_64 rng(79);
    const AnnotationSet none;
    for (const auto& [name, e] : algebra_pool())
        for (int k = 0; k < 4; ++k) {
            const AlgebraElement alpha = random_fixed_unit(e, rng, 5);
            const TraceFormResult t = trace_form(e, alpha);
            for (std::uint64_t p : primes_up_to(60)) {
                const Place v = Place::finite(p);
                if (algebra_split_at(e, v, none).is_split())
                    CHECK_MESSAGE(is_locally_hyperbolic(t.diagonalized, v), name << " at " << p);
            }
        }
}

TEST_CASE("enumeration")
{
    const auto qi = enumerate_alpha(algebra({quad(-1)}), 1);
    REQUIRE(qi.size() == 2);
    CHECK(qi[0] == fixed_element({{1}}));
    CHECK(qi[1] == fixed_element({{-1}}));
    CHECK(enumerate_alpha(algebra({quad(-1), quad(-3)}), 1).size() == 4);
    const EtaleAlgebra g = algebra({general(PolyQ{-2, 0, 1}, PolyQ{0, 1})});
    CHECK(enumerate_alpha(g, 1).size() == 8);
    // Height 2 on Q(i): 1, -1, 2, -2.
    const auto h2 = enumerate_alpha(algebra({quad(-1)}), 2);
    REQUIRE(h2.size() == 4);
    CHECK(h2[2] == fixed_element({{2}}));
    CHECK(h2[3] == fixed_element({{-2}}));
    for (const auto& a : enumerate_alpha(g, 3)) {
        CHECK(is_unit(g, a));
        CHECK(is_sigma_fixed(g, a));
    }
    // Early stop.
    int seen = 0;
    enumerate_alpha(g, 3, [&](const AlgebraElement&) { return ++seen < 5; });
    CHECK(seen == 5);
}

TEST_CASE("oracle search examples")
{
    const EtaleAlgebra qi = algebra({quad(-1)});
    const OracleResult found = oracle_search(qi, diag({1, 1}), 2);
    REQUIRE(found.found());
    CHECK(*found.alpha == fixed_element({{1}}));
    CHECK(equivalent_over_q(found.form->diagonalized, diag({1, 1})));

    const OracleResult missing = oracle_search(qi, diag({1, -1}), 5);
    CHECK_FALSE(missing.found());
    CHECK(missing.height == 5);

    const EtaleAlgebra two = algebra({quad(-1), quad(-3)});
    const OracleResult r = oracle_search(two, diag({1, 1, 1, 3}), 4);
    REQUIRE(r.found());
    CHECK(equivalent_over_q(r.form->diagonalized, diag({1, 1, 1, 3})));

    const EtaleAlgebra g = algebra({general(PolyQ{-2, 0, 1}, PolyQ{0, 1})});
    CHECK(oracle_search(g, diag({1, -1, -1, -2}), 3).found());

    CHECK_THROWS_AS(oracle_search(qi, diag({1, 1, 1, 1}), 2), InputError);
}
