#include "maxtorus/selfcheck.hpp"
#include "maxtorus/error.hpp"
#include "maxtorus/qform.hpp"
#include "maxtorus/real_roots.hpp"

#include <algorithm>
#include <map>

namespace maxtorus {

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

long nonzero(Rng& rng, long bound)
{
    long x = 0;
    while (x == 0)
        x = uniform(rng, -bound, bound);
    return x;
}

Rational random_rational(Rng& rng, long bound)
{
    Rational x(nonzero(rng, bound), uniform(rng, 1, bound));
    x.canonicalize();
    return x;
}

// a with every factor p^2 removed; a must be a nonzero integer.
Integer strip_squares(Integer a, const Integer& p)
{
    const Integer p2 = p * p;
    while (mpz_divisible_p(a.get_mpz_t(), p2.get_mpz_t()))
        a /= p2;
    return a;
}

std::uint64_t residue(const Integer& a, std::uint64_t m)
{
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), m);
    return r.get_ui();
}

// t in [0, p^3) read as an element of Z_p known modulo p^3, with a and b of
// valuation at most 1. Zero counts as a square (the congruence then lifts to
// an exact zero of the form).
bool odd_square_mod_cube(std::uint64_t t, std::uint64_t p)
{
    if (t == 0)
        return true;
    unsigned v = 0;
    while (t % p == 0) {
        t /= p;
        ++v;
    }
    if (v % 2)
        return false;
    return powmod(t % p, (p - 1) / 2, p) == 1;
}

int odd_brute_force(const Integer& a0, const Integer& b0, std::uint64_t p)
{
    const Integer P(p);
    const Integer a = strip_squares(a0, P), b = strip_squares(b0, P);
    const std::uint64_t m = p * p * p;
    const std::uint64_t ar = residue(a, m), br = residue(b, m);
    // x a unit: scale to x = 1.
    for (std::uint64_t y = 0; y < m; ++y) {
        const std::uint64_t y2 = y * y % m;
        if (odd_square_mod_cube((ar + br * y2) % m, p))
            return 0;
    }
    // x divisible by p, y a unit: scale to y = 1.
    for (std::uint64_t x = 0; x < m; x += p) {
        const std::uint64_t x2 = x * x % m;
        if (odd_square_mod_cube((ar * x2 + br) % m, p))
            return 0;
    }
    return 1;
}

int dyadic_brute_force(const Integer& a0, const Integer& b0)
{
    const Integer a = strip_squares(a0, Integer(2)), b = strip_squares(b0, Integer(2));
    const std::uint64_t ar = residue(a, 16), br = residue(b, 16);
    for (std::uint64_t x = 0; x < 16; ++x)
        for (std::uint64_t y = 0; y < 16; ++y)
            for (std::uint64_t z = 0; z < 16; ++z) {
                if (x % 2 == 0 && y % 2 == 0 && z % 2 == 0)
                    continue;
                if ((ar * x * x + br * y * y) % 16 == z * z % 16)
                    return 0;
            }
    return 1;
}

std::multiset<int> degree_multiset(const PolyFp& g, bool& squarefree)
{
    std::multiset<int> out;
    for (const auto& [factor, mult] : poly_factor_mod_p(g)) {
        if (mult != 1)
            squarefree = false;
        out.insert(factor.degree());
    }
    return out;
}

PolyFp expand(const std::vector<FpFactor>& factors, std::uint64_t p, std::uint64_t lc)
{
    PolyFp out(p, {lc});
    for (const auto& [g, m] : factors)
        for (unsigned k = 0; k < m; ++k)
            out = out * g;
    return out;
}

PolyFp random_poly_fp(Rng& rng, std::uint64_t p, int degree)
{
    std::vector<std::uint64_t> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c)
        x = static_cast<std::uint64_t>(uniform(rng, 0, static_cast<long>(p) - 1));
    if (c.back() == 0)
        c.back() = 1;
    return PolyFp(p, std::move(c));
}

PlaceSet candidate_places(const QuadraticSpace& q)
{
    PlaceSet out{Place::infinity(), Place::finite(2)};
    for (const auto& c : q.entry_classes())
        for (const auto& p : c.primes())
            out.insert(Place::finite(p));
    return out;
}

std::vector<Component> quadratic_components(std::initializer_list<long> ds)
{
    std::vector<Component> out;
    for (long d : ds)
        out.push_back(validate_component(QuadSpec{Integer(d)}));
    return out;
}

Component general(std::initializer_list<long> f, std::initializer_list<long> theta)
{
    return validate_component(GeneralSpec{PolyQ(f), PolyQ(theta)});
}

} // namespace

void CheckResult::fail(const std::string& message)
{
    ++failures;
    if (messages.size() < 8)
        messages.push_back(message);
}

int hilbert_symbol_brute_force(const Rational& a, const Rational& b, const Place& v)
{
    if (a == 0 || b == 0)
        throw std::domain_error("hilbert_symbol_brute_force: zero argument");
    if (v.is_infinite())
        return a < 0 && b < 0 ? 1 : 0;
    // Same square classes as a and b, as integers.
    const Integer ai = a.get_num() * a.get_den(), bi = b.get_num() * b.get_den();
    if (v.is_dyadic())
        return dyadic_brute_force(ai, bi);
    if (!v.prime().fits_ulong_p() || v.prime() > 2000)
        throw std::domain_error("hilbert_symbol_brute_force: prime too large for search");
    return odd_brute_force(ai, bi, v.prime().get_ui());
}

std::optional<SplitKind> split_brute_force(const Component& c, std::uint64_t p)
{
    if (p == 2)
        return std::nullopt;
    const Integer P(p);
    for (const auto* poly : {&c.base_poly(), &c.min_poly()})
        for (const auto& x : poly->coeffs())
            if (mpz_divisible_p(x.get_den_mpz_t(), P.get_mpz_t()))
                return std::nullopt;
    bool squarefree = true;
    const auto base = degree_multiset(PolyFp::reduce(p, c.base_poly().coeffs()), squarefree);
    const auto top = degree_multiset(PolyFp::reduce(p, c.min_poly().coeffs()), squarefree);
    if (!squarefree)
        return std::nullopt;
    std::multiset<int> doubled;
    for (int d : base) {
        doubled.insert(d);
        doubled.insert(d);
    }
    return top == doubled ? SplitKind::Split : SplitKind::NonSplit;
}

bool is_irreducible_mod_p(const PolyFp& g)
{
    const std::uint64_t p = g.modulus();
    const int d = g.degree();
    if (d < 1)
        return false;
    if (d == 1)
        return true;
    if (d <= 3) {
        for (std::uint64_t r = 0; r < p; ++r) {
            std::uint64_t acc = 0;
            for (int k = d; k >= 0; --k)
                acc = (mulmod(acc, r, p) + g[static_cast<std::size_t>(k)]) % p;
            if (acc == 0)
                return false;
        }
        return true;
    }
    const PolyFp x(p, {0, 1});
    auto frobenius_power = [&](int k) {
        Integer e;
        mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(k));
        return powmod(x, e, g);
    };
    if (frobenius_power(d) - x % g != PolyFp(p, {}))
        return false;
    for (const auto& q : factor_integer(Integer(d)).factors) {
        const PolyFp h = frobenius_power(d / static_cast<int>(q.prime.get_ui())) - x;
        if (gcd(h % g, g).degree() != 0)
            return false;
    }
    return true;
}

std::vector<PoolAlgebra> algebra_pool()
{
    std::vector<PoolAlgebra> out;
    auto add = [&](std::string name, std::vector<Component> comps) {
        out.push_back({std::move(name), EtaleAlgebra(std::move(comps))});
    };
    add("Q(i)", quadratic_components({-1}));
    add("Q(sqrt-3)", quadratic_components({-3}));
    add("Q(sqrt5)", quadratic_components({5}));
    add("Q(sqrt2)", quadratic_components({2}));
    add("Q(sqrt-7)", quadratic_components({-7}));
    add("Q(i) x Q(sqrt-3)", quadratic_components({-1, -3}));
    add("Q(sqrt-7) x Q(sqrt5)", quadratic_components({-7, 5}));
    add("F=Q[y]/(y^2-2), theta=y", {general({-2, 0, 1}, {0, 1})});
    add("F=Q[y]/(y^2-2), theta=-y-2 (CM)", {general({-2, 0, 1}, {-2, -1})});
    add("F=Q[y]/(y^3-2), theta=y", {general({-2, 0, 0, 1}, {0, 1})});
    {
        std::vector<Component> comps = quadratic_components({2});
        comps.push_back(general({-2, 0, 1}, {0, 1}));
        add("Q(sqrt2) x (y^2-2, y)", std::move(comps));
    }
    {
        std::vector<Component> comps = quadratic_components({-1});
        comps.push_back(general({-2, 0, 1}, {-2, -1}));
        add("Q(i) x CM quartic", std::move(comps));
    }
    return out;
}

AlgebraElement random_fixed_unit(const EtaleAlgebra& e, Rng& rng, long bound)
{
    for (;;) {
        std::vector<std::vector<long>> coeffs;
        for (const auto& c : e.components()) {
            std::vector<long> v(c.base_degree());
            for (auto& x : v)
                x = uniform(rng, -bound, bound);
            coeffs.push_back(std::move(v));
        }
        AlgebraElement a = fixed_element(coeffs);
        if (is_unit(e, a))
            return a;
    }
}

// ---------------------------------------------------------------------------

CheckResult check_hilbert_brute_force(std::size_t pairs, std::uint64_t seed)
{
    CheckResult r{"hilbert symbol vs brute force, product formula"};
    Rng rng(seed);
    const std::vector<std::uint64_t> small = primes_up_to(50);
    for (std::size_t k = 0; k < pairs; ++k) {
        const Rational a(nonzero(rng, 50)), b(nonzero(rng, 50));
        PlaceSet places{Place::infinity(), Place::finite(2)};
        for (const Integer& n : {a.get_num(), b.get_num()})
            for (const auto& f : factor_integer(n).factors)
                places.insert(Place::finite(f.prime));
        int total = 0;
        for (const Place& v : places) {
            const int formula = hilbert_symbol(a, b, v);
            total += formula;
            if (formula != hilbert_symbol_brute_force(a, b, v))
                r.fail("(" + to_string(a) + ", " + to_string(b) + ")_" + v.to_string());
        }
        // A place away from 2ab, where the symbol vanishes.
        const Place outside = Place::finite(small[static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(small.size()) - 1))]);
        if (!places.count(outside) && hilbert_symbol_brute_force(a, b, outside) != 0)
            r.fail("(" + to_string(a) + ", " + to_string(b) + ")_" + outside.to_string() + " nonzero");
        if (total % 2)
            r.fail("product formula for (" + to_string(a) + ", " + to_string(b) + ")");
        ++r.cases;
    }
    return r;
}

CheckResult check_hilbert_bilinear(std::size_t triples, std::uint64_t seed)
{
    CheckResult r{"hilbert symbol bilinearity and symmetry"};
    Rng rng(seed);
    for (std::size_t k = 0; k < triples; ++k) {
        const Rational a = random_rational(rng, 60), b = random_rational(rng, 60), c = random_rational(rng, 60);
        std::vector<Place> places{Place::infinity(), Place::finite(2)};
        for (const Rational* x : {&a, &b, &c}) {
            const SquareClass cls = SquareClass::of(*x);
            for (const auto& p : cls.primes())
                places.push_back(Place::finite(p));
        }
        const Place v = places[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(places.size()) - 1))];
        if (hilbert_symbol(a, b * c, v) != (hilbert_symbol(a, b, v) ^ hilbert_symbol(a, c, v)))
            r.fail("bilinearity at " + v.to_string() + " for " + to_string(a) + ", " + to_string(b) + ", " + to_string(c));
        if (hilbert_symbol(a, b, v) != hilbert_symbol(b, a, v))
            r.fail("symmetry at " + v.to_string());
        ++r.cases;
    }
    return r;
}

CheckResult check_square_classes(std::size_t cases, std::uint64_t seed)
{
    CheckResult r{"square classes"};
    Rng rng(seed);
    for (std::size_t k = 0; k < cases; ++k) {
        const Rational x = random_rational(rng, 1000), t = random_rational(rng, 50);
        const SquareClass c = squarefree_part(x);
        if (!(squarefree_part(x * t * t) == c))
            r.fail("class changes under square scaling: " + to_string(x));
        const Rational q = x / Rational(c.rep());
        if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
            r.fail("x / rep is not a square: " + to_string(x));
        for (const auto& f : factor_integer(c.rep()).factors)
            if (f.exponent != 1)
                r.fail("representative not squarefree: " + c.rep().get_str());
        ++r.cases;
    }
    return r;
}

CheckResult check_factor_mod_p(std::size_t cases, std::uint64_t seed)
{
    CheckResult r{"factorization over F_p"};
    Rng rng(seed);
    const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13, 101, 1009, 65537};
    for (std::size_t k = 0; k < cases; ++k) {
        const std::uint64_t p = primes[k % std::size(primes)];
        PolyFp f = random_poly_fp(rng, p, static_cast<int>(uniform(rng, 1, 8)));
        if (k % 3 == 0) // force repeated factors
            f = f * random_poly_fp(rng, p, static_cast<int>(uniform(rng, 1, 2))) * f;
        const auto factors = poly_factor_mod_p(f);
        if (expand(factors, p, f.lc()) != f)
            r.fail("re-expansion differs for " + f.to_string());
        for (std::size_t i = 0; i < factors.size(); ++i) {
            const PolyFp& g = factors[i].factor;
            if (g.lc() != 1 || !is_irreducible_mod_p(g))
                r.fail("factor " + g.to_string() + " of " + f.to_string() + " is not monic irreducible");
            if (i > 0 && factors[i - 1].factor.degree() > g.degree())
                r.fail("factors out of order for " + f.to_string());
        }
        ++r.cases;
    }
    return r;
}

CheckResult check_real_roots(std::size_t cases, std::uint64_t seed)
{
    CheckResult r{"real root isolation"};
    Rng rng(seed);
    for (std::size_t k = 0; k < cases; ++k) {
        std::set<Rational> roots;
        PolyQ f = PolyQ::constant(1);
        const long linear = uniform(rng, 0, 4), quadratic = uniform(rng, 0, 2);
        while (static_cast<long>(roots.size()) < linear) {
            Rational root(uniform(rng, -40, 40), uniform(rng, 1, 6));
            root.canonicalize();
            if (roots.insert(root).second)
                f = f * PolyQ(std::vector<Rational>{-root, Rational(1)});
        }
        for (long q = 0; q < quadratic; ++q)
            f = f * PolyQ(std::vector<Rational>{Rational(uniform(rng, 1, 30)), Rational(0), Rational(1)});
        if (f.degree() < 1)
            continue;
        RealRootIsolator iso(f);
        ++r.cases;
        if (iso.roots().size() != roots.size())
            r.fail("root count for " + f.to_string());
        if (iso.variations_at_minus_infinity() - iso.variations_at_plus_infinity() != roots.size())
            r.fail("Sturm count at infinity for " + f.to_string());
        if (static_cast<int>(roots.size()) != f.degree() - 2 * quadratic)
            r.fail("degree bookkeeping for " + f.to_string());
        auto it = roots.begin();
        for (std::size_t i = 0; i < iso.roots().size() && it != roots.end(); ++i, ++it) {
            iso.refine(i, Rational(1, 1000));
            const RootInterval& in = iso.roots()[i];
            if (!(in.lo < *it && *it <= in.hi) || in.hi - in.lo > Rational(1, 1000))
                r.fail("interval " + std::to_string(i) + " misses root " + to_string(*it));
            if (i > 0 && iso.roots()[i - 1].hi > in.lo)
                r.fail("overlapping intervals for " + f.to_string());
        }
    }
    return r;
}

CheckResult check_qform_laws(std::size_t cases, std::uint64_t seed)
{
    CheckResult r{"quadratic form invariants"};
    Rng rng(seed);
    auto random_form = [&](std::size_t dim) {
        std::vector<Rational> d;
        for (std::size_t i = 0; i < dim; ++i)
            d.push_back(random_rational(rng, 20));
        return QuadraticSpace(std::move(d));
    };
    for (std::size_t k = 0; k < cases; ++k) {
        const QuadraticSpace q = random_form(static_cast<std::size_t>(uniform(rng, 1, 6)));
        const QuadraticSpace q2 = random_form(static_cast<std::size_t>(uniform(rng, 1, 4)));
        const QFInvariants inv = invariants(q), inv2 = invariants(q2);
        ++r.cases;
        if (inv.hasse_support.size() % 2)
            r.fail("odd Hasse support");
        if (!(inv.disc == disc_from_det(inv.det, inv.dim)))
            r.fail("disc/det relation");
        if (inv.signature.positive + inv.signature.negative != inv.dim)
            r.fail("signature size");

        PlaceSet pairing;
        for (const Place& v : candidate_places(q + q2))
            if (hilbert_symbol(inv.det, inv2.det, v))
                pairing.insert(v);
        const PlaceSet expected = symmetric_difference(symmetric_difference(inv.hasse_support, inv2.hasse_support), pairing);
        if (invariants(q + q2).hasse_support != expected)
            r.fail("orthogonal sum law");

        // A congruent Gram matrix U^T diag(q) U with U unimodular.
        const std::size_t m = q.dim();
        RationalMatrix u(m, std::vector<Rational>(m, Rational(0)));
        for (std::size_t i = 0; i < m; ++i) {
            u[i][i] = 1;
            for (std::size_t j = i + 1; j < m; ++j)
                u[i][j] = uniform(rng, -3, 3);
        }
        if (m > 1)
            std::swap(u[0], u[m - 1]);
        RationalMatrix g(m, std::vector<Rational>(m, Rational(0)));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t t = 0; t < m; ++t)
                    g[i][j] += u[t][i] * q.diagonal()[t] * u[t][j];
        if (!equivalent_over_q(diagonalize_gram(g), q))
            r.fail("congruence changes the class");

        std::vector<Rational> scaled = q.diagonal();
        const Rational t = random_rational(rng, 9);
        scaled[0] *= t * t;
        if (!equivalent_over_q(QuadraticSpace(scaled), q))
            r.fail("square scaling changes the class");
    }
    return r;
}

CheckResult check_splitting(std::size_t cases, std::uint64_t seed)
{
    CheckResult r{"component splitting vs residue degrees"};
    Rng rng(seed);
    std::vector<Component> comps;
    for (const auto& entry : algebra_pool())
        for (const auto& c : entry.algebra.components())
            comps.push_back(c);
    for (long d : {-1, -2, -3, 2, 3, 5, -5, 6, -6, 7, 10, -11, 13})
        comps.push_back(validate_component(QuadSpec{Integer(d)}));
    comps.push_back(general({-2, 0, 0, 0, 1}, {0, 1}));
    comps.push_back(general({1, 1, 1}, {2, 1}));
    comps.push_back(general({-3, 0, 1}, {1, 1}));
    const std::vector<std::uint64_t> primes = primes_up_to(400);
    const AnnotationSet none;
    std::size_t attempts = 0;
    while (r.cases < cases && attempts++ < 50 * cases) {
        const Component& c = comps[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(comps.size()) - 1))];
        const std::uint64_t p = primes[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(primes.size()) - 1))];
        const auto expected = split_brute_force(c, p);
        if (!expected)
            continue;
        ++r.cases;
        const SplitStatus got = component_split_at(c, 0, Integer(p), none);
        if (got.kind != *expected)
            r.fail(c.describe() + " at " + std::to_string(p) + ": " + to_string(got.kind) + " vs "
                   + to_string(*expected));
    }
    return r;
}

CheckResult check_trace_form_disc(std::size_t cases, std::uint64_t seed)
{
    CheckResult r{"trace form discriminant equals algebra discriminant"};
    Rng rng(seed);
    const auto pool = algebra_pool();
    for (std::size_t k = 0; k < cases; ++k) {
        const auto& [name, e] = pool[k % pool.size()];
        const AlgebraElement a = random_fixed_unit(e, rng, 5);
        const TraceFormResult t = trace_form(e, a);
        ++r.cases;
        if (!(t.invariants.disc == algebra_disc_class(e)))
            r.fail(name + ": disc " + t.invariants.disc.rep().get_str() + " vs " + algebra_disc_class(e).rep().get_str());
    }
    return r;
}

CheckResult check_trace_form_signature(std::size_t cases, std::uint64_t seed)
{
    CheckResult r{"trace form signature equals (2r+rho, 2s+rho)"};
    Rng rng(seed);
    const auto pool = algebra_pool();
    for (std::size_t k = 0; k < cases; ++k) {
        const auto& [name, e] = pool[k % pool.size()];
        const AlgebraElement a = random_fixed_unit(e, rng, 5);
        const Signature got = trace_form(e, a).invariants.signature, want = predicted_signature(e, a);
        ++r.cases;
        if (!(got == want))
            r.fail(name + ": signature (" + std::to_string(got.positive) + "," + std::to_string(got.negative)
                   + ") vs (" + std::to_string(want.positive) + "," + std::to_string(want.negative) + ")");
    }
    return r;
}

CheckResult check_split_places_hyperbolic(std::size_t cases, std::uint64_t seed)
{
    CheckResult r{"trace forms are hyperbolic at split places"};
    Rng rng(seed);
    const auto pool = algebra_pool();
    const AnnotationSet none;
    for (std::size_t k = 0; k < cases; ++k) {
        const auto& [name, e] = pool[k % pool.size()];
        const AlgebraElement a = random_fixed_unit(e, rng, 5);
        const QuadraticSpace& q = trace_form(e, a).diagonalized;
        // Candidate bad places of q_alpha plus a few small primes.
        PlaceSet places = candidate_places(q);
        for (std::uint64_t p : primes_up_to(30))
            places.insert(Place::finite(p));
        for (const Place& v : places) {
            if (!algebra_split_at(e, v, none).is_split())
                continue;
            ++r.cases;
            if (local_hasse_bit(q, v) != hyperbolic_hasse_bit(q.dim(), v) || !is_locally_hyperbolic(q, v))
                r.fail(name + ": not hyperbolic at split place " + v.to_string());
        }
    }
    return r;
}

CheckResult check_both_local_bits(unsigned height)
{
    CheckResult r{"both local Hasse bits reachable at non-split places"};
    std::vector<Component> comps = quadratic_components({-1, -2, -3, 2, 3, 5, -5, -7, 6, -6});
    comps.push_back(general({-2, 0, 1}, {0, 1}));
    comps.push_back(general({-2, 0, 1}, {-2, -1}));
    const AnnotationSet none;
    for (const Component& c : comps) {
        const EtaleAlgebra e({c});
        std::vector<Place> targets;
        for (std::uint64_t p : primes_up_to(std::min<std::uint64_t>(height, 7)))
            if (component_split_at(c, 0, Integer(p), none).is_nonsplit())
                targets.push_back(Place::finite(p));
        if (targets.empty())
            continue;
        std::map<Place, std::set<int>> seen;
        enumerate_alpha(e, height, [&](const AlgebraElement& a) {
            const QuadraticSpace q = trace_form(e, a).diagonalized;
            bool done = true;
            for (const Place& v : targets) {
                seen[v].insert(local_hasse_bit(q, v));
                done = done && seen[v].size() == 2;
            }
            return !done;
        });
        for (const Place& v : targets) {
            ++r.cases;
            if (seen[v].size() != 2)
                r.fail(c.describe() + " at " + v.to_string() + ": only one bit reached");
        }
    }
    return r;
}

std::vector<CheckResult> run_selftest(std::uint64_t seed)
{
    return {check_hilbert_brute_force(1000, seed),
            check_hilbert_bilinear(500, seed + 1),
            check_square_classes(200, seed + 2),
            check_factor_mod_p(200, seed + 3),
            check_real_roots(100, seed + 4),
            check_qform_laws(200, seed + 5),
            check_splitting(200, seed + 6),
            check_trace_form_disc(100, seed + 7),
            check_trace_form_signature(100, seed + 8),
            check_split_places_hyperbolic(100, seed + 9),
            check_both_local_bits(7)};
}

} // namespace maxtorus
