#include "maxtorus/engine.hpp"
#include "maxtorus/error.hpp"
#include "maxtorus/report.hpp"
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

const Place kInf = Place::infinity();
Place P(unsigned long p) { return Place::finite(p); }
const AnnotationSet kNone;

bool has_note(const DecisionReport& r, const std::string& fragment)
{
    for (const auto& n : r.notes)
        if (n.find(fragment) != std::string::npos)
            return true;
    return false;
}

QuadraticSpace random_form(std::mt19937_64& rng, unsigned dim)
{
    std::uniform_int_distribution<long> entry(-10, 10);
    std::vector<Rational> d(dim);
    for (auto& x : d)
        do
            x = entry(rng);
        while (x == 0);
    return QuadraticSpace(d);
}

} // namespace

TEST_CASE("Q(i) with the sum of two squares is realizable")
{
    const EtaleAlgebra e = algebra({quad(-1)});
    const DecisionReport r = decide(e, diag({1, 1}), kNone);
    CHECK(r.verdict == Verdict::Realizable);
    CHECK(r.fast_path.kind == FastPathKind::CM);
    CHECK(r.summary.sigma == PlaceSet{kInf, P(2)});
    // w(<1,1>) and w(h_2) are both trivial.
    CHECK(r.summary.deviation.empty());
    CHECK(r.summary.pairing.empty());
    REQUIRE(r.baseline);
    CHECK(r.baseline->infinity_signatures == std::vector<Signature>{{2, 0}});
    CHECK(r.baseline->bits.at(P(2)) == std::vector<int>{0});
    CHECK(r.parity == std::vector<int>{0});
}

TEST_CASE("Q(i) with the hyperbolic plane fails at the real place")
{
    const DecisionReport r = decide(algebra({quad(-1)}), diag({1, -1}), kNone);
    CHECK(r.verdict == Verdict::LocallyFails);
    REQUIRE(r.local.failing_condition);
    CHECK(*r.local.failing_condition == LocalCondition::Signature);
    REQUIRE(r.local.failing_place);
    CHECK(*r.local.failing_place == kInf);
    CHECK_FALSE(r.local.signature_ok);
}

TEST_CASE("Q(i) x Q(sqrt-3) examples")
{
    const EtaleAlgebra e = algebra({quad(-1), quad(-3)});

    const DecisionReport bad = decide(e, diag({1, 1, 1, 1}), kNone);
    CHECK(bad.verdict == Verdict::LocallyFails);
    CHECK_FALSE(bad.local.disc_ok);
    REQUIRE(bad.local.failing_condition);
    CHECK(*bad.local.failing_condition == LocalCondition::Disc);
    CHECK_FALSE(bad.local.failing_place);

    const QuadraticSpace q = diag({1, 1, 1, 3});
    const LocalCheckResult local = check_local(e, q, kNone);
    CHECK(local.passes());
    CHECK(local.disc_ok);
    CHECK(local.hyperbolicity_ok == true);
    CHECK(local.signature_ok);

    const DecisionReport good = decide(e, q, kNone);
    CHECK(good.verdict == Verdict::Realizable);
    CHECK(good.fast_path.kind == FastPathKind::CM);
    CHECK(good.summary.deviation == PlaceSet{kInf, P(2)});
    REQUIRE(good.baseline);
    CHECK(good.baseline->infinity_signatures == std::vector<Signature>{{2, 0}, {2, 0}});
    CHECK((good.parity[0] + good.parity[1]) % 2 == 0);
    REQUIRE(good.graph);
    REQUIRE(good.graph->edges.size() == 1);
    CHECK(good.graph->edges[0].witness == kInf);
}

TEST_CASE("real quadratic examples")
{
    const EtaleAlgebra e = algebra({quad(5)});
    // rho = 1 admits signature (1,1), but disc <1,-1> = 1 differs from disc E = 5.
    const DecisionReport r = decide(e, diag({1, -1}), kNone);
    CHECK(r.local.signature_ok);
    CHECK(r.verdict == Verdict::LocallyFails);
    REQUIRE(r.local.failing_condition);
    CHECK(*r.local.failing_condition == LocalCondition::Disc);

    // <1,-5> has the right discriminant and signature.
    CHECK(decide(e, diag({1, -5}), kNone).verdict == Verdict::Realizable);
    // Definite forms are excluded by rho = 1.
    const DecisionReport def = decide(e, diag({1, 5}), kNone);
    CHECK(def.verdict == Verdict::LocallyFails);
}

TEST_CASE("general quartic carries the weighted count note")
{
    const EtaleAlgebra e = algebra({general(PolyQ{-2, 0, 1}, PolyQ{0, 1})});
    const DecisionReport r = decide(e, diag({1, -1, -1, -2}), kNone);
    CHECK(r.verdict == Verdict::Realizable);
    CHECK(r.summary.rho == 1);
    CHECK(r.summary.ramified == 1);
    CHECK(has_note(r, "degree-weighted"));

    const DecisionReport cubic = decide(algebra({general(PolyQ{-2, 0, 0, 1}, PolyQ{0, 1})}),
                                        diag({1, 1, 1, -1, -1, -2}), kNone);
    CHECK(has_note(cubic, "(differs)"));
    // Quadratic-only algebras carry no such note.
    CHECK_FALSE(has_note(decide(algebra({quad(-1)}), diag({1, 1}), kNone), "degree-weighted"));
}

TEST_CASE("dyadic indeterminacy blocks and annotations settle it")
{
    const EtaleAlgebra e = algebra({general(PolyQ{-2, 0, 1}, PolyQ{0, 1})});
    const QuadraticSpace q = diag({1, 1, 1, -2});
    const DecisionReport r = decide(e, q, kNone);
    CHECK(r.verdict == Verdict::Inconclusive);
    CHECK(r.local.blocked());
    REQUIRE(r.needed_annotations.size() == 1);
    CHECK(r.needed_annotations[0].component == 0);
    CHECK(r.needed_annotations[0].prime == 2);
    CHECK_FALSE(r.inconclusive_reasons.empty());

    // x^4 - 2 is totally ramified at 2, so the place of F above 2 does not split.
    AnnotationSet ann;
    ann.add(0, 2, SplitKind::NonSplit);
    const DecisionReport settled = decide(e, q, ann);
    CHECK(settled.verdict != Verdict::Inconclusive);
    CHECK(settled.needed_annotations.empty());
}

TEST_CASE("bad place set")
{
    CHECK(sigma_bad_set(algebra({quad(-1)}), diag({1, 1})) == PlaceSet{kInf, P(2)});
    CHECK(sigma_bad_set(algebra({quad(-1)}), diag({1, -1})) == PlaceSet{kInf, P(2)});
    const PlaceSet s = sigma_bad_set(algebra({quad(-1), quad(-1)}), diag({1, 1, 7, 7}));
    CHECK(s.count(kInf));
    CHECK(s.count(P(2)));
    CHECK(s.count(P(7)));
}

TEST_CASE("achievable local data")
{
    const EtaleAlgebra e = algebra({quad(-1)});
    const SplitOracle oracle(e, kNone);
    CHECK(achievable_bits(oracle, 0, P(5)) == std::set<int>{0});
    CHECK(achievable_bits(oracle, 0, P(3)) == std::set<int>{0, 1});
    CHECK(achievable_signatures(e[0]) == std::vector<Signature>{{2, 0}, {0, 2}});
    CHECK(achievable_signatures(quad(5)) == std::vector<Signature>{{1, 1}});

    const EtaleAlgebra g = algebra({general(PolyQ{-2, 0, 1}, PolyQ{0, 1})});
    const SplitOracle go(g, kNone);
    CHECK_FALSE(achievable_bits(go, 0, P(2)).has_value());
    const auto sigs = achievable_signatures(g[0]);
    CHECK(sigs == std::vector<Signature>{{3, 1}, {1, 3}});
}

TEST_CASE("baseline construction")
{
    const EtaleAlgebra e = algebra({quad(-1), quad(-3)});
    const SplitOracle oracle(e, kNone);
    const PairSummary s = summarize(e, diag({1, 1, 1, 3}));
    const BaselineOutcome b = construct_baseline(s, oracle);
    REQUIRE(b.baseline);
    CHECK(b.needed.empty());
    CHECK(b.baseline->sigma_set == s.sigma);
    for (const auto& [v, bits] : b.baseline->bits) {
        int sum = s.pairing.count(v) ? 1 : 0;
        for (int x : bits)
            sum += x;
        CHECK(sum % 2 == (s.form.hasse_support.count(v) ? 1 : 0));
    }
    const auto parity = parity_vector(*b.baseline);
    CHECK((parity[0] + parity[1]) % 2 == 0);

    // <2,5>: w = (2,5) is nontrivial at 5, where Q(i) splits.
    const EtaleAlgebra qi = algebra({quad(-1)});
    const SplitOracle qo(qi, kNone);
    CHECK_THROWS_AS(construct_baseline(summarize(qi, diag({2, 5})), qo), AuditError);

    BaselineCollection zero;
    zero.sigma_set = {P(2)};
    zero.bits[P(2)] = {0, 0, 0};
    zero.bits[kInf] = {0, 0, 0};
    CHECK(parity_vector(zero) == std::vector<int>{0, 0, 0});
}

TEST_CASE("graph witnesses")
{
    // Two imaginary quadratics: the real place is non-split for both.
    {
        const EtaleAlgebra e = algebra({quad(-1), quad(-3)});
        const SplitOracle o(e, kNone);
        const ComponentGraph g = build_graph(o, 1000);
        REQUIRE(g.edges.size() == 1);
        CHECK(g.edges[0].witness == kInf);
    }
    // Q(i) twice: the search order finds inf first; 3 is another valid witness.
    {
        const EtaleAlgebra e = algebra({quad(-1), quad(-1)});
        const SplitOracle o(e, kNone);
        const ComponentGraph g = build_graph(o, 1000);
        REQUIRE(g.edges.size() == 1);
        CHECK(g.edges[0].witness == kInf);
        CHECK(o.component(0, P(3)).is_nonsplit());
        CHECK(o.component(1, P(3)).is_nonsplit());
    }
    // Q(sqrt5), Q(sqrt13): both 5 mod 8, so 2 is inert in both and comes
    // before 7, which is also a valid witness.
    {
        const EtaleAlgebra e = algebra({quad(5), quad(13)});
        const SplitOracle o(e, kNone);
        const ComponentGraph g = build_graph(o, 1000);
        REQUIRE(g.edges.size() == 1);
        CHECK(g.edges[0].witness == P(2));
        CHECK(o.component(0, P(7)).is_nonsplit());
        CHECK(o.component(1, P(7)).is_nonsplit());
    }
    // Quadratic pairs keep searching past a tiny bound.
    {
        const EtaleAlgebra e = algebra({quad(17), quad(41)});
        const SplitOracle o(e, kNone);
        const ComponentGraph g = build_graph(o, 2);
        CHECK(g.unresolved_pairs.empty());
        REQUIRE(g.edges.size() == 1);
        CHECK(o.component(0, g.edges[0].witness).is_nonsplit());
        CHECK(o.component(1, g.edges[0].witness).is_nonsplit());
    }
}

TEST_CASE("component labels and parity criteria")
{
    ComponentGraph g;
    g.vertices = 4;
    g.edges = {{0, 1, kInf}, {2, 3, P(3)}};
    CHECK(g.component_labels() == std::vector<std::size_t>{0, 0, 1, 1});
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(1, 2));

    CHECK(parity_criterion({1, 1, 0, 0}, g));
    CHECK(literal_connectedness({1, 1, 0, 0}, g));
    CHECK_FALSE(parity_criterion({1, 0, 1, 0}, g));
    CHECK_FALSE(literal_connectedness({1, 0, 1, 0}, g));
    CHECK(parity_criterion({0, 0, 0, 0}, g));

    // Three odd vertices in one component: every odd vertex has a partner,
    // yet the component sum is odd.
    ComponentGraph tri;
    tri.vertices = 3;
    tri.edges = {{0, 1, kInf}, {1, 2, kInf}};
    CHECK_FALSE(parity_criterion({1, 1, 1}, tri));
    CHECK(literal_connectedness({1, 1, 1}, tri));
}

TEST_CASE("rank mismatch is an input error")
{
    CHECK_THROWS_AS(require_matching_rank(algebra({quad(-1)}), diag({1, 1, 1})), InputError);
    CHECK_THROWS_AS(decide(algebra({quad(-1)}), diag({1, 1, 1, 1}), kNone), InputError);
}

TEST_CASE("decisions are deterministic")
{
    std::mt19937_64 rng(31);
    const auto pool = algebra_pool();
    for (int k = 0; k < 40; ++k) {
        const EtaleAlgebra& e = pool[k % pool.size()].algebra;
        const QuadraticSpace q = random_form(rng, e.rank());
        const Json a = report_json(decide(e, q, kNone));
        const Json b = report_json(decide(e, q, kNone));
        CHECK(a.dump() == b.dump());
    }
}

TEST_CASE("verdicts are monotone in the bound")
{
    std::mt19937_64 rng(32);
    const auto pool = algebra_pool();
    for (int k = 0; k < 40; ++k) {
        const EtaleAlgebra& e = pool[k % pool.size()].algebra;
        const QuadraticSpace q = random_form(rng, e.rank());
        const DecisionReport small = decide(e, q, kNone, 10);
        const DecisionReport large = decide(e, q, kNone, 1000);
        if (small.verdict == Verdict::Realizable)
            CHECK(large.verdict == Verdict::Realizable);
        if (large.verdict == Verdict::NotRealizableUpToBound)
            CHECK(small.verdict == Verdict::NotRealizableUpToBound);
        CHECK((small.verdict == Verdict::LocallyFails) == (large.verdict == Verdict::LocallyFails));
        // Edges found under the small bound survive under the larger one.
        for (const auto& edge : small.graph->edges)
            CHECK(large.graph->has_edge(edge.i, edge.j));
    }
}

TEST_CASE("single components are decided by the local conditions")
{
    std::mt19937_64 rng(33);
    for (const auto& [name, e] : algebra_pool()) {
        if (e.size() != 1)
            continue;
        for (int k = 0; k < 15; ++k) {
            const QuadraticSpace q = random_form(rng, e.rank());
            const LocalCheckResult local = check_local(e, q, kNone);
            const DecisionReport r = decide(e, q, kNone);
            CHECK(r.fast_path.kind != FastPathKind::None);
            if (local.passes())
                CHECK_MESSAGE(r.verdict == Verdict::Realizable, name);
            else if (local.fails())
                CHECK_MESSAGE(r.verdict == Verdict::LocallyFails, name);
            else
                CHECK_MESSAGE(r.verdict == Verdict::Inconclusive, name);
        }
    }
}

TEST_CASE("fast paths agree with the local conditions")
{
    std::mt19937_64 rng(34);
    for (const auto& [name, e] : algebra_pool())
        for (int k = 0; k < 10; ++k) {
            const QuadraticSpace q = random_form(rng, e.rank());
            const DecisionReport r = decide(e, q, kNone);
            if (r.fast_path.kind == FastPathKind::None || r.local.blocked())
                continue;
            CHECK_MESSAGE((r.verdict == Verdict::Realizable) == r.local.passes(), name);
        }
}

TEST_CASE("reported failures list every violated condition")
{
    // <1,1,1,1> on Q(i) x Q(sqrt5) has the wrong discriminant and a
    // definite signature while rho = 1.
    const DecisionReport r = decide(algebra({quad(-1), quad(5)}), diag({1, 1, 1, 1}), kNone);
    CHECK(r.verdict == Verdict::LocallyFails);
    REQUIRE(r.local.failing_condition);
    CHECK(*r.local.failing_condition == LocalCondition::Signature);
    bool saw_disc = false;
    for (const auto& f : r.local.failures)
        saw_disc = saw_disc || f.condition == LocalCondition::Disc;
    CHECK(saw_disc);
}

TEST_CASE("baseline parity is even on random runs")
{
    std::mt19937_64 rng(35);
    const auto pool = algebra_pool();
    int baselines = 0;
    for (int k = 0; k < 120; ++k) {
        const EtaleAlgebra& e = pool[k % pool.size()].algebra;
        const QuadraticSpace q = random_form(rng, e.rank());
        const DecisionReport r = decide(e, q, kNone);
        if (!r.baseline)
            continue;
        ++baselines;
        int total = 0;
        for (int x : r.parity)
            total += x;
        CHECK(total % 2 == 0);
    }
    CHECK(baselines > 0);
}
