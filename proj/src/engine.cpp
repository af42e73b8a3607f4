#include "maxtorus/engine.hpp"
#include "maxtorus/error.hpp"

#include <algorithm>
#include <numeric>

namespace maxtorus {

namespace {

// Search past the bound for quadratic pairs stops here; a witness always
// exists well before it.
constexpr std::uint64_t kQuadraticSearchCeiling = 10'000'000;

int bit_in(const PlaceSet& s, const Place& v) { return s.count(v) ? 1 : 0; }

int component_hyperbolic_bit(const Component& c, const Place& v)
{
    return hyperbolic_hasse_bit(2 * c.base_degree(), v);
}

std::string describe_needed(const NeededAnnotation& a)
{
    return "component " + std::to_string(a.component) + " at p = " + a.prime.get_str() + ": " + a.reason;
}

void collect_indeterminate(const SplitOracle& oracle, const Place& v, std::vector<NeededAnnotation>& out)
{
    for (std::size_t i = 0; i < oracle.algebra().size(); ++i) {
        SplitStatus s = oracle.component(i, v);
        if (s.is_indeterminate())
            out.push_back({i, v.prime(), s.reason});
    }
}

void sort_unique(std::vector<NeededAnnotation>& v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool both_nonsplit(const SplitOracle& oracle, std::size_t i, std::size_t j, const Place& v)
{
    return oracle.component(i, v).is_nonsplit() && oracle.component(j, v).is_nonsplit();
}

std::optional<FastPath> find_fast_path(const EtaleAlgebra& e, const ComponentGraph& g)
{
    if (e.is_cm())
        return FastPath{FastPathKind::CM, 0};
    for (std::size_t c = 0; c < e.size(); ++c) {
        bool star = true;
        for (std::size_t i = 0; i < e.size() && star; ++i)
            if (i != c && !g.has_edge(c, i))
                star = false;
        if (star)
            return FastPath{FastPathKind::Star, c};
    }
    return std::nullopt;
}

} // namespace

std::string to_string(LocalCondition c)
{
    switch (c) {
    case LocalCondition::Disc:
        return "disc";
    case LocalCondition::Hyperbolicity:
        return "hyperbolicity";
    case LocalCondition::Signature:
        return "signature";
    }
    return "disc";
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::LocallyFails:
        return "locally_fails";
    case Verdict::Realizable:
        return "realizable";
    case Verdict::NotRealizableUpToBound:
        return "not_realizable_up_to_bound";
    case Verdict::Inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
}

std::string to_string(const FastPath& f)
{
    switch (f.kind) {
    case FastPathKind::None:
        return "none";
    case FastPathKind::CM:
        return "cm";
    case FastPathKind::Star:
        return "star(" + std::to_string(f.center) + ")";
    }
    return "none";
}

bool ComponentGraph::has_edge(std::size_t i, std::size_t j) const
{
    if (i > j)
        std::swap(i, j);
    for (const auto& e : edges)
        if (e.i == i && e.j == j)
            return true;
    return false;
}

std::vector<std::size_t> ComponentGraph::component_labels() const
{
    std::vector<std::size_t> parent(vertices);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : edges) {
        std::size_t a = find(e.i), b = find(e.j);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::size_t> label(vertices);
    std::map<std::size_t, std::size_t> renumber;
    for (std::size_t v = 0; v < vertices; ++v) {
        auto [it, inserted] = renumber.emplace(find(v), renumber.size());
        label[v] = it->second;
    }
    return label;
}

// ---------------------------------------------------------------------------

void require_matching_rank(const EtaleAlgebra& e, const QuadraticSpace& q)
{
    if (q.dim() != e.rank())
        throw InputError("rank mismatch: form has dimension " + std::to_string(q.dim()) + ", algebra has rank "
                         + std::to_string(e.rank()));
}

PairSummary summarize(const EtaleAlgebra& e, const QuadraticSpace& q)
{
    require_matching_rank(e, q);
    PairSummary s;
    s.form = invariants(q);
    s.algebra_disc = algebra_disc_class(e);
    s.rho = rho_infinity(e);
    s.rho_unweighted = rho_infinity_unweighted(e);
    s.ramified = ramified_real_count(e);
    s.deviation = hyperbolic_deviation_set(s.form);
    s.pairing = pairing_support(e);
    s.sigma = s.deviation;
    s.sigma.insert(s.pairing.begin(), s.pairing.end());
    s.sigma.insert(Place::infinity());
    s.sigma.insert(Place::finite(2));
    return s;
}

PlaceSet sigma_bad_set(const EtaleAlgebra& e, const QuadraticSpace& q) { return summarize(e, q).sigma; }

LocalCheckResult check_local(const PairSummary& s, const SplitOracle& oracle)
{
    LocalCheckResult r;
    r.disc_ok = s.algebra_disc == s.form.disc;

    const unsigned pos = s.form.signature.positive, neg = s.form.signature.negative;
    r.signature_ok = pos >= s.rho && neg >= s.rho && (pos - s.rho) % 2 == 0;

    std::vector<Place> split_deviations;
    for (const Place& v : s.deviation) {
        SplitStatus st = oracle.algebra_at(v);
        if (st.is_split())
            split_deviations.push_back(v);
        else if (st.is_indeterminate())
            collect_indeterminate(oracle, v, r.needed);
    }
    sort_unique(r.needed);
    if (!split_deviations.empty())
        r.hyperbolicity_ok = false;
    else if (!r.needed.empty())
        r.hyperbolicity_ok = std::nullopt;

    if (!r.signature_ok)
        r.failures.push_back({Place::infinity(), LocalCondition::Signature});
    for (const Place& v : split_deviations)
        r.failures.push_back({v, LocalCondition::Hyperbolicity});
    if (!r.disc_ok)
        r.failures.push_back({std::nullopt, LocalCondition::Disc});
    if (!r.failures.empty()) {
        r.failing_place = r.failures.front().place;
        r.failing_condition = r.failures.front().condition;
    }
    return r;
}

LocalCheckResult check_local(const EtaleAlgebra& e, const QuadraticSpace& q, const AnnotationSet& ann)
{
    const PairSummary s = summarize(e, q);
    const SplitOracle oracle(e, ann);
    return check_local(s, oracle);
}

std::optional<std::set<int>> achievable_bits(const SplitOracle& oracle, std::size_t i, const Place& v)
{
    if (v.is_infinite())
        throw std::invalid_argument("achievable_bits: finite place expected");
    SplitStatus s = oracle.component(i, v);
    if (s.is_indeterminate())
        return std::nullopt;
    if (s.is_split())
        return std::set<int>{component_hyperbolic_bit(oracle.algebra()[i], v)};
    return std::set<int>{0, 1};
}

std::vector<Signature> achievable_signatures(const Component& c)
{
    const unsigned rho = rho_infinity(c), ram = c.real_profile().ramified;
    std::vector<Signature> out;
    for (unsigned a = ram + 1; a-- > 0;)
        out.push_back({2 * a + rho, 2 * (ram - a) + rho});
    return out;
}

BaselineOutcome construct_baseline(const PairSummary& s, const SplitOracle& oracle)
{
    const EtaleAlgebra& e = oracle.algebra();
    BaselineOutcome out;
    BaselineCollection c;
    c.sigma_set = s.sigma;

    for (const Place& v : s.sigma) {
        if (v.is_infinite())
            continue;
        const int target = (bit_in(s.form.hasse_support, v) + bit_in(s.pairing, v)) % 2;
        std::vector<int> bits(e.size(), 0);
        std::optional<std::size_t> last_free;
        std::vector<NeededAnnotation> undecided;
        int sum = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            auto reachable = achievable_bits(oracle, i, v);
            if (!reachable) {
                // The hyperbolic bit is reachable whether the component
                // splits or not.
                bits[i] = component_hyperbolic_bit(e[i], v);
                undecided.push_back({i, v.prime(), oracle.component(i, v).reason});
            } else if (reachable->size() == 1) {
                bits[i] = *reachable->begin();
            } else {
                last_free = i;
            }
            sum += bits[i];
        }
        if (sum % 2 != target) {
            if (last_free) {
                bits[*last_free] = 1;
            } else if (!undecided.empty()) {
                out.reasons.push_back("baseline parity at " + v.to_string()
                                      + " needs a non-split component; split status undetermined");
                out.needed.insert(out.needed.end(), undecided.begin(), undecided.end());
            } else {
                throw AuditError("construct_baseline: no achievable bits at " + v.to_string());
            }
        }
        c.bits.emplace(v, std::move(bits));
    }

    const unsigned pos = s.form.signature.positive;
    if (pos < s.rho || (pos - s.rho) % 2 != 0 || (pos - s.rho) / 2 > s.ramified)
        throw AuditError("construct_baseline: signature not achievable at inf");
    unsigned remaining = (pos - s.rho) / 2;
    std::vector<int> inf_bits;
    for (const auto& comp : e.components()) {
        const unsigned ram = comp.real_profile().ramified, rho = rho_infinity(comp);
        const unsigned a = std::min(ram, remaining);
        remaining -= a;
        Signature sig{2 * a + rho, 2 * (ram - a) + rho};
        c.infinity_signatures.push_back(sig);
        inf_bits.push_back(real_hasse_bit(sig));
    }
    c.bits.emplace(Place::infinity(), std::move(inf_bits));

    sort_unique(out.needed);
    if (out.needed.empty())
        out.baseline = std::move(c);
    return out;
}

std::vector<int> parity_vector(const BaselineCollection& c)
{
    std::vector<int> parity;
    for (const auto& [v, bits] : c.bits) {
        parity.resize(bits.size(), 0);
        for (std::size_t i = 0; i < bits.size(); ++i)
            parity[i] ^= bits[i];
    }
    return parity;
}

ComponentGraph build_graph(const SplitOracle& oracle, std::uint64_t bound)
{
    const EtaleAlgebra& e = oracle.algebra();
    ComponentGraph g;
    g.vertices = e.size();
    const std::vector<std::uint64_t> primes = primes_up_to(bound);
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            std::optional<Place> witness;
            if (both_nonsplit(oracle, i, j, Place::infinity()))
                witness = Place::infinity();
            for (std::size_t k = 0; !witness && k < primes.size(); ++k) {
                const Place v = Place::finite(primes[k]);
                if (both_nonsplit(oracle, i, j, v))
                    witness = v;
            }
            if (!witness && e[i].is_quadratic() && e[j].is_quadratic()) {
                Integer p = next_prime(Integer(bound));
                while (!witness) {
                    if (p > kQuadraticSearchCeiling)
                        throw AuditError("build_graph: no witness for a quadratic pair");
                    const Place v = Place::finite(p);
                    if (both_nonsplit(oracle, i, j, v))
                        witness = v;
                    p = next_prime(p);
                }
            }
            if (witness)
                g.edges.push_back({i, j, *witness});
            else
                g.unresolved_pairs.emplace_back(i, j);
        }
    }
    return g;
}

bool parity_criterion(const std::vector<int>& parity, const ComponentGraph& g)
{
    const auto label = g.component_labels();
    std::vector<int> sums(g.vertices, 0);
    for (std::size_t v = 0; v < g.vertices; ++v)
        sums[label[v]] ^= parity.at(v);
    return std::all_of(sums.begin(), sums.end(), [](int x) { return x == 0; });
}

bool literal_connectedness(const std::vector<int>& parity, const ComponentGraph& g)
{
    const auto label = g.component_labels();
    std::vector<unsigned> odd(g.vertices, 0);
    for (std::size_t v = 0; v < g.vertices; ++v)
        odd[label[v]] += parity.at(v);
    for (std::size_t v = 0; v < g.vertices; ++v)
        if (parity[v] && odd[label[v]] < 2)
            return false;
    return true;
}

// ---------------------------------------------------------------------------

DecisionReport decide(const EtaleAlgebra& e, const QuadraticSpace& q, const AnnotationSet& ann,
                      std::uint64_t bound)
{
    if (bound < 2)
        throw InputError("prime bound must be at least 2");
    DecisionReport r;
    r.bound = bound;
    r.summary = summarize(e, q);
    const SplitOracle oracle(e, ann);
    r.local = check_local(r.summary, oracle);
    r.graph = build_graph(oracle, bound);
    if (auto fp = find_fast_path(e, *r.graph))
        r.fast_path = *fp;

    if (e.components().end()
        != std::find_if(e.components().begin(), e.components().end(),
                        [](const Component& c) { return !c.is_quadratic(); })) {
        r.notes.push_back("rho_inf is the degree-weighted count " + std::to_string(r.summary.rho)
                          + "; the unweighted count is " + std::to_string(r.summary.rho_unweighted)
                          + (r.summary.rho == r.summary.rho_unweighted ? " (equal)" : " (differs)"));
    }

    if (r.local.fails()) {
        r.verdict = Verdict::LocallyFails;
    } else if (r.local.blocked()) {
        r.verdict = Verdict::Inconclusive;
        r.needed_annotations = r.local.needed;
        r.inconclusive_reasons.push_back("hyperbolicity check blocked by undetermined split status");
        for (const auto& a : r.local.needed)
            r.inconclusive_reasons.push_back(describe_needed(a));
    } else {
        BaselineOutcome b = construct_baseline(r.summary, oracle);
        if (b.baseline) {
            r.baseline = std::move(b.baseline);
            r.parity = parity_vector(*r.baseline);
            const bool even = parity_criterion(r.parity, *r.graph);
            r.verdict = even ? Verdict::Realizable : Verdict::NotRealizableUpToBound;
            if (even != literal_connectedness(r.parity, *r.graph))
                r.notes.push_back("set-level connectedness and the parity criterion disagree on the baseline; "
                                  "the verdict follows the parity criterion");
        } else if (r.fast_path.kind != FastPathKind::None) {
            r.verdict = Verdict::Realizable;
            r.notes.push_back("baseline blocked by undetermined split status; fast path " + to_string(r.fast_path)
                              + " decides from the local conditions");
        } else {
            r.verdict = Verdict::Inconclusive;
            r.needed_annotations = b.needed;
            r.inconclusive_reasons = b.reasons;
            for (const auto& a : b.needed)
                r.inconclusive_reasons.push_back(describe_needed(a));
        }
    }

    if (r.verdict == Verdict::NotRealizableUpToBound && !r.graph->unresolved_pairs.empty()) {
        std::string pairs;
        for (const auto& [i, j] : r.graph->unresolved_pairs)
            pairs += (pairs.empty() ? "" : ", ") + ("(" + std::to_string(i) + "," + std::to_string(j) + ")");
        r.notes.push_back("no witness place up to " + std::to_string(bound) + " for pairs " + pairs);
    }

    audit_report(e, q, ann, r);
    return r;
}

void audit_report(const EtaleAlgebra& e, const QuadraticSpace& q, const AnnotationSet& ann, const DecisionReport& r)
{
    const PairSummary& s = r.summary;
    const SplitOracle oracle(e, ann);
    if (s.rho + s.ramified != e.n())
        throw AuditError("audit: rho + ramified != n");
    if (s.form.hasse_support.size() % 2 || s.pairing.size() % 2)
        throw AuditError("audit: odd Hasse support");
    if (!(invariants(q) == s.form))
        throw AuditError("audit: form invariants changed");
    if (r.local.fails() != !r.local.failures.empty())
        throw AuditError("audit: failure fields inconsistent");
    const bool any_false = !r.local.disc_ok || !r.local.signature_ok || r.local.hyperbolicity_ok == false;
    if (any_false != r.local.fails())
        throw AuditError("audit: failing condition not reported");

    if (r.graph) {
        for (const auto& edge : r.graph->edges)
            if (edge.i >= edge.j || !both_nonsplit(oracle, edge.i, edge.j, edge.witness))
                throw AuditError("audit: edge witness is not non-split for both components");
    }

    if (r.baseline) {
        const BaselineCollection& c = *r.baseline;
        if (c.sigma_set != s.sigma || c.bits.size() != s.sigma.size())
            throw AuditError("audit: baseline places differ from sigma");
        for (const auto& [v, bits] : c.bits) {
            if (bits.size() != e.size())
                throw AuditError("audit: baseline width");
            int sum = bit_in(s.pairing, v);
            for (std::size_t i = 0; i < e.size(); ++i) {
                sum += bits[i];
                if (v.is_infinite())
                    continue;
                auto reachable = achievable_bits(oracle, i, v);
                const bool ok = reachable ? reachable->count(bits[i]) > 0
                                          : bits[i] == component_hyperbolic_bit(e[i], v);
                if (!ok)
                    throw AuditError("audit: unreachable bit at " + v.to_string());
            }
            if (sum % 2 != bit_in(s.form.hasse_support, v))
                throw AuditError("audit: bit sum differs from w(q) + D at " + v.to_string());
        }
        Signature total;
        for (std::size_t i = 0; i < e.size(); ++i) {
            const Signature& sig = c.infinity_signatures.at(i);
            const auto options = achievable_signatures(e[i]);
            if (std::find(options.begin(), options.end(), sig) == options.end())
                throw AuditError("audit: unreachable signature");
            if (c.bits.at(Place::infinity())[i] != real_hasse_bit(sig))
                throw AuditError("audit: inf bit differs from signature");
            total.positive += sig.positive;
            total.negative += sig.negative;
        }
        if (!(total == s.form.signature))
            throw AuditError("audit: signatures do not sum to the form signature");

        if (parity_vector(c) != r.parity)
            throw AuditError("audit: parity vector mismatch");
        if (std::accumulate(r.parity.begin(), r.parity.end(), 0) % 2)
            throw AuditError("audit: total parity is odd");
    }

    switch (r.verdict) {
    case Verdict::LocallyFails:
        if (!r.local.fails())
            throw AuditError("audit: LocallyFails without a failing condition");
        break;
    case Verdict::Realizable:
        if (!r.local.passes())
            throw AuditError("audit: Realizable with failing or blocked local data");
        if (r.baseline && !parity_criterion(r.parity, *r.graph))
            throw AuditError("audit: Realizable but the parity criterion fails");
        if (!r.baseline && r.fast_path.kind == FastPathKind::None)
            throw AuditError("audit: Realizable without baseline or fast path");
        break;
    case Verdict::NotRealizableUpToBound:
        if (!r.baseline || parity_criterion(r.parity, *r.graph))
            throw AuditError("audit: NotRealizableUpToBound without a parity obstruction");
        break;
    case Verdict::Inconclusive:
        if (r.needed_annotations.empty())
            throw AuditError("audit: Inconclusive without needed annotations");
        break;
    }
    // A verified fast path makes the graph connected, so the generic path
    // must agree with the local outcome.
    if (r.fast_path.kind != FastPathKind::None && r.baseline && r.verdict != Verdict::Realizable)
        throw AuditError("audit: fast path and generic path disagree");
}

} // namespace maxtorus
