#ifndef MAXTORUS_ENGINE_HPP
#define MAXTORUS_ENGINE_HPP

#include "maxtorus/etale.hpp"
#include "maxtorus/qform.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace maxtorus {

constexpr std::uint64_t kDefaultPrimeBound = 1000;

enum class LocalCondition { Disc, Hyperbolicity, Signature };
std::string to_string(LocalCondition c);

// A (component, prime) pair whose splitting status the engine could not
// decide and that an annotation would settle.
struct NeededAnnotation {
    std::size_t component;
    Integer prime;
    std::string reason;

    friend bool operator<(const NeededAnnotation& a, const NeededAnnotation& b)
    {
        return a.component != b.component ? a.component < b.component : a.prime < b.prime;
    }
    friend bool operator==(const NeededAnnotation& a, const NeededAnnotation& b)
    {
        return a.component == b.component && a.prime == b.prime;
    }
};

struct LocalFailure {
    std::optional<Place> place; // absent for the global discriminant test
    LocalCondition condition;
};

struct LocalCheckResult {
    bool disc_ok = true;
    // nullopt when an Indeterminate split status at a deviation place
    // blocks the answer; `needed` then lists the annotations.
    std::optional<bool> hyperbolicity_ok = true;
    bool signature_ok = true;
    std::vector<NeededAnnotation> needed;

    // Reported failure, chosen from `failures` by the order Signature,
    // Hyperbolicity, Disc.
    std::optional<Place> failing_place;
    std::optional<LocalCondition> failing_condition;
    std::vector<LocalFailure> failures;

    bool fails() const { return failing_condition.has_value(); }
    bool blocked() const { return !fails() && !hyperbolicity_ok.has_value(); }
    bool passes() const { return !fails() && hyperbolicity_ok.has_value(); }
};

// Invariants of the pair (E, q) consumed by the local and global checks.
struct PairSummary {
    QFInvariants form;
    SquareClass algebra_disc;
    unsigned rho = 0;
    unsigned rho_unweighted = 0;
    unsigned ramified = 0;
    PlaceSet deviation; // S
    PlaceSet pairing;   // T
    PlaceSet sigma;     // S u T u {2, inf}
};

struct BaselineCollection {
    PlaceSet sigma_set;
    // Per place of sigma_set, one bit per component. The entry at inf is
    // derived from the signatures.
    std::map<Place, std::vector<int>> bits;
    std::vector<Signature> infinity_signatures;
};

struct GraphEdge {
    std::size_t i, j;
    Place witness;
};

struct ComponentGraph {
    std::size_t vertices = 0;
    std::vector<GraphEdge> edges; // i < j, in pair order
    std::vector<std::pair<std::size_t, std::size_t>> unresolved_pairs;

    bool has_edge(std::size_t i, std::size_t j) const;
    // Connected-component label per vertex, labels numbered from 0 in order
    // of first appearance.
    std::vector<std::size_t> component_labels() const;
};

enum class Verdict { LocallyFails, Realizable, NotRealizableUpToBound, Inconclusive };
std::string to_string(Verdict v);

enum class FastPathKind { None, CM, Star };

struct FastPath {
    FastPathKind kind = FastPathKind::None;
    std::size_t center = 0; // Star only

    friend bool operator==(const FastPath&, const FastPath&) = default;
};

std::string to_string(const FastPath& f);

struct DecisionReport {
    Verdict verdict = Verdict::Inconclusive;
    std::uint64_t bound = kDefaultPrimeBound;
    std::vector<std::string> inconclusive_reasons;
    std::vector<NeededAnnotation> needed_annotations;
    PairSummary summary;
    LocalCheckResult local;
    std::optional<BaselineCollection> baseline;
    std::vector<int> parity;
    std::optional<ComponentGraph> graph;
    FastPath fast_path;
    std::vector<std::string> notes;
};

// Throws InputError unless dim q = rank E.
void require_matching_rank(const EtaleAlgebra& e, const QuadraticSpace& q);

PairSummary summarize(const EtaleAlgebra& e, const QuadraticSpace& q);

// The three local conditions: disc(q) = disc(E); w(q)_v = w(h_2n)_v at every
// place where E splits, tested on the deviation set; signature
// (2r' + rho, 2s' + rho).
LocalCheckResult check_local(const EtaleAlgebra& e, const QuadraticSpace& q, const AnnotationSet& ann);
LocalCheckResult check_local(const PairSummary& s, const SplitOracle& oracle);

PlaceSet sigma_bad_set(const EtaleAlgebra& e, const QuadraticSpace& q);

// Local Hasse bits reachable by trace forms of component i at a finite
// place: the hyperbolic bit when split, both bits otherwise; nullopt when
// the split status is Indeterminate.
std::optional<std::set<int>> achievable_bits(const SplitOracle& oracle, std::size_t i, const Place& v);
// Signatures (2r' + rho_i, 2s' + rho_i) with r' + s' the ramified count.
std::vector<Signature> achievable_signatures(const Component& c);

struct BaselineOutcome {
    std::optional<BaselineCollection> baseline;
    std::vector<NeededAnnotation> needed; // nonempty iff baseline is absent
    std::vector<std::string> reasons;
};

// Deterministic baseline: zero bits outside sigma; at a finite place split
// components take the hyperbolic bit and the last free component absorbs
// the parity; at inf ramified slots are filled positive first in component
// order. Throws AuditError when the constraints are infeasible.
BaselineOutcome construct_baseline(const PairSummary& s, const SplitOracle& oracle);

// |S_i(C)| mod 2 per component.
std::vector<int> parity_vector(const BaselineCollection& c);

// Edge (i, j) when some place is NonSplit for both: inf first, then primes
// up to `bound`. Pairs of quadratic components search past the bound.
ComponentGraph build_graph(const SplitOracle& oracle, std::uint64_t bound);

// Every graph component has an even parity sum.
bool parity_criterion(const std::vector<int>& parity, const ComponentGraph& g);
// The set-level definition: every odd vertex reaches another odd vertex.
bool literal_connectedness(const std::vector<int>& parity, const ComponentGraph& g);

DecisionReport decide(const EtaleAlgebra& e, const QuadraticSpace& q, const AnnotationSet& ann,
                      std::uint64_t bound = kDefaultPrimeBound);

// Recomputes the report's internal consistency from its own data and the
// inputs. Throws AuditError on any violation.
void audit_report(const EtaleAlgebra& e, const QuadraticSpace& q, const AnnotationSet& ann,
                  const DecisionReport& r);

} // namespace maxtorus

#endif
