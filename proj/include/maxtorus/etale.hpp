#ifndef MAXTORUS_ETALE_HPP
#define MAXTORUS_ETALE_HPP

#include "maxtorus/arith.hpp"
#include "maxtorus/poly.hpp"

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <variant>
#include <vector>

namespace maxtorus {

// K = Q(sqrt d).
struct QuadSpec {
    Integer d;
};

// K = F(sqrt theta) with F = Q[y]/(f).
struct GeneralSpec {
    PolyQ f;
    PolyQ theta;
};

using ComponentSpec = std::variant<QuadSpec, GeneralSpec>;

struct RealProfile {
    unsigned ramified = 0;        // real places of F where theta < 0
    unsigned unramified_real = 0; // real places of F where theta > 0
    unsigned complex_pairs = 0;   // complex places of F
};

constexpr int kMaxComponentDegree = 12;

// A field K_i = F_i(sqrt theta_i), validated. Immutable.
class Component {
public:
    const ComponentSpec& spec() const { return spec_; }
    bool is_quadratic() const { return std::holds_alternative<QuadSpec>(spec_); }

    // Defining polynomial of F (y for a quadratic component).
    const PolyQ& base_poly() const { return f_; }
    // theta reduced modulo f.
    const PolyQ& theta() const { return theta_; }
    // Minimal polynomial of sqrt theta over Q, Res_y(f(y), x^2 - theta(y)).
    const PolyQ& min_poly() const { return h_; }

    // [K : Q].
    unsigned degree() const { return static_cast<unsigned>(h_.degree()); }
    // [F : Q].
    unsigned base_degree() const { return static_cast<unsigned>(f_.degree()); }

    // Square class of disc(K) (polynomial discriminant of h).
    const SquareClass& disc_class() const { return disc_class_; }
    // (-1)^[F:Q] disc(K): the determinant class shared by every trace form
    // q_alpha on K.
    const SquareClass& det_class() const { return det_class_; }
    const RealProfile& real_profile() const { return profile_; }

    // Imaginary quadratic extension of a totally real field.
    bool is_cm() const { return profile_.ramified == base_degree(); }
    // F has a complex place.
    bool base_has_complex_place() const { return profile_.complex_pairs > 0; }

    // Data bounding the exact splitting method for general components.
    const Rational& base_discriminant() const { return disc_f_; }
    const Rational& theta_norm() const { return norm_theta_; }
    const Integer& denominator_lcm() const { return den_lcm_; }

    std::string describe() const;

private:
    friend Component validate_component(const ComponentSpec& spec);
    Component() = default;

    ComponentSpec spec_;
    PolyQ f_, theta_, h_;
    SquareClass disc_class_, det_class_;
    RealProfile profile_;
    Rational disc_f_ = 1, norm_theta_ = 1;
    Integer den_lcm_ = 1;
};

// Establishes every Component invariant. Throws InputError with
// "not a field component" when f or h is reducible, "unsupported degree"
// past the degree cap, and std::domain_error when theta vanishes in F.
Component validate_component(const ComponentSpec& spec);

enum class SplitKind { Split, NonSplit, Indeterminate };

struct SplitStatus {
    SplitKind kind = SplitKind::Indeterminate;
    std::string reason; // set for Indeterminate

    static SplitStatus split() { return {SplitKind::Split, {}}; }
    static SplitStatus nonsplit() { return {SplitKind::NonSplit, {}}; }
    static SplitStatus indeterminate(std::string why) { return {SplitKind::Indeterminate, std::move(why)}; }
    bool is_split() const { return kind == SplitKind::Split; }
    bool is_nonsplit() const { return kind == SplitKind::NonSplit; }
    bool is_indeterminate() const { return kind == SplitKind::Indeterminate; }
};

std::string to_string(SplitKind k);

// User-supplied split/non-split answers at primes where the exact method
// abstains, keyed by (component index, prime).
class AnnotationSet {
public:
    void add(std::size_t component, const Integer& prime, SplitKind kind);
    std::optional<SplitKind> find(std::size_t component, const Integer& prime) const;
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    struct Entry {
        std::size_t component;
        Integer prime;
        SplitKind kind;
    };
    std::vector<Entry> entries() const;

private:
    std::map<std::pair<std::size_t, Integer>, SplitKind> entries_;
};

class EtaleAlgebra {
public:
    // Throws InputError on an empty component list.
    explicit EtaleAlgebra(std::vector<Component> components);

    const std::vector<Component>& components() const { return components_; }
    std::size_t size() const { return components_.size(); }
    const Component& operator[](std::size_t i) const { return components_[i]; }
    // Rank 2n over Q; E^sigma has rank n.
    unsigned rank() const { return 2 * n_; }
    unsigned n() const { return n_; }
    bool is_cm() const;

private:
    std::vector<Component> components_;
    unsigned n_ = 0;
};

SquareClass algebra_disc_class(const EtaleAlgebra& e);

// Support of D = sum_{i<j} (d_i, d_j) with d_i the component determinant
// classes.
PlaceSet pairing_support(const EtaleAlgebra& e);

// Whether every place of F above p splits in K. Exact at every prime for
// quadratic components; for general components exact at odd primes not
// dividing disc(f), N(theta) or a denominator, otherwise answered from the
// annotations or Indeterminate.
SplitStatus component_split_at(const Component& c, std::size_t index, const Integer& p,
                               const AnnotationSet& annotations);
SplitStatus component_split_at_infinity(const Component& c);
SplitStatus component_split_at(const Component& c, std::size_t index, const Place& v,
                               const AnnotationSet& annotations);

// Split when every component splits, NonSplit when one does not,
// Indeterminate otherwise.
SplitStatus algebra_split_at(const EtaleAlgebra& e, const Place& v, const AnnotationSet& annotations);

// Degree-weighted count of places of E^sigma over inf that do not ramify:
// unramified real places count 1, complex places count 2.
unsigned rho_infinity(const EtaleAlgebra& e);
unsigned rho_infinity(const Component& c);
// The unweighted count (each complex place once).
unsigned rho_infinity_unweighted(const EtaleAlgebra& e);
unsigned ramified_real_count(const EtaleAlgebra& e);

// Memoized split statuses for one algebra and annotation set. Concurrent
// readers are safe; each entry is computed once and then shared.
class SplitOracle {
public:
    SplitOracle(const EtaleAlgebra& e, const AnnotationSet& annotations);

    const EtaleAlgebra& algebra() const { return algebra_; }
    const AnnotationSet& annotations() const { return annotations_; }
    SplitStatus component(std::size_t i, const Place& v) const;
    SplitStatus algebra_at(const Place& v) const;

private:
    const EtaleAlgebra& algebra_;
    const AnnotationSet& annotations_;
    mutable std::shared_mutex mutex_;
    mutable std::map<std::pair<std::size_t, Place>, SplitStatus> memo_;
};

} // namespace maxtorus

#endif
