#include "maxtorus/etale.hpp"
#include "maxtorus/error.hpp"
#include "maxtorus/poly_fp.hpp"
#include "maxtorus/real_roots.hpp"

#include <limits>
#include <mutex>
#include <stdexcept>

namespace maxtorus {

namespace {

bool divides(const Integer& p, const Integer& n)
{
    return n != 0 && mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t());
}

Integer denominators_lcm(const PolyQ& a, const PolyQ& b)
{
    Integer l = 1;
    for (const auto* poly : {&a, &b})
        for (const auto& c : poly->coeffs())
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
}

SplitStatus quadratic_split_at(const Integer& d, const Integer& p)
{
    if (p == 2)
        return mpz_fdiv_ui(d.get_mpz_t(), 8) == 1 ? SplitStatus::split() : SplitStatus::nonsplit();
    return legendre_symbol(d, p) == 1 ? SplitStatus::split() : SplitStatus::nonsplit();
}

// Residue-field squareness of theta at each place of F over p. Valid when p
// is odd, unramified in F with Z_p[y]/(f) maximal (p prime to disc f), and
// theta a unit above p (p prime to N(theta)).
SplitStatus general_split_exact(const Component& c, std::uint64_t p)
{
    const PolyFp f = PolyFp::reduce(p, c.base_poly().coeffs());
    const PolyFp theta = PolyFp::reduce(p, c.theta().coeffs());
    for (const auto& [g, mult] : poly_factor_mod_p(f)) {
        if (mult != 1)
            throw AuditError("general_split_exact: f not squarefree modulo an unramified prime");
        if (!ff_is_square(theta % g, g))
            return SplitStatus::nonsplit();
    }
    return SplitStatus::split();
}

} // namespace

std::string to_string(SplitKind k)
{
    switch (k) {
    case SplitKind::Split:
        return "split";
    case SplitKind::NonSplit:
        return "nonsplit";
    case SplitKind::Indeterminate:
        return "indeterminate";
    }
    return "indeterminate";
}

std::string Component::describe() const
{
    if (const auto* q = std::get_if<QuadSpec>(&spec_))
        return "Q(sqrt(" + q->d.get_str() + "))";
    return "Q[y]/(" + f_.to_string("y") + ")(sqrt(" + theta_.to_string("y") + "))";
}

Component validate_component(const ComponentSpec& spec)
{
    Component c;
    c.spec_ = spec;
    if (const auto* q = std::get_if<QuadSpec>(&spec)) {
        const Integer& d = q->d;
        if (d == 0)
            throw std::domain_error("component: theta must be nonzero");
        if (d > 0 && mpz_perfect_square_p(d.get_mpz_t()))
            throw InputError("not a field component: " + d.get_str() + " is a square");
        const SquareClass cls = SquareClass::of(Rational(d));
        if (cls.rep() != d)
            throw InputError("invalid component: d = " + d.get_str() + " is not squarefree");
        c.f_ = PolyQ{0, 1};
        c.theta_ = PolyQ::constant(Rational(d));
        c.h_ = PolyQ(std::vector<Rational>{Rational(-d), Rational(0), Rational(1)});
        c.disc_class_ = cls;
        c.det_class_ = -cls;
        if (d < 0)
            c.profile_.ramified = 1;
        else
            c.profile_.unramified_real = 1;
        c.norm_theta_ = Rational(d);
        return c;
    }

    const auto& g = std::get<GeneralSpec>(spec);
    if (g.f.degree() < 1)
        throw InputError("invalid component: f must have degree at least 1");
    if (!g.f.is_monic())
        throw InputError("invalid component: f must be monic");
    if (2 * g.f.degree() > kMaxComponentDegree)
        throw InputError("unsupported degree: [K:Q] = " + std::to_string(2 * g.f.degree())
                         + " exceeds " + std::to_string(kMaxComponentDegree));
    c.f_ = g.f;
    c.theta_ = g.theta.is_zero() ? PolyQ() : g.theta % g.f;
    if (c.theta_.is_zero())
        throw std::domain_error("component: theta must be nonzero in F");
    if (!is_irreducible_over_q(c.f_))
        throw InputError("not a field component: f = " + c.f_.to_string("y") + " is reducible");

    // g(x, y) = x^2 - theta(y) as a polynomial in y.
    BivariatePolyQ x2_minus_theta;
    for (int k = 0; k <= c.theta_.degree(); ++k)
        x2_minus_theta.coeffs.push_back(PolyQ::constant(-c.theta_[k]));
    x2_minus_theta.coeffs[0] += PolyQ::monomial(1, 2);
    c.h_ = resultant_y(c.f_, x2_minus_theta);
    if (!c.h_.is_even() || c.h_.degree() != 2 * c.f_.degree())
        throw AuditError("validate_component: minimal polynomial is not a polynomial in x^2");
    if (!is_irreducible_over_q(c.h_))
        throw InputError("not a field component: x^2 - theta is reducible over F");

    c.disc_class_ = SquareClass::of(poly_discriminant(c.h_));
    c.det_class_ = c.f_.degree() % 2 ? -c.disc_class_ : c.disc_class_;

    RealRootIsolator roots(c.f_);
    for (std::size_t i = 0; i < roots.roots().size(); ++i) {
        if (roots.sign_at(i, c.theta_) < 0)
            ++c.profile_.ramified;
        else
            ++c.profile_.unramified_real;
    }
    c.profile_.complex_pairs = static_cast<unsigned>((c.f_.degree() - roots.roots().size()) / 2);

    c.disc_f_ = poly_discriminant(c.f_);
    c.norm_theta_ = resultant(c.f_, c.theta_);
    c.den_lcm_ = denominators_lcm(c.f_, c.theta_);
    return c;
}

// ---------------------------------------------------------------------------

void AnnotationSet::add(std::size_t component, const Integer& prime, SplitKind kind)
{
    if (kind == SplitKind::Indeterminate)
        throw std::invalid_argument("annotation must be split or nonsplit");
    entries_[{component, prime}] = kind;
}

std::optional<SplitKind> AnnotationSet::find(std::size_t component, const Integer& prime) const
{
    auto it = entries_.find({component, prime});
    if (it == entries_.end())
        return std::nullopt;
    return it->second;
}

std::vector<AnnotationSet::Entry> AnnotationSet::entries() const
{
    std::vector<Entry> out;
    for (const auto& [key, kind] : entries_)
        out.push_back({key.first, key.second, kind});
    return out;
}

EtaleAlgebra::EtaleAlgebra(std::vector<Component> components) : components_(std::move(components))
{
    if (components_.empty())
        throw InputError("etale algebra needs at least one component");
    for (const auto& c : components_)
        n_ += c.base_degree();
}

bool EtaleAlgebra::is_cm() const
{
    for (const auto& c : components_)
        if (!c.is_cm())
            return false;
    return true;
}

SquareClass algebra_disc_class(const EtaleAlgebra& e)
{
    SquareClass d;
    for (const auto& c : e.components())
        d = d * c.disc_class();
    return d;
}

PlaceSet pairing_support(const EtaleAlgebra& e)
{
    PlaceSet candidates{Place::infinity(), Place::finite(2)};
    for (const auto& c : e.components())
        for (const auto& p : c.det_class().primes())
            candidates.insert(Place::finite(p));
    PlaceSet support;
    for (const Place& v : candidates) {
        int bit = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j)
                bit ^= hilbert_symbol(e[i].det_class(), e[j].det_class(), v);
        if (bit)
            support.insert(v);
    }
    return support;
}

SplitStatus component_split_at(const Component& c, std::size_t index, const Integer& p,
                               const AnnotationSet& annotations)
{
    if (const auto* q = std::get_if<QuadSpec>(&c.spec()))
        return quadratic_split_at(q->d, p);

    std::string reason;
    if (p == 2)
        reason = "dyadic prime";
    else if (divides(p, c.denominator_lcm()))
        reason = "prime divides a coefficient denominator";
    else if (divides(p, c.base_discriminant().get_num()))
        reason = "prime divides disc(f)";
    else if (divides(p, c.theta_norm().get_num()))
        reason = "prime divides N(theta)";
    else if (!p.fits_ulong_p() || p > Integer(std::numeric_limits<std::uint64_t>::max() / 2))
        reason = "prime exceeds word size";
    if (reason.empty())
        return general_split_exact(c, p.get_ui());
    if (auto ann = annotations.find(index, p))
        return *ann == SplitKind::Split ? SplitStatus::split() : SplitStatus::nonsplit();
    return SplitStatus::indeterminate(reason);
}

SplitStatus component_split_at_infinity(const Component& c)
{
    return c.real_profile().ramified == 0 ? SplitStatus::split() : SplitStatus::nonsplit();
}

SplitStatus component_split_at(const Component& c, std::size_t index, const Place& v,
                               const AnnotationSet& annotations)
{
    if (v.is_infinite())
        return component_split_at_infinity(c);
    return component_split_at(c, index, v.prime(), annotations);
}

SplitStatus algebra_split_at(const EtaleAlgebra& e, const Place& v, const AnnotationSet& annotations)
{
    bool indeterminate = false;
    std::string reasons;
    for (std::size_t i = 0; i < e.size(); ++i) {
        SplitStatus s = component_split_at(e[i], i, v, annotations);
        if (s.is_nonsplit())
            return s;
        if (s.is_indeterminate()) {
            indeterminate = true;
            if (!reasons.empty())
                reasons += "; ";
            reasons += "component " + std::to_string(i) + ": " + s.reason;
        }
    }
    return indeterminate ? SplitStatus::indeterminate(reasons) : SplitStatus::split();
}

unsigned rho_infinity(const Component& c)
{
    return c.real_profile().unramified_real + 2 * c.real_profile().complex_pairs;
}

unsigned rho_infinity(const EtaleAlgebra& e)
{
    unsigned rho = 0;
    for (const auto& c : e.components())
        rho += rho_infinity(c);
    return rho;
}

unsigned rho_infinity_unweighted(const EtaleAlgebra& e)
{
    unsigned rho = 0;
    for (const auto& c : e.components())
        rho += c.real_profile().unramified_real + c.real_profile().complex_pairs;
    return rho;
}

unsigned ramified_real_count(const EtaleAlgebra& e)
{
    unsigned r = 0;
    for (const auto& c : e.components())
        r += c.real_profile().ramified;
    return r;
}

// ---------------------------------------------------------------------------

SplitOracle::SplitOracle(const EtaleAlgebra& e, const AnnotationSet& annotations)
    : algebra_(e), annotations_(annotations)
{
}

SplitStatus SplitOracle::component(std::size_t i, const Place& v) const
{
    const auto key = std::make_pair(i, v);
    {
        std::shared_lock lock(mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second;
    }
    SplitStatus s = component_split_at(algebra_[i], i, v, annotations_);
    std::unique_lock lock(mutex_);
    return memo_.emplace(key, std::move(s)).first->second;
}

SplitStatus SplitOracle::algebra_at(const Place& v) const
{
    bool indeterminate = false;
    std::string reasons;
    for (std::size_t i = 0; i < algebra_.size(); ++i) {
        SplitStatus s = component(i, v);
        if (s.is_nonsplit())
            return s;
        if (s.is_indeterminate()) {
            indeterminate = true;
            if (!reasons.empty())
                reasons += "; ";
            reasons += "component " + std::to_string(i) + ": " + s.reason;
        }
    }
    return indeterminate ? SplitStatus::indeterminate(reasons) : SplitStatus::split();
}

} // namespace maxtorus
