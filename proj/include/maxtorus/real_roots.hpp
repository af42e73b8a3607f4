#ifndef MAXTORUS_REAL_ROOTS_HPP
#define MAXTORUS_REAL_ROOTS_HPP

#include "maxtorus/poly.hpp"

#include <vector>

namespace maxtorus {

// A real root known to lie in the half-open interval (lo, hi].
struct RootInterval {
    Rational lo;
    Rational hi;
};

// Sturm-sequence isolation of the real roots of a rational polynomial.
// The input is replaced by its squarefree kernel, so repeated roots are
// reported once.
class RealRootIsolator {
public:
    explicit RealRootIsolator(const PolyQ& f);

    const PolyQ& polynomial() const { return f_; }
    // Isolating intervals, pairwise disjoint, in increasing order.
    const std::vector<RootInterval>& roots() const { return roots_; }

    // Number of distinct roots in (a, b].
    std::size_t count_in(const Rational& a, const Rational& b) const;
    // Sign variations of the Sturm sequence at x.
    std::size_t variations_at(const Rational& x) const;
    // Variations at -inf and +inf (from leading coefficients).
    std::size_t variations_at_minus_infinity() const;
    std::size_t variations_at_plus_infinity() const;

    // Bisect root i until its interval is at most `width` wide.
    void refine(std::size_t i, const Rational& width);
    // Sign of g at root i. g must not vanish there (for instance, g coprime
    // to the isolated polynomial). Refines the interval as needed.
    int sign_at(std::size_t i, const PolyQ& g);

private:
    void bisect(std::size_t i);

    PolyQ f_;
    std::vector<PolyQ> sturm_;
    std::vector<RootInterval> roots_;
};

// Isolating intervals of the real roots of f.
std::vector<RootInterval> sturm_real_roots(const PolyQ& f);

} // namespace maxtorus

#endif
