#ifndef MAXTORUS_ORACLE_HPP
#define MAXTORUS_ORACLE_HPP

#include "maxtorus/etale.hpp"
#include "maxtorus/qform.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace maxtorus {

// An element of E = prod Q[y]/(h_i), one reduced polynomial per component.
struct AlgebraElement {
    std::vector<PolyQ> parts;

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

// Reduces each part modulo its component's minimal polynomial.
AlgebraElement reduce(const EtaleAlgebra& e, AlgebraElement x);
AlgebraElement multiply(const EtaleAlgebra& e, const AlgebraElement& a, const AlgebraElement& b);

// y_i -> -y_i in every component.
AlgebraElement sigma_apply(const EtaleAlgebra& e, const AlgebraElement& x);
bool is_sigma_fixed(const EtaleAlgebra& e, const AlgebraElement& x);
bool is_unit(const EtaleAlgebra& e, const AlgebraElement& x);

// Element of E^sigma from integer coefficients of y^0, y^2, y^4, ... per
// component.
AlgebraElement fixed_element(const std::vector<std::vector<long>>& coeffs);

// Trace of multiplication by x on Q[y]/(h).
Rational component_trace(const PolyQ& h, const PolyQ& x);

struct TraceFormResult {
    RationalMatrix gram;
    QuadraticSpace diagonalized;
    QFInvariants invariants;
};

// q_alpha(x, y) = Tr(alpha x sigma(y)) in the monomial basis y_i^t. Throws
// std::domain_error when alpha is not sigma-fixed and InputError("singular
// trace form") when alpha is not a unit.
TraceFormResult trace_form(const EtaleAlgebra& e, const AlgebraElement& alpha);

// Units of E^sigma with integer even-power coefficients in [-H, H]. The
// first component varies slowest; within a component vectors are ordered by
// sup-norm, then lexicographically in the value order 0, 1, -1, 2, -2, ...
// The visitor returns false to stop.
void enumerate_alpha(const EtaleAlgebra& e, unsigned height,
                     const std::function<bool(const AlgebraElement&)>& visit);
std::vector<AlgebraElement> enumerate_alpha(const EtaleAlgebra& e, unsigned height);

struct OracleResult {
    unsigned height = 0;
    std::uint64_t examined = 0;
    std::optional<AlgebraElement> alpha;
    std::optional<TraceFormResult> form;

    bool found() const { return alpha.has_value(); }
};

// First alpha in enumeration order with q_alpha equivalent to q over Q.
// Throws InputError on a rank mismatch.
OracleResult oracle_search(const EtaleAlgebra& e, const QuadraticSpace& q, unsigned height);

// (2 r_alpha + rho, 2 s_alpha + rho), with r_alpha, s_alpha the numbers of
// ramified real embeddings of E^sigma where alpha is positive, negative.
// Signs are found by exact interval refinement.
Signature predicted_signature(const EtaleAlgebra& e, const AlgebraElement& alpha);

} // namespace maxtorus

#endif
