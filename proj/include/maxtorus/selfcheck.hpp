#ifndef MAXTORUS_SELFCHECK_HPP
#define MAXTORUS_SELFCHECK_HPP

#include "maxtorus/etale.hpp"
#include "maxtorus/oracle.hpp"
#include "maxtorus/poly_fp.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace maxtorus {

// Independent reference computations, slow but straightforward.

// Solvability of a x^2 + b y^2 = z^2 over Q_v by exhaustive search: sign
// analysis at inf, primitive solutions mod 16 at 2, and for odd p the two
// normalized cases x = 1 and y = 1 (x divisible by p) searched mod p^3.
int hilbert_symbol_brute_force(const Rational& a, const Rational& b, const Place& v);

// Splitting of a component at p from residue degrees: every place of F over
// p splits iff the factor degrees of h mod p are those of f mod p, each
// taken twice. nullopt where the comparison is not valid (p = 2, p dividing
// a denominator, or f or h not squarefree mod p).
std::optional<SplitKind> split_brute_force(const Component& c, std::uint64_t p);

// Irreducibility of a monic polynomial over F_p: trial division for degree
// at most 3, the Rabin test otherwise.
bool is_irreducible_mod_p(const PolyFp& g);

struct PoolAlgebra {
    std::string name;
    EtaleAlgebra algebra;
};

// Quadratic, CM quartic, real/mixed quartic, sextic and product algebras.
std::vector<PoolAlgebra> algebra_pool();

// Random unit of E^sigma with integer coefficients in [-bound, bound].
AlgebraElement random_fixed_unit(const EtaleAlgebra& e, std::mt19937_64& rng, long bound);

struct CheckResult {
    explicit CheckResult(std::string n) : name(std::move(n)) {}

    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::vector<std::string> messages; // first few failures

    bool ok() const { return cases > 0 && failures == 0; }
    void fail(const std::string& message);
};

CheckResult check_hilbert_brute_force(std::size_t pairs, std::uint64_t seed);
CheckResult check_hilbert_bilinear(std::size_t triples, std::uint64_t seed);
CheckResult check_square_classes(std::size_t cases, std::uint64_t seed);
CheckResult check_factor_mod_p(std::size_t cases, std::uint64_t seed);
CheckResult check_real_roots(std::size_t cases, std::uint64_t seed);
CheckResult check_qform_laws(std::size_t cases, std::uint64_t seed);
CheckResult check_splitting(std::size_t cases, std::uint64_t seed);
CheckResult check_trace_form_disc(std::size_t cases, std::uint64_t seed);
CheckResult check_trace_form_signature(std::size_t cases, std::uint64_t seed);
CheckResult check_split_places_hyperbolic(std::size_t cases, std::uint64_t seed);
CheckResult check_both_local_bits(unsigned height);

// Every suite above at its documented size.
std::vector<CheckResult> run_selftest(std::uint64_t seed);

} // namespace maxtorus

#endif
