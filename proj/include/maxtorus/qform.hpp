#ifndef MAXTORUS_QFORM_HPP
#define MAXTORUS_QFORM_HPP

#include "maxtorus/arith.hpp"

#include <optional>
#include <vector>

namespace maxtorus {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct Signature {
    unsigned positive = 0;
    unsigned negative = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

// A nondegenerate quadratic space over Q in diagonal presentation.
class QuadraticSpace {
public:
    // Throws InputError("degenerate form") if an entry is zero.
    explicit QuadraticSpace(std::vector<Rational> diagonal,
                            std::optional<RationalMatrix> gram = std::nullopt);

    std::size_t dim() const { return diagonal_.size(); }
    const std::vector<Rational>& diagonal() const { return diagonal_; }
    const std::vector<SquareClass>& entry_classes() const { return classes_; }
    const std::optional<RationalMatrix>& original_gram() const { return gram_; }

    // Orthogonal sum.
    QuadraticSpace operator+(const QuadraticSpace& other) const;

private:
    std::vector<Rational> diagonal_;
    std::vector<SquareClass> classes_;
    std::optional<RationalMatrix> gram_;
};

struct QFInvariants {
    std::size_t dim = 0;
    SquareClass det;
    SquareClass disc;
    PlaceSet hasse_support;
    Signature signature;

    friend bool operator==(const QFInvariants& a, const QFInvariants& b)
    {
        return a.dim == b.dim && a.det == b.det && a.disc == b.disc
            && a.hasse_support == b.hasse_support && a.signature == b.signature;
    }
};

// The hyperbolic space of dimension 2n: n copies of <1,-1>.
struct HyperbolicForm {
    std::size_t n;
    QuadraticSpace space() const;
};

// Congruent diagonalization by symmetric elimination. Pivot policy: the
// first nonzero diagonal entry; when the remaining block has a zero
// diagonal, e_i -> e_i + e_j creates one. Throws InputError on a
// non-square, non-symmetric or singular matrix.
QuadraticSpace diagonalize_gram(const RationalMatrix& gram);

// (-1)^(m(m-1)/2) det for dimension m.
SquareClass disc_from_det(const SquareClass& det, std::size_t dim);

QFInvariants invariants(const QuadraticSpace& q);
int local_hasse_bit(const QuadraticSpace& q, const Place& v);
Signature signature(const QuadraticSpace& q);

// Places where w(h_{2n}) is nontrivial: {2, inf} when n(n-1)/2 is odd.
PlaceSet hyperbolic_hasse_support(std::size_t dim);
int hyperbolic_hasse_bit(std::size_t dim, const Place& v);

// Hasse-Minkowski: equal dimension, determinant, Hasse support, signature.
bool equivalent_over_q(const QuadraticSpace& a, const QuadraticSpace& b);

// Places where w(q) differs from w(h_dim). Throws std::domain_error for odd
// dimension.
PlaceSet hyperbolic_deviation_set(const QuadraticSpace& q);
PlaceSet hyperbolic_deviation_set(const QFInvariants& inv);

// q is isometric to h_dim over Q_v. Throws std::domain_error for odd
// dimension.
bool is_locally_hyperbolic(const QuadraticSpace& q, const Place& v);

// Hasse bit of a real form with the given signature: (-1,-1) counted once
// per pair of negative entries.
int real_hasse_bit(const Signature& s);

} // namespace maxtorus

#endif
