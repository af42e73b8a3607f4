#include "maxtorus/qform.hpp"
#include "maxtorus/error.hpp"

#include <stdexcept>

namespace maxtorus {

QuadraticSpace::QuadraticSpace(std::vector<Rational> diagonal, std::optional<RationalMatrix> gram)
    : diagonal_(std::move(diagonal)), gram_(std::move(gram))
{
    classes_.reserve(diagonal_.size());
    for (auto& a : diagonal_) {
        a.canonicalize();
        if (a == 0)
            throw InputError("degenerate form");
        classes_.push_back(SquareClass::of(a));
    }
}

QuadraticSpace QuadraticSpace::operator+(const QuadraticSpace& other) const
{
    std::vector<Rational> d = diagonal_;
    d.insert(d.end(), other.diagonal_.begin(), other.diagonal_.end());
    return QuadraticSpace(std::move(d));
}

QuadraticSpace HyperbolicForm::space() const
{
    std::vector<Rational> d;
    for (std::size_t i = 0; i < n; ++i) {
        d.emplace_back(1);
        d.emplace_back(-1);
    }
    return QuadraticSpace(std::move(d));
}

QuadraticSpace diagonalize_gram(const RationalMatrix& gram)
{
    const std::size_t m = gram.size();
    for (const auto& row : gram)
        if (row.size() != m)
            throw InputError("gram matrix must be square");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (gram[i][j] != gram[j][i])
                throw InputError("gram matrix must be symmetric");

    RationalMatrix a = gram;
    for (auto& row : a)
        for (auto& x : row)
            x.canonicalize();
    std::vector<Rational> diag;
    for (std::size_t k = 0; k < m; ++k) {
        std::size_t piv = k;
        while (piv < m && a[piv][piv] == 0)
            ++piv;
        if (piv == m) {
            // No diagonal pivot left: find an off-diagonal entry and add
            // e_j to e_i, which makes a[i][i] = 2 a[i][j].
            std::size_t pi = m, pj = m;
            for (std::size_t i = k; i < m && pi == m; ++i)
                for (std::size_t j = i + 1; j < m; ++j)
                    if (a[i][j] != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == m)
                throw InputError("degenerate form");
            for (std::size_t c = 0; c < m; ++c)
                a[pi][c] += a[pj][c];
            for (std::size_t r = 0; r < m; ++r)
                a[r][pi] += a[r][pj];
            piv = pi;
        }
        if (piv != k) {
            std::swap(a[piv], a[k]);
            for (auto& row : a)
                std::swap(row[piv], row[k]);
        }
        const Rational pivot = a[k][k];
        // Schur complement of the pivot on the trailing block.
        for (std::size_t r = k + 1; r < m; ++r) {
            if (a[r][k] == 0)
                continue;
            const Rational f = a[r][k] / pivot;
            for (std::size_t c = k + 1; c < m; ++c)
                a[r][c] -= f * a[k][c];
        }
        for (std::size_t r = k + 1; r < m; ++r)
            a[r][k] = a[k][r] = 0;
        diag.push_back(pivot);
    }
    return QuadraticSpace(std::move(diag), gram);
}

SquareClass disc_from_det(const SquareClass& det, std::size_t dim)
{
    const std::size_t pairs = dim * (dim - (dim > 0 ? 1 : 0)) / 2;
    return pairs % 2 ? -det : det;
}

Signature signature(const QuadraticSpace& q)
{
    Signature s;
    for (const auto& a : q.diagonal())
        (a > 0 ? s.positive : s.negative)++;
    return s;
}

int local_hasse_bit(const QuadraticSpace& q, const Place& v)
{
    const auto& c = q.entry_classes();
    int bit = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            bit ^= hilbert_symbol(c[i], c[j], v);
    return bit;
}

QFInvariants invariants(const QuadraticSpace& q)
{
    QFInvariants inv;
    inv.dim = q.dim();
    for (const auto& c : q.entry_classes())
        inv.det = inv.det * c;
    inv.disc = disc_from_det(inv.det, inv.dim);
    inv.signature = signature(q);

    // Symbols vanish away from inf, 2 and the primes of the entries.
    PlaceSet candidates{Place::infinity(), Place::finite(2)};
    for (const auto& c : q.entry_classes())
        for (const auto& p : c.primes())
            candidates.insert(Place::finite(p));
    for (const Place& v : candidates)
        if (local_hasse_bit(q, v))
            inv.hasse_support.insert(v);
    return inv;
}

PlaceSet hyperbolic_hasse_support(std::size_t dim)
{
    const std::size_t n = dim / 2;
    if ((n * (n - (n > 0 ? 1 : 0)) / 2) % 2)
        return {Place::infinity(), Place::finite(2)};
    return {};
}

int hyperbolic_hasse_bit(std::size_t dim, const Place& v)
{
    return hyperbolic_hasse_support(dim).count(v) ? 1 : 0;
}

bool equivalent_over_q(const QuadraticSpace& a, const QuadraticSpace& b)
{
    if (a.dim() != b.dim())
        return false;
    return invariants(a) == invariants(b);
}

PlaceSet hyperbolic_deviation_set(const QFInvariants& inv)
{
    if (inv.dim % 2)
        throw std::domain_error("hyperbolic_deviation_set: odd dimension");
    return symmetric_difference(inv.hasse_support, hyperbolic_hasse_support(inv.dim));
}

PlaceSet hyperbolic_deviation_set(const QuadraticSpace& q) { return hyperbolic_deviation_set(invariants(q)); }

bool is_locally_hyperbolic(const QuadraticSpace& q, const Place& v)
{
    if (q.dim() % 2)
        throw std::domain_error("is_locally_hyperbolic: odd dimension");
    const std::size_t n = q.dim() / 2;
    if (v.is_infinite()) {
        const Signature s = signature(q);
        return s.positive == n && s.negative == n;
    }
    SquareClass det;
    for (const auto& c : q.entry_classes())
        det = det * c;
    const SquareClass hyperbolic_det = SquareClass::of(n % 2 ? -1 : 1);
    if (!is_local_square(det * hyperbolic_det, v))
        return false;
    return local_hasse_bit(q, v) == hyperbolic_hasse_bit(q.dim(), v);
}

int real_hasse_bit(const Signature& s) { return static_cast<int>((s.negative * (s.negative - (s.negative ? 1 : 0)) / 2) % 2); }

} // namespace maxtorus
