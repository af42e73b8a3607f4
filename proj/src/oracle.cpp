#include "maxtorus/oracle.hpp"
#include "maxtorus/engine.hpp"
#include "maxtorus/error.hpp"
#include "maxtorus/real_roots.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace maxtorus {

namespace {

void require_shape(const EtaleAlgebra& e, const AlgebraElement& x)
{
    if (x.parts.size() != e.size())
        throw std::invalid_argument("algebra element has " + std::to_string(x.parts.size())
                                    + " parts, algebra has " + std::to_string(e.size()) + " components");
}

PolyQ negate_odd(const PolyQ& p)
{
    std::vector<Rational> c = p.coeffs();
    for (std::size_t k = 1; k < c.size(); k += 2)
        c[k] = -c[k];
    return PolyQ(std::move(c));
}

// Traces Tr(y^m), m < count, in Q[y]/(h).
std::vector<Rational> power_traces(const PolyQ& h, std::size_t count)
{
    std::vector<Rational> out;
    PolyQ power = PolyQ::constant(1);
    for (std::size_t m = 0; m < count; ++m) {
        out.push_back(component_trace(h, power));
        power = (power * PolyQ::x()) % h;
    }
    return out;
}

// Gram block of q_alpha on one component: (u, v) -> (-1)^v Tr(alpha y^(u+v)).
RationalMatrix trace_block(const PolyQ& h, const PolyQ& alpha)
{
    const std::size_t d = static_cast<std::size_t>(h.degree());
    const std::vector<Rational> tr = power_traces(h, d);
    std::vector<Rational> t;
    PolyQ shifted = alpha % h;
    for (std::size_t m = 0; m + 1 < 2 * d; ++m) {
        Rational acc = 0;
        for (std::size_t k = 0; k < d; ++k)
            acc += shifted[k] * tr[k];
        t.push_back(acc);
        shifted = (shifted * PolyQ::x()) % h;
    }
    RationalMatrix g(d, std::vector<Rational>(d));
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v)
            g[u][v] = v % 2 ? Rational(-t[u + v]) : t[u + v];
    return g;
}

int value_rank(long x) { return x == 0 ? 0 : (x > 0 ? 2 * static_cast<int>(x) - 1 : 2 * static_cast<int>(-x)); }

// Nonzero coefficient vectors of E_i^sigma in enumeration order.
std::vector<std::vector<long>> component_vectors(std::size_t length, unsigned height)
{
    std::vector<std::vector<long>> out;
    std::vector<long> cur(length, -static_cast<long>(height));
    for (;;) {
        if (std::any_of(cur.begin(), cur.end(), [](long x) { return x != 0; }))
            out.push_back(cur);
        std::size_t k = 0;
        while (k < length && cur[k] == static_cast<long>(height))
            cur[k++] = -static_cast<long>(height);
        if (k == length)
            break;
        ++cur[k];
    }
    auto norm = [](const std::vector<long>& v) {
        long m = 0;
        for (long x : v)
            m = std::max(m, std::labs(x));
        return m;
    };
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        const long na = norm(a), nb = norm(b);
        if (na != nb)
            return na < nb;
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k] != b[k])
                return value_rank(a[k]) < value_rank(b[k]);
        return false;
    });
    return out;
}

PolyQ even_poly(const std::vector<long>& coeffs)
{
    std::vector<Rational> c(2 * coeffs.size(), Rational(0));
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        c[2 * k] = coeffs[k];
    return PolyQ(std::move(c));
}

} // namespace

AlgebraElement reduce(const EtaleAlgebra& e, AlgebraElement x)
{
    require_shape(e, x);
    for (std::size_t i = 0; i < e.size(); ++i)
        x.parts[i] = x.parts[i] % e[i].min_poly();
    return x;
}

AlgebraElement multiply(const EtaleAlgebra& e, const AlgebraElement& a, const AlgebraElement& b)
{
    require_shape(e, a);
    require_shape(e, b);
    AlgebraElement out;
    for (std::size_t i = 0; i < e.size(); ++i)
        out.parts.push_back((a.parts[i] * b.parts[i]) % e[i].min_poly());
    return out;
}

AlgebraElement sigma_apply(const EtaleAlgebra& e, const AlgebraElement& x)
{
    const AlgebraElement r = reduce(e, x);
    AlgebraElement out;
    for (const auto& p : r.parts)
        out.parts.push_back(negate_odd(p));
    return out;
}

bool is_sigma_fixed(const EtaleAlgebra& e, const AlgebraElement& x) { return sigma_apply(e, x) == reduce(e, x); }

bool is_unit(const EtaleAlgebra& e, const AlgebraElement& x)
{
    const AlgebraElement r = reduce(e, x);
    for (std::size_t i = 0; i < e.size(); ++i)
        if (r.parts[i].is_zero() || resultant(e[i].min_poly(), r.parts[i]) == 0)
            return false;
    return true;
}

AlgebraElement fixed_element(const std::vector<std::vector<long>>& coeffs)
{
    AlgebraElement out;
    for (const auto& c : coeffs)
        out.parts.push_back(even_poly(c));
    return out;
}

Rational component_trace(const PolyQ& h, const PolyQ& x)
{
    // Column t of the multiplication matrix is x y^t mod h; the trace sums
    // the diagonal entries.
    const std::size_t d = static_cast<std::size_t>(h.degree());
    Rational tr = 0;
    PolyQ col = x % h;
    for (std::size_t t = 0; t < d; ++t) {
        tr += col[t];
        col = (col * PolyQ::x()) % h;
    }
    return tr;
}

TraceFormResult trace_form(const EtaleAlgebra& e, const AlgebraElement& alpha)
{
    const AlgebraElement a = reduce(e, alpha);
    if (!is_sigma_fixed(e, a))
        throw std::domain_error("trace_form: alpha is not fixed by sigma");
    if (!is_unit(e, a))
        throw InputError("singular trace form");

    const std::size_t m = e.rank();
    RationalMatrix gram(m, std::vector<Rational>(m, Rational(0)));
    std::size_t offset = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        const RationalMatrix block = trace_block(e[i].min_poly(), a.parts[i]);
        for (std::size_t u = 0; u < block.size(); ++u)
            for (std::size_t v = 0; v < block.size(); ++v)
                gram[offset + u][offset + v] = block[u][v];
        offset += block.size();
    }
    QuadraticSpace diag = diagonalize_gram(gram);
    QFInvariants inv = invariants(diag);
    return {std::move(gram), std::move(diag), std::move(inv)};
}

void enumerate_alpha(const EtaleAlgebra& e, unsigned height, const std::function<bool(const AlgebraElement&)>& visit)
{
    if (height == 0)
        return;
    std::vector<std::vector<PolyQ>> choices;
    for (const auto& c : e.components()) {
        std::vector<PolyQ> units;
        for (const auto& v : component_vectors(c.base_degree(), height)) {
            PolyQ p = even_poly(v);
            if (resultant(c.min_poly(), p) != 0)
                units.push_back(std::move(p));
        }
        if (units.empty())
            return;
        choices.push_back(std::move(units));
    }
    std::vector<std::size_t> idx(e.size(), 0);
    for (;;) {
        AlgebraElement x;
        for (std::size_t i = 0; i < e.size(); ++i)
            x.parts.push_back(choices[i][idx[i]]);
        if (!visit(x))
            return;
        std::size_t k = e.size();
        while (k > 0) {
            --k;
            if (++idx[k] < choices[k].size())
                break;
            idx[k] = 0;
            if (k == 0)
                return;
        }
    }
}

std::vector<AlgebraElement> enumerate_alpha(const EtaleAlgebra& e, unsigned height)
{
    std::vector<AlgebraElement> out;
    enumerate_alpha(e, height, [&](const AlgebraElement& x) {
        out.push_back(x);
        return true;
    });
    return out;
}

OracleResult oracle_search(const EtaleAlgebra& e, const QuadraticSpace& q, unsigned height)
{
    require_matching_rank(e, q);
    const QFInvariants target = invariants(q);
    OracleResult r;
    r.height = height;

    // q_alpha is the orthogonal sum of per-component blocks, so each block
    // is diagonalized once per component value.
    std::vector<std::map<std::vector<Rational>, QuadraticSpace>> cache(e.size());
    auto block_space = [&](std::size_t i, const PolyQ& a) -> const QuadraticSpace& {
        auto it = cache[i].find(a.coeffs());
        if (it == cache[i].end())
            it = cache[i].emplace(a.coeffs(), diagonalize_gram(trace_block(e[i].min_poly(), a))).first;
        return it->second;
    };

    enumerate_alpha(e, height, [&](const AlgebraElement& alpha) {
        ++r.examined;
        std::vector<Rational> diag;
        for (std::size_t i = 0; i < e.size(); ++i) {
            const auto& d = block_space(i, alpha.parts[i]).diagonal();
            diag.insert(diag.end(), d.begin(), d.end());
        }
        QuadraticSpace candidate(std::move(diag));
        if (!(signature(candidate) == target.signature))
            return true;
        if (!(invariants(candidate) == target))
            return true;
        r.alpha = alpha;
        r.form = trace_form(e, alpha);
        return false;
    });
    return r;
}

Signature predicted_signature(const EtaleAlgebra& e, const AlgebraElement& alpha)
{
    const AlgebraElement a = reduce(e, alpha);
    if (!is_sigma_fixed(e, a))
        throw std::domain_error("predicted_signature: alpha is not fixed by sigma");
    unsigned positive = 0, negative = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        const Component& c = e[i];
        // alpha_i = a(y^2) = a(theta(Y)) as an element of F = Q[Y]/(f).
        const PolyQ& part = a.parts[i];
        PolyQ in_f;
        PolyQ theta_power = PolyQ::constant(1);
        for (int k = 0; k <= part.degree(); k += 2) {
            in_f += theta_power * part[static_cast<std::size_t>(k)];
            theta_power = (theta_power * c.theta()) % c.base_poly();
        }
        in_f = in_f % c.base_poly();
        if (in_f.is_zero())
            throw InputError("singular trace form");
        RealRootIsolator roots(c.base_poly());
        for (std::size_t r = 0; r < roots.roots().size(); ++r) {
            if (roots.sign_at(r, c.theta()) > 0)
                continue;
            (roots.sign_at(r, in_f) > 0 ? positive : negative)++;
        }
    }
    const unsigned rho = rho_infinity(e);
    return {2 * positive + rho, 2 * negative + rho};
}

} // namespace maxtorus
