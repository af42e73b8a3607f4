#include "maxtorus/poly.hpp"
#include "maxtorus/poly_fp.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace maxtorus {

PolyQ::PolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
    for (auto& x : c_)
        x.canonicalize();
    trim();
}

PolyQ::PolyQ(std::initializer_list<long> coeffs)
{
    for (long x : coeffs)
        c_.emplace_back(x);
    trim();
}

PolyQ PolyQ::constant(const Rational& c) { return PolyQ(std::vector<Rational>{c}); }

PolyQ PolyQ::monomial(const Rational& c, std::size_t k)
{
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return PolyQ(std::move(v));
}

void PolyQ::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

const Rational& PolyQ::lc() const
{
    if (c_.empty())
        throw std::domain_error("PolyQ::lc: zero polynomial");
    return c_.back();
}

Rational PolyQ::operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

Rational PolyQ::eval(const Rational& x) const
{
    Rational r = 0;
    for (std::size_t k = c_.size(); k-- > 0;)
        r = r * x + c_[k];
    return r;
}

PolyQ PolyQ::derivative() const
{
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i)
        d.push_back(c_[i] * static_cast<unsigned long>(i));
    return PolyQ(std::move(d));
}

PolyQ PolyQ::monic() const
{
    if (c_.empty())
        return *this;
    PolyQ m = *this;
    const Rational inv = 1 / c_.back();
    for (auto& x : m.c_)
        x *= inv;
    return m;
}

PolyQ PolyQ::in_square() const
{
    if (c_.empty())
        return *this;
    std::vector<Rational> v(2 * c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        v[2 * i] = c_[i];
    return PolyQ(std::move(v));
}

bool PolyQ::is_even() const
{
    for (std::size_t i = 1; i < c_.size(); i += 2)
        if (c_[i] != 0)
            return false;
    return true;
}

PolyQ& PolyQ::operator+=(const PolyQ& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

PolyQ& PolyQ::operator*=(const Rational& s)
{
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_)
        x *= s;
    return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b)
{
    if (a.is_zero() || b.is_zero())
        return PolyQ();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    }
    return PolyQ(std::move(c));
}

PolyQ operator-(const PolyQ& a)
{
    PolyQ r = a;
    for (auto& x : r.c_)
        x = -x;
    return r;
}

std::string PolyQ::to_string(const char* var) const
{
    if (c_.empty())
        return "0";
    std::string s;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rational& c = c_[k];
        if (c == 0)
            continue;
        const bool neg = c < 0;
        const Rational mag = abs(c);
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (k == 0 || mag != 1)
            s += maxtorus::to_string(mag);
        if (k >= 1)
            s += var;
        if (k >= 2)
            s += "^" + std::to_string(k);
    }
    return s;
}

std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b)
{
    if (b.is_zero())
        throw std::domain_error("PolyQ division by zero");
    if (a.degree() < b.degree())
        return {PolyQ(), a};
    std::vector<Rational> r = a.coeffs();
    std::vector<Rational> q(a.degree() - b.degree() + 1, Rational(0));
    const int db = b.degree();
    const Rational inv = 1 / b.lc();
    for (int k = a.degree(); k >= db; --k) {
        if (r[k] == 0)
            continue;
        const Rational coef = r[k] * inv;
        q[k - db] = coef;
        for (int j = 0; j <= db; ++j)
            r[k - db + j] -= coef * b[j];
    }
    r.resize(db);
    return {PolyQ(std::move(q)), PolyQ(std::move(r))};
}

PolyQ operator%(const PolyQ& a, const PolyQ& b) { return divmod(a, b).second; }
PolyQ operator/(const PolyQ& a, const PolyQ& b) { return divmod(a, b).first; }

PolyQ gcd(const PolyQ& a, const PolyQ& b)
{
    PolyQ x = a, y = b;
    while (!y.is_zero()) {
        PolyQ r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

PolyQ squarefree_kernel(const PolyQ& f)
{
    if (f.degree() < 1)
        return f.monic();
    return (f / gcd(f, f.derivative())).monic();
}

Rational resultant(const PolyQ& f, const PolyQ& g)
{
    if (f.is_zero() || g.is_zero())
        return 0;
    Rational res = 1;
    PolyQ a = f, b = g;
    for (;;) {
        const int da = a.degree(), db = b.degree();
        if (db == 0) {
            Rational p;
            mpz_pow_ui(p.get_num_mpz_t(), b.lc().get_num_mpz_t(), da);
            mpz_pow_ui(p.get_den_mpz_t(), b.lc().get_den_mpz_t(), da);
            p.canonicalize();
            return res * p;
        }
        PolyQ r = a % b;
        if (r.is_zero())
            return 0;
        const int dr = r.degree();
        if ((da * db) % 2)
            res = -res;
        for (int i = 0; i < da - dr; ++i)
            res *= b.lc();
        a = std::move(b);
        b = std::move(r);
    }
}

Rational poly_discriminant(const PolyQ& f)
{
    const int n = f.degree();
    if (n < 1)
        throw std::domain_error("poly_discriminant: degree must be at least 1");
    Rational d = resultant(f, f.derivative()) / f.lc();
    if ((n * (n - 1) / 2) % 2)
        d = -d;
    return d;
}

int BivariatePolyQ::degree_x() const
{
    int d = -1;
    for (const auto& c : coeffs)
        d = std::max(d, c.degree());
    return d;
}

namespace {

Rational determinant(std::vector<std::vector<Rational>> m)
{
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0)
                continue;
            const Rational factor = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j)
                m[i][j] -= factor * m[k][j];
        }
    }
    return det;
}

// Sylvester determinant with formal degrees taken from the vector sizes.
Rational sylvester_resultant(const std::vector<Rational>& f, const std::vector<Rational>& g)
{
    const std::size_t m = f.size() - 1, k = g.size() - 1;
    const std::size_t n = m + k;
    if (n == 0)
        return 1;
    std::vector<std::vector<Rational>> s(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t row = 0; row < k; ++row)
        for (std::size_t j = 0; j <= m; ++j)
            s[row][row + j] = f[m - j];
    for (std::size_t row = 0; row < m; ++row)
        for (std::size_t j = 0; j <= k; ++j)
            s[k + row][row + j] = g[k - j];
    return determinant(std::move(s));
}

PolyQ interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys)
{
    // Newton divided differences.
    const std::size_t n = xs.size();
    std::vector<Rational> coef = ys;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i)
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
    PolyQ result = PolyQ::constant(coef[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) {
        result = result * PolyQ(std::vector<Rational>{-xs[i], Rational(1)});
        result += PolyQ::constant(coef[i]);
    }
    return result;
}

} // namespace

PolyQ resultant_y(const PolyQ& f, const BivariatePolyQ& g)
{
    if (f.is_zero() || g.coeffs.empty())
        throw std::domain_error("resultant_y: zero input");
    const int m = f.degree();
    const int bound = m * std::max(0, g.degree_x());
    std::vector<Rational> xs, ys;
    for (int t = 0; t <= bound; ++t) {
        const Rational x = t;
        std::vector<Rational> gy;
        for (const auto& c : g.coeffs)
            gy.push_back(c.eval(x));
        xs.push_back(x);
        ys.push_back(sylvester_resultant(f.coeffs(), gy));
    }
    return interpolate(xs, ys);
}

// ---------------------------------------------------------------------------
// Zassenhaus irreducibility test for monic integer polynomials.

namespace {

using ZPoly = std::vector<Integer>; // low degree first

void ztrim(ZPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

ZPoly zmul_mod(const ZPoly& a, const ZPoly& b, const Integer& mod)
{
    if (a.empty() || b.empty())
        return {};
    ZPoly c(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    for (auto& x : c)
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
    ztrim(c);
    return c;
}

ZPoly from_fp(const PolyFp& f)
{
    ZPoly z;
    for (auto c : f.coeffs())
        z.emplace_back(static_cast<unsigned long>(c));
    return z;
}

PolyFp to_fp(const ZPoly& z, std::uint64_t p)
{
    std::vector<std::uint64_t> c;
    for (const auto& x : z)
        c.push_back(mpz_fdiv_ui(x.get_mpz_t(), p));
    return PolyFp(p, std::move(c));
}

// s*a + t*b = 1 in F_p[x] for coprime a, b.
std::pair<PolyFp, PolyFp> ext_gcd(const PolyFp& a, const PolyFp& b)
{
    const std::uint64_t p = a.modulus();
    PolyFp r0 = a, r1 = b;
    PolyFp s0(p, {1}), s1(p, {}), t0(p, {}), t1(p, {1});
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        PolyFp s2 = s0 - q * s1;
        PolyFp t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.degree() != 0)
        throw std::logic_error("ext_gcd: inputs not coprime");
    const std::uint64_t inv = invmod(r0.lc(), p);
    const PolyFp scale(p, {inv});
    return {s0 * scale, t0 * scale};
}

// Lift monic g*h == target (mod p) to modulus p^levels.
std::pair<ZPoly, ZPoly> hensel_lift(const ZPoly& target, const PolyFp& g0, const PolyFp& h0,
                                    std::uint64_t p, unsigned levels)
{
    auto [s, t] = ext_gcd(g0, h0);
    ZPoly g = from_fp(g0), h = from_fp(h0);
    Integer pk = static_cast<unsigned long>(p);
    for (unsigned k = 1; k < levels; ++k) {
        const Integer next = pk * static_cast<unsigned long>(p);
        ZPoly gh = zmul_mod(g, h, next);
        ZPoly e(std::max(target.size(), gh.size()), Integer(0));
        for (std::size_t i = 0; i < e.size(); ++i) {
            Integer v = (i < target.size() ? target[i] : Integer(0)) - (i < gh.size() ? gh[i] : Integer(0));
            mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), next.get_mpz_t());
            e[i] = v / pk;
        }
        ztrim(e);
        const PolyFp ebar = to_fp(e, p);
        const PolyFp dg = (t * ebar) % g0;
        const PolyFp dh = (s * ebar) % h0;
        g.resize(std::max<std::size_t>(g.size(), dg.coeffs().size()), Integer(0));
        h.resize(std::max<std::size_t>(h.size(), dh.coeffs().size()), Integer(0));
        for (std::size_t i = 0; i < dg.coeffs().size(); ++i)
            g[i] += pk * static_cast<unsigned long>(dg.coeffs()[i]);
        for (std::size_t i = 0; i < dh.coeffs().size(); ++i)
            h[i] += pk * static_cast<unsigned long>(dh.coeffs()[i]);
        for (auto& x : g)
            mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), next.get_mpz_t());
        for (auto& x : h)
            mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), next.get_mpz_t());
        pk = next;
    }
    return {g, h};
}

// Exact division test of monic integer polynomials.
bool zdivides(const ZPoly& d, const ZPoly& f)
{
    if (d.size() > f.size())
        return false;
    if (f[0] != 0 && (d[0] == 0 || !mpz_divisible_p(f[0].get_mpz_t(), d[0].get_mpz_t())))
        return false;
    ZPoly r = f;
    const int dd = static_cast<int>(d.size()) - 1;
    for (int k = static_cast<int>(r.size()) - 1; k >= dd; --k) {
        const Integer c = r[k];
        if (c != 0)
            for (int j = 0; j <= dd; ++j)
                r[k - dd + j] -= c * d[j];
    }
    for (int i = 0; i < dd; ++i)
        if (r[i] != 0)
            return false;
    return true;
}

std::set<int> degree_sums(const std::vector<FpFactor>& factors)
{
    std::set<int> sums{0};
    for (const auto& f : factors)
        for (unsigned m = 0; m < f.multiplicity; ++m) {
            std::set<int> next = sums;
            for (int s : sums)
                next.insert(s + f.factor.degree());
            sums = std::move(next);
        }
    return sums;
}

} // namespace

bool is_irreducible_over_q(const PolyQ& f)
{
    const int n = f.degree();
    if (n < 1)
        return false;
    if (n == 1)
        return true;
    // Make monic with integer coefficients: c^n f(x/c).
    const PolyQ m = f.monic();
    Integer c = 1;
    for (const auto& a : m.coeffs())
        mpz_lcm(c.get_mpz_t(), c.get_mpz_t(), a.get_den_mpz_t());
    ZPoly F(n + 1);
    Integer cpow = 1;
    for (int i = n; i >= 0; --i) {
        Rational v = m[i] * Rational(cpow);
        v.canonicalize();
        F[i] = v.get_num();
        cpow *= c;
    }
    std::vector<Rational> Fq;
    for (const auto& x : F)
        Fq.emplace_back(x);
    const PolyQ FQ(Fq);
    if (gcd(FQ, FQ.derivative()).degree() > 0)
        return false;
    const Rational disc = poly_discriminant(FQ);

    std::set<int> possible;
    for (int d = 0; d <= n; ++d)
        possible.insert(d);
    std::vector<FpFactor> best;
    std::uint64_t best_p = 0;
    int tried = 0;
    for (std::uint64_t p = 3; tried < 6; p = next_prime(Integer(static_cast<unsigned long>(p))).get_ui()) {
        if (mpz_divisible_ui_p(disc.get_num_mpz_t(), p))
            continue;
        ++tried;
        auto factors = poly_factor_mod_p(to_fp(F, p));
        if (factors.size() == 1)
            return true;
        std::set<int> sums = degree_sums(factors), keep;
        std::set_intersection(possible.begin(), possible.end(), sums.begin(), sums.end(),
                              std::inserter(keep, keep.end()));
        possible = std::move(keep);
        if (possible.size() <= 2)
            return true;
        if (best.empty() || factors.size() < best.size()) {
            best = std::move(factors);
            best_p = p;
        }
    }

    // Landau-Mignotte: every coefficient of a monic factor is bounded by
    // 2^n * ||F||_2.
    Integer norm2 = 0;
    for (const auto& a : F)
        norm2 += a * a;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    const Integer bound = (Integer(1) << n) * (root + 1);
    unsigned levels = 1;
    Integer modulus = static_cast<unsigned long>(best_p);
    while (modulus <= 2 * bound) {
        modulus *= static_cast<unsigned long>(best_p);
        ++levels;
    }

    std::vector<ZPoly> lifted;
    ZPoly target = F;
    for (std::size_t i = 0; i + 1 < best.size(); ++i) {
        PolyFp rest(best_p, {1});
        for (std::size_t j = i + 1; j < best.size(); ++j)
            rest = rest * best[j].factor;
        auto [g, h] = hensel_lift(target, best[i].factor, rest, best_p, levels);
        lifted.push_back(std::move(g));
        target = std::move(h);
    }
    lifted.push_back(target);

    const Integer half = modulus / 2;
    const std::size_t r = lifted.size();
    std::vector<std::size_t> idx;
    for (std::size_t size = 1; 2 * size <= r; ++size) {
        idx.resize(size);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            ZPoly prod{Integer(1)};
            for (std::size_t i : idx)
                prod = zmul_mod(prod, lifted[i], modulus);
            for (auto& x : prod)
                if (x > half)
                    x -= modulus;
            if (zdivides(prod, F))
                return false;
            std::size_t pos = size;
            while (pos > 0 && idx[pos - 1] == r - size + pos - 1)
                --pos;
            if (pos == 0)
                break;
            ++idx[pos - 1];
            for (std::size_t j = pos; j < size; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    return true;
}

} // namespace maxtorus
