#include "maxtorus/poly_fp.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace maxtorus {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p)
{
    a %= p;
    if (a == 0)
        throw std::domain_error("invmod: zero has no inverse");
    return powmod(a, p - 2, p);
}

PolyFp::PolyFp(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs))
{
    for (auto& x : c_)
        x %= p_;
    trim();
}

PolyFp PolyFp::reduce(std::uint64_t p, const std::vector<Rational>& coeffs)
{
    std::vector<std::uint64_t> c;
    c.reserve(coeffs.size());
    for (const Rational& q : coeffs) {
        const unsigned long den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
        if (den == 0)
            throw std::domain_error("PolyFp::reduce: p divides a denominator");
        const unsigned long num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
        c.push_back(mulmod(num, invmod(den, p), p));
    }
    return PolyFp(p, std::move(c));
}

void PolyFp::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

PolyFp PolyFp::monic() const
{
    if (c_.empty())
        return *this;
    const std::uint64_t inv = invmod(c_.back(), p_);
    std::vector<std::uint64_t> c = c_;
    for (auto& x : c)
        x = mulmod(x, inv, p_);
    return PolyFp(p_, std::move(c));
}

PolyFp PolyFp::derivative() const
{
    std::vector<std::uint64_t> c;
    for (std::size_t i = 1; i < c_.size(); ++i)
        c.push_back(mulmod(c_[i], i % p_, p_));
    return PolyFp(p_, std::move(c));
}

PolyFp operator+(const PolyFp& a, const PolyFp& b)
{
    std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const std::uint64_t s = a[i] + b[i];
        c[i] = s >= a.p_ ? s - a.p_ : s;
    }
    return PolyFp(a.p_, std::move(c));
}

PolyFp operator-(const PolyFp& a, const PolyFp& b)
{
    std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + (a.p_ - b[i]);
    return PolyFp(a.p_, std::move(c));
}

PolyFp operator*(const PolyFp& a, const PolyFp& b)
{
    if (a.c_.empty() || b.c_.empty())
        return PolyFp(a.p_, {});
    std::vector<std::uint64_t> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            c[i + j] += mulmod(a.c_[i], b.c_[j], a.p_);
            if (c[i + j] >= a.p_)
                c[i + j] -= a.p_;
        }
    }
    return PolyFp(a.p_, std::move(c));
}

std::string PolyFp::to_string(const char* var) const
{
    if (c_.empty())
        return "0";
    std::string s;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k] == 0)
            continue;
        if (!s.empty())
            s += " + ";
        if (k == 0 || c_[k] != 1)
            s += std::to_string(c_[k]);
        if (k >= 1)
            s += var;
        if (k >= 2)
            s += "^" + std::to_string(k);
    }
    return s + " (mod " + std::to_string(p_) + ")";
}

std::pair<PolyFp, PolyFp> divmod(const PolyFp& a, const PolyFp& b)
{
    if (b.is_zero())
        throw std::domain_error("PolyFp division by zero");
    const std::uint64_t p = a.modulus();
    if (a.degree() < b.degree())
        return {PolyFp(p, {}), a};
    std::vector<std::uint64_t> r = a.coeffs();
    std::vector<std::uint64_t> q(a.degree() - b.degree() + 1, 0);
    const std::uint64_t inv = invmod(b.lc(), p);
    const int db = b.degree();
    for (int k = a.degree(); k >= db; --k) {
        const std::uint64_t coef = mulmod(r[k], inv, p);
        q[k - db] = coef;
        if (coef == 0)
            continue;
        for (int j = 0; j <= db; ++j) {
            const std::uint64_t t = mulmod(coef, b[j], p);
            r[k - db + j] = r[k - db + j] >= t ? r[k - db + j] - t : r[k - db + j] + (p - t);
        }
    }
    r.resize(db);
    return {PolyFp(p, std::move(q)), PolyFp(p, std::move(r))};
}

PolyFp operator%(const PolyFp& a, const PolyFp& b) { return divmod(a, b).second; }
PolyFp operator/(const PolyFp& a, const PolyFp& b) { return divmod(a, b).first; }

PolyFp gcd(const PolyFp& a, const PolyFp& b)
{
    PolyFp x = a, y = b;
    while (!y.is_zero()) {
        PolyFp r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

PolyFp powmod(const PolyFp& base, const Integer& e, const PolyFp& m)
{
    const std::uint64_t p = m.modulus();
    PolyFp result(p, {1});
    result = result % m;
    const PolyFp b = base % m;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0)
        return result;
    for (std::size_t i = bits; i-- > 0;) {
        result = (result * result) % m;
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = (result * b) % m;
    }
    return result;
}

namespace {

PolyFp pth_root(const PolyFp& f)
{
    const std::uint64_t p = f.modulus();
    std::vector<std::uint64_t> c;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p)
        c.push_back(f.coeffs()[i]);
    return PolyFp(p, std::move(c));
}

void squarefree_decompose(const PolyFp& f, unsigned scale, std::vector<FpFactor>& out)
{
    const std::uint64_t p = f.modulus();
    if (f.degree() < 1)
        return;
    const PolyFp df = f.derivative();
    if (df.is_zero()) {
        squarefree_decompose(pth_root(f), scale * static_cast<unsigned>(p), out);
        return;
    }
    PolyFp c = gcd(f, df);
    PolyFp w = f / c;
    unsigned i = 1;
    while (w.degree() > 0) {
        PolyFp y = gcd(w, c);
        PolyFp z = w / y;
        if (z.degree() > 0)
            out.push_back({z.monic(), i * scale});
        ++i;
        w = y;
        c = c / y;
    }
    if (c.degree() > 0)
        squarefree_decompose(pth_root(c).monic(), scale * static_cast<unsigned>(p), out);
}

std::vector<std::pair<PolyFp, int>> distinct_degree(const PolyFp& f)
{
    const std::uint64_t p = f.modulus();
    std::vector<std::pair<PolyFp, int>> out;
    const PolyFp x(p, {0, 1});
    PolyFp rest = f;
    PolyFp h = x % rest;
    for (int d = 1; rest.degree() >= 2 * d; ++d) {
        h = powmod(h, Integer(static_cast<unsigned long>(p)), rest);
        PolyFp g = gcd(h - x, rest);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            rest = rest / g;
            h = h % rest;
        }
    }
    if (rest.degree() > 0)
        out.emplace_back(rest.monic(), rest.degree());
    return out;
}

void equal_degree(const PolyFp& g, int d, std::mt19937_64& rng, std::vector<PolyFp>& out)
{
    if (g.degree() == d) {
        out.push_back(g.monic());
        return;
    }
    const std::uint64_t p = g.modulus();
    std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
    Integer exponent;
    if (p != 2) {
        mpz_ui_pow_ui(exponent.get_mpz_t(), p, static_cast<unsigned long>(d));
        exponent = (exponent - 1) / 2;
    }
    for (;;) {
        std::vector<std::uint64_t> c(g.degree());
        for (auto& x : c)
            x = coef(rng);
        PolyFp a(p, std::move(c));
        if (a.degree() < 1)
            continue;
        PolyFp candidate = gcd(a, g);
        if (candidate.degree() <= 0 || candidate.degree() == g.degree()) {
            PolyFp b;
            if (p == 2) {
                // Absolute trace a + a^2 + ... + a^(2^(d-1)) mod g.
                PolyFp term = a % g;
                b = term;
                for (int i = 1; i < d; ++i) {
                    term = (term * term) % g;
                    b = b + term;
                }
            } else {
                b = powmod(a, exponent, g) - PolyFp(p, {1});
            }
            candidate = gcd(b, g);
        }
        if (candidate.degree() > 0 && candidate.degree() < g.degree()) {
            equal_degree(candidate, d, rng, out);
            equal_degree(g / candidate, d, rng, out);
            return;
        }
    }
}

std::uint64_t seed_of(const PolyFp& f)
{
    std::uint64_t h = 1469598103934665603ULL ^ f.modulus();
    for (std::uint64_t c : f.coeffs()) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

bool factor_less(const FpFactor& a, const FpFactor& b)
{
    if (a.factor.degree() != b.factor.degree())
        return a.factor.degree() < b.factor.degree();
    return a.factor.coeffs() < b.factor.coeffs();
}

} // namespace

std::vector<FpFactor> poly_factor_mod_p(const PolyFp& f)
{
    if (f.degree() < 1)
        throw std::domain_error("poly_factor_mod_p: degree must be at least 1");
    std::mt19937_64 rng(seed_of(f));
    std::vector<FpFactor> sqf;
    squarefree_decompose(f.monic(), 1, sqf);
    std::vector<FpFactor> out;
    for (const auto& [part, mult] : sqf) {
        for (const auto& [block, d] : distinct_degree(part)) {
            std::vector<PolyFp> pieces;
            equal_degree(block, d, rng, pieces);
            for (auto& piece : pieces)
                out.push_back({std::move(piece), mult});
        }
    }
    std::sort(out.begin(), out.end(), factor_less);
    return out;
}

bool ff_is_square(const PolyFp& e, const PolyFp& g)
{
    const std::uint64_t p = g.modulus();
    if (p == 2)
        throw std::domain_error("ff_is_square: characteristic must be odd");
    const PolyFp r = e % g;
    if (r.is_zero())
        throw std::domain_error("ff_is_square: element vanishes in the residue field");
    Integer exponent;
    mpz_ui_pow_ui(exponent.get_mpz_t(), p, static_cast<unsigned long>(g.degree()));
    exponent = (exponent - 1) / 2;
    return powmod(r, exponent, g).is_one();
}

} // namespace maxtorus
