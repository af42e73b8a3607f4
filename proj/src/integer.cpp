#include "maxtorus/arith.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <stdexcept>

namespace maxtorus {

namespace {

constexpr unsigned kTrialBound = 10000;

const std::vector<std::uint64_t>& small_primes()
{
    static const std::vector<std::uint64_t> table = primes_up_to(kTrialBound);
    return table;
}

bool miller_rabin_witness(const Integer& n, const Integer& d, unsigned s, unsigned long base)
{
    Integer a = base;
    Integer x;
    Integer nm1 = n - 1;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1)
        return false;
    for (unsigned r = 1; r < s; ++r) {
        x = (x * x) % n;
        if (x == nm1)
            return false;
    }
    return true;
}

// Brent's variant of Pollard rho. Returns a nontrivial divisor of the
// composite n, retrying with fresh constants when a cycle collapses.
Integer pollard_brent(const Integer& n)
{
    if (mpz_even_p(n.get_mpz_t()))
        return 2;
    Integer root;
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        return root;
    }
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, ys, q = 1, g = 1;
        std::uint64_t r = 1;
        const std::uint64_t m = 64;
        auto step = [&](const Integer& v) -> Integer { return (v * v + c) % n; };
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i)
                y = step(y);
            std::uint64_t k = 0;
            do {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = step(y);
                    Integer diff = abs(x - y);
                    q = (q * diff) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = step(ys);
                Integer diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void split_into(const Integer& n, std::vector<Integer>& out)
{
    if (n == 1)
        return;
    if (is_probable_prime(n)) {
        out.push_back(n);
        return;
    }
    Integer d = pollard_brent(n);
    split_into(d, out);
    split_into(n / d, out);
}

} // namespace

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& x)
{
    if (x.get_den() == 1)
        return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound)
{
    std::vector<std::uint64_t> primes;
    if (bound < 2)
        return primes;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i])
            continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i)
            composite[j] = true;
    }
    return primes;
}

bool is_probable_prime(const Integer& n)
{
    static constexpr unsigned long kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29,
                                               31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
    if (n < 2)
        return false;
    for (unsigned long b : kBases) {
        if (n == b)
            return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), b))
            return false;
    }
    Integer d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    for (unsigned long b : kBases)
        if (miller_rabin_witness(n, d, s, b))
            return false;
    return true;
}

Integer next_prime(const Integer& n)
{
    Integer c = n < 2 ? Integer(2) : Integer(n + 1);
    while (!is_probable_prime(c))
        ++c;
    return c;
}

Factorization factor_integer(const Integer& n)
{
    if (n == 0)
        throw std::domain_error("factor_integer: zero has no factorization");
    Factorization result;
    result.sign = n < 0 ? -1 : 1;
    Integer m = abs(n);
    for (std::uint64_t p : small_primes()) {
        if (m == 1)
            break;
        if (Integer(p) * p > m)
            break;
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        if (e)
            result.factors.push_back({Integer(p), e});
    }
    if (m == 1)
        return result;
    std::vector<Integer> large;
    split_into(m, large);
    std::sort(large.begin(), large.end());
    for (const Integer& p : large) {
        if (!result.factors.empty() && result.factors.back().prime == p)
            ++result.factors.back().exponent;
        else
            result.factors.push_back({p, 1});
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    return result;
}

// ---------------------------------------------------------------------------

SquareClass SquareClass::of(const Rational& input)
{
    Rational x = input;
    x.canonicalize();
    if (x == 0)
        throw std::domain_error("squarefree_part: zero has no square class");
    // num/den and num*den differ by the square den^2.
    Factorization fn = factor_integer(x.get_num());
    Factorization fd = factor_integer(x.get_den());
    std::vector<Integer> odd;
    auto collect = [&](const Factorization& f) {
        for (const auto& pp : f.factors)
            if (pp.exponent % 2)
                odd.push_back(pp.prime);
    };
    collect(fn);
    collect(fd);
    std::sort(odd.begin(), odd.end());
    // A prime appearing oddly in both numerator and denominator cancels;
    // coprimality of num and den makes that impossible, so no dedup needed.
    SquareClass c;
    c.rep_ = fn.sign;
    for (const Integer& p : odd)
        c.rep_ *= p;
    c.primes_ = std::move(odd);
    return c;
}

SquareClass SquareClass::operator*(const SquareClass& other) const
{
    SquareClass c;
    std::set_symmetric_difference(primes_.begin(), primes_.end(), other.primes_.begin(),
                                  other.primes_.end(), std::back_inserter(c.primes_));
    c.rep_ = sign() * other.sign();
    for (const Integer& p : c.primes_)
        c.rep_ *= p;
    return c;
}

SquareClass SquareClass::operator-() const
{
    SquareClass c = *this;
    c.rep_ = -c.rep_;
    return c;
}

SquareClass squarefree_part(const Rational& x) { return SquareClass::of(x); }

// ---------------------------------------------------------------------------

Place Place::finite(const Integer& p)
{
    if (!is_probable_prime(p))
        throw std::domain_error("place: " + p.get_str() + " is not prime");
    return Place(p);
}

std::string Place::to_string() const
{
    return is_infinite() ? std::string("inf") : prime_.get_str();
}

Place Place::parse(const std::string& text)
{
    if (text == "inf")
        return infinity();
    Integer p;
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos
        || p.set_str(text, 10) != 0)
        throw std::domain_error("place: cannot parse '" + text + "'");
    return finite(p);
}

PlaceSet symmetric_difference(const PlaceSet& a, const PlaceSet& b)
{
    PlaceSet out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::inserter(out, out.end()));
    return out;
}

std::string to_string(const PlaceSet& places)
{
    std::string s = "{";
    bool first = true;
    for (const Place& v : places) {
        if (!first)
            s += ", ";
        s += v.to_string();
        first = false;
    }
    return s + "}";
}

// ---------------------------------------------------------------------------

int legendre_symbol(const Integer& a, const Integer& p)
{
    if (p == 2)
        throw std::domain_error("legendre_symbol: p must be an odd prime");
    if (p < 3 || mpz_even_p(p.get_mpz_t()))
        throw std::domain_error("legendre_symbol: p must be an odd prime");
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return mpz_legendre(r.get_mpz_t(), p.get_mpz_t());
}

int hilbert_symbol(const SquareClass& a, const SquareClass& b, const Place& v)
{
    const Integer& x = a.rep();
    const Integer& y = b.rep();
    if (v.is_infinite())
        return (x < 0 && y < 0) ? 1 : 0;
    const Integer& p = v.prime();
    const bool alpha = mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t());
    const bool beta = mpz_divisible_p(y.get_mpz_t(), p.get_mpz_t());
    Integer u = x, w = y;
    if (alpha)
        mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), p.get_mpz_t());
    if (beta)
        mpz_divexact(w.get_mpz_t(), w.get_mpz_t(), p.get_mpz_t());
    if (p == 2) {
        const unsigned long u8 = mpz_fdiv_ui(u.get_mpz_t(), 8);
        const unsigned long w8 = mpz_fdiv_ui(w.get_mpz_t(), 8);
        const int eps_u = (u8 % 4 == 3), eps_w = (w8 % 4 == 3);
        const int om_u = (u8 == 3 || u8 == 5), om_w = (w8 == 3 || w8 == 5);
        return (eps_u & eps_w) ^ (alpha & om_w) ^ (beta & om_u);
    }
    int bit = 0;
    if (alpha && beta && mpz_fdiv_ui(p.get_mpz_t(), 4) == 3)
        bit ^= 1;
    if (beta && legendre_symbol(u, p) == -1)
        bit ^= 1;
    if (alpha && legendre_symbol(w, p) == -1)
        bit ^= 1;
    return bit;
}

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v)
{
    if (a == 0 || b == 0)
        throw std::domain_error("hilbert_symbol: arguments must be nonzero");
    return hilbert_symbol(SquareClass::of(a), SquareClass::of(b), v);
}

bool is_local_square(const SquareClass& c, const Place& v)
{
    const Integer& x = c.rep();
    if (v.is_infinite())
        return x > 0;
    const Integer& p = v.prime();
    if (mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t()))
        return false;
    if (p == 2)
        return mpz_fdiv_ui(x.get_mpz_t(), 8) == 1;
    return legendre_symbol(x, p) == 1;
}

} // namespace maxtorus
