#include "maxtorus/real_roots.hpp"

#include <stdexcept>

namespace maxtorus {

namespace {

int sign_of(const Rational& x) { return sgn(x); }

std::size_t count_variations(const std::vector<int>& signs)
{
    std::size_t v = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++v;
        last = s;
    }
    return v;
}

// Every real root has absolute value below 1 + max |a_i / a_n|.
Rational cauchy_bound(const PolyQ& f)
{
    Rational m = 0;
    for (int i = 0; i < f.degree(); ++i) {
        Rational r = abs(f[i] / f.lc());
        if (r > m)
            m = r;
    }
    return m + 1;
}

} // namespace

RealRootIsolator::RealRootIsolator(const PolyQ& f)
{
    if (f.is_zero())
        throw std::domain_error("RealRootIsolator: zero polynomial");
    f_ = squarefree_kernel(f);
    if (f_.degree() < 1)
        return;
    sturm_.push_back(f_);
    sturm_.push_back(f_.derivative());
    while (sturm_.back().degree() > 0) {
        PolyQ r = -(sturm_[sturm_.size() - 2] % sturm_.back());
        if (r.is_zero())
            break;
        sturm_.push_back(std::move(r));
    }

    const Rational bound = cauchy_bound(f_);
    struct Pending {
        Rational lo, hi;
        std::size_t count;
    };
    std::vector<Pending> stack{{-bound, bound, count_in(-bound, bound)}};
    std::vector<RootInterval> found;
    while (!stack.empty()) {
        Pending cur = stack.back();
        stack.pop_back();
        if (cur.count == 0)
            continue;
        if (cur.count == 1) {
            found.push_back({cur.lo, cur.hi});
            continue;
        }
        const Rational mid = (cur.lo + cur.hi) / 2;
        const std::size_t left = count_in(cur.lo, mid);
        stack.push_back({mid, cur.hi, cur.count - left});
        stack.push_back({cur.lo, mid, left});
    }
    roots_ = std::move(found);
}

std::size_t RealRootIsolator::variations_at(const Rational& x) const
{
    std::vector<int> signs;
    signs.reserve(sturm_.size());
    for (const auto& p : sturm_)
        signs.push_back(sign_of(p.eval(x)));
    return count_variations(signs);
}

std::size_t RealRootIsolator::variations_at_minus_infinity() const
{
    std::vector<int> signs;
    for (const auto& p : sturm_)
        signs.push_back(p.degree() % 2 ? -sign_of(p.lc()) : sign_of(p.lc()));
    return count_variations(signs);
}

std::size_t RealRootIsolator::variations_at_plus_infinity() const
{
    std::vector<int> signs;
    for (const auto& p : sturm_)
        signs.push_back(sign_of(p.lc()));
    return count_variations(signs);
}

std::size_t RealRootIsolator::count_in(const Rational& a, const Rational& b) const
{
    if (sturm_.empty())
        return 0;
    return variations_at(a) - variations_at(b);
}

void RealRootIsolator::bisect(std::size_t i)
{
    RootInterval& r = roots_.at(i);
    const Rational mid = (r.lo + r.hi) / 2;
    if (count_in(r.lo, mid) == 1)
        r.hi = mid;
    else
        r.lo = mid;
}

void RealRootIsolator::refine(std::size_t i, const Rational& width)
{
    while (roots_.at(i).hi - roots_.at(i).lo > width)
        bisect(i);
}

int RealRootIsolator::sign_at(std::size_t i, const PolyQ& g)
{
    if (g.is_zero())
        throw std::domain_error("sign_at: zero polynomial");
    if (g.degree() == 0)
        return sign_of(g.lc());
    const PolyQ common = gcd(f_, g);
    if (common.degree() > 0) {
        const RealRootIsolator shared(common);
        if (shared.count_in(roots_.at(i).lo, roots_.at(i).hi) > 0)
            throw std::domain_error("sign_at: polynomial vanishes at the root");
    }
    const RealRootIsolator other(g);
    for (;;) {
        const RootInterval& r = roots_.at(i);
        const Rational vlo = g.eval(r.lo);
        if (vlo != 0 && other.count_in(r.lo, r.hi) == 0)
            return sign_of(vlo);
        bisect(i);
    }
}

std::vector<RootInterval> sturm_real_roots(const PolyQ& f) { return RealRootIsolator(f).roots(); }

} // namespace maxtorus
