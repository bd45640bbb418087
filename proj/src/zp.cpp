#include "galwit/zp.hpp"

#include "galwit/error.hpp"

#include <algorithm>
#include <random>

namespace galwit {

PolyZp::PolyZp(std::uint64_t p, Coeffs c) : p_(p), c_(std::move(c))
{
    for (auto& x : c_)
        x %= p_;
    trim();
}

PolyZp PolyZp::from(const PolyQ& f, std::uint64_t p)
{
    Coeffs c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = reduce_mod(f.coeffs()[i], p);
    return PolyZp(p, std::move(c));
}

void PolyZp::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

PolyZp PolyZp::monic() const
{
    if (is_zero())
        return *this;
    std::uint64_t inv = invmod(lead(), p_);
    return *this * inv;
}

PolyZp PolyZp::derivative() const
{
    if (c_.size() <= 1)
        return PolyZp(p_);
    Coeffs d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = mulmod(c_[i], i % p_, p_);
    return PolyZp(p_, std::move(d));
}

std::uint64_t PolyZp::eval(std::uint64_t x) const
{
    std::uint64_t r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = (mulmod(r, x, p_) + *it) % p_;
    return r;
}

PolyZp operator+(const PolyZp& a, const PolyZp& b)
{
    PolyZp::Coeffs c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) {
        c[i] += b.c_[i];
        if (c[i] >= a.p_)
            c[i] -= a.p_;
    }
    return PolyZp(a.p_, std::move(c));
}

PolyZp operator-(const PolyZp& a, const PolyZp& b)
{
    PolyZp::Coeffs c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
        c[i] = c[i] >= b.c_[i] ? c[i] - b.c_[i] : c[i] + a.p_ - b.c_[i];
    return PolyZp(a.p_, std::move(c));
}

PolyZp operator*(const PolyZp& a, const PolyZp& b)
{
    if (a.is_zero() || b.is_zero())
        return PolyZp(a.p_);
    const std::uint64_t p = a.p_;
    std::vector<unsigned __int128> acc(a.c_.size() + b.c_.size() - 1, 0);
    // accumulate without reduction while products stay below 2^128
    const bool small = p < (1ULL << 32);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            acc[i + j] += static_cast<unsigned __int128>(a.c_[i]) * b.c_[j];
            if (!small)
                acc[i + j] %= p;
        }
    }
    PolyZp::Coeffs c(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i)
        c[i] = static_cast<std::uint64_t>(acc[i] % p);
    return PolyZp(p, std::move(c));
}

PolyZp operator*(const PolyZp& a, std::uint64_t s)
{
    PolyZp::Coeffs c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = mulmod(a.c_[i], s, a.p_);
    return PolyZp(a.p_, std::move(c));
}

std::pair<PolyZp, PolyZp> divrem(const PolyZp& f, const PolyZp& g)
{
    if (g.is_zero())
        fail(ErrorKind::DivisionByZero, "division by zero polynomial mod p");
    const std::uint64_t p = f.modulus();
    if (f.degree() < g.degree())
        return {PolyZp(p), f};
    PolyZp::Coeffs r = f.coeffs();
    PolyZp::Coeffs q(static_cast<std::size_t>(f.degree() - g.degree() + 1), 0);
    std::uint64_t inv = invmod(g.lead(), p);
    int dg = g.degree();
    const auto& gc = g.coeffs();
    for (int i = f.degree(); i >= dg; --i) {
        std::uint64_t c = mulmod(r[static_cast<std::size_t>(i)], inv, p);
        if (c == 0)
            continue;
        q[static_cast<std::size_t>(i - dg)] = c;
        for (int j = 0; j <= dg; ++j) {
            auto& x = r[static_cast<std::size_t>(i - dg + j)];
            std::uint64_t t = mulmod(c, gc[static_cast<std::size_t>(j)], p);
            x = x >= t ? x - t : x + p - t;
        }
    }
    r.resize(static_cast<std::size_t>(dg));
    return {PolyZp(p, std::move(q)), PolyZp(p, std::move(r))};
}

PolyZp rem(const PolyZp& f, const PolyZp& g) { return divrem(f, g).second; }

std::uint64_t resultant(const PolyZp& a, const PolyZp& b)
{
    const std::uint64_t p = a.modulus();
    if (a.is_zero() || b.is_zero())
        return 0;
    PolyZp x = a, y = b;
    std::uint64_t res = 1;
    while (y.degree() > 0) {
        PolyZp r = rem(x, y);
        if (r.is_zero())
            return 0;
        int dx = x.degree(), dy = y.degree(), dr = r.degree();
        if ((dx & 1) && (dy & 1))
            res = (p - res) % p;
        res = mulmod(res, powmod(y.lead(), static_cast<std::uint64_t>(dx - dr), p), p);
        x = std::move(y);
        y = std::move(r);
    }
    return mulmod(res, powmod(y.lead(), static_cast<std::uint64_t>(x.degree()), p), p);
}

PolyZp gcd(const PolyZp& f, const PolyZp& g)
{
    PolyZp a = f, b = g;
    while (!b.is_zero()) {
        PolyZp r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

PolyZp xgcd(const PolyZp& f, const PolyZp& g, PolyZp& s, PolyZp& t)
{
    const std::uint64_t p = f.modulus();
    PolyZp r0 = f, r1 = g;
    PolyZp s0(p, {1}), s1(p), t0(p), t1(p, {1});
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        PolyZp s2 = s0 - q * s1;
        PolyZp t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    std::uint64_t inv = invmod(r0.lead(), p);
    s = s0 * inv;
    t = t0 * inv;
    return r0 * inv;
}

PolyZp powmod(const PolyZp& base, const Integer& e, const PolyZp& modulus)
{
    const std::uint64_t p = base.modulus();
    PolyZp result(p, {1});
    result = rem(result, modulus);
    PolyZp b = rem(base, modulus);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = rem(result * result, modulus);
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = rem(result * b, modulus);
    }
    return result;
}

bool is_squarefree(const PolyZp& f)
{
    if (f.degree() <= 0)
        return true;
    PolyZp d = f.derivative();
    if (d.is_zero())
        return false;
    return gcd(f, d).degree() == 0;
}

std::vector<std::pair<int, PolyZp>> distinct_degree_factor(const PolyZp& f)
{
    const std::uint64_t p = f.modulus();
    std::vector<std::pair<int, PolyZp>> out;
    PolyZp g = f.monic();
    PolyZp x(p, {0, 1});
    PolyZp h = rem(x, g);
    Integer pz(static_cast<unsigned long>(p));
    int d = 0;
    while (g.degree() >= 2 * (d + 1)) {
        ++d;
        h = powmod(h, pz, g);
        PolyZp fac = gcd(g, h - x);
        if (fac.degree() > 0) {
            out.emplace_back(d, fac);
            g = divrem(g, fac).first;
            h = rem(h, g);
        }
    }
    if (g.degree() > 0)
        out.emplace_back(g.degree(), g);
    return out;
}

std::vector<int> factor_degrees(const PolyZp& f)
{
    std::vector<int> out;
    for (const auto& [d, fac] : distinct_degree_factor(f))
        for (int i = 0; i < fac.degree() / d; ++i)
            out.push_back(d);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void equal_degree_split(const PolyZp& f, int d, std::mt19937_64& rng, std::vector<PolyZp>& out)
{
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const std::uint64_t p = f.modulus();
    if (p == 2)
        fail(ErrorKind::InvalidArgument, "equal-degree splitting needs an odd prime");
    Integer q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, static_cast<unsigned long>(d));
    Integer e = (q - 1) / 2;
    while (true) {
        PolyZp::Coeffs c(static_cast<std::size_t>(f.degree()));
        for (auto& x : c)
            x = rng() % p;
        PolyZp a(p, std::move(c));
        if (a.degree() <= 0)
            continue;
        PolyZp g = gcd(a, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(divrem(f, g).first, d, rng, out);
            return;
        }
        PolyZp b = powmod(a, e, f) - PolyZp(p, {1});
        g = gcd(b, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(divrem(f, g).first, d, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<PolyZp> factor_squarefree(const PolyZp& f)
{
    std::vector<PolyZp> out;
    if (f.degree() <= 0)
        return out;
    std::mt19937_64 rng(0x5eed + f.modulus());
    for (const auto& [d, fac] : distinct_degree_factor(f))
        equal_degree_split(fac, d, rng, out);
    std::sort(out.begin(), out.end(), [](const PolyZp& a, const PolyZp& b) {
        if (a.degree() != b.degree())
            return a.degree() < b.degree();
        return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(), b.coeffs().rbegin(),
                                            b.coeffs().rend());
    });
    return out;
}

std::vector<std::uint64_t> roots(const PolyZp& f)
{
    std::vector<std::uint64_t> out;
    if (f.degree() <= 0)
        return out;
    const std::uint64_t p = f.modulus();
    PolyZp g = f.monic();
    PolyZp x(p, {0, 1});
    PolyZp xp = powmod(x, Integer(static_cast<unsigned long>(p)), g);
    PolyZp lin = gcd(g, xp - x);
    if (lin.degree() <= 0)
        return out;
    if (p == 2) {
        for (std::uint64_t r = 0; r < 2; ++r)
            if (lin.eval(r) == 0)
                out.push_back(r);
        return out;
    }
    std::vector<PolyZp> facs;
    std::mt19937_64 rng(0xabc + p);
    equal_degree_split(lin, 1, rng, facs);
    for (const auto& l : facs)
        out.push_back((p - l.coeff(0)) % p);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace galwit
