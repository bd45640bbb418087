#include "nf_internal.hpp"
#include "galwit/zp.hpp"

#include <algorithm>

namespace galwit {

using detail::IntPoly;

namespace detail {

PolyZp reduce_int(const IntPoly& f, std::uint64_t p)
{
    PolyZp::Coeffs c(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        c[i] = reduce_mod(f[i], p);
    return PolyZp(p, std::move(c));
}

} // namespace detail

namespace {

Integer from_word(std::uint64_t w)
{
    Integer z(static_cast<unsigned long>(w >> 32));
    z <<= 32;
    z += static_cast<unsigned long>(w & 0xffffffffu);
    return z;
}

} // namespace

namespace nf {

std::optional<std::vector<Rational>> reconstruct_multimodular(
    std::size_t n, const std::function<std::optional<std::vector<std::uint64_t>>(std::uint64_t)>& solve,
    const std::function<bool(const std::vector<Rational>&)>& accept, int max_primes)
{
    Integer modulus = 1;
    std::vector<Integer> residues(n);
    std::optional<std::vector<Rational>> previous;
    std::uint64_t p = std::uint64_t{1} << 61;
    // reconstruction is tried on a geometric schedule of prime counts
    int used = 0, next_try = 1;
    for (int attempt = 0; attempt < max_primes; ++attempt) {
        p = next_prime_above(p);
        auto sol = solve(p);
        if (!sol)
            continue;
        Integer pz = from_word(p);
        Integer minv;
        mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
        for (std::size_t i = 0; i < n; ++i) {
            Integer t = (from_word((*sol)[i]) - residues[i]) * minv;
            mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), pz.get_mpz_t());
            residues[i] += modulus * t;
        }
        modulus *= pz;
        if (++used < next_try)
            continue;
        next_try = used + std::max(1, used / 2);
        // most entries share a denominator; try it before a full reconstruction
        std::vector<Rational> values;
        values.reserve(n);
        Integer bound = sqrt(modulus / 2), half = modulus / 2, den = 1;
        bool ok = true;
        for (const auto& r : residues) {
            Integer t = r * den;
            mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), modulus.get_mpz_t());
            if (t > half)
                t -= modulus;
            Rational q;
            if (abs(t) <= bound) {
                q = Rational(t, den);
                q.canonicalize();
            } else if (rational_reconstruct(r, modulus, q)) {
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
            } else {
                ok = false;
                break;
            }
            values.push_back(std::move(q));
        }
        if (!ok) {
            previous.reset();
            continue;
        }
        if (previous && *previous == values && accept(values))
            return values;
        previous = std::move(values);
    }
    return std::nullopt;
}

} // namespace nf

namespace {

Integer norm1(const IntPoly& f)
{
    Integer s = 0;
    for (const auto& c : f)
        s += abs(c);
    return s;
}

// coefficients of the polynomial taking value ys[i] at i, modulo p
std::vector<std::uint64_t> interpolate_at_naturals(std::vector<std::uint64_t> dd, std::uint64_t p)
{
    const int top = static_cast<int>(dd.size()) - 1;
    for (int j = 1; j <= top; ++j) {
        std::uint64_t inv = invmod(static_cast<std::uint64_t>(j), p);
        for (int i = top; i >= j; --i) {
            auto& cur = dd[static_cast<std::size_t>(i)];
            cur = mulmod((cur + p - dd[static_cast<std::size_t>(i - 1)]) % p, inv, p);
        }
    }
    std::vector<std::uint64_t> r{dd[static_cast<std::size_t>(top)]};
    for (int i = top - 1; i >= 0; --i) {
        // r = r * (x - i) + dd[i]
        r.insert(r.begin(), 0);
        for (std::size_t k = 0; k + 1 < r.size(); ++k)
            r[k] = (r[k] + p - mulmod(r[k + 1], static_cast<std::uint64_t>(i), p)) % p;
        r[0] = (r[0] + dd[static_cast<std::size_t>(i)]) % p;
    }
    return r;
}

} // namespace

Integer nf::root_bound(const PolyQ& f)
{
    // 2 max |a_{n-i} / a_n|^{1/i}, with the constant term halved
    const int n = f.degree();
    Integer best = 1;
    for (int i = 1; i <= n; ++i) {
        Rational v = abs(f.coeff(n - i) / f.lead());
        if (i == n)
            v /= 2;
        Integer u;
        mpz_cdiv_q(u.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
        Integer r;
        mpz_root(r.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>(i));
        Integer check;
        mpz_pow_ui(check.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
        if (check < u)
            ++r;
        if (r > best)
            best = r;
    }
    return 2 * best;
}

PolyQ shifted_norm(const PolyK& g, long s) { return nf::shifted_norm(g, s, nullptr); }

PolyQ nf::shifted_norm(const PolyK& g, long s, const Integer* integral_roots)
{
    const NumberField& k = g.field;
    const int n = g.degree();
    if (n < 0)
        return PolyQ();
    const int dim = k.degree();
    const int total = dim * n;
    const IntPoly& big_m = k.int_min_poly();

    // g = G/d with integral coefficients in t
    Integer d = 1;
    for (const auto& c : g.c)
        d = lcm(d, c.denominator());
    // H(x, t) = sum_i G_i(t) (x - s t)^i, stored by powers of t
    std::vector<IntPoly> h;
    const Integer shift(s);
    for (int i = n; i >= 0; --i) {
        std::vector<IntPoly> next(h.size() + 1);
        for (std::size_t j = 0; j < h.size(); ++j) {
            IntPoly& a = next[j];
            if (a.size() < h[j].size() + 1)
                a.resize(h[j].size() + 1);
            for (std::size_t e = 0; e < h[j].size(); ++e)
                a[e + 1] += h[j][e];
            IntPoly& b = next[j + 1];
            if (b.size() < h[j].size())
                b.resize(h[j].size());
            for (std::size_t e = 0; e < h[j].size(); ++e)
                b[e] -= shift * h[j][e];
        }
        const NFElement& ci = g.c[static_cast<std::size_t>(i)];
        Integer scale = d / ci.denominator();
        const IntPoly& num = ci.numerator();
        if (next.size() < num.size())
            next.resize(num.size());
        for (std::size_t j = 0; j < num.size(); ++j) {
            if (next[j].empty())
                next[j].resize(1);
            next[j][0] += scale * num[j];
        }
        for (auto& x : next)
            detail::trim(x);
        while (!next.empty() && next.back().empty())
            next.pop_back();
        h = std::move(next);
    }
    if (h.empty())
        return PolyQ();
    const int e_deg = static_cast<int>(h.size()) - 1;
    const Integer& lead = big_m.back();

    // Z(x) = Res_t(M, H) = L^E d^D N(x); Hadamard bound with 1-norm entries
    Integer m2 = 0, hrow = 0;
    for (const auto& c : big_m)
        m2 += c * c;
    for (const auto& hj : h) {
        Integer t = norm1(hj);
        hrow += t * t;
    }
    Integer bound = 1;
    for (int i = 0; i < e_deg; ++i)
        bound *= m2;
    for (int i = 0; i < dim; ++i)
        bound *= hrow;
    bound = 2 * (sqrt(bound) + 1);
    Integer denom = 1;
    for (int i = 0; i < e_deg; ++i)
        denom *= lead;
    for (int i = 0; i < dim; ++i)
        denom *= d;

    // monic N over Z with roots beta + s theta of bounded size
    bool integral = false;
    if (integral_roots && k.is_integral() && g.lead() == k.one()) {
        Integer r = *integral_roots + abs(shift) * root_bound(k.min_poly()) + 1;
        Integer b2;
        mpz_pow_ui(b2.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(total));
        b2 *= 2;
        if (b2 < bound) {
            integral = true;
            bound = b2;
        }
    }

    std::vector<Integer> value(static_cast<std::size_t>(total) + 1);
    Integer modulus = 1;
    std::uint64_t p = std::uint64_t{1} << 61;
    while (modulus <= bound) {
        p = next_prime_above(p);
        std::uint64_t lp = reduce_mod(lead, p);
        std::uint64_t dp = reduce_mod(denom, p);
        if (lp == 0 || dp == 0)
            continue;
        PolyZp mp = detail::reduce_int(big_m, p).monic();
        // Res(m, h) is the norm; scale to Z or to N
        std::uint64_t factor = integral ? invmod(powmod(reduce_mod(d, p), static_cast<std::uint64_t>(dim), p), p)
                                        : powmod(lp, static_cast<std::uint64_t>(e_deg), p);
        std::vector<PolyZp> hp;
        hp.reserve(h.size());
        for (const auto& hj : h)
            hp.push_back(detail::reduce_int(hj, p));
        std::vector<std::uint64_t> ys(static_cast<std::size_t>(total) + 1);
        for (int x0 = 0; x0 <= total; ++x0) {
            PolyZp::Coeffs c(h.size());
            for (std::size_t j = 0; j < h.size(); ++j)
                c[j] = hp[j].eval(static_cast<std::uint64_t>(x0));
            PolyZp at = rem(PolyZp(p, std::move(c)), mp);
            ys[static_cast<std::size_t>(x0)] = mulmod(resultant(mp, at), factor, p);
        }
        std::vector<std::uint64_t> coeffs = interpolate_at_naturals(std::move(ys), p);
        Integer pz = from_word(p);
        Integer minv;
        mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
        for (std::size_t i = 0; i < value.size(); ++i) {
            std::uint64_t r = i < coeffs.size() ? coeffs[i] : 0;
            Integer t = (from_word(r) - value[i]) * minv;
            mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), pz.get_mpz_t());
            value[i] += modulus * t;
        }
        modulus *= pz;
    }
    Integer half = modulus / 2;
    std::vector<Rational> out;
    out.reserve(value.size());
    for (auto& v : value) {
        if (v > half)
            v -= modulus;
        Rational q(v, integral ? Integer(1) : denom);
        q.canonicalize();
        out.push_back(q);
    }
    return PolyQ(std::move(out));
}

} // namespace galwit

namespace galwit::detail {

namespace {

using galwit::from_word;

Integer norm2_ceil(const IntPoly& f)
{
    Integer s = 0;
    for (const auto& c : f)
        s += c * c;
    Integer r = sqrt(s);
    if (r * r < s)
        ++r;
    return r;
}

} // namespace

Integer resultant_modular(IntPoly a, IntPoly b)
{
    trim(a);
    trim(b);
    if (a.empty() || b.empty())
        return 0;
    if (deg(a) == 0 && deg(b) == 0)
        return 1;
    Integer bound, t;
    mpz_pow_ui(bound.get_mpz_t(), norm2_ceil(a).get_mpz_t(), static_cast<unsigned long>(deg(b)));
    mpz_pow_ui(t.get_mpz_t(), norm2_ceil(b).get_mpz_t(), static_cast<unsigned long>(deg(a)));
    bound *= t * 2;
    Integer modulus = 1, value = 0;
    std::uint64_t p = std::uint64_t{1} << 61;
    while (modulus <= bound) {
        p = next_prime_above(p);
        if (reduce_mod(a.back(), p) == 0 || reduce_mod(b.back(), p) == 0)
            continue;
        Integer pz = from_word(p);
        Integer r = from_word(resultant(reduce_int(a, p), reduce_int(b, p)));
        Integer minv;
        mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
        Integer k = (r - value) * minv;
        mpz_fdiv_r(k.get_mpz_t(), k.get_mpz_t(), pz.get_mpz_t());
        value += modulus * k;
        modulus *= pz;
    }
    if (value > modulus / 2)
        value -= modulus;
    return value;
}

} // namespace galwit::detail
