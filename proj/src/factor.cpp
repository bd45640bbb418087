#include "galwit/factor.hpp"

#include "galwit/error.hpp"
#include "galwit/zp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

namespace galwit {

namespace detail {

namespace {

// ---- arithmetic in (Z/M)[x] with non-negative residues

void reduce(IntPoly& f, const Integer& m)
{
    for (auto& c : f)
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    trim(f);
}

IntPoly mul_mod(const IntPoly& a, const IntPoly& b, const Integer& m)
{
    IntPoly r = mul(a, b);
    reduce(r, m);
    return r;
}

IntPoly add_mod(const IntPoly& a, const IntPoly& b, const Integer& m)
{
    IntPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] += b[i];
    reduce(r, m);
    return r;
}

IntPoly sub_mod(const IntPoly& a, const IntPoly& b, const Integer& m)
{
    IntPoly r = sub(a, b);
    reduce(r, m);
    return r;
}

/// Division by a monic h modulo m.
std::pair<IntPoly, IntPoly> divrem_monic(const IntPoly& a, const IntPoly& h, const Integer& m)
{
    int dh = deg(h);
    if (deg(a) < dh)
        return {IntPoly{}, a};
    IntPoly r = a;
    IntPoly q(static_cast<std::size_t>(deg(a) - dh + 1));
    for (int i = deg(a); i >= dh; --i) {
        Integer c = r[static_cast<std::size_t>(i)];
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (sgn(c) == 0)
            continue;
        q[static_cast<std::size_t>(i - dh)] = c;
        for (int j = 0; j <= dh; ++j)
            mpz_submul(r[static_cast<std::size_t>(i - dh + j)].get_mpz_t(), c.get_mpz_t(),
                       h[static_cast<std::size_t>(j)].get_mpz_t());
    }
    r.resize(static_cast<std::size_t>(dh));
    reduce(r, m);
    reduce(q, m);
    return {q, r};
}

IntPoly lift_zp(const PolyZp& f)
{
    IntPoly r;
    r.reserve(f.coeffs().size());
    for (auto c : f.coeffs())
        r.emplace_back(static_cast<unsigned long>(c));
    return r;
}

PolyZp to_zp(const IntPoly& f, std::uint64_t p)
{
    PolyZp::Coeffs c(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        c[i] = reduce_mod(f[i], p);
    return PolyZp(p, std::move(c));
}

Integer symmetric(const Integer& x, const Integer& m, const Integer& half)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    if (r > half)
        r -= m;
    return r;
}

struct Lifted {
    IntPoly g, h, s, t;
};

/// One quadratic Hensel step from modulus m to m2 = m^2.
void hensel_step(const IntPoly& f, Lifted& x, const Integer& m2)
{
    IntPoly e = sub_mod(f, mul_mod(x.g, x.h, m2), m2);
    auto [q, r] = divrem_monic(mul_mod(x.s, e, m2), x.h, m2);
    IntPoly g2 = add_mod(add_mod(x.g, mul_mod(x.t, e, m2), m2), mul_mod(q, x.g, m2), m2);
    IntPoly h2 = add_mod(x.h, r, m2);
    IntPoly one{Integer(1)};
    IntPoly b = sub_mod(add_mod(mul_mod(x.s, g2, m2), mul_mod(x.t, h2, m2), m2), one, m2);
    auto [c, d] = divrem_monic(mul_mod(x.s, b, m2), h2, m2);
    IntPoly s2 = sub_mod(x.s, d, m2);
    IntPoly t2 = sub_mod(sub_mod(x.t, mul_mod(x.t, b, m2), m2), mul_mod(c, g2, m2), m2);
    x = {std::move(g2), std::move(h2), std::move(s2), std::move(t2)};
}

/// Lifts the monic modular factors of f (f = lc * prod facs mod p) to
/// monic factors modulo p^(2^rounds).
void lift_tree(const IntPoly& f, const std::vector<PolyZp>& facs, std::size_t lo, std::size_t hi,
               std::uint64_t p, int rounds, const Integer& modulus, std::vector<IntPoly>& out)
{
    if (hi - lo == 1) {
        Integer inv;
        mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), modulus.get_mpz_t());
        IntPoly m = f;
        for (auto& c : m)
            c *= inv;
        reduce(m, modulus);
        out[lo] = std::move(m);
        return;
    }
    std::size_t mid = (lo + hi) / 2;
    PolyZp g0(p, {reduce_mod(f.back(), p)});
    for (std::size_t i = lo; i < mid; ++i)
        g0 = g0 * facs[i];
    PolyZp h0(p, {1});
    for (std::size_t i = mid; i < hi; ++i)
        h0 = h0 * facs[i];
    PolyZp s0(p), t0(p);
    xgcd(g0, h0, s0, t0);
    Lifted x{lift_zp(g0), lift_zp(h0), lift_zp(s0), lift_zp(t0)};
    Integer m(static_cast<unsigned long>(p));
    for (int i = 0; i < rounds; ++i) {
        m = m * m;
        hensel_step(f, x, m);
    }
    lift_tree(x.g, facs, lo, mid, p, rounds, modulus, out);
    lift_tree(x.h, facs, mid, hi, p, rounds, modulus, out);
}

struct Recombiner {
    IntPoly f;
    std::vector<IntPoly> u;
    Integer modulus, half;
    static constexpr int kPowerSums = 3;
    std::array<Integer, kPowerSums> power_bound;  // on lc(f)^k p_k over any factor
    std::vector<char> allowed;  // by degree, for factors of the original input
    std::vector<IntPoly> found;

    Integer lc_times_const(const std::vector<std::size_t>& pick) const
    {
        Integer c = f.back();
        for (auto i : pick) {
            c *= u[i][0];
            mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), modulus.get_mpz_t());
        }
        return symmetric(c, modulus, half);
    }

    bool try_subset(const std::vector<std::size_t>& pick)
    {
        IntPoly g{f.back()};
        for (auto i : pick)
            g = mul_mod(g, u[i], modulus);
        for (auto& c : g)
            c = symmetric(c, modulus, half);
        trim(g);
        g = primitive_part(g);
        if (sgn(g.back()) < 0)
            for (auto& c : g)
                c = -c;
        IntPoly q;
        if (!exact_divide(f, g, q))
            return false;
        found.push_back(std::move(g));
        f = std::move(q);
        return true;
    }

    void run()
    {
        // power sums of roots add up over a subset; lc^k p_k of a true factor is
        // an integer of size at most power_bound[k], hence near 0 mod M
        std::vector<std::array<double, kPowerSums>> frac(u.size());
        std::array<double, kPowerSums> slack{};
        std::array<bool, kPowerSums> use{};
        for (int k = 0; k < kPowerSums; ++k) {
            slack[static_cast<std::size_t>(k)] =
                std::ldexp(1.0, static_cast<int>(mpz_sizeinbase(power_bound[static_cast<std::size_t>(k)].get_mpz_t(), 2)) -
                                    static_cast<int>(mpz_sizeinbase(modulus.get_mpz_t(), 2)) + 1) +
                1e-9;
            use[static_cast<std::size_t>(k)] = slack[static_cast<std::size_t>(k)] < 0.25;
        }
        long em = 0;
        const double dm = mpz_get_d_2exp(&em, modulus.get_mpz_t());
        for (std::size_t i = 0; i < u.size(); ++i) {
            const int d = deg(u[i]);
            auto e = [&](int j) -> Integer {
                // elementary symmetric e_j = (-1)^j c_{d-j}
                if (j > d)
                    return 0;
                const Integer& c = u[i][static_cast<std::size_t>(d - j)];
                return j % 2 ? Integer(-c) : c;
            };
            std::array<Integer, kPowerSums> ps;
            ps[0] = e(1);
            ps[1] = e(1) * ps[0] - 2 * e(2);
            ps[2] = e(1) * ps[1] - e(2) * ps[0] + 3 * e(3);
            Integer lk = 1;
            for (int k = 0; k < kPowerSums; ++k) {
                lk *= f.back();
                Integer a = lk * ps[static_cast<std::size_t>(k)];
                mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t());
                long ea = 0;
                double da = mpz_get_d_2exp(&ea, a.get_mpz_t());
                frac[i][static_cast<std::size_t>(k)] = std::ldexp(da / dm, static_cast<int>(ea - em));
            }
        }
        auto near_integer = [&](const std::array<double, kPowerSums>& sum) {
            for (std::size_t k = 0; k < kPowerSums; ++k) {
                if (!use[k])
                    continue;
                double t = sum[k] - std::floor(sum[k]);
                if (t > slack[k] && t < 1 - slack[k])
                    return false;
            }
            return true;
        };

        std::vector<std::size_t> live(u.size());
        for (std::size_t i = 0; i < live.size(); ++i)
            live[i] = i;
        std::size_t s = 1;
        while (2 * s <= live.size()) {
            bool hit = false;
            std::vector<std::size_t> pick;
            Integer target = f.back() * f[0];
            // depth-first over s-subsets
            using Sums = std::array<double, kPowerSums>;
            std::function<bool(std::size_t, int, const Sums&)> dfs = [&](std::size_t from, int degree, const Sums& sum) -> bool {
                if (pick.size() == s) {
                    if (!allowed[static_cast<std::size_t>(degree)])
                        return false;
                    if (!near_integer(sum))
                        return false;
                    Integer c = lc_times_const(pick);
                    if (sgn(c) == 0 || !mpz_divisible_p(target.get_mpz_t(), c.get_mpz_t()))
                        return false;
                    return try_subset(pick);
                }
                for (std::size_t k = from; k + (s - pick.size()) <= live.size(); ++k) {
                    std::size_t idx = live[k];
                    pick.push_back(idx);
                    Sums next = sum;
                    for (std::size_t j = 0; j < kPowerSums; ++j)
                        next[j] += frac[idx][j];
                    if (dfs(k + 1, degree + deg(u[idx]), next))
                        return true;
                    pick.pop_back();
                }
                return false;
            };
            if (dfs(0, 0, Sums{})) {
                hit = true;
                std::vector<std::size_t> rest;
                for (auto i : live)
                    if (std::find(pick.begin(), pick.end(), i) == pick.end())
                        rest.push_back(i);
                live = std::move(rest);
            }
            if (!hit)
                ++s;
        }
        if (deg(f) > 0)
            found.push_back(f);
    }
};

} // namespace

std::vector<char> reachable_degrees(const std::vector<int>& pattern, int total)
{
    std::vector<char> can(static_cast<std::size_t>(total) + 1, 0);
    can[0] = 1;
    for (int d : pattern)
        for (int s = total; s >= d; --s)
            if (can[static_cast<std::size_t>(s - d)])
                can[static_cast<std::size_t>(s)] = 1;
    return can;
}

std::vector<IntPoly> factor_squarefree_int(const IntPoly& input, const ZassenhausOptions& opts)
{
    IntPoly f = input;
    trim(f);
    if (deg(f) <= 0)
        return {};
    std::vector<IntPoly> out;
    if (sgn(f[0]) == 0) {
        // squarefree, so x divides at most once
        out.push_back(IntPoly{Integer(0), Integer(1)});
        f.erase(f.begin());
        if (deg(f) <= 0)
            return out;
    }
    if (sgn(f.back()) < 0)
        for (auto& c : f)
            c = -c;
    const int n = deg(f);
    if (n == 1) {
        out.push_back(f);
        return out;
    }

    std::vector<char> allowed(static_cast<std::size_t>(n) + 1, 1);
    for (int d = 0; d <= n; ++d)
        if (d % std::max(1, opts.degree_multiple) != 0 && d != n)
            allowed[static_cast<std::size_t>(d)] = 0;

    std::uint64_t best_p = 0;
    std::size_t best_count = 0;
    int tried = 0;
    bool irreducible = false;
    for (std::uint64_t p = 3; tried < opts.sieve_primes; p = next_prime_above(p)) {
        if (mpz_divisible_ui_p(f.back().get_mpz_t(), static_cast<unsigned long>(p)))
            continue;
        PolyZp fp = to_zp(f, p);
        if (!is_squarefree(fp))
            continue;
        ++tried;
        auto pattern = factor_degrees(fp);
        auto reach = reachable_degrees(pattern, n);
        for (int d = 0; d <= n; ++d)
            allowed[static_cast<std::size_t>(d)] &= reach[static_cast<std::size_t>(d)];
        if (best_p == 0 || pattern.size() < best_count) {
            best_p = p;
            best_count = pattern.size();
        }
        bool only_trivial = true;
        for (int d = 1; d < n; ++d)
            if (allowed[static_cast<std::size_t>(d)])
                only_trivial = false;
        if (only_trivial) {
            irreducible = true;
            break;
        }
    }
    if (irreducible || best_count == 1) {
        out.push_back(f);
        return out;
    }

    const std::uint64_t p = best_p;
    std::vector<PolyZp> facs = factor_squarefree(to_zp(f, p).monic());

    // coefficient bound for lc(f) * (any factor), doubled for symmetric residues
    Integer norm2 = 0;
    for (const auto& c : f)
        norm2 += c * c;
    Integer norm = sqrt(norm2) + 1;
    Integer bound = binomial(Integer(n), Integer(n / 2)) * norm * abs(f.back()) * 2;
    // |lc * root| <= |lc| + max |f_i| =: q, so |lc^k p_k| <= n q^k
    Integer q = 0;
    for (const auto& c : f)
        if (abs(c) > q)
            q = abs(c);
    q += abs(f.back());
    std::array<Integer, Recombiner::kPowerSums> power_bound;
    Integer qk = n;
    for (auto& b : power_bound) {
        qk *= q;
        b = qk;
    }
    // extra precision makes the power-sum filter sharp
    Integer target = bound;
    if (facs.size() > 10)
        target = Integer(std::max(bound, power_bound.back()) << 64);
    int rounds = 0;
    Integer modulus(static_cast<unsigned long>(p));
    while (modulus <= target) {
        modulus = modulus * modulus;
        ++rounds;
    }
    std::vector<IntPoly> lifted(facs.size());
    lift_tree(f, facs, 0, facs.size(), p, rounds, modulus, lifted);

    Recombiner rec;
    rec.f = f;
    rec.u = std::move(lifted);
    rec.modulus = modulus;
    rec.half = modulus / 2;
    for (int k = 0; k < Recombiner::kPowerSums; ++k)
        rec.power_bound[static_cast<std::size_t>(k)] = power_bound[static_cast<std::size_t>(k)];
    rec.allowed = allowed;
    rec.run();
    for (auto& g : rec.found)
        out.push_back(std::move(g));
    return out;
}

} // namespace detail

namespace {

bool poly_less(const PolyQ& a, const PolyQ& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        auto ca = a.coeff(i), cb = b.coeff(i);
        if (ca != cb)
            return ca < cb;
    }
    return false;
}

} // namespace

PolyQ FactorizationQ::expand() const
{
    PolyQ r = PolyQ::constant(unit);
    for (const auto& [f, m] : factors)
        for (int i = 0; i < m; ++i)
            r *= f;
    return r;
}

FactorizationQ factor_q(const PolyQ& f)
{
    if (f.is_zero())
        fail(ErrorKind::ZeroInput, "factorization of the zero polynomial");
    FactorizationQ out;
    out.unit = f.lead();
    if (f.degree() == 0)
        return out;
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        Rational scale;
        auto prim = detail::to_primitive(part, scale);
        for (const auto& g : detail::factor_squarefree_int(prim))
            out.factors.emplace_back(detail::to_polyq(g).monic(), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return out;
}

bool is_irreducible(const PolyQ& f)
{
    if (f.degree() < 1)
        return false;
    if (f.degree() == 1)
        return true;
    return factor_q(f).is_irreducible();
}

std::string to_string(const FactorizationQ& fac, char var)
{
    std::string out;
    if (fac.unit != 1 || fac.factors.empty())
        out += fac.factors.empty() ? to_string(fac.unit) : "(" + to_string(fac.unit) + ")";
    for (const auto& [g, m] : fac.factors) {
        out += "(" + to_string(g, var) + ")";
        if (m > 1)
            out += "^" + std::to_string(m);
    }
    return out;
}

} // namespace galwit
