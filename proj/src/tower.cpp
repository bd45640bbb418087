#include "galwit/numfield.hpp"

#include "galwit/error.hpp"
#include "galwit/factor.hpp"
#include "galwit/zp.hpp"
#include "nf_internal.hpp"

#include <algorithm>

namespace galwit {

using detail::IntPoly;

namespace {

using Vec = std::vector<std::uint64_t>;

// Arithmetic in (F_p[t]/m)[b]/g for monic m of degree dm and monic g of
// degree dg, elements stored as dg blocks of dm coefficients.
struct TowerRing {
    std::uint64_t p;
    int dm, dg;
    Vec m;               // dm + 1 coefficients
    std::vector<Vec> g;  // dg coefficients of g below the leading one, each reduced mod m

    void reduce_t(Vec& a) const
    {
        for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
            std::uint64_t c = a[static_cast<std::size_t>(i)];
            if (c == 0)
                continue;
            for (int j = 0; j < dm; ++j) {
                std::uint64_t s = mulmod(c, m[static_cast<std::size_t>(j)], p);
                auto& x = a[static_cast<std::size_t>(i - dm + j)];
                x = x >= s ? x - s : x + p - s;
            }
            a[static_cast<std::size_t>(i)] = 0;
        }
        a.resize(static_cast<std::size_t>(dm));
    }

    Vec mul_t(const Vec& a, const Vec& b) const
    {
        Vec r(static_cast<std::size_t>(2 * dm), 0);
        for (int i = 0; i < dm; ++i) {
            if (a[static_cast<std::size_t>(i)] == 0)
                continue;
            for (int j = 0; j < dm; ++j)
                r[static_cast<std::size_t>(i + j)] =
                    (r[static_cast<std::size_t>(i + j)] + mulmod(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)], p)) % p;
        }
        reduce_t(r);
        return r;
    }

    /// v * (b + s*t)
    Vec mul_gamma(const Vec& v, std::uint64_t s) const
    {
        const std::size_t n = static_cast<std::size_t>(dm) * static_cast<std::size_t>(dg);
        Vec out(n, 0);
        // times b
        for (int j = 0; j + 1 < dg; ++j)
            for (int i = 0; i < dm; ++i)
                out[static_cast<std::size_t>((j + 1) * dm + i)] = v[static_cast<std::size_t>(j * dm + i)];
        Vec top(v.begin() + (dg - 1) * dm, v.begin() + dg * dm);
        for (int j = 0; j < dg; ++j) {
            Vec prod = mul_t(top, g[static_cast<std::size_t>(j)]);
            for (int i = 0; i < dm; ++i) {
                auto& x = out[static_cast<std::size_t>(j * dm + i)];
                std::uint64_t y = prod[static_cast<std::size_t>(i)];
                x = x >= y ? x - y : x + p - y;
            }
        }
        // plus s * t * v
        for (int j = 0; j < dg; ++j) {
            Vec block(static_cast<std::size_t>(dm) + 1, 0);
            for (int i = 0; i < dm; ++i)
                block[static_cast<std::size_t>(i) + 1] = mulmod(v[static_cast<std::size_t>(j * dm + i)], s, p);
            reduce_t(block);
            for (int i = 0; i < dm; ++i) {
                auto& x = out[static_cast<std::size_t>(j * dm + i)];
                x = (x + block[static_cast<std::size_t>(i)]) % p;
            }
        }
        return out;
    }
};

std::optional<Vec> reduce_rational_poly(const PolyQ& f, std::uint64_t p, std::size_t size)
{
    Vec r(size, 0);
    for (int i = 0; i <= f.degree(); ++i) {
        const Rational& c = f.coeff(i);
        if (mpz_divisible_ui_p(c.get_den_mpz_t(), static_cast<unsigned long>(p)))
            return std::nullopt;
        r[static_cast<std::size_t>(i)] = reduce_mod(c, p);
    }
    return r;
}

/// Solves A x = b mod p in place; false when A is singular.
bool solve_mod(std::vector<Vec>& a, Vec& b, std::uint64_t p)
{
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0)
            ++piv;
        if (piv == n)
            return false;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        std::uint64_t inv = invmod(a[col][col], p);
        for (std::size_t k = col; k < n; ++k)
            a[col][k] = mulmod(a[col][k], inv, p);
        b[col] = mulmod(b[col], inv, p);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0)
                continue;
            std::uint64_t f = a[r][col];
            for (std::size_t k = col; k < n; ++k) {
                std::uint64_t s = mulmod(f, a[col][k], p);
                a[r][k] = a[r][k] >= s ? a[r][k] - s : a[r][k] + p - s;
            }
            std::uint64_t s = mulmod(f, b[col], p);
            b[r] = b[r] >= s ? b[r] - s : b[r] + p - s;
        }
    }
    return true;
}

/// Coordinates of theta in the basis of powers of gamma = beta + s*theta,
/// modulo p. Nothing when p is unsuitable.
std::optional<Vec> theta_in_gamma_mod(const NumberField& k, const PolyK& g, long s, std::uint64_t p)
{
    TowerRing ring;
    ring.p = p;
    ring.dm = k.degree();
    ring.dg = g.degree();
    auto m = reduce_rational_poly(k.min_poly(), p, static_cast<std::size_t>(ring.dm) + 1);
    if (!m)
        return std::nullopt;
    ring.m = *m;
    for (int j = 0; j < ring.dg; ++j) {
        auto c = reduce_rational_poly(g.c[static_cast<std::size_t>(j)].as_poly(), p, static_cast<std::size_t>(ring.dm));
        if (!c)
            return std::nullopt;
        ring.g.push_back(*c);
    }
    const std::size_t n = static_cast<std::size_t>(ring.dm) * static_cast<std::size_t>(ring.dg);
    std::uint64_t sp = static_cast<std::uint64_t>(s) % p;
    std::vector<Vec> a(n, Vec(n, 0));
    Vec v(n, 0);
    v[0] = 1;
    for (std::size_t k2 = 0; k2 < n; ++k2) {
        for (std::size_t r = 0; r < n; ++r)
            a[r][k2] = v[r];
        if (k2 + 1 < n)
            v = ring.mul_gamma(v, sp);
    }
    Vec b(n, 0);
    b[1] = 1;  // theta = t
    if (!solve_mod(a, b, p))
        return std::nullopt;
    return b;
}

std::vector<NFElement> powers(const NFElement& x, int count)
{
    std::vector<NFElement> out;
    NFElement cur = x.field().one();
    for (int i = 0; i < count; ++i) {
        out.push_back(cur);
        if (i + 1 < count)
            cur = cur * x;
    }
    return out;
}

NFElement embed_with(const std::vector<NFElement>& theta_powers, const NFElement& a)
{
    NFElement r = theta_powers.front().field().zero();
    auto c = a.coords();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0)
            r = r + theta_powers[i] * c[i];
    return r;
}

} // namespace

NFElement AdjoinResult::embed(const NFElement& a) const
{
    return embed_with(theta_powers, a);
}

PolyK AdjoinResult::embed(const PolyK& g) const
{
    return g.map(field, [this](const NFElement& x) { return embed(x); });
}

AdjoinResult adjoin_root(const NumberField& k, const PolyK& g) { return nf::adjoin_root(k, g, nullptr); }

AdjoinResult nf::adjoin_root(const NumberField& k, const PolyK& input, const Integer* integral_roots)
{
    if (input.degree() < 2)
        fail(ErrorKind::InvalidArgument, "adjoin_root needs a factor of degree >= 2");
    if (!input.field.same(k))
        fail(ErrorKind::FieldMismatch, "factor is not defined over the given field");
    const PolyK g = input.monic();
    const int big_d = k.degree();
    const int n = big_d * g.degree();

    for (long s = 1; s <= kMaxShift; ++s) {
        PolyQ norm_poly = shifted_norm(g, s, integral_roots);
        Rational scale;
        IntPoly prim = detail::to_primitive(norm_poly, scale);
        if (!nf::certified_squarefree(prim))
            continue;
        detail::ZassenhausOptions opts;
        opts.degree_multiple = big_d;
        if (detail::factor_squarefree_int(prim, opts).size() != 1)
            fail(ErrorKind::NotIrreducible, to_string(g) + " is reducible over the field");

        AdjoinResult res;
        res.field = NumberField::trusted(norm_poly.monic());
        res.shift = s;
        const NumberField& l = res.field;
        const NFElement gamma = l.generator();

        if (big_d == 1) {
            res.theta_image = l.from_rational(-k.min_poly().coeff(0));
        } else {
            // theta as a polynomial in gamma, accepted only after exact checks
            auto coords = nf::reconstruct_multimodular(
                static_cast<std::size_t>(n), [&](std::uint64_t p) { return theta_in_gamma_mod(k, g, s, p); },
                [&](const std::vector<Rational>& c) {
                    NFElement theta = l.from_coords(c);
                    if (!PolyK::embed(l, k.min_poly()).eval(theta).is_zero())
                        return false;
                    auto pw = powers(theta, big_d);
                    NFElement beta = gamma - theta * Rational(s);
                    PolyK gl = g.map(l, [&](const NFElement& x) { return embed_with(pw, x); });
                    return gl.eval(beta).is_zero();
                });
            if (!coords)
                fail(ErrorKind::PrimitiveElementSearchExhausted, "could not express the old generator");
            res.theta_image = l.from_coords(*coords);
        }
        res.theta_powers = powers(res.theta_image, big_d);
        res.root_image = gamma - res.theta_image * Rational(s);
        return res;
    }
    fail(ErrorKind::PrimitiveElementSearchExhausted,
         "no shift up to " + std::to_string(kMaxShift) + " gives a squarefree norm");
}

namespace {

struct Pending {
    PolyK g;
    Rational scale;  // roots of the original factor are roots of g divided by this
    Integer root_bound;  // roots of g are algebraic integers of at most this size
    bool irreducible = false;
    std::size_t origin = 0;  // index of the irreducible factor of f over Q
};

SplittingField build_tower(const PolyQ& f, long cap, bool construct)
{
    if (f.is_zero())
        fail(ErrorKind::ZeroInput, "splitting field of the zero polynomial");
    if (cap < 1)
        fail(ErrorKind::InvalidArgument, "degree cap must be >= 1");
    SplittingField out{{}, NumberField(), {}};
    NumberField k;
    if (f.degree() < 1) {
        out.field = k;
        return out;
    }
    std::vector<Pending> pending;
    // steps spent on the roots of each factor h multiply to at most deg(h)!
    std::vector<std::pair<Integer, Integer>> step_budget;  // (steps so far, deg!)
    for (const auto& [h, mult] : factor_q(squarefree_part(f)).factors) {
        if (h.degree() == 1) {
            out.roots.push_back(k.from_rational(-h.coeff(0)));
            continue;
        }
        // x -> x / c makes the factor integral; its roots scale by c
        Integer c = 1;
        for (const auto& q : h.coeffs())
            mpz_lcm(c.get_mpz_t(), c.get_mpz_t(), q.get_den_mpz_t());
        std::vector<Rational> scaled(h.coeffs().size());
        Rational power = 1;
        for (int i = h.degree(); i >= 0; --i) {
            scaled[static_cast<std::size_t>(i)] = h.coeff(i) * power;
            power *= c;
        }
        PolyQ integral(scaled);
        Integer fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(h.degree()));
        pending.push_back({PolyK::embed(k, integral), Rational(c), nf::root_bound(integral), true, step_budget.size()});
        step_budget.push_back({Integer(1), fact});
    }

    while (true) {
        std::vector<Pending> next;
        for (auto& item : pending) {
            if (item.irreducible) {
                next.push_back(std::move(item));
                continue;
            }
            for (auto& fct : nf::factor_squarefree(item.g, &item.root_bound)) {
                if (fct.degree() == 1)
                    out.roots.push_back(-fct.c[0] * (1 / item.scale));
                else
                    next.push_back({std::move(fct), item.scale, item.root_bound, true, item.origin});
            }
        }
        pending = std::move(next);
        if (pending.empty())
            break;
        std::size_t pick = 0;
        for (std::size_t i = 1; i < pending.size(); ++i)
            if (pending[i].g.degree() < pending[pick].g.degree())
                pick = i;
        const int d = pending[pick].g.degree();
        auto& [used, bound] = step_budget[pending[pick].origin];
        used *= d;
        if (used > bound)
            fail(ErrorKind::DegreeOutOfRange, "adjunction steps for one factor exceed deg! of that factor", d);
        const long next_degree = static_cast<long>(k.degree()) * d;
        if (next_degree > cap)
            fail(ErrorKind::DegreeCapExceeded,
                 "splitting field degree would reach " + std::to_string(next_degree) + " (cap " + std::to_string(cap) + ")",
                 next_degree);
        if (!construct && pending.size() == 1 && d == 2) {
            // one root of an irreducible quadratic brings the other
            out.summary.steps.push_back(2);
            out.summary.total_degree = next_degree;
            break;
        }
        AdjoinResult adj = nf::adjoin_root(k, pending[pick].g, &pending[pick].root_bound);
        out.summary.steps.push_back(d);
        out.summary.total_degree = adj.field.degree();
        for (auto& r : out.roots)
            r = adj.embed(r);
        std::vector<Pending> moved;
        for (std::size_t i = 0; i < pending.size(); ++i) {
            PolyK e = adj.embed(pending[i].g);
            if (i == pick) {
                out.roots.push_back(adj.root_image * (1 / pending[i].scale));
                PolyK lin(adj.field, {-adj.root_image, adj.field.one()});
                PolyK q = divrem(e, lin).first;
                if (q.degree() >= 1)
                    moved.push_back({std::move(q), pending[i].scale, pending[i].root_bound, false, pending[i].origin});
            } else {
                moved.push_back({std::move(e), pending[i].scale, pending[i].root_bound, false, pending[i].origin});
            }
        }
        pending = std::move(moved);
        k = adj.field;
    }
    out.field = k;
    return out;
}

} // namespace

TowerSummary splitting_degree(const PolyQ& f, long cap)
{
    return build_tower(f, cap, false).summary;
}

SplittingField splitting_field(const PolyQ& f, long cap)
{
    return build_tower(f, cap, true);
}

} // namespace galwit
