#include "galwit/numfield.hpp"

#include "galwit/error.hpp"
#include "galwit/factor.hpp"
#include "nf_internal.hpp"

#include <algorithm>

namespace galwit {

using detail::IntPoly;

namespace {

bool coords_less(const NFElement& a, const NFElement& b)
{
    auto ca = a.coords(), cb = b.coords();
    return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

void sort_factors(std::vector<PolyK>& fs)
{
    std::vector<std::pair<std::string, PolyK>> keyed;
    for (auto& f : fs)
        keyed.emplace_back(to_string(f), std::move(f));
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.second.degree() != b.second.degree())
            return a.second.degree() < b.second.degree();
        return a.first < b.first;
    });
    fs.clear();
    for (auto& [k, f] : keyed)
        fs.push_back(std::move(f));
}

bool all_rational(const PolyK& g)
{
    return std::all_of(g.c.begin(), g.c.end(), [](const NFElement& x) { return x.is_rational(); });
}

PolyQ to_rational_poly(const PolyK& g)
{
    std::vector<Rational> c;
    for (const auto& x : g.c)
        c.push_back(x.coord(0));
    return PolyQ(std::move(c));
}

} // namespace

std::vector<PolyK> factor_squarefree_over_nf(const PolyK& g) { return nf::factor_squarefree(g, nullptr); }

std::vector<PolyK> nf::factor_squarefree(const PolyK& input, const Integer* integral_roots)
{
    PolyK g = input.monic();
    const NumberField& k = g.field;
    const int n = g.degree();
    if (n <= 1 || proven_irreducible(g))
        return {g};
    const int big_d = k.degree();
    if (big_d == 1 || (all_rational(g) && (!integral_roots || !is_irreducible(to_rational_poly(g))))) {
        // rational input: split over Q first, then each piece over K
        std::vector<PolyK> out;
        for (const auto& [hp, mult] : factor_q(to_rational_poly(g)).factors) {
            PolyQ h = hp.monic();
            PolyK hk = PolyK::embed(k, h);
            if (big_d == 1 || h.degree() == 1) {
                out.push_back(hk);
                continue;
            }
            // x -> x / c makes h integral, so its roots are bounded algebraic integers
            Integer c = 1;
            for (const auto& q : h.coeffs())
                mpz_lcm(c.get_mpz_t(), c.get_mpz_t(), q.get_den_mpz_t());
            std::vector<Rational> scaled(h.coeffs().size());
            Rational power = 1;
            for (int i = h.degree(); i >= 0; --i) {
                scaled[static_cast<std::size_t>(i)] = h.coeff(i) * power;
                power *= c;
            }
            PolyQ hs(std::move(scaled));
            Integer bound = root_bound(hs);
            for (auto& f : factor_squarefree(PolyK::embed(k, hs), &bound)) {
                // back to roots of h
                Rational w = 1;
                for (auto& x : f.c) {
                    x = x * w;
                    w *= c;
                }
                out.push_back(f.monic());
            }
        }
        sort_factors(out);
        return out;
    }

    for (long s = 1; s <= kMaxShift; ++s) {
        PolyQ norm_poly = shifted_norm(g, s, integral_roots);
        Rational scale;
        IntPoly prim = detail::to_primitive(norm_poly, scale);
        if (!nf::certified_squarefree(prim))
            continue;
        detail::ZassenhausOptions opts;
        opts.degree_multiple = big_d;
        auto pieces = detail::factor_squarefree_int(prim, opts);
        if (pieces.size() == 1)
            return {g};
        NFElement shift = k.generator() * Rational(s);
        std::vector<PolyK> out;
        PolyK rest = g;
        for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
            PolyK r = nf::shifted_remainder(detail::to_polyq(pieces[i]), shift, rest);
            PolyK h = r.is_zero() ? rest : gcd(rest, r);
            if (h.degree() < 1)
                continue;
            rest = divrem(rest, h).first.monic();
            out.push_back(std::move(h));
        }
        if (rest.degree() >= 1)
            out.push_back(rest);
        sort_factors(out);
        return out;
    }
    fail(ErrorKind::PrimitiveElementSearchExhausted,
         "no shift up to " + std::to_string(kMaxShift) + " gives a squarefree norm");
}

FactorizationK factor_over_nf(const PolyQ& f, const NumberField& k)
{
    if (f.is_zero())
        fail(ErrorKind::ZeroInput, "factorization of the zero polynomial");
    FactorizationK out{k.from_rational(f.lead()), {}};
    for (const auto& [h, mult] : factor_q(f).factors)
        for (auto& g : factor_squarefree_over_nf(PolyK::embed(k, h)))
            out.factors.emplace_back(std::move(g), mult);
    std::stable_sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree())
            return a.first.degree() < b.first.degree();
        return to_string(a.first) < to_string(b.first);
    });
    return out;
}

std::vector<NFElement> roots_in_field(const PolyK& input)
{
    std::vector<NFElement> out;
    if (input.degree() < 1)
        return out;
    PolyK g = input.monic();
    if (all_rational(g)) {
        PolyQ q = squarefree_part(to_rational_poly(g));
        g = PolyK::embed(g.field, q);
    }
    if (g.degree() == 1) {
        out.push_back(-g.c[0]);
        return out;
    }
    if (nf::root_count_bound(g) == 0)
        return out;
    for (const auto& f : factor_squarefree_over_nf(g))
        if (f.degree() == 1)
            out.push_back(-f.c[0]);
    std::sort(out.begin(), out.end(), coords_less);
    return out;
}

Membership is_member(const PolyQ& target, const NumberField& k)
{
    Membership res;
    if (target.degree() < 1)
        fail(ErrorKind::DegreeZero, "membership target must have degree >= 1");
    PolyQ t = target.monic();
    if (t.degree() == 1) {
        res.member = true;
        res.witness = k.from_rational(-t.coeff(0));
        return res;
    }
    // a root in K generates a subfield whose degree divides [K:Q]
    if (k.degree() % t.degree() != 0 && is_irreducible(t))
        return res;
    auto roots = roots_in_field(PolyK::embed(k, t));
    if (!roots.empty()) {
        res.member = true;
        res.witness = roots.front();
    }
    return res;
}

NFElement apply_automorphism(const NFElement& image, const NFElement& a)
{
    const NumberField& k = image.field();
    PolyQ p = a.as_poly();
    NFElement r = k.zero();
    for (int i = p.degree(); i >= 0; --i)
        r = r * image + k.from_rational(p.coeff(i));
    return r;
}

namespace {

// (Z/q)[t]/(m) for a monic integral m
struct AdicRing {
    IntPoly m;
    Integer q;

    void reduce(IntPoly& a) const
    {
        const int n = detail::deg(m);
        for (int i = detail::deg(a); i >= n; --i) {
            Integer c = a[static_cast<std::size_t>(i)];
            mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), q.get_mpz_t());
            if (sgn(c) != 0)
                for (int j = 0; j < n; ++j)
                    mpz_submul(a[static_cast<std::size_t>(i - n + j)].get_mpz_t(), c.get_mpz_t(),
                               m[static_cast<std::size_t>(j)].get_mpz_t());
        }
        if (static_cast<int>(a.size()) > n)
            a.resize(static_cast<std::size_t>(n));
        for (auto& c : a)
            mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), q.get_mpz_t());
        detail::trim(a);
    }
    IntPoly mul(const IntPoly& a, const IntPoly& b) const
    {
        IntPoly r = detail::mul(a, b);
        reduce(r);
        return r;
    }
    IntPoly sub(const IntPoly& a, const IntPoly& b) const
    {
        IntPoly r = detail::sub(a, b);
        reduce(r);
        return r;
    }
    /// Evaluates the integer polynomial f at r.
    IntPoly eval(const IntPoly& f, const IntPoly& r) const
    {
        IntPoly acc;
        for (auto it = f.rbegin(); it != f.rend(); ++it) {
            acc = mul(acc, r);
            if (acc.empty())
                acc.push_back(0);
            acc[0] += *it;
            reduce(acc);
        }
        return acc;
    }
};

IntPoly lift_coeffs(const PolyZp& f)
{
    IntPoly r;
    for (auto c : f.coeffs())
        r.emplace_back(static_cast<unsigned long>(c));
    return r;
}

PolyZp eval_zp(const PolyZp& f, const PolyZp& at, const PolyZp& mod)
{
    PolyZp acc(mod.modulus());
    for (int i = f.degree(); i >= 0; --i)
        acc = rem(acc * at + PolyZp(mod.modulus(), {f.coeff(i)}), mod);
    return acc;
}

/// Roots of m in K by Newton lifting the Frobenius conjugates of theta
/// at an inert prime. Returns nothing when no inert prime is found or the
/// lifts do not account for `expected` roots within the precision budget.
std::optional<std::vector<NFElement>> roots_by_inert_lifting(const NumberField& k, int expected)
{
    const PolyQ& m = k.min_poly();
    const int n = k.degree();
    std::uint64_t p = 2;
    bool found = false;
    for (int i = 0; i < 200 && !found; ++i) {
        p = next_prime_above(p);
        PolyZp mp = PolyZp::from(m, p);
        found = is_squarefree(mp) && factor_degrees(mp) == std::vector<int>{n};
    }
    if (!found)
        return std::nullopt;
    PolyZp mp = PolyZp::from(m, p);
    PolyZp dmp = PolyZp::from(m.derivative(), p);
    IntPoly big_m = lift_coeffs(mp);
    for (std::size_t i = 0; i < big_m.size(); ++i)
        big_m[i] = m.coeff(static_cast<int>(i)).get_num();
    IntPoly dm = detail::derivative(big_m);

    struct Candidate {
        IntPoly r, w;
        bool done = false;
    };
    std::vector<Candidate> cands;
    PolyZp conj(p, {0, 1});
    for (int j = 0; j < n; ++j) {
        PolyZp deriv = eval_zp(dmp, conj, mp);
        PolyZp s(p), t(p);
        xgcd(deriv, mp, s, t);
        cands.push_back({lift_coeffs(conj), lift_coeffs(rem(s, mp)), false});
        conj = powmod(conj, Integer(static_cast<unsigned long>(p)), mp);
    }

    PolyK mk = PolyK::embed(k, m);
    std::vector<NFElement> found_roots;
    AdicRing ring{big_m, Integer(static_cast<unsigned long>(p))};
    for (int round = 0; round < 14; ++round) {
        Integer next_q = ring.q * ring.q;
        AdicRing up{big_m, next_q};
        for (auto& c : cands) {
            if (c.done)
                continue;
            c.r = up.sub(c.r, up.mul(up.eval(big_m, c.r), c.w));
            IntPoly two{Integer(2)};
            c.w = up.mul(c.w, up.sub(two, up.mul(up.eval(dm, c.r), c.w)));
            std::vector<Rational> coords;
            bool ok = true;
            for (const auto& x : c.r) {
                Rational q;
                if (!rational_reconstruct(x, next_q, q)) {
                    ok = false;
                    break;
                }
                coords.push_back(q);
            }
            if (!ok)
                continue;
            NFElement e = k.from_coords(coords);
            if (mk.eval(e).is_zero()) {
                c.done = true;
                found_roots.push_back(e);
            }
        }
        ring = up;
        if (static_cast<int>(found_roots.size()) >= expected)
            return found_roots;
    }
    return std::nullopt;
}

} // namespace

AutomorphismGroup automorphism_group(const NumberField& k)
{
    AutomorphismGroup g;
    const int n = k.degree();
    NFElement id = k.generator();
    if (n == 1) {
        g.images = {id};
        g.is_normal = g.is_abelian = true;
        return g;
    }
    PolyK mk = PolyK::embed(k, k.min_poly());
    std::vector<NFElement> images;
    int bound = nf::root_count_bound(mk);
    if (bound < 0 || bound > n)
        bound = n;
    std::optional<std::vector<NFElement>> lifted;
    if (k.is_integral())
        lifted = roots_by_inert_lifting(k, bound);
    images = lifted ? *lifted : roots_in_field(mk);

    std::sort(images.begin(), images.end(), coords_less);
    auto it = std::find(images.begin(), images.end(), id);
    if (it != images.end())
        images.erase(it);
    images.insert(images.begin(), id);
    g.images = std::move(images);
    g.is_normal = static_cast<int>(g.images.size()) == n;
    g.is_abelian = g.is_normal;
    for (std::size_t a = 1; a < g.images.size() && g.is_abelian; ++a)
        for (std::size_t b = a + 1; b < g.images.size() && g.is_abelian; ++b)
            if (apply_automorphism(g.images[a], g.images[b]) != apply_automorphism(g.images[b], g.images[a]))
                g.is_abelian = false;
    return g;
}

} // namespace galwit
