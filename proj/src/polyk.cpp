#include "galwit/numfield.hpp"

#include "galwit/error.hpp"
#include "galwit/factor.hpp"
#include "nf_internal.hpp"

#include <algorithm>

namespace galwit {

using detail::IntPoly;

namespace {

void trim(std::vector<NFElement>& c)
{
    while (!c.empty() && c.back().is_zero())
        c.pop_back();
}

void require_same(const PolyK& a, const PolyK& b)
{
    if (!a.field.same(b.field))
        fail(ErrorKind::FieldMismatch, "polynomials over different number fields");
}

} // namespace

PolyK::PolyK(NumberField k, std::vector<NFElement> coeffs) : field(std::move(k)), c(std::move(coeffs))
{
    trim(c);
}

PolyK PolyK::embed(const NumberField& k, const PolyQ& f)
{
    std::vector<NFElement> c;
    c.reserve(f.coeffs().size());
    for (const auto& q : f.coeffs())
        c.push_back(k.from_rational(q));
    return PolyK(k, std::move(c));
}

PolyK PolyK::monic() const
{
    if (is_zero() || lead() == field.one())
        return *this;
    NFElement inv = lead().inverse();
    std::vector<NFElement> out;
    out.reserve(c.size());
    for (const auto& x : c)
        out.push_back(x * inv);
    return PolyK(field, std::move(out));
}

NFElement PolyK::eval(const NFElement& x) const
{
    NFElement r = field.zero();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        r = r * x + *it;
    return r;
}

PolyK PolyK::shift(const NFElement& s) const
{
    // Horner with (x + s)
    std::vector<NFElement> r;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        std::vector<NFElement> next(r.size() + 1, field.zero());
        for (std::size_t i = 0; i < r.size(); ++i) {
            next[i + 1] = next[i + 1] + r[i];
            next[i] = next[i] + r[i] * s;
        }
        next[0] = next[0] + *it;
        r = std::move(next);
    }
    return PolyK(field, std::move(r));
}

PolyK operator*(const PolyK& a, const PolyK& b)
{
    require_same(a, b);
    if (a.is_zero() || b.is_zero())
        return PolyK(a.field, {});
    std::vector<NFElement> r(a.c.size() + b.c.size() - 1, a.field.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r[i + j] = r[i + j] + a.c[i] * b.c[j];
    return PolyK(a.field, std::move(r));
}

PolyK operator-(const PolyK& a, const PolyK& b)
{
    require_same(a, b);
    std::vector<NFElement> r(std::max(a.c.size(), b.c.size()), a.field.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        r[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i)
        r[i] = r[i] - b.c[i];
    return PolyK(a.field, std::move(r));
}

bool operator==(const PolyK& a, const PolyK& b)
{
    return a.field.same(b.field) && a.c == b.c;
}

std::pair<PolyK, PolyK> divrem(const PolyK& a, const PolyK& b)
{
    require_same(a, b);
    if (b.is_zero())
        fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    const int db = b.degree();
    if (a.degree() < db)
        return {PolyK(a.field, {}), a};
    NFElement inv = b.lead().inverse();
    std::vector<NFElement> r = a.c;
    std::vector<NFElement> q(static_cast<std::size_t>(a.degree() - db + 1), a.field.zero());
    for (int i = a.degree(); i >= db; --i) {
        const NFElement top = r[static_cast<std::size_t>(i)];
        if (top.is_zero())
            continue;
        NFElement f = top * inv;
        q[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j)
            r[static_cast<std::size_t>(i - db + j)] =
                r[static_cast<std::size_t>(i - db + j)] - f * b.c[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(db));
    return {PolyK(a.field, std::move(q)), PolyK(a.field, std::move(r))};
}

PolyK gcd(const PolyK& a, const PolyK& b)
{
    require_same(a, b);
    if (a.is_zero() && b.is_zero())
        fail(ErrorKind::BothZero, "gcd of two zero polynomials");
    PolyK x = a.monic(), y = b.monic();
    while (!y.is_zero()) {
        PolyK r = divrem(x, y).second.monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

std::string to_string(const PolyK& g)
{
    if (g.is_zero())
        return "0";
    std::string out;
    for (int i = g.degree(); i >= 0; --i) {
        const NFElement& c = g.c[static_cast<std::size_t>(i)];
        if (c.is_zero())
            continue;
        std::string coef = to_string(c.as_poly(), 'a');
        bool simple = c.is_rational();
        if (!out.empty())
            out += " + ";
        if (i == 0) {
            out += simple ? coef : "(" + coef + ")";
            continue;
        }
        if (c != g.field.one())
            out += (simple ? coef : "(" + coef + ")") + "*";
        out += "x";
        if (i > 1)
            out += "^" + std::to_string(i);
    }
    return out;
}

namespace nf {

std::optional<std::uint64_t> reduce_at(const NFElement& a, std::uint64_t p, std::uint64_t r)
{
    if (mpz_divisible_ui_p(a.denominator().get_mpz_t(), static_cast<unsigned long>(p)))
        return std::nullopt;
    std::uint64_t acc = 0;
    const auto& num = a.numerator();
    for (auto it = num.rbegin(); it != num.rend(); ++it)
        acc = (mulmod(acc, r, p) + reduce_mod(*it, p)) % p;
    return mulmod(acc, invmod(reduce_mod(a.denominator(), p), p), p);
}

std::optional<PolyZp> reduce_at(const PolyK& g, std::uint64_t p, std::uint64_t r)
{
    PolyZp::Coeffs c;
    c.reserve(g.c.size());
    for (const auto& x : g.c) {
        auto v = reduce_at(x, p, r);
        if (!v)
            return std::nullopt;
        c.push_back(*v);
    }
    return PolyZp(p, std::move(c));
}

int scan_degree_one_primes(const PolyK& g, int useful, int max_primes,
                           const std::function<bool(const PolyZp&)>& visit)
{
    const NumberField& k = g.field;
    if (!k.is_integral() || g.is_zero() || g.lead() != k.one())
        return 0;
    const PolyQ& m = k.min_poly();
    int visits = 0;
    std::uint64_t p = 2;
    for (int tried = 0; tried < max_primes && visits < useful; ++tried) {
        p = next_prime_above(p);
        PolyZp mp = PolyZp::from(m, p);
        if (!is_squarefree(mp))
            continue;
        for (std::uint64_t r : roots(mp)) {
            auto gp = reduce_at(g, p, r);
            if (!gp || gp->degree() != g.degree() || !is_squarefree(*gp))
                continue;
            ++visits;
            if (visit(*gp))
                return visits;
            if (visits >= useful)
                break;
        }
    }
    return visits;
}

int root_count_bound(const PolyK& g)
{
    int best = -1;
    scan_degree_one_primes(g, 12, 300, [&](const PolyZp& gp) {
        int n = static_cast<int>(roots(gp).size());
        if (best < 0 || n < best)
            best = n;
        return best == 0;
    });
    return best;
}

bool certified_squarefree(const IntPoly& f)
{
    if (detail::deg(f) <= 0)
        return true;
    std::uint64_t p = (std::uint64_t{1} << 31);
    for (int i = 0; i < 6; ++i) {
        p = next_prime_above(p);
        if (mpz_divisible_ui_p(f.back().get_mpz_t(), static_cast<unsigned long>(p)))
            continue;
        PolyZp::Coeffs c(f.size());
        for (std::size_t j = 0; j < f.size(); ++j)
            c[j] = reduce_mod(f[j], p);
        if (is_squarefree(PolyZp(p, std::move(c))))
            return true;
    }
    return false;
}

PolyK shifted_remainder(const PolyQ& h, const NFElement& c, const PolyK& g)
{
    const NumberField& k = g.field;
    const int n = g.degree();
    // residue r of degree < n; multiply by (x + c) and reduce with monic g
    std::vector<NFElement> r(static_cast<std::size_t>(n), k.zero());
    for (int i = h.degree(); i >= 0; --i) {
        std::vector<NFElement> next(static_cast<std::size_t>(n) + 1, k.zero());
        for (int j = 0; j < n; ++j) {
            const NFElement& x = r[static_cast<std::size_t>(j)];
            if (x.is_zero())
                continue;
            next[static_cast<std::size_t>(j) + 1] = next[static_cast<std::size_t>(j) + 1] + x;
            next[static_cast<std::size_t>(j)] = next[static_cast<std::size_t>(j)] + x * c;
        }
        next[0] = next[0] + k.from_rational(h.coeff(i));
        const NFElement top = next[static_cast<std::size_t>(n)];
        if (!top.is_zero())
            for (int j = 0; j < n; ++j)
                next[static_cast<std::size_t>(j)] = next[static_cast<std::size_t>(j)] - top * g.c[static_cast<std::size_t>(j)];
        next.pop_back();
        r = std::move(next);
    }
    return PolyK(k, std::move(r));
}

} // namespace nf

bool proven_irreducible(const PolyK& g)
{
    const int n = g.degree();
    if (n < 1)
        return false;
    if (n == 1)
        return true;
    PolyK h = g.monic();
    std::vector<char> allowed(static_cast<std::size_t>(n) + 1, 1);
    bool proven = false;
    nf::scan_degree_one_primes(h, 24, 400, [&](const PolyZp& gp) {
        auto reach = detail::reachable_degrees(factor_degrees(gp), n);
        for (int d = 0; d <= n; ++d)
            allowed[static_cast<std::size_t>(d)] &= reach[static_cast<std::size_t>(d)];
        proven = true;
        for (int d = 1; d < n; ++d)
            if (allowed[static_cast<std::size_t>(d)])
                proven = false;
        return proven;
    });
    return proven;
}

} // namespace galwit
