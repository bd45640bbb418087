#include "galwit/numfield.hpp"

#include "galwit/error.hpp"
#include "galwit/factor.hpp"
#include "galwit/zp.hpp"
#include "nf_internal.hpp"

#include <algorithm>

namespace galwit {

using detail::IntPoly;

struct NumberField::Data {
    PolyQ m;
    IntPoly big_m;  // primitive integer multiple of m
    bool integral = false;
};

namespace {

std::shared_ptr<const NumberField::Data> rational_field_data()
{
    static const auto data = [] {
        auto d = std::make_shared<NumberField::Data>();
        d->m = PolyQ::x();
        d->big_m = IntPoly{Integer(0), Integer(1)};
        d->integral = true;
        return d;
    }();
    return data;
}

} // namespace

NumberField::NumberField() : d_(rational_field_data()) {}

NumberField::NumberField(const PolyQ& min_poly)
{
    if (min_poly.degree() < 1)
        fail(ErrorKind::DegreeZero, "a number field needs a defining polynomial of degree >= 1");
    if (!is_irreducible(min_poly))
        fail(ErrorKind::NotIrreducible, to_string(min_poly) + " is not irreducible over Q");
    *this = trusted(min_poly.monic());
}

NumberField NumberField::trusted(const PolyQ& monic_irreducible)
{
    auto d = std::make_shared<Data>();
    d->m = monic_irreducible.monic();
    Rational scale;
    d->big_m = detail::to_primitive(d->m, scale);
    d->integral = d->m.has_integer_coeffs();
    return NumberField(std::shared_ptr<const Data>(std::move(d)));
}

int NumberField::degree() const { return d_->m.degree(); }
const PolyQ& NumberField::min_poly() const { return d_->m; }
const IntPoly& NumberField::int_min_poly() const { return d_->big_m; }
bool NumberField::is_integral() const { return d_->integral; }

bool NumberField::same(const NumberField& other) const
{
    return d_ == other.d_ || d_->m == other.d_->m;
}

NFElement NumberField::zero() const { return NFElement(*this, {}, Integer(1)); }
NFElement NumberField::one() const { return from_rational(1); }

NFElement NumberField::generator() const
{
    return NFElement(*this, IntPoly{Integer(0), Integer(1)}, Integer(1));
}

NFElement NumberField::from_rational(const Rational& q) const
{
    return NFElement(*this, IntPoly{q.get_num()}, q.get_den());
}

NFElement NumberField::from_coords(const std::vector<Rational>& coords) const
{
    if (static_cast<int>(coords.size()) > degree())
        fail(ErrorKind::DegreeOutOfRange, "coordinate vector longer than the field degree");
    return from_poly(PolyQ(coords));
}

NFElement NumberField::from_poly(const PolyQ& p) const
{
    if (p.is_zero())
        return zero();
    Rational scale;
    IntPoly num = detail::to_primitive(p, scale);
    for (auto& c : num)
        c *= scale.get_num();
    return NFElement(*this, std::move(num), scale.get_den());
}

NFElement::NFElement(NumberField f, IntPoly num, Integer den)
    : field_(std::move(f)), num_(std::move(num)), den_(std::move(den))
{
    reduce();
    normalize();
}

void NFElement::reduce()
{
    const IntPoly& m = field_.int_min_poly();
    const int n = detail::deg(m);
    detail::trim(num_);
    if (detail::deg(num_) < n)
        return;
    const Integer& lc = m.back();
    bool unit_lc = lc == 1;
    for (int i = detail::deg(num_); i >= n; --i) {
        Integer c = num_[static_cast<std::size_t>(i)];
        if (sgn(c) == 0)
            continue;
        if (!unit_lc) {
            for (int j = 0; j < i; ++j)
                num_[static_cast<std::size_t>(j)] *= lc;
            den_ *= lc;
        }
        for (int j = 0; j < n; ++j)
            mpz_submul(num_[static_cast<std::size_t>(i - n + j)].get_mpz_t(), c.get_mpz_t(),
                       m[static_cast<std::size_t>(j)].get_mpz_t());
        num_[static_cast<std::size_t>(i)] = 0;
    }
    num_.resize(static_cast<std::size_t>(n));
    detail::trim(num_);
}

void NFElement::normalize()
{
    detail::trim(num_);
    if (num_.empty()) {
        den_ = 1;
        return;
    }
    if (sgn(den_) < 0) {
        den_ = -den_;
        for (auto& c : num_)
            c = -c;
    }
    Integer g = den_;
    for (const auto& c : num_) {
        if (g == 1)
            break;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (g != 1) {
        for (auto& c : num_)
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

std::vector<Rational> NFElement::coords() const
{
    std::vector<Rational> out(static_cast<std::size_t>(field_.degree()));
    for (std::size_t i = 0; i < num_.size(); ++i) {
        out[i] = Rational(num_[i], den_);
        out[i].canonicalize();
    }
    return out;
}

Rational NFElement::coord(int i) const
{
    if (i < 0 || i >= static_cast<int>(num_.size()))
        return 0;
    Rational q(num_[static_cast<std::size_t>(i)], den_);
    q.canonicalize();
    return q;
}

PolyQ NFElement::as_poly() const
{
    std::vector<Rational> c(num_.size());
    for (std::size_t i = 0; i < num_.size(); ++i) {
        c[i] = Rational(num_[i], den_);
        c[i].canonicalize();
    }
    return PolyQ(std::move(c));
}

namespace {

void require_same(const NFElement& a, const NFElement& b)
{
    if (!a.field().same(b.field()))
        fail(ErrorKind::FieldMismatch, "operands belong to different number fields");
}

} // namespace

NFElement NFElement::operator-() const
{
    NFElement r = *this;
    for (auto& c : r.num_)
        c = -c;
    return r;
}

NFElement operator+(const NFElement& a, const NFElement& b)
{
    require_same(a, b);
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.den_.get_mpz_t(), b.den_.get_mpz_t());
    Integer fa = l / a.den_, fb = l / b.den_;
    IntPoly num(std::max(a.num_.size(), b.num_.size()));
    for (std::size_t i = 0; i < a.num_.size(); ++i)
        num[i] = a.num_[i] * fa;
    for (std::size_t i = 0; i < b.num_.size(); ++i)
        mpz_addmul(num[i].get_mpz_t(), b.num_[i].get_mpz_t(), fb.get_mpz_t());
    NFElement r = a;
    r.num_ = std::move(num);
    r.den_ = l;
    r.normalize();
    return r;
}

NFElement operator-(const NFElement& a, const NFElement& b) { return a + (-b); }

NFElement operator*(const NFElement& a, const NFElement& b)
{
    require_same(a, b);
    if (a.is_zero() || b.is_zero())
        return a.field_.zero();
    return NFElement(a.field_, detail::mul(a.num_, b.num_), a.den_ * b.den_);
}

NFElement operator*(const NFElement& a, const Rational& q)
{
    NFElement r = a;
    for (auto& c : r.num_)
        c *= q.get_num();
    r.den_ *= q.get_den();
    r.normalize();
    return r;
}

NFElement NFElement::inverse() const
{
    if (is_zero())
        fail(ErrorKind::DivisionByZero, "inverse of zero in a number field");
    if (is_rational()) {
        Rational q(den_, num_[0]);
        q.canonicalize();
        return field_.from_rational(q);
    }
    // inverse of num modulo the defining polynomial, multi-modularly
    const NumberField& k = field_;
    const int n = k.degree();
    auto coords = nf::reconstruct_multimodular(
        static_cast<std::size_t>(n),
        [&](std::uint64_t p) -> std::optional<std::vector<std::uint64_t>> {
            const IntPoly& m = k.int_min_poly();
            if (mpz_divisible_ui_p(m.back().get_mpz_t(), static_cast<unsigned long>(p)))
                return std::nullopt;
            PolyZp::Coeffs mc(m.size()), ac(num_.size());
            for (std::size_t i = 0; i < m.size(); ++i)
                mc[i] = reduce_mod(m[i], p);
            for (std::size_t i = 0; i < num_.size(); ++i)
                ac[i] = reduce_mod(num_[i], p);
            PolyZp mp(p, std::move(mc)), ap(p, std::move(ac));
            PolyZp s(p), t(p);
            if (!xgcd(ap, mp, s, t).is_one())
                return std::nullopt;
            std::vector<std::uint64_t> out(static_cast<std::size_t>(n), 0);
            for (int i = 0; i <= s.degree(); ++i)
                out[static_cast<std::size_t>(i)] = s.coeff(i);
            return out;
        },
        [&](const std::vector<Rational>& c) {
            NFElement cand = k.from_coords(c);
            return cand * NFElement(k, num_, Integer(1)) == k.one();
        });
    if (!coords)
        fail(ErrorKind::DivisionByZero, "inverse reconstruction failed");
    return k.from_coords(*coords) * Rational(den_);
}

NFElement operator/(const NFElement& a, const NFElement& b)
{
    require_same(a, b);
    return a * b.inverse();
}

NFElement NFElement::pow(unsigned long e) const
{
    NFElement result = field_.one();
    NFElement base = *this;
    while (e) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

bool operator==(const NFElement& a, const NFElement& b)
{
    return a.field_.same(b.field_) && a.den_ == b.den_ && a.num_ == b.num_;
}

NFElement nf_arith(const NFElement& a, const NFElement& b, ArithOp op)
{
    switch (op) {
    case ArithOp::Add:
        return a + b;
    case ArithOp::Sub:
        return a - b;
    case ArithOp::Mul:
        return a * b;
    case ArithOp::Div:
        return a / b;
    }
    return a;
}

PolyQ minimal_polynomial(const NFElement& a)
{
    const int n = a.field().degree();
    // Echelon rows over Q, each carrying the combination of powers of a that
    // produced it.
    struct Row {
        std::vector<Rational> v;
        std::vector<Rational> comb;
        int pivot;
    };
    std::vector<Row> rows;
    NFElement power = a.field().one();
    for (int k = 0; k <= n; ++k) {
        std::vector<Rational> v = power.coords();
        std::vector<Rational> comb(static_cast<std::size_t>(k) + 1);
        comb[static_cast<std::size_t>(k)] = 1;
        for (const auto& r : rows) {
            const Rational& x = v[static_cast<std::size_t>(r.pivot)];
            if (x == 0)
                continue;
            Rational f = x / r.v[static_cast<std::size_t>(r.pivot)];
            for (int i = 0; i < n; ++i)
                if (r.v[static_cast<std::size_t>(i)] != 0)
                    v[static_cast<std::size_t>(i)] -= f * r.v[static_cast<std::size_t>(i)];
            for (std::size_t i = 0; i < r.comb.size(); ++i)
                comb[i] -= f * r.comb[i];
        }
        int pivot = -1;
        for (int i = 0; i < n; ++i)
            if (v[static_cast<std::size_t>(i)] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) {
            PolyQ mp = PolyQ(comb).monic();
            if (!is_irreducible(mp))
                fail(ErrorKind::NotIrreducible, "minimal polynomial failed its irreducibility check");
            return mp;
        }
        rows.push_back({std::move(v), std::move(comb), pivot});
        power = power * a;
    }
    fail(ErrorKind::NotIrreducible, "no linear dependency among powers");
}

int element_degree(const NFElement& a) { return minimal_polynomial(a).degree(); }

std::string to_string(const NFElement& a)
{
    std::string out = "[";
    auto c = a.coords();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i)
            out += ", ";
        out += to_string(c[i]);
    }
    return out + "]";
}

} // namespace galwit

namespace galwit {

Rational norm(const NFElement& a)
{
    if (a.is_zero())
        return 0;
    // Res(M/L, A/den) = Res(M, A) / (L^deg A * den^deg M)
    const auto& m = a.field().int_min_poly();
    Integer r = detail::resultant_modular(m, a.numerator());
    Integer scale, t;
    mpz_pow_ui(scale.get_mpz_t(), m.back().get_mpz_t(), static_cast<unsigned long>(detail::deg(a.numerator())));
    mpz_pow_ui(t.get_mpz_t(), a.denominator().get_mpz_t(), static_cast<unsigned long>(detail::deg(m)));
    Rational out(r, scale * t);
    out.canonicalize();
    return out;
}

} // namespace galwit
