#include "galwit/poly.hpp"

#include "galwit/detail/intpoly.hpp"
#include "galwit/error.hpp"

#include <algorithm>
#include <map>

namespace galwit {

PolyQ::PolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
    for (auto& c : c_)
        c.canonicalize();
    trim();
}

void PolyQ::trim()
{
    while (!c_.empty() && sgn(c_.back()) == 0)
        c_.pop_back();
}

PolyQ PolyQ::constant(const Rational& c) { return PolyQ(std::vector<Rational>{c}); }

PolyQ PolyQ::monomial(const Rational& c, int k)
{
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return PolyQ(std::move(v));
}

PolyQ PolyQ::from_ints(std::initializer_list<long> ascending)
{
    std::vector<Rational> v;
    v.reserve(ascending.size());
    for (long a : ascending)
        v.emplace_back(a);
    return PolyQ(std::move(v));
}

Rational PolyQ::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return 0;
    return c_[static_cast<std::size_t>(i)];
}

Rational PolyQ::eval(const Rational& at) const
{
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * at + *it;
    return r;
}

PolyQ PolyQ::derivative() const
{
    if (c_.size() <= 1)
        return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * static_cast<long>(i);
    return PolyQ(std::move(d));
}

PolyQ PolyQ::monic() const
{
    if (is_zero())
        return {};
    PolyQ r = *this;
    Rational inv = 1 / lead();
    for (auto& c : r.c_)
        c *= inv;
    return r;
}

PolyQ PolyQ::compose(const PolyQ& inner) const
{
    PolyQ r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r *= inner;
        r += constant(*it);
    }
    return r;
}

bool PolyQ::has_integer_coeffs() const
{
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

PolyQ PolyQ::operator-() const
{
    PolyQ r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

PolyQ& PolyQ::operator+=(const PolyQ& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += a.c_[i] * b.c_[j];
    }
    return PolyQ(std::move(r));
}

PolyQ& PolyQ::operator*=(const PolyQ& o)
{
    *this = *this * o;
    return *this;
}

PolyQ& PolyQ::operator*=(const Rational& s)
{
    if (sgn(s) == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_)
        c *= s;
    return *this;
}

std::pair<PolyQ, PolyQ> divrem(const PolyQ& f, const PolyQ& g)
{
    if (g.is_zero())
        fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    if (f.degree() < g.degree())
        return {PolyQ{}, f};
    std::vector<Rational> r = f.coeffs();
    std::vector<Rational> q(static_cast<std::size_t>(f.degree() - g.degree() + 1));
    const auto& gc = g.coeffs();
    Rational inv = 1 / g.lead();
    int dg = g.degree();
    for (int i = f.degree(); i >= dg; --i) {
        Rational c = r[static_cast<std::size_t>(i)] * inv;
        if (sgn(c) == 0)
            continue;
        q[static_cast<std::size_t>(i - dg)] = c;
        for (int j = 0; j <= dg; ++j)
            r[static_cast<std::size_t>(i - dg + j)] -= c * gc[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(dg));
    return {PolyQ(std::move(q)), PolyQ(std::move(r))};
}

PolyQ poly_arith(const PolyQ& f, const PolyQ& g, PolyOp op)
{
    switch (op) {
    case PolyOp::Add: return f + g;
    case PolyOp::Sub: return f - g;
    case PolyOp::Mul: return f * g;
    case PolyOp::Compose: return f.compose(g);
    }
    return {};
}

PolyQ gcd_q(const PolyQ& f, const PolyQ& g)
{
    if (f.is_zero() && g.is_zero())
        fail(ErrorKind::BothZero, "gcd of two zero polynomials");
    PolyQ a = f.monic(), b = g.monic();
    while (!b.is_zero()) {
        PolyQ r = divrem(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

PolyQ xgcd_q(const PolyQ& f, const PolyQ& g, PolyQ& u, PolyQ& v)
{
    if (f.is_zero() && g.is_zero())
        fail(ErrorKind::BothZero, "gcd of two zero polynomials");
    PolyQ r0 = f, r1 = g;
    PolyQ s0 = PolyQ::constant(1), s1;
    PolyQ t0, t1 = PolyQ::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        PolyQ s2 = s0 - q * s1;
        PolyQ t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    Rational inv = 1 / r0.lead();
    u = s0 * inv;
    v = t0 * inv;
    return r0 * inv;
}

Rational resultant(const PolyQ& f, const PolyQ& g)
{
    if (f.is_zero() || g.is_zero())
        fail(ErrorKind::ZeroInput, "resultant of a zero polynomial");
    Rational sf, sg;
    auto pf = detail::to_primitive(f, sf);
    auto pg = detail::to_primitive(g, sg);
    Rational r(detail::resultant(pf, pg));
    Rational a, b;
    mpz_pow_ui(a.get_num_mpz_t(), sf.get_num_mpz_t(), static_cast<unsigned long>(g.degree()));
    mpz_pow_ui(a.get_den_mpz_t(), sf.get_den_mpz_t(), static_cast<unsigned long>(g.degree()));
    mpz_pow_ui(b.get_num_mpz_t(), sg.get_num_mpz_t(), static_cast<unsigned long>(f.degree()));
    mpz_pow_ui(b.get_den_mpz_t(), sg.get_den_mpz_t(), static_cast<unsigned long>(f.degree()));
    a.canonicalize();
    b.canonicalize();
    Rational out = r * a * b;
    out.canonicalize();
    return out;
}

Rational discriminant(const PolyQ& f)
{
    if (f.degree() < 1)
        fail(ErrorKind::DegreeZero, "discriminant needs degree >= 1");
    long d = f.degree();
    if (d == 1)
        return 1;
    Rational r = resultant(f, f.derivative()) / f.lead();
    if (((d * (d - 1)) / 2) % 2 != 0)
        r = -r;
    r.canonicalize();
    return r;
}

int sturm_real_roots(const PolyQ& f)
{
    if (f.is_zero())
        fail(ErrorKind::ZeroInput, "Sturm count of the zero polynomial");
    if (f.degree() == 0)
        return 0;
    Rational scale;
    detail::IntPoly p0 = detail::to_primitive(f, scale);
    detail::IntPoly p1 = detail::primitive_part(detail::derivative(p0));
    if (sgn(p1.back()) < 0)
        for (auto& c : p1)
            c = -c;
    std::vector<detail::IntPoly> seq{p0, p1};
    while (detail::deg(seq.back()) > 0) {
        const auto& a = seq[seq.size() - 2];
        const auto& b = seq.back();
        detail::IntPoly r = detail::prem(a, b);
        if (r.empty())
            break;
        int e = detail::deg(a) - detail::deg(b) + 1;
        // prem = lc(b)^e * rem; the Sturm term is -rem
        bool flip = !(sgn(b.back()) < 0 && (e % 2 == 1));
        r = detail::primitive_part(r);
        if (flip)
            for (auto& x : r)
                x = -x;
        seq.push_back(std::move(r));
    }
    if (detail::deg(seq.back()) > 0)
        fail(ErrorKind::NotSquarefree, "Sturm count needs a squarefree polynomial");
    int at_pos = 0, at_neg = 0;
    int prev_pos = 0, prev_neg = 0;
    for (const auto& p : seq) {
        int sp = sgn(p.back());
        int sn = (detail::deg(p) % 2 == 0) ? sp : -sp;
        if (prev_pos != 0 && sp != prev_pos)
            ++at_pos;
        if (prev_neg != 0 && sn != prev_neg)
            ++at_neg;
        prev_pos = sp;
        prev_neg = sn;
    }
    return at_neg - at_pos;
}

namespace {

std::vector<Integer> prime_factors(Integer n)
{
    std::vector<Integer> out;
    n = abs(n);
    for (Integer q = 2; q * q <= n; ++q) {
        if (q > 1000000)
            fail(ErrorKind::OutOfRange, "trial division bound exceeded");
        if (mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t())) {
            out.push_back(q);
            while (mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t()))
                mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t());
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

std::vector<Integer> divisors(const Integer& n)
{
    std::vector<Integer> ds{1};
    Integer m = abs(n);
    for (const auto& q : prime_factors(m)) {
        int e = 0;
        Integer t = m;
        while (mpz_divisible_p(t.get_mpz_t(), q.get_mpz_t())) {
            mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), q.get_mpz_t());
            ++e;
        }
        std::size_t base = ds.size();
        Integer pw = 1;
        for (int i = 1; i <= e; ++i) {
            pw *= q;
            for (std::size_t j = 0; j < base; ++j)
                ds.push_back(ds[j] * pw);
        }
    }
    return ds;
}

} // namespace

std::optional<Integer> eisenstein_witness(const PolyQ& f)
{
    if (f.degree() < 1)
        fail(ErrorKind::DegreeZero, "Eisenstein test needs degree >= 1");
    if (!f.has_integer_coeffs())
        fail(ErrorKind::NonIntegerCoefficients, "Eisenstein test needs integer coefficients");
    const Integer& c0 = f.coeffs()[0].get_num();
    if (sgn(c0) == 0)
        return std::nullopt;
    for (const auto& q : prime_factors(c0)) {
        bool ok = !mpz_divisible_p(f.lead().get_num_mpz_t(), q.get_mpz_t());
        for (int i = 0; ok && i < f.degree(); ++i)
            ok = mpz_divisible_p(f.coeffs()[static_cast<std::size_t>(i)].get_num_mpz_t(), q.get_mpz_t()) != 0;
        Integer q2 = q * q;
        if (ok && !mpz_divisible_p(c0.get_mpz_t(), q2.get_mpz_t()))
            return q;
    }
    return std::nullopt;
}

PolyQ cyclotomic(long n)
{
    if (n < 1)
        fail(ErrorKind::OutOfRange, "cyclotomic index must be >= 1");
    std::map<long, PolyQ> cache;
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0)
            continue;
        PolyQ num = PolyQ::monomial(1, static_cast<int>(d)) - PolyQ::constant(1);
        for (auto& [e, phi] : cache)
            if (d % e == 0)
                num = divrem(num, phi).first;
        cache.emplace(d, std::move(num));
    }
    return cache.at(n);
}

std::vector<std::pair<PolyQ, int>> squarefree_decomposition(const PolyQ& f)
{
    std::vector<std::pair<PolyQ, int>> out;
    if (f.degree() < 1)
        return out;
    PolyQ a = f.monic();
    PolyQ b = a.derivative();
    PolyQ c = gcd_q(a, b);
    PolyQ w = divrem(a, c).first;
    PolyQ y = divrem(b, c).first;
    int i = 1;
    while (true) {
        PolyQ z = y - w.derivative();
        if (z.is_zero()) {
            if (w.degree() > 0)
                out.emplace_back(w.monic(), i);
            break;
        }
        PolyQ g = gcd_q(w, z);
        if (g.degree() > 0)
            out.emplace_back(g, i);
        w = divrem(w, g).first;
        y = divrem(z, g).first;
        ++i;
        if (w.degree() <= 0)
            break;
    }
    return out;
}

PolyQ squarefree_part(const PolyQ& f)
{
    if (f.degree() < 1)
        return f.is_zero() ? PolyQ{} : PolyQ::constant(1);
    PolyQ g = gcd_q(f, f.derivative());
    return divrem(f, g).first.monic();
}

std::vector<Rational> rational_roots(const PolyQ& f)
{
    if (f.is_zero())
        fail(ErrorKind::ZeroInput, "roots of the zero polynomial");
    std::vector<Rational> roots;
    Rational scale;
    auto p = detail::to_primitive(f, scale);
    std::size_t low = 0;
    while (low < p.size() && sgn(p[low]) == 0)
        ++low;
    if (low > 0)
        roots.emplace_back(0);
    if (low + 1 >= p.size())
        return roots;
    for (const auto& num : divisors(p[low])) {
        for (const auto& den : divisors(p.back())) {
            for (int sign : {1, -1}) {
                Rational cand(sign * num, den);
                cand.canonicalize();
                if (sgn(f.eval(cand)) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

std::string term_text(const Rational& mag, int k, const std::string& var_power)
{
    if (k == 0)
        return to_string(mag);
    if (mag == 1)
        return var_power;
    return to_string(mag) + "*" + var_power;
}

} // namespace

std::string to_string(const PolyQ& f, char var)
{
    if (f.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (int k = f.degree(); k >= 0; --k) {
        const Rational& c = f.coeffs()[static_cast<std::size_t>(k)];
        if (sgn(c) == 0)
            continue;
        std::string vp(1, var);
        if (k > 1)
            vp += "^" + std::to_string(k);
        std::string t = term_text(abs(c), k, vp);
        if (first)
            out += (sgn(c) < 0 ? "-" : "") + t;
        else
            out += (sgn(c) < 0 ? " - " : " + ") + t;
        first = false;
    }
    return out;
}

namespace {

constexpr int kMaxExponent = 100000;

/// Recursive-descent reader for sums of monomials in up to two variables.
class TermParser {
public:
    TermParser(std::string_view text, std::string vars) : s_(text), vars_(std::move(vars)) {}

    /// Each term: (coefficient, exponents per variable).
    std::vector<std::pair<Rational, std::vector<int>>> parse()
    {
        std::vector<std::pair<Rational, std::vector<int>>> terms;
        skip();
        if (pos_ >= s_.size())
            error("empty polynomial");
        bool first = true;
        while (true) {
            skip();
            int sign = 1;
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
                sign = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                error("expected '+' or '-'");
            }
            first = false;
            auto term = parse_term();
            if (sign < 0)
                term.first = -term.first;
            terms.push_back(std::move(term));
            skip();
            if (pos_ >= s_.size())
                break;
        }
        return terms;
    }

private:
    [[noreturn]] void error(const std::string& msg)
    {
        fail(ErrorKind::SyntaxError, msg + " at position " + std::to_string(pos_), static_cast<long>(pos_));
    }

    void skip()
    {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' || s_[pos_] == '\r'))
            ++pos_;
    }

    bool at_digit() const { return pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9'; }

    Integer digits()
    {
        std::size_t start = pos_;
        while (at_digit())
            ++pos_;
        if (start == pos_)
            error("expected digits");
        return Integer(std::string(s_.substr(start, pos_ - start)), 10);
    }

    int var_index() const
    {
        if (pos_ >= s_.size())
            return -1;
        auto k = vars_.find(s_[pos_]);
        return k == std::string::npos ? -1 : static_cast<int>(k);
    }

    std::pair<Rational, std::vector<int>> parse_term()
    {
        Rational coef = 1;
        std::vector<int> exps(vars_.size(), 0);
        bool need_factor = true;
        if (at_digit()) {
            Integer num = digits();
            skip();
            Integer den = 1;
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                skip();
                den = digits();
                if (sgn(den) == 0)
                    error("zero denominator");
                skip();
            }
            coef = Rational(num, den);
            coef.canonicalize();
            need_factor = false;
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                skip();
                need_factor = true;
            } else {
                return {coef, exps};
            }
        }
        while (true) {
            int v = var_index();
            if (v < 0) {
                if (need_factor)
                    error("expected a coefficient or variable");
                break;
            }
            ++pos_;
            skip();
            long e = 1;
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                skip();
                Integer ez = digits();
                if (ez > kMaxExponent)
                    error("exponent too large");
                e = ez.get_si();
                skip();
            }
            if (exps[static_cast<std::size_t>(v)] + e > kMaxExponent)
                error("exponent too large");
            exps[static_cast<std::size_t>(v)] += static_cast<int>(e);
            need_factor = false;
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                skip();
                need_factor = true;
                continue;
            }
            break;
        }
        return {coef, exps};
    }

    std::string_view s_;
    std::string vars_;
    std::size_t pos_ = 0;
};

} // namespace

PolyQ parse_poly(std::string_view text, char var)
{
    TermParser parser(text, std::string(1, var));
    auto terms = parser.parse();
    int top = 0;
    for (const auto& t : terms)
        top = std::max(top, t.second[0]);
    std::vector<Rational> c(static_cast<std::size_t>(top) + 1);
    for (const auto& [coef, exps] : terms)
        c[static_cast<std::size_t>(exps[0])] += coef;
    return PolyQ(std::move(c));
}

int Bivariate::degree_x() const
{
    for (int i = static_cast<int>(table.size()) - 1; i >= 0; --i)
        for (const auto& c : table[static_cast<std::size_t>(i)])
            if (sgn(c) != 0)
                return i;
    return -1;
}

int Bivariate::degree_y() const
{
    int d = -1;
    for (const auto& row : table)
        for (int j = static_cast<int>(row.size()) - 1; j > d; --j)
            if (sgn(row[static_cast<std::size_t>(j)]) != 0) {
                d = j;
                break;
            }
    return d;
}

Specialization bivariate_specialize(const Bivariate& f, const Rational& b)
{
    int dy = f.degree_y();
    if (dy < 1)
        fail(ErrorKind::InvalidArgument, "bivariate polynomial must have positive degree in y");
    std::vector<Rational> c(static_cast<std::size_t>(dy) + 1);
    Rational pw = 1;
    for (const auto& row : f.table) {
        for (std::size_t j = 0; j < row.size(); ++j)
            c[j] += row[j] * pw;
        pw *= b;
    }
    PolyQ p(std::move(c));
    return {p, p.degree() < dy};
}

Bivariate parse_bivariate(std::string_view text)
{
    TermParser parser(text, "xy");
    auto terms = parser.parse();
    Bivariate f;
    for (const auto& [coef, exps] : terms) {
        auto i = static_cast<std::size_t>(exps[0]);
        auto j = static_cast<std::size_t>(exps[1]);
        if (f.table.size() <= i)
            f.table.resize(i + 1);
        if (f.table[i].size() <= j)
            f.table[i].resize(j + 1);
        f.table[i][j] += coef;
    }
    return f;
}

std::string to_string(const Bivariate& f)
{
    // descending total degree in y, then x
    std::string out;
    bool first = true;
    int dy = f.degree_y();
    for (int j = dy; j >= 0; --j) {
        for (int i = static_cast<int>(f.table.size()) - 1; i >= 0; --i) {
            const auto& row = f.table[static_cast<std::size_t>(i)];
            if (static_cast<std::size_t>(j) >= row.size() || sgn(row[static_cast<std::size_t>(j)]) == 0)
                continue;
            const Rational& c = row[static_cast<std::size_t>(j)];
            std::string mono;
            auto add = [&](char v, int e) {
                if (e == 0)
                    return;
                if (!mono.empty())
                    mono += "*";
                mono += v;
                if (e > 1)
                    mono += "^" + std::to_string(e);
            };
            add('x', i);
            add('y', j);
            Rational mag = abs(c);
            std::string t = mono.empty() ? to_string(mag) : (mag == 1 ? mono : to_string(mag) + "*" + mono);
            if (first)
                out += (sgn(c) < 0 ? "-" : "") + t;
            else
                out += (sgn(c) < 0 ? " - " : " + ") + t;
            first = false;
        }
    }
    return first ? "0" : out;
}

} // namespace galwit
