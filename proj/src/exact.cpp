#include "galwit/exact.hpp"

#include "galwit/error.hpp"

#include <array>
#include <cctype>

namespace galwit {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::DegreeZero: return "DegreeZero";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::NonIntegerCoefficients: return "NonIntegerCoefficients";
    case ErrorKind::DegenerateSpecialization: return "DegenerateSpecialization";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::PrimitiveElementSearchExhausted: return "PrimitiveElementSearchExhausted";
    case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::DegreeNotPrime: return "DegreeNotPrime";
    case ErrorKind::Undecidable: return "Undecidable";
    case ErrorKind::SturmMismatch: return "SturmMismatch";
    case ErrorKind::ReplayFailure: return "ReplayFailure";
    case ErrorKind::NotInQsolv: return "NotInQsolv";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::IOFailure: return "IOFailure";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Rational rat_arith(const Rational& a, const Rational& b, ArithOp op)
{
    Rational r;
    switch (op) {
    case ArithOp::Add: r = a + b; break;
    case ArithOp::Sub: r = a - b; break;
    case ArithOp::Mul: r = a * b; break;
    case ArithOp::Div:
        if (sgn(b) == 0)
            fail(ErrorKind::DivisionByZero, "rational division by zero");
        r = a / b;
        break;
    }
    r.canonicalize();
    return r;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p)
{
    // extended Euclid on signed 128-bit to stay exact for 63-bit moduli
    __int128 t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        __int128 q = r / nr;
        __int128 tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1)
        fail(ErrorKind::DivisionByZero, "residue is not invertible");
    if (t < 0)
        t += p;
    return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_mod(const Integer& z, std::uint64_t p)
{
    Integer r;
    Integer pp;
    mpz_import(pp.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), pp.get_mpz_t());
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
    return out;
}

std::uint64_t reduce_mod(const Rational& q, std::uint64_t p)
{
    std::uint64_t n = reduce_mod(q.get_num(), p);
    std::uint64_t d = reduce_mod(q.get_den(), p);
    if (d == 0)
        fail(ErrorKind::DivisionByZero, "denominator divisible by modulus");
    return mulmod(n, invmod(d, p), p);
}

namespace {

template <std::size_t N>
bool miller_rabin_u64(std::uint64_t n, const std::array<std::uint64_t, N>& bases)
{
    if (n < 2)
        return false;
    for (auto b : bases) {
        if (n == b)
            return true;
        if (n % b == 0)
            return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (auto a : bases) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

// Deterministic below 341550071728321.
constexpr std::array<std::uint64_t, 7> kSmallBases{2, 3, 5, 7, 11, 13, 17};
// Deterministic for every 64-bit integer; used for word-size moduli.
constexpr std::array<std::uint64_t, 12> kWordBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

} // namespace

bool is_prime(std::uint64_t n)
{
    return miller_rabin_u64(n, kWordBases);
}

bool is_prime(const Integer& n)
{
    if (sgn(n) < 0)
        fail(ErrorKind::OutOfRange, "primality of a negative integer");
    if (n >= kPrimalityBound)
        fail(ErrorKind::OutOfRange, "primality test is only deterministic below 341550071728321");
    return miller_rabin_u64(static_cast<std::uint64_t>(n.get_ui()), kSmallBases);
}

std::uint64_t next_prime_above(std::uint64_t bound)
{
    std::uint64_t c = bound + 1;
    while (!is_prime(c))
        ++c;
    return c;
}

Integer next_prime_above(const Integer& bound)
{
    if (sgn(bound) < 0)
        fail(ErrorKind::OutOfRange, "next_prime_above expects a non-negative bound");
    if (bound >= kPrimalityBound)
        fail(ErrorKind::OutOfRange, "bound exceeds the deterministic primality range");
    return Integer(static_cast<unsigned long>(next_prime_above(static_cast<std::uint64_t>(bound.get_ui()))));
}

Integer binomial(const Integer& n, const Integer& k)
{
    if (sgn(k) < 0 || k > n)
        fail(ErrorKind::OutOfRange, "binomial requires 0 <= k <= n");
    if (!n.fits_ulong_p())
        fail(ErrorKind::OutOfRange, "binomial argument too large");
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n.get_ui(), k.get_ui());
    return r;
}

bool is_square(const Integer& n, Integer* root)
{
    if (sgn(n) < 0)
        return false;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0)
        return false;
    if (root)
        *root = sqrt(n);
    return true;
}

bool is_square(const Rational& q, Rational* root)
{
    Integer a, b;
    if (!is_square(q.get_num(), &a) || !is_square(q.get_den(), &b))
        return false;
    if (root) {
        *root = Rational(a, b);
        root->canonicalize();
    }
    return true;
}

Integer parse_integer(std::string_view text)
{
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    if (i == text.size())
        fail(ErrorKind::SyntaxError, "expected digits", static_cast<long>(i));
    for (std::size_t j = i; j < text.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            fail(ErrorKind::SyntaxError, "invalid digit in integer", static_cast<long>(j));
    Integer z(std::string(text.substr(i)), 10);
    return neg ? Integer(-z) : z;
}

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '+' || den_text[0] == '-'))
        fail(ErrorKind::SyntaxError, "signed denominator", static_cast<long>(slash + 1));
    Integer den = parse_integer(den_text);
    if (sgn(den) == 0)
        fail(ErrorKind::DivisionByZero, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

long euler_phi(long n)
{
    long result = n;
    for (long q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            while (n % q == 0)
                n /= q;
            result -= result / q;
        }
    }
    if (n > 1)
        result -= result / n;
    return result;
}

bool rational_reconstruct(const Integer& r, const Integer& m, Rational& out)
{
    Integer bound = sqrt(Integer(m / 2));
    Integer r0 = m, r1 = r % m;
    if (sgn(r1) < 0)
        r1 += m;
    Integer t0 = 0, t1 = 1;
    while (r1 > bound) {
        Integer q = r0 / r1;
        Integer tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (sgn(t1) == 0 || abs(t1) > bound)
        return false;
    Integer g = gcd(r1, t1);
    if (g != 1)
        return false;
    out = Rational(r1, t1);
    out.canonicalize();
    return true;
}

} // namespace galwit
