#ifndef GALWIT_EXACT_HPP
#define GALWIT_EXACT_HPP

// Arbitrary precision integers and rationals (GMP backed), primality and
// small number-theoretic helpers.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace galwit {

using Integer = mpz_class;
using Rational = mpq_class;

enum class ArithOp { Add, Sub, Mul, Div };

/// Exact rational arithmetic; the result is always canonical.
Rational rat_arith(const Rational& a, const Rational& b, ArithOp op);

/// Primality is decided by Miller-Rabin with the bases 2..17, which is
/// deterministic below this bound. Larger inputs raise OutOfRange.
inline const Integer kPrimalityBound{"341550071728321"};

bool is_prime(const Integer& n);
/// Word-size overload for modular work, deterministic on all 64-bit inputs.
bool is_prime(std::uint64_t n);
Integer next_prime_above(const Integer& bound);
std::uint64_t next_prime_above(std::uint64_t bound);
Integer binomial(const Integer& n, const Integer& k);

/// Integer square root test; sets *root when `n` is a perfect square.
bool is_square(const Integer& n, Integer* root = nullptr);
/// A rational is a square iff numerator and denominator are.
bool is_square(const Rational& q, Rational* root = nullptr);

Integer parse_integer(std::string_view text);
/// Accepts "a" or "a/b" with optional leading sign.
Rational parse_rational(std::string_view text);
std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

/// Euler's totient, for small arguments.
long euler_phi(long n);

/// Modular helpers on 64-bit words.
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);
/// Residue of an exact rational modulo a prime p not dividing its denominator.
std::uint64_t reduce_mod(const Rational& q, std::uint64_t p);
std::uint64_t reduce_mod(const Integer& z, std::uint64_t p);

/// Reconstructs a/b from r mod m with |a|, b <= sqrt(m/2). Returns false if
/// no such fraction exists.
bool rational_reconstruct(const Integer& r, const Integer& m, Rational& out);

} // namespace galwit

#endif
