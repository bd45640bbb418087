#ifndef GALWIT_ZP_HPP
#define GALWIT_ZP_HPP

// Dense polynomials over Z/p for a word-sized prime p, with squarefree
// factorization by distinct-degree and equal-degree splitting.

#include "galwit/poly.hpp"

#include <cstdint>
#include <vector>

namespace galwit {

class PolyZp {
public:
    using Coeffs = std::vector<std::uint64_t>;

    explicit PolyZp(std::uint64_t p) : p_(p) {}
    PolyZp(std::uint64_t p, Coeffs c);
    /// Reduction of a polynomial over Q; p must not divide any denominator.
    static PolyZp from(const PolyQ& f, std::uint64_t p);

    std::uint64_t modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    const Coeffs& coeffs() const { return c_; }
    std::uint64_t coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : 0; }
    std::uint64_t lead() const { return c_.back(); }

    PolyZp monic() const;
    PolyZp derivative() const;
    std::uint64_t eval(std::uint64_t x) const;

    friend PolyZp operator+(const PolyZp& a, const PolyZp& b);
    friend PolyZp operator-(const PolyZp& a, const PolyZp& b);
    friend PolyZp operator*(const PolyZp& a, const PolyZp& b);
    friend PolyZp operator*(const PolyZp& a, std::uint64_t s);
    friend bool operator==(const PolyZp& a, const PolyZp& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

private:
    void trim();
    std::uint64_t p_;
    Coeffs c_;
};

std::pair<PolyZp, PolyZp> divrem(const PolyZp& f, const PolyZp& g);
PolyZp rem(const PolyZp& f, const PolyZp& g);
PolyZp gcd(const PolyZp& f, const PolyZp& g);
/// s*f + t*g = gcd (monic).
PolyZp xgcd(const PolyZp& f, const PolyZp& g, PolyZp& s, PolyZp& t);
PolyZp powmod(const PolyZp& base, const Integer& e, const PolyZp& modulus);
bool is_squarefree(const PolyZp& f);
/// Resultant by the Euclidean remainder sequence.
std::uint64_t resultant(const PolyZp& a, const PolyZp& b);

/// (degree d, product of all monic irreducible factors of degree d).
std::vector<std::pair<int, PolyZp>> distinct_degree_factor(const PolyZp& f);
/// Degrees of the irreducible factors of a squarefree f, sorted.
std::vector<int> factor_degrees(const PolyZp& f);
/// Monic irreducible factors of a squarefree f (p odd), deterministic order.
std::vector<PolyZp> factor_squarefree(const PolyZp& f);
/// Roots in F_p of a squarefree f, sorted.
std::vector<std::uint64_t> roots(const PolyZp& f);

} // namespace galwit

#endif
