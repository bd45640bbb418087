#ifndef GALWIT_POLY_HPP
#define GALWIT_POLY_HPP

#include "galwit/exact.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace galwit {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and equality is structural.
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(std::vector<Rational> coeffs);

    static PolyQ constant(const Rational& c);
    static PolyQ monomial(const Rational& c, int k);
    static PolyQ x() { return monomial(1, 1); }
    /// Ascending integer coefficients, e.g. {-2, 0, 1} is x^2 - 2.
    static PolyQ from_ints(std::initializer_list<long> ascending);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& lead() const { return c_.back(); }

    Rational eval(const Rational& at) const;
    PolyQ derivative() const;
    PolyQ monic() const;
    PolyQ compose(const PolyQ& inner) const;
    bool has_integer_coeffs() const;

    PolyQ operator-() const;
    PolyQ& operator+=(const PolyQ& o);
    PolyQ& operator-=(const PolyQ& o);
    PolyQ& operator*=(const PolyQ& o);
    PolyQ& operator*=(const Rational& s);

    friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
    friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator*(PolyQ a, const Rational& s) { return a *= s; }
    friend PolyQ operator*(const Rational& s, PolyQ a) { return a *= s; }
    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PolyQ& a, const PolyQ& b) { return !(a == b); }

private:
    void trim();
    std::vector<Rational> c_;
};

enum class PolyOp { Add, Sub, Mul, Compose };

PolyQ poly_arith(const PolyQ& f, const PolyQ& g, PolyOp op);
/// f = q*g + r with deg r < deg g. Throws DivisionByZero for g = 0.
std::pair<PolyQ, PolyQ> divrem(const PolyQ& f, const PolyQ& g);
/// Monic gcd; BothZero when f = g = 0.
PolyQ gcd_q(const PolyQ& f, const PolyQ& g);
/// u*f + v*g = gcd_q(f, g).
PolyQ xgcd_q(const PolyQ& f, const PolyQ& g, PolyQ& u, PolyQ& v);

/// Res(f, g) = lc(f)^deg g * prod g(a) over the roots a of f.
Rational resultant(const PolyQ& f, const PolyQ& g);
Rational discriminant(const PolyQ& f);

/// Number of distinct real roots of a squarefree polynomial.
int sturm_real_roots(const PolyQ& f);

/// A prime q certifying irreducibility by Eisenstein's criterion, searched
/// among the prime factors of the constant term.
std::optional<Integer> eisenstein_witness(const PolyQ& f);

PolyQ cyclotomic(long n);

/// Monic squarefree factors with multiplicities (Yun).
std::vector<std::pair<PolyQ, int>> squarefree_decomposition(const PolyQ& f);
PolyQ squarefree_part(const PolyQ& f);

/// Rational roots of a nonzero polynomial, by the rational root theorem.
std::vector<Rational> rational_roots(const PolyQ& f);

/// Descending canonical text, e.g. "x^5 - 4*x + 2".
std::string to_string(const PolyQ& f, char var = 'x');
/// Parses the polynomial grammar; SyntaxError carries the byte position.
PolyQ parse_poly(std::string_view text, char var = 'x');

/// Polynomial in x and y; table[i][j] is the coefficient of x^i y^j.
struct Bivariate {
    std::vector<std::vector<Rational>> table;

    int degree_x() const;
    int degree_y() const;
    bool is_zero() const { return degree_x() < 0; }
};

struct Specialization {
    PolyQ poly;       // f(b, y) as a polynomial in y
    bool degenerate;  // deg_y dropped below deg_y f
};

Specialization bivariate_specialize(const Bivariate& f, const Rational& b);
Bivariate parse_bivariate(std::string_view text);
std::string to_string(const Bivariate& f);

} // namespace galwit

#endif
