#ifndef GALWIT_NUMFIELD_HPP
#define GALWIT_NUMFIELD_HPP

// Exact arithmetic in Q(theta) = Q[t]/(m), factorization over such fields,
// primitive-element adjunction and splitting-field towers.

#include "galwit/detail/intpoly.hpp"
#include "galwit/poly.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace galwit {

class NFElement;

class NumberField {
public:
    /// The rational field, presented as Q[t]/(t).
    NumberField();
    /// Makes m monic and certifies irreducibility with factor_q
    /// (NotIrreducible otherwise, DegreeZero for constants).
    explicit NumberField(const PolyQ& min_poly);
    /// Skips the irreducibility certificate; for fields whose defining
    /// polynomial is irreducible by construction.
    static NumberField trusted(const PolyQ& monic_irreducible);

    int degree() const;
    const PolyQ& min_poly() const;
    /// Primitive integer multiple of min_poly with positive leading term.
    const detail::IntPoly& int_min_poly() const;
    /// True when min_poly has integer coefficients.
    bool is_integral() const;

    NFElement zero() const;
    NFElement one() const;
    NFElement generator() const;
    NFElement from_rational(const Rational& q) const;
    /// Coordinates in the power basis; shorter vectors are zero-padded,
    /// longer ones raise DegreeOutOfRange.
    NFElement from_coords(const std::vector<Rational>& coords) const;
    /// Image of p(theta), reduced modulo min_poly.
    NFElement from_poly(const PolyQ& p) const;

    bool same(const NumberField& other) const;

    struct Data;

private:
    explicit NumberField(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
    friend class NFElement;
};

/// Element of a number field, held as num(theta)/den with num in Z[t],
/// deg num < [K:Q], den > 0 and gcd(content(num), den) = 1.
class NFElement {
public:
    /// Zero of the rational field.
    NFElement() = default;

    const NumberField& field() const { return field_; }
    std::vector<Rational> coords() const;
    Rational coord(int i) const;
    PolyQ as_poly() const;
    const detail::IntPoly& numerator() const { return num_; }
    const Integer& denominator() const { return den_; }

    bool is_zero() const { return num_.empty(); }
    bool is_rational() const { return num_.size() <= 1; }

    NFElement operator-() const;
    NFElement inverse() const;
    NFElement pow(unsigned long e) const;

    friend NFElement operator+(const NFElement& a, const NFElement& b);
    friend NFElement operator-(const NFElement& a, const NFElement& b);
    friend NFElement operator*(const NFElement& a, const NFElement& b);
    friend NFElement operator/(const NFElement& a, const NFElement& b);
    friend NFElement operator*(const NFElement& a, const Rational& q);
    friend bool operator==(const NFElement& a, const NFElement& b);
    friend bool operator!=(const NFElement& a, const NFElement& b) { return !(a == b); }

private:
    friend class NumberField;
    NFElement(NumberField f, detail::IntPoly num, Integer den);
    void normalize();
    void reduce();

    NumberField field_;
    detail::IntPoly num_;
    Integer den_{1};
};

NFElement nf_arith(const NFElement& a, const NFElement& b, ArithOp op);

/// Field norm N_{K/Q}(a) = Res(m, a(t)).
Rational norm(const NFElement& a);

/// Monic polynomial of least degree with a as root.
PolyQ minimal_polynomial(const NFElement& a);
int element_degree(const NFElement& a);

/// Coordinates as "[c0, c1, ...]".
std::string to_string(const NFElement& a);

/// Polynomial with coefficients in a number field, ascending.
struct PolyK {
    NumberField field;
    std::vector<NFElement> c;

    PolyK() = default;
    PolyK(NumberField k, std::vector<NFElement> coeffs);
    static PolyK embed(const NumberField& k, const PolyQ& f);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const NFElement& lead() const { return c.back(); }
    PolyK monic() const;
    NFElement eval(const NFElement& x) const;
    /// g(x + shift)
    PolyK shift(const NFElement& shift) const;
    /// Coefficientwise image under a map of the coefficient field.
    template <class F>
    PolyK map(const NumberField& target, F&& f) const
    {
        std::vector<NFElement> out;
        out.reserve(c.size());
        for (const auto& x : c)
            out.push_back(f(x));
        return PolyK(target, std::move(out));
    }
};

PolyK operator*(const PolyK& a, const PolyK& b);
PolyK operator-(const PolyK& a, const PolyK& b);
bool operator==(const PolyK& a, const PolyK& b);
std::pair<PolyK, PolyK> divrem(const PolyK& a, const PolyK& b);
/// Monic gcd over the field.
PolyK gcd(const PolyK& a, const PolyK& b);
std::string to_string(const PolyK& g);

/// Norm over Q of g(x - s*theta): Res_t(m(t), g(x - s*t)).
PolyQ shifted_norm(const PolyK& g, long s);

/// Irreducible factors over K with multiplicities; factors are monic.
struct FactorizationK {
    NFElement unit;
    std::vector<std::pair<PolyK, int>> factors;
};

FactorizationK factor_over_nf(const PolyQ& f, const NumberField& k);
/// Monic irreducible factors of a monic squarefree g over its field.
std::vector<PolyK> factor_squarefree_over_nf(const PolyK& g);
/// Roots of g lying in its coefficient field, deduplicated.
std::vector<NFElement> roots_in_field(const PolyK& g);

/// Cheap sound test: true means g is proven irreducible over its field by
/// reduction modulo degree-one primes. False is inconclusive.
bool proven_irreducible(const PolyK& g);

struct AdjoinResult;
namespace nf {
AdjoinResult adjoin_root(const NumberField&, const PolyK&, const Integer*);
}

struct AdjoinResult {
    NumberField field;        // Q(gamma), gamma = beta + shift * theta
    NFElement theta_image;    // old generator theta in the new field
    NFElement root_image;     // adjoined root beta in the new field
    long shift = 0;

    /// Image of an element of the old field.
    NFElement embed(const NFElement& a) const;
    PolyK embed(const PolyK& g) const;

private:
    friend AdjoinResult nf::adjoin_root(const NumberField&, const PolyK&, const Integer*);
    std::vector<NFElement> theta_powers;
};

/// Largest shift tried when searching for a squarefree norm.
inline constexpr long kMaxShift = 50;

/// Field generated over K by a root beta of g, which must be irreducible
/// over K of degree >= 2 (NotIrreducible otherwise).
AdjoinResult adjoin_root(const NumberField& k, const PolyK& g);

struct TowerSummary {
    std::vector<int> steps;
    long total_degree = 1;
};

inline constexpr long kDefaultDegreeCap = 5000;

TowerSummary splitting_degree(const PolyQ& f, long cap = kDefaultDegreeCap);

/// The splitting field itself, with every root of f expressed in it.
struct SplittingField {
    TowerSummary summary;
    NumberField field;
    std::vector<NFElement> roots;
};

SplittingField splitting_field(const PolyQ& f, long cap = kDefaultDegreeCap);

struct Membership {
    bool member = false;
    std::optional<NFElement> witness;  // a root of the target in K
};

Membership is_member(const PolyQ& target_min_poly, const NumberField& k);

struct AutomorphismGroup {
    std::vector<NFElement> images;  // theta |-> image, identity first
    bool is_normal = false;
    bool is_abelian = false;
};

AutomorphismGroup automorphism_group(const NumberField& k);

/// sigma(a) for the automorphism theta |-> image.
NFElement apply_automorphism(const NFElement& image, const NFElement& a);

} // namespace galwit

#endif
