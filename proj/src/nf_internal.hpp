#ifndef GALWIT_SRC_NF_INTERNAL_HPP
#define GALWIT_SRC_NF_INTERNAL_HPP

#include "galwit/numfield.hpp"
#include "galwit/zp.hpp"

#include <functional>
#include <optional>

namespace galwit::detail {

PolyZp reduce_int(const IntPoly& f, std::uint64_t p);

} // namespace galwit::detail

namespace galwit::nf {

/// Image of a in F_p under theta |-> r, or nothing when p divides the
/// denominator of a.
std::optional<std::uint64_t> reduce_at(const NFElement& a, std::uint64_t p, std::uint64_t r);

/// Reduction of g modulo a degree-one prime (p, theta - r).
std::optional<PolyZp> reduce_at(const PolyK& g, std::uint64_t p, std::uint64_t r);

/// Visits reductions of a monic g modulo degree-one primes of its field at
/// which the reduction is sound (the defining polynomial is integral and
/// squarefree mod p, g is p-integral and squarefree mod the prime). Stops
/// when visit returns true, after `useful` visits, or after `max_primes`
/// primes. Returns the number of visits.
int scan_degree_one_primes(const PolyK& g, int useful, int max_primes,
                           const std::function<bool(const PolyZp&)>& visit);

/// Upper bound on the number of roots of a monic squarefree g in its field;
/// -1 when no sound reduction was found.
int root_count_bound(const PolyK& g);

/// Certifies that a nonzero polynomial over Z is squarefree by finding a
/// prime where its reduction keeps its degree and is squarefree. False is
/// inconclusive.
bool certified_squarefree(const detail::IntPoly& f);

/// Remainder of h(x + c) modulo a monic g over the same field.
PolyK shifted_remainder(const PolyQ& h, const NFElement& c, const PolyK& g);

/// Upper bound on the absolute values of the complex roots of f.
Integer root_bound(const PolyQ& f);

// The variants below take an optional bound on the roots of every conjugate
// of g, valid only when all those roots are algebraic integers.
PolyQ shifted_norm(const PolyK& g, long s, const Integer* integral_roots);
std::vector<PolyK> factor_squarefree(const PolyK& g, const Integer* integral_roots);
AdjoinResult adjoin_root(const NumberField& k, const PolyK& g, const Integer* integral_roots);

/// Chinese remaindering over word primes above 2^61 followed by rational
/// reconstruction. `solve` returns the residues of the n unknowns modulo p
/// (nothing to skip the prime); a reconstruction that repeats on two
/// consecutive primes is offered to `accept`, which must check it exactly.
std::optional<std::vector<Rational>> reconstruct_multimodular(
    std::size_t n, const std::function<std::optional<std::vector<std::uint64_t>>(std::uint64_t)>& solve,
    const std::function<bool(const std::vector<Rational>&)>& accept, int max_primes = 4000);

} // namespace galwit::nf

#endif
