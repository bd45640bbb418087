#ifndef GALWIT_FACTOR_HPP
#define GALWIT_FACTOR_HPP

#include "galwit/detail/intpoly.hpp"
#include "galwit/poly.hpp"

#include <utility>
#include <vector>

namespace galwit {

/// unit * prod factor^multiplicity reproduces the input; factors are monic,
/// irreducible over Q, pairwise distinct, sorted by degree then coefficients.
struct FactorizationQ {
    Rational unit;
    std::vector<std::pair<PolyQ, int>> factors;

    PolyQ expand() const;
    bool is_irreducible() const { return factors.size() == 1 && factors[0].second == 1; }
};

/// Complete factorization over Q: squarefree decomposition, then Zassenhaus
/// (modular factorization, Hensel lifting, subset recombination).
FactorizationQ factor_q(const PolyQ& f);

/// True iff f has degree >= 1 and is irreducible over Q.
bool is_irreducible(const PolyQ& f);

std::string to_string(const FactorizationQ& fac, char var = 'x');

namespace detail {

struct ZassenhausOptions {
    /// Every irreducible factor is known to have degree divisible by this.
    int degree_multiple = 1;
    /// Good primes examined for the degree sieve and prime choice.
    int sieve_primes = 8;
};

/// Primitive irreducible factors of a squarefree primitive f in Z[x].
std::vector<IntPoly> factor_squarefree_int(const IntPoly& f, const ZassenhausOptions& opts = {});

/// Subset-sum reachable degrees of a factor pattern, as a 0/1 mask of
/// length total+1.
std::vector<char> reachable_degrees(const std::vector<int>& pattern, int total);

} // namespace detail

} // namespace galwit

#endif
