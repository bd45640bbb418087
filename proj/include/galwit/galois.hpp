#ifndef GALWIT_GALOIS_HPP
#define GALWIT_GALOIS_HPP

// Galois groups of irreducible polynomials of degree at most 5, the S_p
// criterion and solvability by radicals.

#include "galwit/poly.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace galwit {

enum class GroupTag { C1, C2, C3, S3, C4, V4, D4, A4, S4, C5, D5, F20, A5, S5 };

std::string_view to_string(GroupTag tag);
long group_order(GroupTag tag);
bool is_solvable(GroupTag tag);
/// Whether the group sits inside the alternating group of its degree.
bool is_even(GroupTag tag);

enum class EvidenceKind {
    Irreducible,
    Discriminant,
    ResolventFactors,
    IrreducibleOverDiscField,
    CycleType,
    RealRoots,
    SpCriterion,
    SplittingDegree,
};

std::string_view to_string(EvidenceKind kind);

struct Evidence {
    EvidenceKind kind;
    std::string value;
};

struct GaloisClass {
    int degree = 0;
    GroupTag tag = GroupTag::C1;
    bool solvable = true;
    std::vector<Evidence> evidence;
};

inline constexpr int kCycleSievePrimes = 25;

struct CycleSample {
    std::uint64_t prime;
    std::vector<int> type;  // factor degrees mod p, ascending
};

/// Factorization patterns of f modulo its first `count` good primes (p not
/// dividing the leading coefficient, reduction squarefree).
std::vector<CycleSample> cycle_types(const PolyQ& f, int count = kCycleSievePrimes);

/// Requires f irreducible (NotIrreducible) of degree 1..5 (DegreeOutOfRange).
GaloisClass galois_group(const PolyQ& f);

/// Sound test for group S_p: f irreducible of prime degree p with exactly
/// p - 2 real roots. DegreeNotPrime otherwise.
bool sp_criterion(const PolyQ& f);

struct Solvability {
    bool solvable = false;
    std::vector<Evidence> evidence;
};

/// Decided for degree <= 5 and for prime degree when sp_criterion fires;
/// Undecidable elsewhere.
Solvability is_solvable_by_radicals(const PolyQ& f);

} // namespace galwit

#endif
