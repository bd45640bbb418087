#ifndef GALWIT_WITNESS_HPP
#define GALWIT_WITNESS_HPP

// Witnesses for property P (an algebraic number all of whose positive powers
// avoid a field), their certificates and the independent verifier, together
// with the Q_ab / Q_solv predicates and the specialization scan.

#include "galwit/galois.hpp"
#include "galwit/numfield.hpp"
#include "galwit/poly.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace galwit {

enum class FamilyKind { FiniteList, FixedDegree, BoundedDegree, RadicalTower, Cyclotomic, Solv };

struct FamilySpec {
    FamilyKind kind = FamilyKind::FiniteList;
    std::vector<PolyQ> polys;  // the list, or the prefix of a bounded family
    long k = 0;
    Integer base{2};  // radical tower x^n - base, n_min <= n <= n_max
    long n_min = 0;
    long n_max = 0;
};

/// Grammar:
///   finite: <poly>; <poly>; ...
///   degree = k
///   degree <= k [prefix: <poly>; ...]
///   radical-tower base=B n=a..b
///   qab
///   qsolv
FamilySpec parse_family(std::string_view text);
std::string to_string(const FamilySpec& family);

struct RadicalPower {
    std::vector<Rational> coords;  // (1 + theta)^n in the basis 1, theta, ..., theta^{m-1}
    bool in_q = false;
};

/// Expands (1 + theta)^n with theta^m = p. Needs p prime, m, n >= 1.
RadicalPower radical_power_membership(const Integer& p, long m, long n);

enum class Obstruction { RadicalBasis, NonSolvable, AbelianObstruction };
enum class DegreeJustification { ExactSplitting, ProductBound, PrefixOnly };

std::string_view to_string(Obstruction o);
std::string_view to_string(DegreeJustification j);

struct DegreeData {
    DegreeJustification kind = DegreeJustification::ExactSplitting;
    TowerSummary tower;   // exact splitting, or the checked prefix
    long bound_k = 0;     // PRODUCT_BOUND(k)
    long prefix_size = 0; // PREFIX_ONLY(s)
};

struct CheckRecord {
    std::string op;
    std::vector<std::string> inputs;
    std::string expected;

    friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct WitnessCertificate {
    FamilySpec family;
    PolyQ witness_min_poly;
    std::string witness_description;
    Integer prime;
    Obstruction obstruction = Obstruction::RadicalBasis;
    DegreeData degree_data;
    std::vector<CheckRecord> checks;
};

WitnessCertificate witness_finite_family(const std::vector<PolyQ>& polys, long cap = kDefaultDegreeCap);
WitnessCertificate witness_fixed_degree_family(long k);

/// Retries after a Sturm mismatch.
inline constexpr int kSturmRetries = 10;

WitnessCertificate witness_bounded_degree_family(long k, const std::vector<PolyQ>& prefix,
                                                 std::optional<Integer> p = std::nullopt,
                                                 long cap = kDefaultDegreeCap);
/// x^n - base for n_min <= n <= n_max: every member has radical roots, so a
/// non-solvable witness covers the whole family.
WitnessCertificate witness_radical_tower(const Integer& base, long n_min, long n_max);
/// Q_ab: 1 + 3^(1/3) generates a non-normal cubic field, as do all its powers.
WitnessCertificate witness_qab();
WitnessCertificate witness_qsolv();

WitnessCertificate make_witness(const FamilySpec& family, std::optional<Integer> p = std::nullopt);

/// Sample bounds used when replaying power checks.
struct VerifierPolicy {
    long radical_power_samples = 50;
    long radical_degree_samples = 25;
    long nonsolvable_degree_samples = 10;
};

struct VerifyReport {
    bool ok = false;
    std::string failed_check;  // empty when ok
    std::vector<std::string> log;
};

/// The checks a certificate must carry, derived from its headline fields.
std::vector<CheckRecord> claimed_checks(const WitnessCertificate& c);

/// Replays every check from scratch. Never throws for a failed replay; the
/// failing check is named in the report.
VerifyReport verify_certificate(const WitnessCertificate& c, const VerifierPolicy& policy = {});

/// As verify_certificate, raising ReplayFailure naming the failing check.
void require_valid(const WitnessCertificate& c, const VerifierPolicy& policy = {});

/// Q(root of m) is Galois over Q with abelian group. m irreducible.
bool member_qab(const PolyQ& m);
/// A root of m is expressible by radicals; Undecidable outside the range of
/// is_solvable_by_radicals.
bool member_qsolv(const PolyQ& m);

struct SquareRootDemo {
    PolyQ b_min_poly;
    PolyQ sqrt_min_poly;  // minimal polynomial of sqrt(b)
    bool b_solvable = true;
    std::string sqrt_reason;
    std::string summary;
};

/// y^2 - b splits over Q_solv: sqrt(b) is a radical over Q(b). NotInQsolv
/// when b itself is not solvable.
SquareRootDemo qsolv_square_root_demo(const PolyQ& b_min_poly);

struct RadicalTowerReport {
    long n_max = 0;
    TowerSummary tower;
    bool sqrt2_member = false;
    int relative_degree = 2;     // [K(sqrt 2) : K]
    int claimed_relative_degree = 2;
    bool contradicts_claim = false;
    std::string note;
};

/// K = splitting field of prod_{3 <= n <= n_max} (x^n - 2), 3 <= n_max <= 8.
RadicalTowerReport radical_tower_analysis(long n_max, long cap = kDefaultDegreeCap);

enum class SpecOutcome { Degenerate, Reducible, Irreducible, IrreducibleWithGroup };
std::string_view to_string(SpecOutcome o);

struct SpecRow {
    long b = 0;
    SpecOutcome outcome = SpecOutcome::Degenerate;
    std::optional<GroupTag> group;
    PolyQ poly;
};

struct SpecializationReport {
    Bivariate f;
    long lo = 0;
    long hi = 0;
    std::vector<SpecRow> rows;  // ascending b
    long degenerate = 0;
    long reducible = 0;
    long irreducible = 0;  // with or without a group
    double irreducible_fraction() const;
};

/// f(b, y) for every integer b in [lo, hi]; rows are identical for any jobs.
SpecializationReport specialize_and_classify(const Bivariate& f, long lo, long hi, int jobs = 1);

/// Canonical JSON: sorted keys, no insignificant whitespace.
std::string emit_certificate(const WitnessCertificate& c);
/// Writes the canonical bytes; IOFailure when the file cannot be written.
void emit_certificate(const WitnessCertificate& c, const std::string& path);
/// SyntaxError for anything that is not a well-formed certificate.
WitnessCertificate parse_certificate(std::string_view json);

} // namespace galwit

#endif
