#include "galwit/error.hpp"
#include "galwit/factor.hpp"
#include "galwit/witness.hpp"

#include <functional>
#include <map>

namespace galwit {

namespace {

std::string str(long v) { return std::to_string(v); }
std::string str(bool v) { return v ? "true" : "false"; }

PolyQ product_of(const std::vector<PolyQ>& polys)
{
    PolyQ p = PolyQ::constant(1);
    for (const auto& g : polys)
        p *= g;
    return p;
}

long radical_exponent(const std::string& text)
{
    Integer q = parse_integer(text);
    if (q < 2 || q > 100000)
        fail(ErrorKind::OutOfRange, "radical exponent " + text + " out of range");
    return q.get_si();
}

bool radical_kind(Obstruction o) { return o != Obstruction::NonSolvable; }

Obstruction expected_obstruction(FamilyKind k)
{
    switch (k) {
    case FamilyKind::FiniteList:
    case FamilyKind::FixedDegree:
        return Obstruction::RadicalBasis;
    case FamilyKind::Cyclotomic:
        return Obstruction::AbelianObstruction;
    default:
        return Obstruction::NonSolvable;
    }
}

long product(const std::vector<int>& steps)
{
    long t = 1;
    for (int s : steps)
        t *= s;
    return t;
}

// Independent of minimal_polynomial: expand (x - 1)^p - p directly.
PolyQ shifted_radical(long p)
{
    PolyQ f = PolyQ::monomial(1, static_cast<int>(p)) - PolyQ::constant(p);
    return f.compose(PolyQ::from_ints({-1, 1}));
}

std::string fail_reason(const WitnessCertificate& c)
{
    const FamilySpec& f = c.family;
    try {
        (void)parse_family(to_string(f));
    } catch (const Error&) {
        return "family";
    }
    if (c.obstruction != expected_obstruction(f.kind))
        return "obstruction";
    return {};
}

bool degree_data_consistent(const WitnessCertificate& c)
{
    const DegreeData& d = c.degree_data;
    const FamilySpec& f = c.family;
    if (product(d.tower.steps) != d.tower.total_degree)
        return false;
    for (int s : d.tower.steps)
        if (s < 2)
            return false;
    switch (f.kind) {
    case FamilyKind::FiniteList:
        return d.kind == DegreeJustification::ExactSplitting && d.bound_k == 0 && d.prefix_size == 0;
    case FamilyKind::FixedDegree:
        return d.kind == DegreeJustification::ProductBound && d.bound_k == f.k && d.prefix_size == 0 && d.tower.steps.empty();
    case FamilyKind::BoundedDegree:
        return d.kind == DegreeJustification::PrefixOnly && d.bound_k == 0 &&
               d.prefix_size == static_cast<long>(f.polys.size()) && (!f.polys.empty() || d.tower.steps.empty());
    default:
        return d.kind == DegreeJustification::PrefixOnly && d.bound_k == 0 && d.prefix_size == 0 && d.tower.steps.empty();
    }
}

// "12 [2,3,2]": total degree and the relative degrees of the tower
std::string tower_text(const TowerSummary& t)
{
    std::string out = str(t.total_degree) + " [";
    for (std::size_t i = 0; i < t.steps.size(); ++i)
        out += (i ? "," : "") + std::to_string(t.steps[i]);
    return out + "]";
}

using Replay = std::function<std::string(const std::vector<std::string>&)>;

} // namespace

std::vector<CheckRecord> claimed_checks(const WitnessCertificate& c)
{
    const FamilySpec& f = c.family;
    const std::string p = to_string(c.prime);
    const std::string w = to_string(c.witness_min_poly);
    const std::string t = str(c.degree_data.tower.total_degree);
    const bool has_prefix = f.kind == FamilyKind::BoundedDegree && !f.polys.empty();
    std::vector<CheckRecord> out;

    if (f.kind == FamilyKind::FiniteList || has_prefix)
        out.push_back({"splitting_degree", {to_string(product_of(f.polys))}, tower_text(c.degree_data.tower)});
    out.push_back({"is_prime", {p}, "true"});
    switch (f.kind) {
    case FamilyKind::FiniteList:
        out.push_back({"greater_than", {p, t}, "true"});
        break;
    case FamilyKind::FixedDegree:
        out.push_back({"greater_than", {p, str(f.k)}, "true"});
        out.push_back({"product_bound", {str(f.k), p}, "true"});
        break;
    case FamilyKind::BoundedDegree:
        out.push_back({"greater_than", {p, str(std::max(f.k, 3L))}, "true"});
        break;
    case FamilyKind::RadicalTower:
        out.push_back({"radical_family", {to_string(f.base), str(f.n_min), str(f.n_max)}, "true"});
        break;
    default:
        break;
    }
    if (radical_kind(c.obstruction)) {
        out.push_back({"witness_min_poly", {p}, w});
        out.push_back({"irreducible", {w}, "true"});
        out.push_back({"degree", {w}, p});
        out.push_back({"radical_powers_irrational", {p}, "true"});
        out.push_back({"power_degrees", {w}, p});
        if (c.obstruction == Obstruction::AbelianObstruction)
            out.push_back({"member_qab", {w}, "false"});
    } else {
        out.push_back({"eisenstein", {w}, "2"});
        out.push_back({"irreducible", {w}, "true"});
        out.push_back({"degree", {w}, p});
        out.push_back({"sturm_real_roots", {w}, c.prime.fits_slong_p() ? str(c.prime.get_si() - 2) : "?"});
        out.push_back({"solvable_by_radicals", {w}, "false"});
        out.push_back({"power_degrees", {w}, p});
    }
    if (f.kind == FamilyKind::FiniteList || has_prefix)
        out.push_back({"not_divides", {p, t}, "true"});
    return out;
}

VerifyReport verify_certificate(const WitnessCertificate& c, const VerifierPolicy& policy)
{
    VerifyReport rep;
    auto reject = [&](const std::string& name, const std::string& why) {
        rep.ok = false;
        rep.failed_check = name;
        rep.log.push_back("FAIL " + name + ": " + why);
        return rep;
    };
    auto pass = [&](const std::string& line) { rep.log.push_back("ok   " + line); };

    // headline fields
    if (c.prime < 2 || c.prime >= kPrimalityBound || !is_prime(c.prime))
        return reject("primality", to_string(c.prime) + " is not a certified prime");
    pass("primality: " + to_string(c.prime) + " is prime");
    if (Integer(c.witness_min_poly.degree()) != c.prime)
        return reject("degree", "witness degree " + str(static_cast<long>(c.witness_min_poly.degree())) + " != " + to_string(c.prime));
    pass("degree: witness has degree " + to_string(c.prime));
    if (std::string r = fail_reason(c); !r.empty())
        return reject(r, "family " + to_string(c.family) + " does not match obstruction " + std::string(to_string(c.obstruction)));
    pass("family: " + to_string(c.family) + " with " + std::string(to_string(c.obstruction)));
    const long p = c.prime.get_si();
    const std::string want_desc = radical_kind(c.obstruction) ? "1 + " + str(p) + "^(1/" + str(p) + ")"
                                                              : "root of " + to_string(c.witness_min_poly);
    if (c.witness_description != want_desc)
        return reject("witness", "description '" + c.witness_description + "' does not name the witness");
    pass("witness: " + c.witness_description);
    if (!degree_data_consistent(c))
        return reject("degree_data", "degree data does not fit the family");
    pass("degree_data: " + std::string(to_string(c.degree_data.kind)));
    std::vector<CheckRecord> want = claimed_checks(c);
    if (c.checks != want)
        return reject("checks", "recorded checks differ from the claims of the certificate");
    pass("checks: " + str(static_cast<long>(want.size())) + " records");

    const long degree_samples = radical_kind(c.obstruction) ? policy.radical_degree_samples : policy.nonsolvable_degree_samples;
    const std::map<std::string, Replay> replay = {
        {"splitting_degree", [](const auto& in) { return tower_text(splitting_degree(parse_poly(in.at(0)))); }},
        {"is_prime",
         [](const auto& in) {
             Integer n = parse_integer(in.at(0));
             return str(n >= 2 && n < kPrimalityBound && is_prime(n));
         }},
        {"greater_than", [](const auto& in) { return str(parse_integer(in.at(0)) > parse_integer(in.at(1))); }},
        {"not_divides",
         [](const auto& in) {
             Integer q = parse_integer(in.at(0)), t = parse_integer(in.at(1));
             return str(q != 0 && t % q != 0);
         }},
        {"product_bound",
         [](const auto& in) {
             // q prime and q > k: q divides no product of integers in [1, k]
             Integer k = parse_integer(in.at(0)), q = parse_integer(in.at(1));
             if (k < 1 || q <= k || q >= kPrimalityBound || !is_prime(q))
                 return str(false);
             for (Integer i = 1; i <= k; ++i)
                 if (i % q == 0)
                     return str(false);
             return str(true);
         }},
        {"radical_family",
         [](const auto& in) {
             Integer base = parse_integer(in.at(0)), a = parse_integer(in.at(1)), b = parse_integer(in.at(2));
             return str(base != 0 && a >= 2 && a <= b);
         }},
        {"witness_min_poly", [](const auto& in) { return to_string(shifted_radical(radical_exponent(in.at(0)))); }},
        {"irreducible", [](const auto& in) { return str(is_irreducible(parse_poly(in.at(0)))); }},
        {"degree", [](const auto& in) { return str(static_cast<long>(parse_poly(in.at(0)).degree())); }},
        {"radical_powers_irrational",
         [&policy](const auto& in) {
             long m = radical_exponent(in.at(0));
             Integer q = m;
             for (long n = 1; n <= policy.radical_power_samples; ++n)
                 if (radical_power_membership(q, m, n).in_q)
                     return str(false);
             return str(true);
         }},
        {"power_degrees",
         [degree_samples](const auto& in) {
             NumberField k(parse_poly(in.at(0)));
             NFElement a = k.generator(), x = a;
             for (long n = 1; n <= degree_samples; ++n, x = x * a) {
                 int d = element_degree(x);
                 if (d != k.degree())
                     return str(static_cast<long>(d));
             }
             return str(static_cast<long>(k.degree()));
         }},
        {"member_qab", [](const auto& in) { return str(member_qab(parse_poly(in.at(0)))); }},
        {"eisenstein",
         [](const auto& in) {
             auto e = eisenstein_witness(parse_poly(in.at(0)));
             return e ? to_string(*e) : std::string("none");
         }},
        {"sturm_real_roots", [](const auto& in) { return str(static_cast<long>(sturm_real_roots(parse_poly(in.at(0))))); }},
        {"solvable_by_radicals", [](const auto& in) { return str(is_solvable_by_radicals(parse_poly(in.at(0))).solvable); }},
    };

    for (const auto& check : c.checks) {
        auto it = replay.find(check.op);
        if (it == replay.end())
            return reject(check.op, "unknown check");
        std::string got;
        try {
            got = it->second(check.inputs);
        } catch (const std::exception& e) {
            return reject(check.op, e.what());
        }
        std::string call = check.op + "(";
        for (std::size_t i = 0; i < check.inputs.size(); ++i)
            call += (i ? ", " : "") + check.inputs[i];
        call += ")";
        if (got != check.expected)
            return reject(check.op, call + " = " + got + ", expected " + check.expected);
        pass(call + " = " + got);
    }
    rep.ok = true;
    return rep;
}

void require_valid(const WitnessCertificate& c, const VerifierPolicy& policy)
{
    VerifyReport r = verify_certificate(c, policy);
    if (!r.ok)
        fail(ErrorKind::ReplayFailure, "replay failed: " + r.failed_check + (r.log.empty() ? "" : " (" + r.log.back() + ")"));
}

} // namespace galwit
