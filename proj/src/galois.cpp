#include "galwit/galois.hpp"

#include "galwit/error.hpp"
#include "galwit/factor.hpp"
#include "galwit/numfield.hpp"
#include "galwit/zp.hpp"

#include <algorithm>

namespace galwit {

std::string_view to_string(GroupTag tag)
{
    switch (tag) {
    case GroupTag::C1: return "C1";
    case GroupTag::C2: return "C2";
    case GroupTag::C3: return "C3";
    case GroupTag::S3: return "S3";
    case GroupTag::C4: return "C4";
    case GroupTag::V4: return "V4";
    case GroupTag::D4: return "D4";
    case GroupTag::A4: return "A4";
    case GroupTag::S4: return "S4";
    case GroupTag::C5: return "C5";
    case GroupTag::D5: return "D5";
    case GroupTag::F20: return "F20";
    case GroupTag::A5: return "A5";
    case GroupTag::S5: return "S5";
    }
    return "?";
}

long group_order(GroupTag tag)
{
    switch (tag) {
    case GroupTag::C1: return 1;
    case GroupTag::C2: return 2;
    case GroupTag::C3: return 3;
    case GroupTag::S3: return 6;
    case GroupTag::C4: return 4;
    case GroupTag::V4: return 4;
    case GroupTag::D4: return 8;
    case GroupTag::A4: return 12;
    case GroupTag::S4: return 24;
    case GroupTag::C5: return 5;
    case GroupTag::D5: return 10;
    case GroupTag::F20: return 20;
    case GroupTag::A5: return 60;
    case GroupTag::S5: return 120;
    }
    return 0;
}

bool is_solvable(GroupTag tag) { return tag != GroupTag::A5 && tag != GroupTag::S5; }

bool is_even(GroupTag tag)
{
    switch (tag) {
    case GroupTag::C1:
    case GroupTag::C3:
    case GroupTag::V4:
    case GroupTag::A4:
    case GroupTag::C5:
    case GroupTag::D5:
    case GroupTag::A5:
        return true;
    default:
        return false;
    }
}

std::string_view to_string(EvidenceKind kind)
{
    switch (kind) {
    case EvidenceKind::Irreducible: return "irreducible";
    case EvidenceKind::Discriminant: return "discriminant";
    case EvidenceKind::ResolventFactors: return "resolvent_factor_degrees";
    case EvidenceKind::IrreducibleOverDiscField: return "irreducible_over_disc_field";
    case EvidenceKind::CycleType: return "cycle_type";
    case EvidenceKind::RealRoots: return "real_roots";
    case EvidenceKind::SpCriterion: return "sp_criterion";
    case EvidenceKind::SplittingDegree: return "splitting_degree";
    }
    return "?";
}

namespace {

std::string join_degrees(const std::vector<int>& ds, char sep)
{
    std::string out;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (i)
            out += sep;
        out += std::to_string(ds[i]);
    }
    return out;
}

void require_irreducible(const PolyQ& f)
{
    if (f.is_zero())
        fail(ErrorKind::ZeroInput, "Galois group of the zero polynomial");
    if (!is_irreducible(f))
        fail(ErrorKind::NotIrreducible, to_string(f) + " is not irreducible over Q");
}

Evidence disc_evidence(const Rational& disc, bool square)
{
    return {EvidenceKind::Discriminant, to_string(disc) + (square ? " (square)" : " (not a square)")};
}

// x^3 - b x^2 + (ac - 4d) x - (a^2 d - 4bd + c^2) for monic x^4 + a x^3 + b x^2 + c x + d
PolyQ resolvent_cubic(const PolyQ& monic)
{
    const Rational a = monic.coeff(3), b = monic.coeff(2), c = monic.coeff(1), d = monic.coeff(0);
    return PolyQ({-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, Rational(1)});
}

GroupTag quartic_group(const PolyQ& f, bool disc_square, std::vector<Evidence>& ev)
{
    PolyQ r = resolvent_cubic(f.monic());
    std::vector<int> degs;
    for (const auto& [g, m] : factor_q(r).factors)
        for (int i = 0; i < m; ++i)
            degs.push_back(g.degree());
    std::sort(degs.begin(), degs.end());
    ev.push_back({EvidenceKind::ResolventFactors, join_degrees(degs, ',')});
    if (degs.size() == 1)
        return disc_square ? GroupTag::A4 : GroupTag::S4;
    if (degs.size() == 3)
        return GroupTag::V4;
    // one rational root of the resolvent: C4 when f splits over Q(sqrt disc)
    NumberField k(PolyQ({-discriminant(f), Rational(0), Rational(1)}));
    bool irreducible = factor_over_nf(f, k).factors.size() == 1;
    ev.push_back({EvidenceKind::IrreducibleOverDiscField, irreducible ? "true" : "false"});
    return irreducible ? GroupTag::D4 : GroupTag::C4;
}

GroupTag quintic_group(const PolyQ& f, std::vector<Evidence>& ev)
{
    auto samples = cycle_types(f);
    for (const auto& s : samples) {
        if (s.type == std::vector<int>{2, 3}) {
            ev.push_back({EvidenceKind::CycleType, "p=" + std::to_string(s.prime) + ": " + join_degrees(s.type, '+')});
            return GroupTag::S5;
        }
    }
    if (!samples.empty()) {
        // distinct patterns seen, each with its first prime
        std::vector<std::vector<int>> seen;
        std::string summary;
        for (const auto& s : samples) {
            if (std::find(seen.begin(), seen.end(), s.type) != seen.end())
                continue;
            seen.push_back(s.type);
            if (!summary.empty())
                summary += "; ";
            summary += "p=" + std::to_string(s.prime) + ": " + join_degrees(s.type, '+');
        }
        ev.push_back({EvidenceKind::CycleType, summary});
    }
    if (sp_criterion(f)) {
        ev.push_back({EvidenceKind::SpCriterion, "true"});
        return GroupTag::S5;
    }
    TowerSummary t = splitting_degree(f);
    ev.push_back({EvidenceKind::SplittingDegree, std::to_string(t.total_degree) + " (steps " + join_degrees(t.steps, ',') + ")"});
    switch (t.total_degree) {
    case 5: return GroupTag::C5;
    case 10: return GroupTag::D5;
    case 20: return GroupTag::F20;
    case 60: return GroupTag::A5;
    case 120: return GroupTag::S5;
    }
    fail(ErrorKind::InvalidArgument, "splitting degree " + std::to_string(t.total_degree) + " is not that of a quintic");
}

} // namespace

std::vector<CycleSample> cycle_types(const PolyQ& f, int count)
{
    Rational scale;
    detail::IntPoly prim = detail::to_primitive(f, scale);
    PolyQ g = detail::to_polyq(prim);
    std::vector<CycleSample> out;
    for (std::uint64_t p = 2; static_cast<int>(out.size()) < count; p = next_prime_above(p)) {
        if (mpz_divisible_ui_p(prim.back().get_mpz_t(), static_cast<unsigned long>(p)))
            continue;
        PolyZp fp = PolyZp::from(g, p);
        if (!is_squarefree(fp))
            continue;
        out.push_back({p, factor_degrees(fp)});
    }
    return out;
}

GaloisClass galois_group(const PolyQ& f)
{
    if (f.degree() < 1 || f.degree() > 5)
        fail(ErrorKind::DegreeOutOfRange, "Galois groups are identified for degrees 1 to 5", f.degree());
    require_irreducible(f);
    GaloisClass out;
    out.degree = f.degree();
    out.evidence.push_back({EvidenceKind::Irreducible, "true"});
    if (out.degree == 1) {
        out.tag = GroupTag::C1;
        return out;
    }
    Rational disc = discriminant(f);
    bool square = is_square(disc);
    out.evidence.push_back(disc_evidence(disc, square));
    out.evidence.push_back({EvidenceKind::RealRoots, std::to_string(sturm_real_roots(f))});
    switch (out.degree) {
    case 2: out.tag = GroupTag::C2; break;
    case 3: out.tag = square ? GroupTag::C3 : GroupTag::S3; break;
    case 4: out.tag = quartic_group(f, square, out.evidence); break;
    default: out.tag = quintic_group(f, out.evidence); break;
    }
    out.solvable = is_solvable(out.tag);
    return out;
}

bool sp_criterion(const PolyQ& f)
{
    const int p = f.degree();
    if (p < 2 || !is_prime(Integer(p)))
        fail(ErrorKind::DegreeNotPrime, "the S_p criterion needs prime degree", p);
    return is_irreducible(f) && sturm_real_roots(f) == p - 2;
}

Solvability is_solvable_by_radicals(const PolyQ& f)
{
    require_irreducible(f);
    Solvability out;
    const int n = f.degree();
    if (n <= 4) {
        out.solvable = true;
        out.evidence.push_back({EvidenceKind::Irreducible, "degree " + std::to_string(n) + " <= 4"});
        return out;
    }
    if (n == 5) {
        GaloisClass g = galois_group(f);
        out.solvable = g.solvable;
        out.evidence = std::move(g.evidence);
        return out;
    }
    if (is_prime(Integer(n)) && sp_criterion(f)) {
        out.solvable = false;
        out.evidence.push_back({EvidenceKind::Irreducible, "true"});
        out.evidence.push_back({EvidenceKind::RealRoots, std::to_string(n - 2)});
        out.evidence.push_back({EvidenceKind::SpCriterion, "true"});
        return out;
    }
    fail(ErrorKind::Undecidable, "solvability is decided for degree <= 5 or prime degree with p - 2 real roots", n);
}

} // namespace galwit
