#include "galwit/witness.hpp"

#include "galwit/error.hpp"
#include "galwit/factor.hpp"

#include <algorithm>
#include <cctype>
#include <exception>
#include <thread>

namespace galwit {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

bool consume(std::string_view& s, std::string_view word)
{
    s = trim(s);
    if (s.substr(0, word.size()) != word)
        return false;
    s.remove_prefix(word.size());
    return true;
}

long parse_long(std::string_view s, const char* what)
{
    s = trim(s);
    Integer z = parse_integer(s);
    if (!z.fits_slong_p())
        fail(ErrorKind::OutOfRange, std::string(what) + " is too large");
    return z.get_si();
}

std::vector<PolyQ> parse_list(std::string_view s)
{
    std::vector<PolyQ> out;
    if (trim(s).empty())
        return out;
    std::size_t start = 0;
    while (true) {
        std::size_t semi = s.find(';', start);
        std::string_view piece = s.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
        if (trim(piece).empty())
            fail(ErrorKind::SyntaxError, "empty polynomial in family list", static_cast<long>(start));
        out.push_back(parse_poly(trim(piece)));
        if (semi == std::string_view::npos)
            break;
        start = semi + 1;
    }
    return out;
}

std::string join_polys(const std::vector<PolyQ>& polys)
{
    std::string out;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (i)
            out += "; ";
        out += to_string(polys[i]);
    }
    return out;
}

void validate(const FamilySpec& f)
{
    for (const auto& g : f.polys)
        if (g.is_zero())
            fail(ErrorKind::InvalidArgument, "family polynomials must be nonzero");
    switch (f.kind) {
    case FamilyKind::FiniteList:
        if (f.polys.empty())
            fail(ErrorKind::InvalidArgument, "a finite family needs at least one polynomial");
        break;
    case FamilyKind::FixedDegree:
    case FamilyKind::BoundedDegree:
        if (f.k < 1)
            fail(ErrorKind::InvalidArgument, "family degree must be at least 1", f.k);
        if (f.kind == FamilyKind::FixedDegree && !f.polys.empty())
            fail(ErrorKind::InvalidArgument, "a fixed-degree family takes no prefix");
        for (const auto& g : f.polys)
            if (g.degree() > f.k)
                fail(ErrorKind::InvalidArgument, "prefix polynomial " + to_string(g) + " exceeds degree " + std::to_string(f.k), g.degree());
        break;
    case FamilyKind::RadicalTower:
        if (f.base == 0)
            fail(ErrorKind::InvalidArgument, "radical tower base must be nonzero");
        if (f.n_min < 2 || f.n_max < f.n_min)
            fail(ErrorKind::InvalidArgument, "radical tower exponents need 2 <= a <= b");
        break;
    case FamilyKind::Cyclotomic:
    case FamilyKind::Solv:
        break;
    }
}

PolyQ product(const std::vector<PolyQ>& polys)
{
    PolyQ p = PolyQ::constant(1);
    for (const auto& g : polys)
        p *= g;
    return p;
}

TowerSummary splitting_of(const std::vector<PolyQ>& polys, long cap)
{
    PolyQ p = product(polys);
    if (p.degree() < 1)
        return {};
    return splitting_degree(p, cap);
}

std::string radical_description(const Integer& p)
{
    return "1 + " + to_string(p) + "^(1/" + to_string(p) + ")";
}

long small_prime(const Integer& p)
{
    if (!p.fits_slong_p() || p > 100000)
        fail(ErrorKind::OutOfRange, "witness prime " + to_string(p) + " is beyond the supported range");
    return p.get_si();
}

// 1 + p^(1/p), minimal polynomial taken in Q(p^(1/p)).
void set_radical_witness(WitnessCertificate& c, const Integer& p)
{
    long e = small_prime(p);
    NumberField k = NumberField::trusted(PolyQ::monomial(1, static_cast<int>(e)) - PolyQ::constant(Rational(p)));
    c.prime = p;
    c.witness_min_poly = minimal_polynomial(k.one() + k.generator());
    c.witness_description = radical_description(p);
}

PolyQ four_x_two(long p)
{
    return PolyQ::monomial(1, static_cast<int>(p)) + PolyQ::from_ints({2, -4});
}

void set_nonsolvable_witness(WitnessCertificate& c, long p)
{
    c.prime = p;
    c.witness_min_poly = four_x_two(p);
    c.witness_description = "root of " + to_string(c.witness_min_poly);
    c.obstruction = Obstruction::NonSolvable;
}

WitnessCertificate finish(WitnessCertificate c)
{
    c.checks = claimed_checks(c);
    return c;
}

SpecRow classify(const Bivariate& f, long b)
{
    SpecRow row;
    row.b = b;
    Specialization s = bivariate_specialize(f, Rational(b));
    row.poly = s.poly;
    if (s.degenerate || s.poly.degree() < 1) {
        row.outcome = SpecOutcome::Degenerate;
    } else if (!is_irreducible(s.poly)) {
        row.outcome = SpecOutcome::Reducible;
    } else if (s.poly.degree() <= 5) {
        row.outcome = SpecOutcome::IrreducibleWithGroup;
        row.group = galois_group(s.poly).tag;
    } else {
        row.outcome = SpecOutcome::Irreducible;
    }
    return row;
}

} // namespace

FamilySpec parse_family(std::string_view text)
{
    std::string_view s = trim(text);
    FamilySpec f;
    if (consume(s, "finite:")) {
        f.kind = FamilyKind::FiniteList;
        f.polys = parse_list(s);
    } else if (consume(s, "degree")) {
        if (consume(s, "<=")) {
            f.kind = FamilyKind::BoundedDegree;
            std::size_t at = s.find("prefix:");
            f.k = parse_long(s.substr(0, at), "family degree");
            if (at != std::string_view::npos)
                f.polys = parse_list(s.substr(at + 7));
        } else if (consume(s, "=")) {
            f.kind = FamilyKind::FixedDegree;
            f.k = parse_long(s, "family degree");
        } else {
            fail(ErrorKind::SyntaxError, "expected '=' or '<=' after 'degree'");
        }
    } else if (consume(s, "radical-tower")) {
        f.kind = FamilyKind::RadicalTower;
        if (!consume(s, "base="))
            fail(ErrorKind::SyntaxError, "expected base=B in radical-tower");
        s = trim(s);
        std::size_t sp = s.find_first_of(" \t");
        if (sp == std::string_view::npos)
            fail(ErrorKind::SyntaxError, "expected n=a..b in radical-tower");
        f.base = parse_integer(s.substr(0, sp));
        s.remove_prefix(sp);
        if (!consume(s, "n="))
            fail(ErrorKind::SyntaxError, "expected n=a..b in radical-tower");
        std::size_t dots = s.find("..");
        if (dots == std::string_view::npos)
            fail(ErrorKind::SyntaxError, "expected a range a..b");
        f.n_min = parse_long(s.substr(0, dots), "exponent");
        f.n_max = parse_long(s.substr(dots + 2), "exponent");
    } else if (s == "qab") {
        f.kind = FamilyKind::Cyclotomic;
    } else if (s == "qsolv") {
        f.kind = FamilyKind::Solv;
    } else {
        fail(ErrorKind::SyntaxError, "unknown family '" + std::string(s) + "'");
    }
    validate(f);
    return f;
}

std::string to_string(const FamilySpec& f)
{
    switch (f.kind) {
    case FamilyKind::FiniteList:
        return "finite: " + join_polys(f.polys);
    case FamilyKind::FixedDegree:
        return "degree = " + std::to_string(f.k);
    case FamilyKind::BoundedDegree:
        return "degree <= " + std::to_string(f.k) + (f.polys.empty() ? "" : " prefix: " + join_polys(f.polys));
    case FamilyKind::RadicalTower:
        return "radical-tower base=" + to_string(f.base) + " n=" + std::to_string(f.n_min) + ".." + std::to_string(f.n_max);
    case FamilyKind::Cyclotomic:
        return "qab";
    case FamilyKind::Solv:
        return "qsolv";
    }
    return "?";
}

std::string_view to_string(Obstruction o)
{
    switch (o) {
    case Obstruction::RadicalBasis: return "RADICAL_BASIS";
    case Obstruction::NonSolvable: return "NON_SOLVABLE";
    case Obstruction::AbelianObstruction: return "ABELIAN_OBSTRUCTION";
    }
    return "?";
}

std::string_view to_string(DegreeJustification j)
{
    switch (j) {
    case DegreeJustification::ExactSplitting: return "EXACT_SPLITTING";
    case DegreeJustification::ProductBound: return "PRODUCT_BOUND";
    case DegreeJustification::PrefixOnly: return "PREFIX_ONLY";
    }
    return "?";
}

std::string_view to_string(SpecOutcome o)
{
    switch (o) {
    case SpecOutcome::Degenerate: return "degenerate";
    case SpecOutcome::Reducible: return "reducible";
    case SpecOutcome::Irreducible: return "irreducible";
    case SpecOutcome::IrreducibleWithGroup: return "irreducible_with_group";
    }
    return "?";
}

RadicalPower radical_power_membership(const Integer& p, long m, long n)
{
    if (p < 2 || !is_prime(p))
        fail(ErrorKind::InvalidArgument, to_string(p) + " is not prime");
    if (m < 1 || n < 1)
        fail(ErrorKind::InvalidArgument, "m and n must be positive");
    PolyQ def = PolyQ::monomial(1, static_cast<int>(m)) - PolyQ::constant(Rational(p));
    NumberField k = m == 1 ? NumberField(def) : NumberField::trusted(def);
    NFElement x = (k.one() + k.generator()).pow(static_cast<unsigned long>(n));
    RadicalPower out;
    out.coords = x.coords();
    out.coords.resize(static_cast<std::size_t>(m));
    out.in_q = std::all_of(out.coords.begin() + 1, out.coords.end(), [](const Rational& q) { return q == 0; });
    return out;
}

WitnessCertificate witness_finite_family(const std::vector<PolyQ>& polys, long cap)
{
    WitnessCertificate c;
    c.family.kind = FamilyKind::FiniteList;
    c.family.polys = polys;
    validate(c.family);
    c.degree_data.kind = DegreeJustification::ExactSplitting;
    c.degree_data.tower = splitting_of(polys, cap);
    set_radical_witness(c, next_prime_above(Integer(c.degree_data.tower.total_degree)));
    return finish(std::move(c));
}

WitnessCertificate witness_fixed_degree_family(long k)
{
    WitnessCertificate c;
    c.family.kind = FamilyKind::FixedDegree;
    c.family.k = k;
    validate(c.family);
    c.degree_data.kind = DegreeJustification::ProductBound;
    c.degree_data.bound_k = k;
    set_radical_witness(c, next_prime_above(Integer(k)));
    return finish(std::move(c));
}

WitnessCertificate witness_bounded_degree_family(long k, const std::vector<PolyQ>& prefix, std::optional<Integer> p, long cap)
{
    WitnessCertificate c;
    c.family.kind = FamilyKind::BoundedDegree;
    c.family.k = k;
    c.family.polys = prefix;
    validate(c.family);
    if (p && (*p < 5 || !is_prime(*p)))
        fail(ErrorKind::InvalidArgument, "requested prime must be a prime >= 5");
    c.degree_data.kind = DegreeJustification::PrefixOnly;
    c.degree_data.prefix_size = static_cast<long>(prefix.size());
    c.degree_data.tower = splitting_of(prefix, cap);
    const long t = c.degree_data.tower.total_degree;

    Integer start = next_prime_above(Integer(std::max(k, 3L)));
    long q = small_prime(p && *p > start ? *p : start);
    int real_roots = -1;
    for (int attempt = 0; attempt <= kSturmRetries; ++attempt) {
        real_roots = sturm_real_roots(four_x_two(q));
        if (real_roots == q - 2 && t % q != 0) {
            set_nonsolvable_witness(c, q);
            return finish(std::move(c));
        }
        if (attempt < kSturmRetries)
            q = static_cast<long>(next_prime_above(static_cast<std::uint64_t>(q)));
    }
    fail(ErrorKind::SturmMismatch,
         "x^" + std::to_string(q) + " - 4*x + 2 has " + std::to_string(real_roots) + " real roots, not " + std::to_string(q - 2) +
             ", after " + std::to_string(kSturmRetries) + " retries",
         q);
}

WitnessCertificate witness_radical_tower(const Integer& base, long n_min, long n_max)
{
    WitnessCertificate c;
    c.family.kind = FamilyKind::RadicalTower;
    c.family.base = base;
    c.family.n_min = n_min;
    c.family.n_max = n_max;
    validate(c.family);
    c.degree_data.kind = DegreeJustification::PrefixOnly;
    set_nonsolvable_witness(c, 5);
    return finish(std::move(c));
}

WitnessCertificate witness_qab()
{
    WitnessCertificate c;
    c.family.kind = FamilyKind::Cyclotomic;
    c.obstruction = Obstruction::AbelianObstruction;
    c.degree_data.kind = DegreeJustification::PrefixOnly;
    set_radical_witness(c, 3);
    return finish(std::move(c));
}

WitnessCertificate witness_qsolv()
{
    WitnessCertificate c;
    c.family.kind = FamilyKind::Solv;
    c.degree_data.kind = DegreeJustification::PrefixOnly;
    set_nonsolvable_witness(c, 5);
    return finish(std::move(c));
}

WitnessCertificate make_witness(const FamilySpec& f, std::optional<Integer> p)
{
    if (p && f.kind != FamilyKind::BoundedDegree)
        fail(ErrorKind::InvalidArgument, "a prime can only be requested for a bounded-degree family");
    switch (f.kind) {
    case FamilyKind::FiniteList: return witness_finite_family(f.polys);
    case FamilyKind::FixedDegree: return witness_fixed_degree_family(f.k);
    case FamilyKind::BoundedDegree: return witness_bounded_degree_family(f.k, f.polys, p);
    case FamilyKind::RadicalTower: return witness_radical_tower(f.base, f.n_min, f.n_max);
    case FamilyKind::Cyclotomic: return witness_qab();
    case FamilyKind::Solv: return witness_qsolv();
    }
    fail(ErrorKind::InvalidArgument, "unknown family kind");
}

bool member_qab(const PolyQ& m)
{
    NumberField k(m);
    if (k.degree() == 1)
        return true;
    AutomorphismGroup g = automorphism_group(k);
    return g.is_normal && g.is_abelian;
}

bool member_qsolv(const PolyQ& m)
{
    return is_solvable_by_radicals(m).solvable;
}

SquareRootDemo qsolv_square_root_demo(const PolyQ& b)
{
    if (!is_irreducible(b))
        fail(ErrorKind::NotIrreducible, to_string(b) + " is not irreducible over Q");
    SquareRootDemo out;
    out.b_min_poly = b.monic();
    out.b_solvable = member_qsolv(b);
    if (!out.b_solvable)
        fail(ErrorKind::NotInQsolv, "a root of " + to_string(b) + " is not expressible by radicals");
    out.sqrt_min_poly = factor_q(out.b_min_poly.compose(PolyQ::monomial(1, 2))).factors.front().first;
    const int d = out.sqrt_min_poly.degree();
    try {
        Solvability s = is_solvable_by_radicals(out.sqrt_min_poly);
        if (!s.solvable)
            fail(ErrorKind::InvalidArgument, "square root of a solvable number reported non-solvable");
        out.sqrt_reason = "solvable by radicals (degree " + std::to_string(d) + ", decided directly)";
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Undecidable)
            throw;
        out.sqrt_reason = "solvable by radicals (degree " + std::to_string(d) + ", a square root over a solvable field)";
    }
    out.summary = "y^2 - b = (y - s)(y + s) with s = sqrt(b), minimal polynomial " + to_string(out.sqrt_min_poly) +
                  "; s is " + out.sqrt_reason + ", so y^2 - b is reducible over Q_solv";
    return out;
}

RadicalTowerReport radical_tower_analysis(long n_max, long cap)
{
    if (n_max < 3 || n_max > 8)
        fail(ErrorKind::DegreeOutOfRange, "radical tower analysis takes 3 <= n_max <= 8", n_max);
    PolyQ prod = PolyQ::constant(1);
    for (long n = 3; n <= n_max; ++n)
        prod *= PolyQ::monomial(1, static_cast<int>(n)) - PolyQ::constant(2);
    SplittingField sf = splitting_field(prod, cap);
    RadicalTowerReport out;
    out.n_max = n_max;
    out.tower = sf.summary;
    out.sqrt2_member = is_member(PolyQ::from_ints({-2, 0, 1}), sf.field).member;
    out.relative_degree = out.sqrt2_member ? 1 : 2;
    out.contradicts_claim = out.relative_degree != out.claimed_relative_degree;
    out.note = out.contradicts_claim
                   ? "measured relative degree 1 (sqrt(2) lies in K) contradicts the claimed relative degree 2"
                   : "measured relative degree 2 agrees with the claimed relative degree 2";
    return out;
}

double SpecializationReport::irreducible_fraction() const
{
    return rows.empty() ? 0.0 : static_cast<double>(irreducible) / static_cast<double>(rows.size());
}

SpecializationReport specialize_and_classify(const Bivariate& f, long lo, long hi, int jobs)
{
    if (f.degree_y() < 1)
        fail(ErrorKind::InvalidArgument, "specialization needs degree at least 1 in y");
    if (hi < lo)
        fail(ErrorKind::InvalidArgument, "empty specialization range");
    if (jobs < 1)
        fail(ErrorKind::InvalidArgument, "jobs must be positive", jobs);
    SpecializationReport rep;
    rep.f = f;
    rep.lo = lo;
    rep.hi = hi;
    const std::size_t n = static_cast<std::size_t>(hi - lo) + 1;
    rep.rows.resize(n);
    std::vector<std::exception_ptr> errors(n);
    auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t i = first; i < n; i += stride) {
            try {
                rep.rows[i] = classify(f, lo + static_cast<long>(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
    if (threads <= 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t)
            pool.emplace_back(work, t, threads);
        for (auto& th : pool)
            th.join();
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    for (const auto& row : rep.rows) {
        switch (row.outcome) {
        case SpecOutcome::Degenerate: ++rep.degenerate; break;
        case SpecOutcome::Reducible: ++rep.reducible; break;
        default: ++rep.irreducible; break;
        }
    }
    return rep;
}

} // namespace galwit
