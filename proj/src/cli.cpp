#include "galwit/cli.hpp"

#include "galwit/error.hpp"
#include "galwit/factor.hpp"
#include "galwit/galois.hpp"
#include "galwit/numfield.hpp"
#include "galwit/witness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

namespace galwit::cli {

using nlohmann::json;

namespace {

constexpr const char* kGrammar =
    "polynomial grammar: a sum of terms c*x^k with rational c, e.g. \"x^5 - 4*x + 2\" or \"1/2*x + 1/3\"\n"
    "bivariate terms use x and y, e.g. \"y^2 - x\"\n"
    "family grammar: \"finite: <poly>; <poly>\" | \"degree = k\" | \"degree <= k [prefix: <poly>; ...]\" |\n"
    "                \"radical-tower base=B n=a..b\" | \"qab\" | \"qsolv\"\n"
    "arguments starting with '-' must follow \"--\"\n";

constexpr long kMaxCyclotomic = 10000;
constexpr long kMaxRange = 1000000;

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

PolyQ input_poly(const std::string& text)
{
    PolyQ f = parse_poly(text);
    if (f.degree() > kMaxInputDegree)
        throw Usage("degree " + std::to_string(f.degree()) + " exceeds the command-line limit " + std::to_string(kMaxInputDegree));
    return f;
}

json evidence_json(const std::vector<Evidence>& ev)
{
    json a = json::array();
    for (const auto& e : ev)
        a.push_back({{"kind", std::string(to_string(e.kind))}, {"value", e.value}});
    return a;
}

std::string steps_text(const std::vector<int>& steps)
{
    std::string s;
    for (std::size_t i = 0; i < steps.size(); ++i)
        s += (i ? "," : "") + std::to_string(steps[i]);
    return s;
}

std::string degree_text(const DegreeData& d)
{
    switch (d.kind) {
    case DegreeJustification::ExactSplitting:
        return "t=" + std::to_string(d.tower.total_degree) + " (EXACT_SPLITTING, steps " + steps_text(d.tower.steps) + ")";
    case DegreeJustification::ProductBound:
        return "PRODUCT_BOUND(" + std::to_string(d.bound_k) + "): every finite subfamily has degree t_1...t_s with each t_j <= " +
               std::to_string(d.bound_k);
    case DegreeJustification::PrefixOnly:
        if (d.prefix_size == 0)
            return "PREFIX_ONLY(0): the obstruction covers the whole family";
        return "PREFIX_ONLY(" + std::to_string(d.prefix_size) + "): prefix splitting degree t=" + std::to_string(d.tower.total_degree) +
               " (steps " + steps_text(d.tower.steps) + ")";
    }
    return "?";
}

void print_report(std::ostream& out, const VerifyReport& r)
{
    for (const auto& line : r.log)
        out << "  " << line << "\n";
    out << (r.ok ? "verified" : "verification FAILED at " + r.failed_check) << "\n";
}

json report_json(const VerifyReport& r)
{
    return {{"ok", r.ok}, {"failed_check", r.failed_check}, {"log", r.log}};
}

struct Options {
    std::string format = "text";
    std::string poly;
    std::string field;
    std::string family;
    std::string emit;
    std::string file;
    std::string range;
    std::string prime;
    long cap = kDefaultDegreeCap;
    long n = 0;
    int jobs = 1;
};

class Runner {
public:
    Runner(const Options& o, std::ostream& out) : o_(o), out_(out), json_(o.format == "json") {}

    int factor()
    {
        FactorizationQ fac = factor_q(input_poly(o_.poly));
        if (json_) {
            json fs = json::array();
            for (const auto& [g, m] : fac.factors)
                fs.push_back({{"poly", to_string(g)}, {"multiplicity", m}});
            emit({{"unit", to_string(fac.unit)}, {"factors", fs}});
        } else {
            out_ << to_string(fac) << "\n";
        }
        return kAnswered;
    }

    int galois()
    {
        GaloisClass g = galois_group(input_poly(o_.poly));
        if (json_) {
            emit({{"degree", g.degree},
                  {"group", std::string(to_string(g.tag))},
                  {"order", group_order(g.tag)},
                  {"solvable", g.solvable},
                  {"evidence", evidence_json(g.evidence)}});
        } else {
            out_ << "group " << to_string(g.tag) << " (order " << group_order(g.tag) << ", " << (g.solvable ? "solvable" : "not solvable")
                 << ")\n";
            for (const auto& e : g.evidence)
                out_ << "  " << to_string(e.kind) << ": " << e.value << "\n";
        }
        return kAnswered;
    }

    int splitting()
    {
        if (o_.cap < 1)
            throw Usage("--cap must be positive");
        TowerSummary t = splitting_degree(input_poly(o_.poly), o_.cap);
        if (json_)
            emit({{"degree", t.total_degree}, {"steps", t.steps}});
        else
            out_ << "splitting degree " << t.total_degree << " (steps " << steps_text(t.steps) << ")\n";
        return kAnswered;
    }

    int sturm()
    {
        int r = sturm_real_roots(input_poly(o_.poly));
        if (json_)
            emit({{"real_roots", r}});
        else
            out_ << r << " real root" << (r == 1 ? "" : "s") << "\n";
        return kAnswered;
    }

    int cyclotomic_cmd()
    {
        if (o_.n < 1 || o_.n > kMaxCyclotomic)
            throw Usage("cyclotomic index must lie in 1.." + std::to_string(kMaxCyclotomic));
        PolyQ f = cyclotomic(o_.n);
        if (json_)
            emit({{"n", o_.n}, {"poly", to_string(f)}, {"degree", f.degree()}});
        else
            out_ << to_string(f) << "\n";
        return kAnswered;
    }

    int member()
    {
        PolyQ target = input_poly(o_.poly);
        NumberField k(input_poly(o_.field));
        Membership m = is_member(target, k);
        if (json_) {
            json j = {{"member", m.member}};
            if (m.witness)
                j["witness"] = to_string(*m.witness);
            emit(j);
        } else if (m.member) {
            out_ << "member: a root is " << to_string(*m.witness) << " in the power basis\n";
        } else {
            out_ << "not a member\n";
        }
        return m.member ? kAnswered : kRefuted;
    }

    int witness()
    {
        std::optional<Integer> p;
        if (!o_.prime.empty())
            p = parse_integer(o_.prime);
        WitnessCertificate c = make_witness(parse_family(o_.family), p);
        VerifyReport r = verify_certificate(c);
        if (!o_.emit.empty())
            emit_certificate(c, o_.emit);
        if (json_) {
            out_ << emit_certificate(c) << "\n";
        } else {
            out_ << "family: " << to_string(c.family) << "\n";
            out_ << "degree: " << degree_text(c.degree_data) << "\n";
            out_ << "prime: p=" << to_string(c.prime) << "\n";
            out_ << "witness: " << c.witness_description << "\n";
            out_ << "minimal polynomial: " << to_string(c.witness_min_poly) << "\n";
            out_ << "obstruction: " << to_string(c.obstruction) << "\n";
            out_ << "checks:\n";
            for (std::size_t i = 0; i < c.checks.size(); ++i) {
                const auto& ch = c.checks[i];
                out_ << "  " << i + 1 << ". " << ch.op << "(";
                for (std::size_t k = 0; k < ch.inputs.size(); ++k)
                    out_ << (k ? ", " : "") << ch.inputs[k];
                out_ << ") = " << ch.expected << "\n";
            }
            if (r.ok)
                out_ << "verified: " << c.checks.size() << " checks replayed\n";
            else
                print_report(out_, r);
            if (!o_.emit.empty())
                out_ << "certificate written to " << o_.emit << "\n";
        }
        return r.ok ? kAnswered : kRefuted;
    }

    int verify()
    {
        std::ifstream in(o_.file, std::ios::binary);
        if (!in)
            throw Error(ErrorKind::IOFailure, "cannot read " + o_.file);
        std::stringstream buf;
        buf << in.rdbuf();
        VerifyReport r;
        try {
            r = verify_certificate(parse_certificate(buf.str()));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::SyntaxError)
                throw;
            r.ok = false;
            r.failed_check = "format";
            r.log.push_back(std::string("FAIL format: ") + e.what());
        }
        if (json_)
            emit(report_json(r));
        else
            print_report(out_, r);
        return r.ok ? kAnswered : kRefuted;
    }

    int specialize()
    {
        auto dots = o_.range.find("..");
        if (dots == std::string::npos)
            throw Usage("--range expects a..b");
        Integer lo = parse_integer(o_.range.substr(0, dots)), hi = parse_integer(o_.range.substr(dots + 2));
        if (hi < lo || hi - lo >= kMaxRange || !lo.fits_slong_p() || !hi.fits_slong_p())
            throw Usage("--range must be nonempty with at most " + std::to_string(kMaxRange) + " values");
        if (o_.jobs < 1 || o_.jobs > 256)
            throw Usage("--jobs must lie in 1..256");
        Bivariate f = parse_bivariate(o_.poly);
        if (f.degree_x() > kMaxInputDegree || f.degree_y() > kMaxInputDegree)
            throw Usage("degree exceeds the command-line limit");
        SpecializationReport rep = specialize_and_classify(f, lo.get_si(), hi.get_si(), o_.jobs);
        if (json_) {
            json rows = json::array();
            for (const auto& row : rep.rows) {
                json r = {{"b", row.b}, {"outcome", std::string(to_string(row.outcome))}, {"poly", to_string(row.poly, 'y')}};
                if (row.group)
                    r["group"] = std::string(to_string(*row.group));
                rows.push_back(r);
            }
            emit({{"f", to_string(rep.f)},
                  {"range", {rep.lo, rep.hi}},
                  {"rows", rows},
                  {"counts", {{"degenerate", rep.degenerate}, {"reducible", rep.reducible}, {"irreducible", rep.irreducible}}}});
        } else {
            for (const auto& row : rep.rows) {
                out_ << "b=" << row.b << ": " << to_string(row.outcome);
                if (row.group)
                    out_ << " " << to_string(*row.group);
                out_ << "  " << to_string(row.poly, 'y') << "\n";
            }
            out_ << "reducible " << rep.reducible << ", irreducible " << rep.irreducible << ", degenerate " << rep.degenerate << " of "
                 << rep.rows.size() << "\n";
        }
        return kAnswered;
    }

    int qab()
    {
        PolyQ f = input_poly(o_.poly);
        bool member = member_qab(f);
        if (json_)
            emit({{"member", member}});
        else
            out_ << (member ? "member of Q_ab (abelian Galois field)" : "not a member (the field of a root is not abelian Galois)") << "\n";
        return member ? kAnswered : kRefuted;
    }

    int qsolv()
    {
        PolyQ f = input_poly(o_.poly);
        Solvability s = is_solvable_by_radicals(f);
        std::string why;
        for (const auto& e : s.evidence)
            if (e.kind == EvidenceKind::SpCriterion)
                why = "S_p criterion";
        if (f.degree() <= 5 && f.degree() >= 1) {
            GroupTag tag = galois_group(f).tag;
            why = std::string(s.solvable ? "solvable" : "non-solvable") + " Galois group " + std::string(to_string(tag));
        }
        if (json_) {
            emit({{"member", s.solvable}, {"reason", why}, {"evidence", evidence_json(s.evidence)}});
        } else if (s.solvable) {
            out_ << "member" << (why.empty() ? "" : " (" + why + ")") << "\n";
        } else {
            out_ << "not a member (" << why << ")\n";
        }
        return s.solvable ? kAnswered : kRefuted;
    }

    int radical_tower()
    {
        RadicalTowerReport r = radical_tower_analysis(o_.n, o_.cap);
        if (json_) {
            emit({{"n_max", r.n_max},
                  {"field_degree", r.tower.total_degree},
                  {"sqrt2_member", r.sqrt2_member},
                  {"relative_degree", r.relative_degree},
                  {"claimed_relative_degree", r.claimed_relative_degree},
                  {"contradicts_claim", r.contradicts_claim},
                  {"note", r.note}});
        } else {
            out_ << "K = splitting field of prod_{3<=n<=" << r.n_max << "} (x^n - 2), degree " << r.tower.total_degree << "\n";
            out_ << "is_member(x^2 - 2, K) = " << (r.sqrt2_member ? "true" : "false") << "\n";
            out_ << "[K(sqrt 2) : K] = " << r.relative_degree << "\n";
            out_ << (r.contradicts_claim ? "DIVERGENCE: " : "") << r.note << "\n";
        }
        return kAnswered;
    }

private:
    void emit(const json& j) { out_ << j.dump() << "\n"; }

    const Options& o_;
    std::ostream& out_;
    bool json_;
};

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exact Galois-theoretic computations and property-P witnesses", "galwit"};
    app.require_subcommand(1, 1);
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));

    auto* factor = app.add_subcommand("factor", "factor a polynomial over Q");
    factor->add_option("poly", o.poly)->required();
    auto* galois = app.add_subcommand("galois", "Galois group of an irreducible polynomial of degree <= 5");
    galois->add_option("poly", o.poly)->required();
    auto* split = app.add_subcommand("splitting-degree", "degree of the splitting field");
    split->add_option("poly", o.poly)->required();
    split->add_option("--cap", o.cap, "largest tower degree");
    auto* sturm = app.add_subcommand("sturm", "number of distinct real roots");
    sturm->add_option("poly", o.poly)->required();
    auto* cyclo = app.add_subcommand("cyclotomic", "the n-th cyclotomic polynomial");
    cyclo->add_option("n", o.n)->required();
    auto* member = app.add_subcommand("member", "does the field contain a root of poly");
    member->add_option("poly", o.poly)->required();
    member->add_option("--in", o.field, "defining polynomial of the field")->required();
    auto* witness = app.add_subcommand("witness", "construct and verify a property-P witness");
    witness->add_option("family", o.family)->required();
    witness->add_option("--emit", o.emit, "write the certificate to FILE");
    witness->add_option("--prime", o.prime, "requested prime for a bounded-degree family");
    auto* verify = app.add_subcommand("verify", "replay a certificate file");
    verify->add_option("file", o.file)->required();
    auto* spec = app.add_subcommand("specialize", "classify f(b, y) over a range of integers b");
    spec->add_option("poly", o.poly)->required();
    spec->add_option("--range", o.range, "a..b")->required();
    spec->add_option("--jobs", o.jobs, "worker threads");
    auto* qab = app.add_subcommand("qab", "is a root in Q_ab");
    qab->add_option("poly", o.poly)->required();
    auto* qsolv = app.add_subcommand("qsolv", "is a root in Q_solv");
    qsolv->add_option("poly", o.poly)->required();
    auto* tower = app.add_subcommand("radical-tower", "probe sqrt(2) against the splitting field of x^3-2, ..., x^n-2");
    tower->add_option("n_max", o.n)->required();
    tower->add_option("--cap", o.cap, "largest tower degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help() << kGrammar;
        return kAnswered;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << kGrammar;
        return kUsage;
    }

    Runner r(o, out);
    try {
        if (*factor) return r.factor();
        if (*galois) return r.galois();
        if (*split) return r.splitting();
        if (*sturm) return r.sturm();
        if (*cyclo) return r.cyclotomic_cmd();
        if (*member) return r.member();
        if (*witness) return r.witness();
        if (*verify) return r.verify();
        if (*spec) return r.specialize();
        if (*qab) return r.qab();
        if (*qsolv) return r.qsolv();
        if (*tower) return r.radical_tower();
    } catch (const Usage& e) {
        err << "usage error: " << e.what() << "\n" << kGrammar;
        return kUsage;
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what();
        if (e.kind() == ErrorKind::DegreeCapExceeded)
            err << " [intermediate degree " << e.detail() << "]";
        err << "\n";
        if (e.kind() == ErrorKind::SyntaxError)
            err << kGrammar;
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    err << "usage error: no subcommand\n" << kGrammar;
    return kUsage;
}

} // namespace galwit::cli
