// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "galwit/cli.hpp"
#include "galwit/error.hpp"
#include "galwit/factor.hpp"
#include "galwit/galois.hpp"
#include "galwit/numfield.hpp"
#include "galwit/witness.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

using namespace galwit;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

int cli(const std::vector<std::string>& args, std::string* out_text = nullptr)
{
    std::vector<const char*> argv{"galwit"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    if (out_text)
        *out_text = out.str();
    return code;
}

bool trial_prime(long n)
{
    if (n < 2)
        return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

bool verifies(const std::string& bytes)
{
    try {
        return verify_certificate(parse_certificate(bytes)).ok;
    } catch (const Error&) {
        return false;
    }
}

Outcome radical_powers()
{
    auto t0 = Clock::now();
    int checks = 0, rational = 0;
    for (long p : {2, 3, 5, 7})
        for (long m = 2; m <= 5; ++m)
            for (long n = 1; n <= 50; ++n) {
                ++checks;
                rational += radical_power_membership(p, m, n).in_q;
            }
    double s = seconds_since(t0);
    return {checks == 800 && rational == 0 && s < 10.0,
            std::to_string(checks) + " checks, " + std::to_string(rational) + " rational, " + fmt_seconds(s)};
}

Outcome finite_family()
{
    std::string text;
    int code = cli({"--format", "json", "witness", "finite: x^2-2; x^3-3"}, &text);
    const std::string bytes = text.substr(0, text.find('\n'));
    WitnessCertificate c = parse_certificate(bytes);
    bool ok = code == 0 && c.degree_data.tower.total_degree == 12 && c.prime == 13 && verify_certificate(c).ok;

    const auto base = nlohmann::json::parse(bytes);
    const std::vector<std::pair<std::string, std::function<void(nlohmann::json&)>>> corruptions = {
        {"family", [](auto& j) { j["family"] = "finite: x^2 - 2; x^3 - 3; x^2 + 1"; }},
        {"witness", [](auto& j) { j["witness"]["min_poly"] = "x^13 - 13*x^12 + 1"; }},
        {"witness", [](auto& j) { j["witness"]["description"] = "1 + 11^(1/11)"; }},
        {"prime", [](auto& j) { j["prime"] = "12"; }},
        {"prime", [](auto& j) { j["prime"] = "17"; }},
        {"obstruction", [](auto& j) { j["obstruction"] = "NON_SOLVABLE"; }},
        {"degree_data", [](auto& j) { j["degree_data"]["degree"] = "24"; }},
        {"degree_data", [](auto& j) { j["degree_data"]["steps"] = nlohmann::json::array({2, 6}); }},
        {"checks", [](auto& j) { j["checks"][0]["expected"] = "6 [2,3]"; }},
        {"checks", [](auto& j) { j["checks"].erase(j["checks"].size() - 1); }},
    };
    int flipped = 0;
    for (const auto& [field, edit] : corruptions) {
        auto j = base;
        edit(j);
        flipped += !verifies(j.dump());
    }
    ok = ok && flipped == static_cast<int>(corruptions.size());
    return {ok, "t=" + std::to_string(c.degree_data.tower.total_degree) + ", p=" + to_string(c.prime) + ", " + std::to_string(flipped) + "/" +
                    std::to_string(corruptions.size()) + " corruptions rejected"};
}

Outcome fixed_degree()
{
    bool ok = true;
    std::string primes;
    for (long k = 1; k <= 6; ++k) {
        long want = k + 1;
        while (!trial_prime(want))
            ++want;
        WitnessCertificate c = witness_fixed_degree_family(k);
        VerifyReport r = verify_certificate(c);
        bool replayed = false;
        for (const auto& line : r.log)
            replayed |= line.rfind("ok   product_bound(", 0) == 0;
        ok = ok && c.prime == want && r.ok && replayed;
        primes += (k > 1 ? "," : "") + to_string(c.prime);
    }
    WitnessCertificate one = witness_fixed_degree_family(1);
    ok = ok && one.witness_description == "1 + 2^(1/2)" && one.witness_min_poly == parse_poly("x^2 - 2*x - 1");
    return {ok, "p = " + primes + " for k = 1..6; k=1 gives 1 + 2^(1/2)"};
}

Outcome quintic_kernel()
{
    const PolyQ f = parse_poly("x^5 - 4*x + 2");
    auto e = eisenstein_witness(f);
    bool eis = e && *e == 2;
    bool irr = is_irreducible(f);
    int real = sturm_real_roots(f);
    GroupTag tag = galois_group(f).tag;
    bool solvable = is_solvable_by_radicals(f).solvable;
    auto t0 = Clock::now();
    long deg = splitting_degree(f, 5000).total_degree;
    double s = seconds_since(t0);
    bool ok = eis && irr && real == 3 && tag == GroupTag::S5 && !solvable && deg == 120;
    return {ok, std::string("Eisenstein at 2: ") + (eis ? "yes" : "no") + ", real roots " + std::to_string(real) + ", group " +
                    std::string(to_string(tag)) + ", solvable " + (solvable ? "yes" : "no") + ", splitting degree " + std::to_string(deg) +
                    " in " + fmt_seconds(s)};
}

Outcome dichotomy()
{
    NumberField k(parse_poly("x^5 - 4*x + 2"));
    NFElement x = k.generator();
    std::string degs;
    bool ok = true;
    for (int n = 1; n <= 10; ++n, x = x * k.generator()) {
        int d = minimal_polynomial(x).degree();
        ok = ok && d == 5;
        degs += (n > 1 ? "," : "") + std::to_string(d);
    }
    return {ok, "deg minpoly(theta^n), n=1..10: " + degs};
}

Outcome classifier_sweep()
{
    int cubics = 0, quartics = 0, violations = 0;
    std::map<std::string, int> per_tag;
    auto check = [&](const PolyQ& f) {
        GroupTag tag = galois_group(f).tag;
        ++per_tag[std::string(to_string(tag))];
        if (is_square(discriminant(f)) != is_even(tag))
            ++violations;
    };
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            for (long c = -3; c <= 3; ++c) {
                PolyQ f = PolyQ::from_ints({c, b, a, 1});
                if (!is_irreducible(f))
                    continue;
                ++cubics;
                check(f);
                for (long d = -3; d <= 3; ++d) {
                    PolyQ g = PolyQ::from_ints({d, c, b, a, 1});
                    if (!is_irreducible(g))
                        continue;
                    ++quartics;
                    check(g);
                }
            }
    // quartics whose cubic part is reducible were skipped above
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            for (long c = -3; c <= 3; ++c) {
                if (is_irreducible(PolyQ::from_ints({c, b, a, 1})))
                    continue;
                for (long d = -3; d <= 3; ++d) {
                    PolyQ g = PolyQ::from_ints({d, c, b, a, 1});
                    if (!is_irreducible(g))
                        continue;
                    ++quartics;
                    check(g);
                }
            }

    std::mt19937 rng(2024);
    int quintics = 0, contradictions = 0;
    while (quintics < 20) {
        std::vector<long> c(5);
        for (auto& x : c)
            x = static_cast<long>(rng() % 9) - 4;
        PolyQ f = PolyQ::from_ints({c[0], c[1], c[2], c[3], c[4], 1});
        if (!is_irreducible(f))
            continue;
        ++quintics;
        long split = splitting_degree(f).total_degree;
        bool prefilter_s5 = false;
        for (const auto& s : cycle_types(f)) {
            long order = 1;
            for (int d : s.type)
                order = std::lcm(order, static_cast<long>(d));
            if (split % order != 0)
                ++contradictions;
            prefilter_s5 |= s.type == std::vector<int>{2, 3};
        }
        if (prefilter_s5 && split != 120)
            ++contradictions;
        if (group_order(galois_group(f).tag) != split)
            ++contradictions;
    }
    std::string tags;
    for (const auto& [t, n] : per_tag)
        tags += " " + t + ":" + std::to_string(n);
    return {violations == 0 && contradictions == 0 && cubics > 0 && quartics > 0,
            std::to_string(cubics) + " cubics, " + std::to_string(quartics) + " quartics," + tags + "; parity violations " +
                std::to_string(violations) + "; " + std::to_string(quintics) + " quintics, " + std::to_string(contradictions) +
                " prefilter contradictions"};
}

Outcome abelian_and_solvable()
{
    int cyclo = 0;
    for (long n = 1; n <= 30; ++n)
        cyclo += member_qab(cyclotomic(n));
    bool cube = member_qab(parse_poly("x^3 - 2"));
    bool radical = member_qsolv(parse_poly("x^5 - 2"));
    bool quintic = member_qsolv(parse_poly("x^5 - 4*x + 2"));
    return {cyclo == 30 && !cube && radical && !quintic,
            "Q_ab: " + std::to_string(cyclo) + "/30 cyclotomic, x^3-2 " + (cube ? "member" : "not a member") +
                "; Q_solv: x^5-2 " + (radical ? "member" : "not a member") + ", x^5-4x+2 " + (quintic ? "member" : "not a member")};
}

Outcome specialization()
{
    auto rep = specialize_and_classify(parse_bivariate("y^2 - x"), 1, 400);
    int exact = 0, reducible = 0;
    for (const auto& row : rep.rows) {
        Integer b = row.b;
        bool red = row.outcome == SpecOutcome::Reducible;
        reducible += red;
        exact += red == is_square(b);
    }
    auto q = specialize_and_classify(parse_bivariate("y^5 - 4*y + x"), 1, 10);
    const SpecRow& two = q.rows[1];
    bool s5 = two.b == 2 && two.group && *two.group == GroupTag::S5;
    return {reducible == 20 && exact == 400 && s5,
            std::to_string(reducible) + " reducible in [1,400], all perfect squares; b=2 of y^5-4y+x: " +
                (two.group ? std::string(to_string(*two.group)) : std::string(to_string(two.outcome)))};
}

Outcome radical_tower()
{
    auto r3 = radical_tower_analysis(3);
    auto r4 = radical_tower_analysis(4);
    bool flagged = r4.contradicts_claim && r4.note.find("contradicts the claimed relative degree 2") != std::string::npos;
    bool ok = !r3.sqrt2_member && r4.sqrt2_member && r4.relative_degree == 1 && flagged;
    return {ok, "n_max=3: [K:Q]=" + std::to_string(r3.tower.total_degree) + ", sqrt2 in K " + (r3.sqrt2_member ? "yes" : "no") +
                    "; n_max=4: [K:Q]=" + std::to_string(r4.tower.total_degree) + ", sqrt2 in K " + (r4.sqrt2_member ? "yes" : "no") +
                    "; " + r4.note};
}

Outcome robustness()
{
    const std::vector<std::string> subs = {"factor", "galois", "splitting-degree", "sturm", "cyclotomic", "member",
                                           "witness", "verify",  "specialize",       "qab",   "qsolv"};
    std::mt19937 rng(99);
    int bad_codes = 0, crashes = 0;
    for (int i = 0; i < 10000; ++i) {
        std::string s;
        for (std::size_t k = rng() % 24; k > 0; --k)
            s += static_cast<char>(1 + rng() % 255);
        std::vector<std::string> args;
        if (i % 3 == 0)
            args = {s};
        else
            args = {subs[rng() % subs.size()], s};
        try {
            int code = cli(args);
            bad_codes += code < 0 || code > 2;
        } catch (...) {
            ++crashes;
        }
    }

    std::vector<WitnessCertificate> certs;
    certs.push_back(witness_finite_family({parse_poly("x^2-2"), parse_poly("x^3-3")}));
    for (long k = 1; k <= 6; ++k)
        certs.push_back(witness_fixed_degree_family(k));
    certs.push_back(witness_bounded_degree_family(4, {parse_poly("x^2-2"), parse_poly("x^3-3")}, Integer(5)));
    certs.push_back(witness_qsolv());
    int stable = 0;
    for (const auto& c : certs) {
        const std::string bytes = emit_certificate(c);
        WitnessCertificate back = parse_certificate(bytes);
        bool same = emit_certificate(back) == bytes && bytes == emit_certificate(c);
        stable += same && verify_certificate(back).ok == verify_certificate(c).ok && verify_certificate(back).ok;
    }
    return {crashes == 0 && bad_codes == 0 && stable == static_cast<int>(certs.size()),
            "10000 fuzz inputs, " + std::to_string(crashes) + " crashes, " + std::to_string(bad_codes) + " bad exit codes; " +
                std::to_string(stable) + "/" + std::to_string(certs.size()) + " certificates round-trip byte-identical"};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"radical powers (1 + p^(1/m))^n are irrational", radical_powers},
        {"finite family witness end to end", finite_family},
        {"fixed-degree family witnesses", fixed_degree},
        {"x^5 - 4x + 2 kernel", quintic_kernel},
        {"degree dichotomy in Q(theta)", dichotomy},
        {"Galois classifier sweep", classifier_sweep},
        {"Q_ab and Q_solv membership", abelian_and_solvable},
        {"specialization scan", specialization},
        {"x^n - 2 tower probe", radical_tower},
        {"robustness and certificate round trip", robustness},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o{false, ""};
        auto t0 = Clock::now();
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << o.detail << " ["
                  << fmt_seconds(seconds_since(t0)) << "]" << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
