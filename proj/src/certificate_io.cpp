#include "galwit/error.hpp"
#include "galwit/witness.hpp"

#include <json.hpp>

#include <fstream>
#include <set>

namespace galwit {

using nlohmann::json;

namespace {

json steps_json(const TowerSummary& t)
{
    json a = json::array();
    for (int s : t.steps)
        a.push_back(s);
    return a;
}

void require_keys(const json& j, std::set<std::string> keys, const std::string& where)
{
    if (!j.is_object())
        fail(ErrorKind::SyntaxError, where + " must be an object");
    std::set<std::string> have;
    for (auto it = j.begin(); it != j.end(); ++it)
        have.insert(it.key());
    if (have != keys)
        fail(ErrorKind::SyntaxError, where + " has unexpected or missing keys");
}

const std::string& text(const json& j, const char* key)
{
    const json& v = j.at(key);
    if (!v.is_string())
        fail(ErrorKind::SyntaxError, std::string(key) + " must be a string");
    return v.get_ref<const std::string&>();
}

Integer canonical_integer(const std::string& s, const char* what)
{
    Integer z = parse_integer(s);
    if (to_string(z) != s)
        fail(ErrorKind::SyntaxError, std::string(what) + " is not a canonical integer");
    return z;
}

long small_count(const json& j, const char* key)
{
    const json& v = j.at(key);
    if (!v.is_number_integer())
        fail(ErrorKind::SyntaxError, std::string(key) + " must be an integer");
    return v.get<long>();
}

TowerSummary parse_tower(const json& d)
{
    TowerSummary t;
    t.total_degree = 1;
    Integer total = canonical_integer(text(d, "degree"), "degree");
    if (!total.fits_slong_p())
        fail(ErrorKind::SyntaxError, "degree out of range");
    t.total_degree = total.get_si();
    const json& steps = d.at("steps");
    if (!steps.is_array())
        fail(ErrorKind::SyntaxError, "steps must be an array");
    for (const auto& s : steps) {
        if (!s.is_number_integer())
            fail(ErrorKind::SyntaxError, "steps must be integers");
        t.steps.push_back(s.get<int>());
    }
    return t;
}

WitnessCertificate parse_json(const json& j)
{
    require_keys(j, {"checks", "degree_data", "family", "obstruction", "prime", "witness"}, "certificate");
    WitnessCertificate c;
    c.family = parse_family(text(j, "family"));
    const json& w = j.at("witness");
    require_keys(w, {"description", "min_poly"}, "witness");
    c.witness_description = text(w, "description");
    c.witness_min_poly = parse_poly(text(w, "min_poly"));
    c.prime = canonical_integer(text(j, "prime"), "prime");

    const std::string& ob = text(j, "obstruction");
    if (ob == to_string(Obstruction::RadicalBasis))
        c.obstruction = Obstruction::RadicalBasis;
    else if (ob == to_string(Obstruction::NonSolvable))
        c.obstruction = Obstruction::NonSolvable;
    else if (ob == to_string(Obstruction::AbelianObstruction))
        c.obstruction = Obstruction::AbelianObstruction;
    else
        fail(ErrorKind::SyntaxError, "unknown obstruction '" + ob + "'");

    const json& d = j.at("degree_data");
    if (!d.is_object())
        fail(ErrorKind::SyntaxError, "degree_data must be an object");
    const std::string& kind = text(d, "kind");
    if (kind == to_string(DegreeJustification::ExactSplitting)) {
        require_keys(d, {"degree", "kind", "steps"}, "degree_data");
        c.degree_data.kind = DegreeJustification::ExactSplitting;
        c.degree_data.tower = parse_tower(d);
    } else if (kind == to_string(DegreeJustification::ProductBound)) {
        require_keys(d, {"k", "kind"}, "degree_data");
        c.degree_data.kind = DegreeJustification::ProductBound;
        c.degree_data.bound_k = small_count(d, "k");
    } else if (kind == to_string(DegreeJustification::PrefixOnly)) {
        require_keys(d, {"degree", "kind", "prefix_size", "steps"}, "degree_data");
        c.degree_data.kind = DegreeJustification::PrefixOnly;
        c.degree_data.prefix_size = small_count(d, "prefix_size");
        c.degree_data.tower = parse_tower(d);
    } else {
        fail(ErrorKind::SyntaxError, "unknown degree justification '" + kind + "'");
    }

    const json& checks = j.at("checks");
    if (!checks.is_array())
        fail(ErrorKind::SyntaxError, "checks must be an array");
    for (const auto& r : checks) {
        require_keys(r, {"expected", "inputs", "op"}, "check");
        CheckRecord rec;
        rec.op = text(r, "op");
        rec.expected = text(r, "expected");
        const json& in = r.at("inputs");
        if (!in.is_array())
            fail(ErrorKind::SyntaxError, "check inputs must be an array");
        for (const auto& s : in) {
            if (!s.is_string())
                fail(ErrorKind::SyntaxError, "check inputs must be strings");
            rec.inputs.push_back(s.get<std::string>());
        }
        c.checks.push_back(std::move(rec));
    }
    return c;
}

} // namespace

std::string emit_certificate(const WitnessCertificate& c)
{
    json j;
    j["family"] = to_string(c.family);
    j["witness"] = {{"description", c.witness_description}, {"min_poly", to_string(c.witness_min_poly)}};
    j["prime"] = to_string(c.prime);
    j["obstruction"] = std::string(to_string(c.obstruction));
    json d;
    d["kind"] = std::string(to_string(c.degree_data.kind));
    switch (c.degree_data.kind) {
    case DegreeJustification::ExactSplitting:
        d["degree"] = std::to_string(c.degree_data.tower.total_degree);
        d["steps"] = steps_json(c.degree_data.tower);
        break;
    case DegreeJustification::ProductBound:
        d["k"] = c.degree_data.bound_k;
        break;
    case DegreeJustification::PrefixOnly:
        d["degree"] = std::to_string(c.degree_data.tower.total_degree);
        d["steps"] = steps_json(c.degree_data.tower);
        d["prefix_size"] = c.degree_data.prefix_size;
        break;
    }
    j["degree_data"] = d;
    json checks = json::array();
    for (const auto& r : c.checks)
        checks.push_back({{"op", r.op}, {"inputs", r.inputs}, {"expected", r.expected}});
    j["checks"] = checks;
    return j.dump();
}

void emit_certificate(const WitnessCertificate& c, const std::string& path)
{
    const std::string bytes = emit_certificate(c);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        fail(ErrorKind::IOFailure, "cannot open " + path + " for writing");
    out << bytes;
    out.close();
    if (!out)
        fail(ErrorKind::IOFailure, "failed writing " + path);
}

WitnessCertificate parse_certificate(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorKind::SyntaxError, std::string("malformed certificate: ") + e.what());
    }
    try {
        return parse_json(j);
    } catch (const json::exception& e) {
        fail(ErrorKind::SyntaxError, std::string("malformed certificate: ") + e.what());
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::SyntaxError)
            throw;
        fail(ErrorKind::SyntaxError, std::string("malformed certificate: ") + e.what());
    }
}

} // namespace galwit
