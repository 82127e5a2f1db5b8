#include <fsplit/errors.hpp>
#include <fsplit/serialize.hpp>

#include <algorithm>
#include <cstdio>

namespace fsplit
{

namespace
{

[[noreturn]] void bad(const std::string &what)
{
    fail(ErrorCode::ParseError, what);
}

const json &field(const json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key)) {
        bad(std::string("missing key '") + key + "'");
    }
    return j.at(key);
}

int as_int(const json &j, const char *what)
{
    if (!j.is_number_integer()) {
        bad(std::string(what) + " must be an integer");
    }
    return j.get<int>();
}

std::vector<int> int_list(const json &j, const char *what)
{
    if (!j.is_array()) {
        bad(std::string(what) + " must be a list");
    }
    std::vector<int> out;
    for (const auto &x : j) {
        out.push_back(as_int(x, what));
    }
    return out;
}

json poly_json(const UPolynomial &p)
{
    json out = json::array();
    for (const auto &[mono, c] : p.terms()) {
        out.push_back({{"c", to_json(c)}, {"u", mono}});
    }
    return out;
}

UPolynomial poly_from_json(const json &j)
{
    if (!j.is_array()) {
        bad("polynomial must be a list of terms");
    }
    std::vector<std::pair<UMonomial, Cyclotomic>> terms;
    for (const auto &t : j) {
        terms.emplace_back(int_list(field(t, "u"), "u exponents"), cyclotomic_from_json(field(t, "c")));
    }
    return UPolynomial::from_terms(terms);
}

} // namespace

json to_json(const Rational &q)
{
    return to_string(q);
}

Rational rational_from_json(const json &j)
{
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    if (!j.is_string()) {
        bad("rational must be a string");
    }
    return parse_rational(j.get<std::string>());
}

json to_json(const Cyclotomic &c)
{
    if (c.is_rational()) {
        return to_json(c.rational());
    }
    json coeffs = json::array();
    for (const auto &q : c.coeffs()) {
        coeffs.push_back(to_json(q));
    }
    return {{"zeta_order", c.order()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const json &j)
{
    if (!j.is_object()) {
        return Cyclotomic(rational_from_json(j));
    }
    std::vector<Rational> coeffs;
    const json &cs = field(j, "coeffs");
    if (!cs.is_array()) {
        bad("coeffs must be a list");
    }
    for (const auto &q : cs) {
        coeffs.push_back(rational_from_json(q));
    }
    return Cyclotomic::from_coeffs(as_int(field(j, "zeta_order"), "zeta_order"), coeffs);
}

json to_json(const FieldElem &c)
{
    return {{"num", poly_json(c.num())}, {"den", poly_json(c.den())}};
}

FieldElem field_from_json(const json &j)
{
    if (!j.is_object()) {
        return FieldElem(rational_from_json(j));
    }
    if (j.contains("zeta_order")) {
        return FieldElem(cyclotomic_from_json(j));
    }
    return FieldElem(poly_from_json(field(j, "num")), poly_from_json(field(j, "den")));
}

json to_json(const PuiseuxSeries &s)
{
    auto terms = s.terms();
    std::stable_sort(terms.begin(), terms.end(), [](const auto &a, const auto &b) {
        const auto c = compare_support(a.first, b.first);
        return c != 0 ? c < 0 : a.first.beta < b.first.beta;
    });
    json out = json::array();
    for (const auto &[e, c] : terms) {
        std::vector<long> beta_num;
        for (const auto &b : e.beta) {
            beta_num.push_back(Rational(b * s.p()).get_num().get_si());
        }
        out.push_back({{"c", to_json(c)}, {"alpha", e.alpha}, {"beta_num", beta_num}});
    }
    return {{"p", s.p()}, {"q", s.q()}, {"trunc", s.trunc()}, {"terms", out}};
}

PuiseuxSeries series_from_json(const json &j, int r, int num_x)
{
    const int p = as_int(field(j, "p"), "p");
    const int q = as_int(field(j, "q"), "q");
    const int n = as_int(field(j, "trunc"), "trunc");
    const json &ts = field(j, "terms");
    if (!ts.is_array()) {
        bad("terms must be a list");
    }
    std::vector<std::pair<ExpPair, FieldElem>> terms;
    for (const auto &t : ts) {
        ExpPair e;
        e.alpha = int_list(field(t, "alpha"), "alpha");
        for (int b : int_list(field(t, "beta_num"), "beta_num")) {
            e.beta.push_back(make_rational(b, p));
        }
        if (static_cast<int>(e.alpha.size()) != num_x || static_cast<int>(e.beta.size()) != r) {
            bad("term exponent of wrong length");
        }
        terms.emplace_back(std::move(e), field_from_json(field(t, "c")));
    }
    return PuiseuxSeries::from_pairs(r, num_x, p, q, n, terms);
}

json to_json(const LaurentSeries &s)
{
    json terms = json::array();
    for (const auto &[e, c] : s.terms()) {
        terms.push_back({{"c", to_json(c)}, {"v_exp", e}});
    }
    return {{"prec", s.is_exact() ? json("exact") : json(s.prec())}, {"terms", terms}};
}

LaurentSeries laurent_from_json(const json &j)
{
    if (!j.is_object()) {
        return LaurentSeries(field_from_json(j));
    }
    const json &pj = field(j, "prec");
    std::int64_t prec = LaurentSeries::exact;
    if (pj.is_number_integer()) {
        prec = pj.get<std::int64_t>();
    } else if (!(pj.is_string() && pj.get<std::string>() == "exact")) {
        bad("prec must be an integer or \"exact\"");
    }
    LaurentSeries::TermMap terms;
    for (const auto &t : field(j, "terms")) {
        const json &e = field(t, "v_exp");
        if (!e.is_number_integer()) {
            bad("v_exp must be an integer");
        }
        terms.emplace(e.get<std::int64_t>(), field_from_json(field(t, "c")));
    }
    return LaurentSeries::from_terms(std::move(terms), prec);
}

json to_json(const WeierstrassPoly &f)
{
    json a = json::object();
    for (int j = 2; j <= f.k(); ++j) {
        a[std::to_string(j)] = to_json(f.a(j));
    }
    return {{"k", f.k()}, {"a", a}};
}

json to_json(const RootSystem &rs)
{
    json roots = json::array();
    for (const auto &b : rs.roots) {
        roots.push_back(to_json(b));
    }
    json bij = json::array();
    for (const auto &row : rs.bij) {
        json r = json::array();
        for (const auto &b : row) {
            r.push_back(to_json(b));
        }
        bij.push_back(r);
    }
    return {{"p", rs.p}, {"q", rs.q}, {"roots", roots}, {"d", rs.d_values ? json(*rs.d_values) : json(nullptr)},
            {"bij", bij}};
}

json to_json(const SplitResult &res)
{
    json out = {{"status", to_string(res.status)}, {"diagnostics", res.diagnostics}};
    if (res.root_system) {
        const json rs = to_json(*res.root_system);
        out["p"] = res.p;
        out["q"] = res.q;
        out["roots"] = rs["roots"];
        out["d"] = rs["d"];
    } else {
        out["p"] = nullptr;
        out["q"] = nullptr;
        out["roots"] = json::array();
        out["d"] = nullptr;
    }
    return out;
}

json to_json(const LemmaReport &rep)
{
    json checks = json::array();
    for (const auto &[name, ok] : rep.checks) {
        checks.push_back({{"name", name}, {"ok", ok}});
    }
    return {{"lemma", rep.lemma},
            {"hypothesis", to_string(rep.hypothesis)},
            {"conclusion", to_string(rep.conclusion)},
            {"witness", rep.witness.empty() ? json(nullptr) : json(rep.witness)},
            {"checks", checks},
            {"notes", rep.notes}};
}

json to_json(const TransformLog &log)
{
    json steps = json::array();
    for (const auto &s : log.steps()) {
        const char *key = s.kind == StepKind::ramify ? "p" : s.kind == StepKind::rescale ? "q" : "j";
        steps.push_back({{"kind", to_string(s.kind)}, {key, s.param}});
    }
    return {{"steps", steps}};
}

json to_json(const NcResult &nc)
{
    return {{"nc", nc.nc}, {"reason", nc.reason}};
}

json to_json(const Instance &inst)
{
    json payload;
    if (inst.mode == InstanceMode::roots) {
        payload = json::array();
        for (const auto &b : inst.payload) {
            payload.push_back(to_json(b));
        }
    } else {
        payload = json::object();
        for (std::size_t i = 0; i < inst.payload.size(); ++i) {
            payload[std::to_string(i + 2)] = to_json(inst.payload[i]);
        }
    }
    json out = {{"k", inst.k},         {"r", inst.r},       {"s", inst.s},
                {"p", inst.p},         {"q", inst.q},       {"trunc", inst.trunc},
                {"mode", inst.mode == InstanceMode::roots ? "roots" : "coeffs"}, {"payload", payload}};
    if (inst.label) {
        out["label"] = *inst.label;
    }
    if (inst.seed) {
        out["seed"] = *inst.seed;
    }
    return out;
}

Instance instance_from_json(const json &j)
{
    Instance inst;
    inst.k = as_int(field(j, "k"), "k");
    inst.r = as_int(field(j, "r"), "r");
    inst.s = as_int(field(j, "s"), "s");
    inst.p = as_int(field(j, "p"), "p");
    inst.q = as_int(field(j, "q"), "q");
    inst.trunc = as_int(field(j, "trunc"), "trunc");
    const json &mode = field(j, "mode");
    if (mode == "roots") {
        inst.mode = InstanceMode::roots;
    } else if (mode == "coeffs") {
        inst.mode = InstanceMode::coeffs;
    } else {
        bad("mode must be \"roots\" or \"coeffs\"");
    }
    if (inst.k < 2 || inst.r < 1) {
        bad("k must be >= 2 and r >= 1");
    }
    const int m = j.contains("num_x") ? as_int(j.at("num_x"), "num_x") : inst.k - 1;
    const json &payload = field(j, "payload");
    if (inst.mode == InstanceMode::roots) {
        if (!payload.is_array()) {
            bad("roots payload must be a list");
        }
        for (const auto &b : payload) {
            inst.payload.push_back(series_from_json(b, inst.r, m));
        }
    } else {
        if (!payload.is_object()) {
            bad("coeffs payload must be a map");
        }
        for (int i = 2; i <= inst.k; ++i) {
            const std::string key = std::to_string(i);
            inst.payload.push_back(payload.contains(key)
                                       ? series_from_json(payload.at(key), inst.r, m)
                                       : PuiseuxSeries(inst.r, m, 1, 0, inst.trunc));
        }
        if (static_cast<int>(payload.size()) > inst.k - 1) {
            bad("coeffs payload has keys outside 2..k");
        }
    }
    if (j.contains("label")) {
        if (!j.at("label").is_string()) {
            bad("label must be a string");
        }
        inst.label = j.at("label").get<std::string>();
    }
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_unsigned()) {
            bad("seed must be a nonnegative integer");
        }
        inst.seed = j.at("seed").get<std::uint64_t>();
    }
    inst.validate();
    return inst;
}

Instance instance_from_poly(const WeierstrassPoly &f, std::optional<std::string> label)
{
    Instance inst;
    inst.k = f.k();
    inst.r = f.r();
    inst.s = f.s();
    inst.trunc = f.trunc();
    inst.mode = InstanceMode::coeffs;
    inst.label = std::move(label);
    for (const auto &a : f.coeffs()) {
        inst.p = std::lcm(inst.p, a.p());
        inst.q = std::max(inst.q, a.q());
        inst.payload.push_back(a);
    }
    return inst;
}

json parse_json(const std::string &text)
{
    try {
        return json::parse(text);
    } catch (const json::exception &e) {
        bad(std::string("malformed JSON: ") + e.what());
    }
}

std::string canonical(const json &j)
{
    return j.dump();
}

std::string digest(const json &j)
{
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char ch : canonical(j)) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

} // namespace fsplit
