#ifndef FSPLIT_SERIALIZE_HPP
#define FSPLIT_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include <fsplit/instances.hpp>
#include <fsplit/transforms.hpp>
#include <fsplit/verify.hpp>

namespace fsplit
{

using json = nlohmann::json;

// Canonical JSON: sorted keys, terms in support order, rationals as "a/b".
// Every parser throws ParseError on malformed input.

json to_json(const Rational &q);
Rational rational_from_json(const json &j);

// {"zeta_order": n, "coeffs": [...]}, or a rational string when rational.
json to_json(const Cyclotomic &c);
Cyclotomic cyclotomic_from_json(const json &j);

// {"num": poly, "den": poly}, poly = [{"c": ..., "u": [...]}]. The parser
// also takes a bare rational string.
json to_json(const FieldElem &c);
FieldElem field_from_json(const json &j);

// {"p", "q", "trunc", "terms": [{"c", "alpha", "beta_num"}]}.
json to_json(const PuiseuxSeries &s);
PuiseuxSeries series_from_json(const json &j, int r, int num_x);

// Series in v = w^{1/p}: {"prec": n | "exact", "terms": [{"c", "v_exp"}]}.
json to_json(const LaurentSeries &s);
LaurentSeries laurent_from_json(const json &j);

// {"k", "a": {"2": series, ...}}.
json to_json(const WeierstrassPoly &f);

json to_json(const RootSystem &rs);
json to_json(const SplitResult &res);
json to_json(const LemmaReport &rep);
json to_json(const TransformLog &log);
json to_json(const NcResult &nc);

// {"k", "r", "s", "p", "q", "trunc", "mode", "payload", "label"?, "seed"?};
// roots payloads are lists, coeffs payloads maps "2".."k". Parsing also
// validates.
json to_json(const Instance &inst);
Instance instance_from_json(const json &j);

// Coefficient-mode instance carrying f.
Instance instance_from_poly(const WeierstrassPoly &f, std::optional<std::string> label = std::nullopt);

json parse_json(const std::string &text);
std::string canonical(const json &j);
// FNV-1a 64 of the canonical bytes, as "fnv1a64:<16 hex digits>".
std::string digest(const json &j);

} // namespace fsplit

#endif
