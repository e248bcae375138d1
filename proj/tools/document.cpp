#include "document.hpp"

#include <json.hpp>

#include "superint/phase.hpp"

namespace superint {

namespace {

using Json = nlohmann::ordered_json;

const char* const kFormat = "superint-operator";
const int kVersion = 1;
const char* const kParams[] = {"H", "L2", "alpha", "beta", "gamma"};

[[noreturn]] void bad(const std::string& what) { throw DocumentError(what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) bad(std::string("expected an object holding '") + name + "'");
  auto it = j.find(name);
  if (it == j.end()) bad(std::string("missing field '") + name + "'");
  return *it;
}

void only_fields(const Json& j, std::initializer_list<const char*> names, const char* where) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::none_of(names.begin(), names.end(), [&](const char* n) { return it.key() == n; }))
      bad("unknown field '" + it.key() + "' in " + where);
}

std::string text(const Json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Rational ratio(const Json& j, const char* what) {
  try {
    return Rational::parse(text(j, what));
  } catch (const std::invalid_argument& e) {
    bad(std::string(what) + ": " + e.what());
  } catch (const std::domain_error& e) {
    bad(std::string(what) + ": " + e.what());
  }
}

int integer(const Json& j, const char* what) {
  Rational r = ratio(j, what);
  if (!r.is_integer() || !r.num().fits_sint_p()) bad(std::string(what) + " must be a small integer");
  return static_cast<int>(r.num().get_si());
}

Json poly_json(const ParamPoly& p) {
  Json out = Json::object();
  for (const auto& t : p.terms()) {
    Exponents e = mono::unpack(t.key);
    std::string key;
    for (int v = 0; v < kNumVars; ++v) key += (v ? "," : "") + std::to_string(e[v]);
    out[key] = Json{{"re", t.c.re().str()}, {"im", t.c.im().str()}};
  }
  return out;
}

ParamPoly poly_from(const Json& j) {
  if (!j.is_object()) bad("polynomial must be an object");
  std::vector<ParamPoly::Term> ts;
  for (auto it = j.begin(); it != j.end(); ++it) {
    Exponents e{};
    std::string key = it.key();
    size_t at = 0;
    for (int v = 0; v < kNumVars; ++v) {
      size_t end = key.find(',', at);
      if ((end == std::string::npos) != (v == kNumVars - 1)) bad("exponent tuple '" + key + "' must have five entries");
      std::string part = key.substr(at, end == std::string::npos ? std::string::npos : end - at);
      if (part.empty() || part.size() > 3 || part.find_first_not_of("0123456789") != std::string::npos)
        bad("bad exponent in '" + key + "'");
      e[v] = std::stoi(part);
      if (e[v] > 255) bad("exponent too large in '" + key + "'");
      at = end + 1;
    }
    only_fields(it.value(), {"re", "im"}, "coefficient");
    GaussRational c(ratio(field(it.value(), "re"), "re"), ratio(field(it.value(), "im"), "im"));
    if (c.is_zero()) bad("zero coefficient for '" + key + "'");
    ts.push_back({mono::pack(e), c});
  }
  ParamPoly p = ParamPoly::from_terms(std::move(ts));
  if (p.size() != j.size()) bad("repeated exponent tuple");
  return p;
}

const ParamPoly& polynomial(const ParamRatFn& c) {
  if (!c.is_polynomial()) throw DocumentError("coefficient is not polynomial: " + c.str());
  return c.num();
}

Json monomial_json(const FunMonomial& m, Ring ring) {
  if (ring == Ring::Exp) return Json{{"a", m.a.str()}, {"t", m.t.str()}};
  return Json{{"a", m.a.str()}, {"b", std::to_string(m.b)}, {"c", std::to_string(m.c)}};
}

FunMonomial monomial_from(const Json& j, Ring ring) {
  FunMonomial m;
  m.a = ratio(field(j, "a"), "a");
  if (ring == Ring::Exp) {
    only_fields(j, {"a", "t"}, "monomial");
    m.t = ratio(field(j, "t"), "t");
  } else {
    only_fields(j, {"a", "b", "c"}, "monomial");
    m.b = integer(field(j, "b"), "b");
    m.c = integer(field(j, "c"), "c");
    if (m.c < 0 || m.c > 1) bad("trig monomial needs c in {0, 1}");
  }
  return m;
}

Json function_json(const FunElement& f) {
  Json out = Json::array();
  for (const auto& [m, c] : f.terms())
    out.push_back(Json{{"monomial", monomial_json(m, f.ring())}, {"coefficient", poly_json(polynomial(c))}});
  return out;
}

FunElement function_from(const Json& j, Ring ring, const Rational& k) {
  if (!j.is_array()) bad("function must be an array of terms");
  FunElement f(ring, k);
  for (const auto& t : j) {
    only_fields(t, {"monomial", "coefficient"}, "term");
    FunMonomial m = monomial_from(field(t, "monomial"), ring);
    if (f.terms().count(m)) bad("repeated monomial " + m.str(ring));
    ParamPoly c = poly_from(field(t, "coefficient"));
    if (c.is_zero()) bad("empty coefficient for " + m.str(ring));
    f.add_term(m, ParamRatFn(c));
  }
  return f;
}

Json ratfn_json(const ParamRatFn& x) { return Json{{"num", poly_json(x.num())}, {"den", poly_json(x.den())}}; }

ParamRatFn ratfn_from(const Json& j) {
  only_fields(j, {"num", "den"}, "seed");
  ParamPoly num = poly_from(field(j, "num")), den = poly_from(field(j, "den"));
  if (den.is_zero()) bad("zero denominator");
  ParamRatFn r = ParamRatFn(num) / ParamRatFn(den);
  if (r.num() != num || r.den() != den) bad("seed fraction is not in lowest terms with monic denominator");
  return r;
}

}  // namespace

bool operator==(const OperatorDocument& x, const OperatorDocument& y) {
  return x.system == y.system && x.k == y.k && x.variant == y.variant && x.order == y.order && x.scale == y.scale &&
         x.seed == y.seed && x.op.A == y.op.A && x.op.B == y.op.B && x.op.C == y.op.C && x.op.D == y.op.D &&
         x.expanded == y.expanded;
}

OperatorDocument make_document(const Construction& c, bool with_expanded) {
  OperatorDocument d;
  d.system = c.cfg.system;
  d.k = c.cfg.k;
  d.variant = c.cfg.variant;
  d.order = c.order;
  d.scale = c.scale;
  d.seed = c.seed;
  d.op = c.op;
  if (with_expanded) {
    if (c.cfg.variant == Variant::Quantum)
      d.expanded = expand_params(c.op, c.sys).terms();
    else
      d.expanded = expand_params_classical(c.op, c.sys).terms();
  }
  return d;
}

std::string serialize(const OperatorDocument& doc) {
  Json j;
  j["format"] = kFormat;
  j["version"] = kVersion;
  j["system"] = system_name(doc.system);
  j["k"] = doc.k.str();
  j["variant"] = variant_name(doc.variant);
  j["order"] = doc.order;
  j["parameters"] = kParams;
  j["scale"] = poly_json(doc.scale);
  j["seed"] = Json::array({ratfn_json(doc.seed[0]), ratfn_json(doc.seed[1])});
  j["ring"] = ring_name(doc.op.A.ring());
  j["canonical"] = Json{{"A", function_json(doc.op.A)},
                        {"B", function_json(doc.op.B)},
                        {"C", function_json(doc.op.C)},
                        {"D", function_json(doc.op.D)}};
  if (doc.expanded) {
    Json e = Json::array();
    for (const auto& [mn, f] : *doc.expanded)
      e.push_back(Json{{"m", std::to_string(mn.first)}, {"n", std::to_string(mn.second)}, {"terms", function_json(f)}});
    j["expanded"] = std::move(e);
  }
  return j.dump(2) + "\n";
}

OperatorDocument parse_document(const std::string& text_in) {
  Json j;
  try {
    j = Json::parse(text_in);
  } catch (const Json::parse_error& e) {
    bad(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) bad("document must be a JSON object");
  only_fields(j, {"format", "version", "system", "k", "variant", "order", "parameters", "scale", "seed", "ring",
                  "canonical", "expanded"},
              "document");
  if (field(j, "format") != kFormat) bad("not a superint-operator document");
  if (field(j, "version") != kVersion) bad("unsupported document version");
  if (field(j, "parameters") != Json(kParams)) bad("unexpected parameter list");
  OperatorDocument d;
  std::string sys = text(field(j, "system"), "system");
  if (sys == "cartesian") d.system = SystemKind::Cartesian;
  else if (sys == "ttw") d.system = SystemKind::Ttw;
  else bad("unknown system '" + sys + "'");
  d.k = ratio(field(j, "k"), "k");
  std::string var = text(field(j, "variant"), "variant");
  if (var == "quantum") d.variant = Variant::Quantum;
  else if (var == "classical") d.variant = Variant::Classical;
  else bad("unknown variant '" + var + "'");
  const Json& order = field(j, "order");
  if (!order.is_number_integer()) bad("order must be an integer");
  d.order = order.get<int>();
  d.scale = poly_from(field(j, "scale"));
  const Json& seed = field(j, "seed");
  if (!seed.is_array() || seed.size() != 2) bad("seed must be a list of two fractions");
  d.seed = {ratfn_from(seed[0]), ratfn_from(seed[1])};
  Ring ring = d.system == SystemKind::Cartesian ? Ring::Exp : Ring::Trig;
  if (field(j, "ring") != ring_name(ring)) bad("ring does not match the system");
  const Json& can = field(j, "canonical");
  only_fields(can, {"A", "B", "C", "D"}, "canonical");
  d.op = {function_from(field(can, "A"), ring, d.k), function_from(field(can, "B"), ring, d.k),
          function_from(field(can, "C"), ring, d.k), function_from(field(can, "D"), ring, d.k)};
  if (j.contains("expanded")) {
    const Json& e = j["expanded"];
    if (!e.is_array()) bad("expanded must be an array");
    std::map<std::pair<int, int>, FunElement> terms;
    for (const auto& t : e) {
      only_fields(t, {"m", "n", "terms"}, "expanded term");
      std::pair<int, int> mn{integer(field(t, "m"), "m"), integer(field(t, "n"), "n")};
      if (mn.first < 0 || mn.second < 0) bad("negative derivative order");
      if (!terms.emplace(mn, function_from(field(t, "terms"), ring, d.k)).second) bad("repeated expanded term");
    }
    d.expanded = std::move(terms);
  }
  return d;
}

}  // namespace superint
