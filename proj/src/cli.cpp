#include "realsurf/cli.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "realsurf/conic_bundle.hpp"
#include "realsurf/del_pezzo.hpp"
#include "realsurf/error.hpp"
#include "realsurf/quadform.hpp"
#include "realsurf/surface_class.hpp"

namespace realsurf::cli {

namespace {

[[noreturn]] void schema_error(const std::string& message) { throw Error(ErrorCode::SchemaError, message); }

const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) schema_error("expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(std::string("missing field '") + key + "'");
  return *it;
}

bool has(const json& obj, const char* key) { return obj.is_object() && obj.contains(key); }

long integer_of(const json& v, const std::string& what) {
  if (v.is_number_integer()) return v.get<long>();
  if (v.is_string()) {
    Rational q = parse_rational(v.get<std::string>());
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) schema_error(what + " must be a small integer");
    return q.get_num().get_si();
  }
  schema_error(what + " must be an integer");
}

int small_int(const json& obj, const char* key) {
  long v = integer_of(field(obj, key), key);
  if (v < -1000000 || v > 1000000) schema_error(std::string(key) + " is out of range");
  return static_cast<int>(v);
}

Rational rational_of(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  schema_error("rationals must be given as \"p/q\" strings or integers");
}

std::vector<Rational> rationals_of(const json& v) {
  if (!v.is_array()) schema_error("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& x : v) out.push_back(rational_of(x));
  return out;
}

Polynomial poly_of(const json& v);

Polynomial factor_of(const json& f) {
  Polynomial base;
  if (has(f, "linear")) {
    base = Polynomial::linear(rational_of(f["linear"]));
  } else if (has(f, "quadratic")) {
    auto bc = rationals_of(f["quadratic"]);
    if (bc.size() != 2) schema_error("quadratic factor needs [b, c] for z^2 + b z + c");
    base = Polynomial({bc[1], bc[0], Rational(1)});
  } else if (has(f, "coefficients")) {
    base = poly_of(f["coefficients"]);
  } else {
    schema_error("factor needs 'linear', 'quadratic' or 'coefficients'");
  }
  long power = has(f, "power") ? integer_of(f["power"], "power") : 1;
  if (power < 0 || power > 64) schema_error("power must be between 0 and 64");
  return pow(base, static_cast<unsigned>(power));
}

// Ascending coefficient list, {"coefficients": [...]}, or
// {"constant": c, "factors": [...]}.
Polynomial poly_of(const json& v) {
  if (v.is_array()) return Polynomial(rationals_of(v));
  if (has(v, "coefficients")) return Polynomial(rationals_of(v["coefficients"]));
  if (has(v, "factors")) {
    Polynomial p = Polynomial::constant(has(v, "constant") ? rational_of(v["constant"]) : Rational(1));
    const json& factors = v["factors"];
    if (!factors.is_array()) schema_error("'factors' must be an array");
    for (const auto& f : factors) p *= factor_of(f);
    return p;
  }
  schema_error("polynomial must be a coefficient list or a factored product");
}

json rational_json(const Rational& q) { return to_string(q); }

json point_json(const ProjPoint& p) { return p.to_string(); }

json root_json(const IsolatedRoot& r) {
  if (r.is_exact()) return rational_json(r.value());
  json poly = json::array();
  for (const auto& c : r.interval().poly.coefficients()) poly.push_back(rational_json(c));
  return json{{"interval", {rational_json(r.lower()), rational_json(r.upper())}}, {"polynomial", poly}};
}

json matrix_json(const MoebiusMap& m) {
  return json::array({json::array({m.alpha().get_str(), m.beta().get_str()}),
                      json::array({m.gamma().get_str(), m.delta().get_str()})});
}

json manifold_json(const Manifold2& m) {
  json comps = json::array();
  for (const auto& c : m.components()) {
    json entry{{"name", c.to_string()}, {"orientable", c.is_orientable()}};
    if (c.is_orientable()) {
      entry["genus"] = c.genus();
    } else {
      entry["crosscaps"] = c.crosscaps();
    }
    entry["euler_characteristic"] = c.euler_characteristic();
    comps.push_back(entry);
  }
  return json{{"render", m.to_string()}, {"components", comps}};
}

json interval_set_json(const IntervalSet& set) {
  json arcs = json::array();
  for (const auto& a : set.arcs()) arcs.push_back({point_json(a.start), point_json(a.end)});
  std::string kind = set.kind() == IntervalSet::Kind::Empty  ? "empty"
                     : set.kind() == IntervalSet::Kind::Full ? "full"
                                                             : "arcs";
  return json{{"kind", kind}, {"arcs", arcs}, {"components", set.component_count()}};
}

const char* kNormalFormFact = "a real conic bundle over P^1 is x^2 + y^2 = +-prod_{i=1}^{2m} (z - a_i) with distinct real a_i";

// {"sign": s, "roots": [...]} or anything normalize accepts.
ConicBundleNF nf_of(const json& v, Response& out) {
  if (has(v, "g") || has(v, "numerator")) {
    ConicBundleInput input{has(v, "g") ? poly_of(v["g"]) : poly_of(v["numerator"])};
    if (has(v, "denominator")) input.denominator = poly_of(v["denominator"]);
    out.provenance.emplace_back(kNormalFormFact);
    return normalize(input);
  }
  int sign = small_int(v, "sign");
  return ConicBundleNF::from_rational_roots(sign, rationals_of(field(v, "roots")));
}

MinimalModelKind minimal_of(const json& payload) {
  const json& name = field(payload, "minimal");
  if (!name.is_string()) schema_error("'minimal' must be a string");
  std::string s = name.get<std::string>();
  if (s == "MinimalConicBundle") return MinimalModelKind::conic_bundle(small_int(payload, "m"));
  if (s == "DP2min") return MinimalModelKind::dp2();
  if (s == "DP1min") return MinimalModelKind::dp1();
  return parse_minimal_model(s);
}

// "real", "real:<i>", "pair", or {"type": "real"|"pair", "component": i}.
BlowUp blowup_of(const json& b) {
  std::string type;
  long component = 0;
  if (b.is_string()) {
    type = b.get<std::string>();
    if (type.rfind("real:", 0) == 0) {
      component = integer_of(json(type.substr(5)), "component");
      type = "real";
    }
  } else if (b.is_object()) {
    const json& t = field(b, "type");
    if (!t.is_string()) schema_error("blow-up 'type' must be a string");
    type = t.get<std::string>();
    if (has(b, "component")) component = integer_of(b["component"], "component");
  } else {
    schema_error("blow-up must be a string or an object");
  }
  if (type == "pair") return BlowUp::conjugate_pair();
  if (type != "real") schema_error("blow-up type must be 'real' or 'pair'");
  if (component < 0) throw Error(ErrorCode::BadIndex, "component index must be nonnegative");
  return BlowUp::real_point(static_cast<std::size_t>(component));
}

SurfaceDescription description_of(const json& payload) {
  SurfaceDescription d{minimal_of(payload), {}};
  if (has(payload, "blowups")) {
    const json& list = payload["blowups"];
    if (!list.is_array()) schema_error("'blowups' must be an array");
    for (const auto& b : list) d.blowups.push_back(blowup_of(b));
  }
  return d;
}

std::string class_name(const BirationalClass& c) {
  switch (c.kind) {
    case BirationalClass::Kind::Empty: return "Empty";
    case BirationalClass::Kind::Rational: return "Rational";
    case BirationalClass::Kind::ConicBundle: return "ConicBundle";
    case BirationalClass::Kind::DP2: return "DP2";
    case BirationalClass::Kind::DP1: return "DP1";
  }
  return "?";
}

// ---------------------------------------------------------------------------

Response do_normalize(const json& p) {
  Response out;
  ConicBundleInput input{has(p, "g") ? poly_of(p["g"]) : poly_of(field(p, "numerator"))};
  if (has(p, "denominator")) input.denominator = poly_of(p["denominator"]);
  Normalization n = normalize_with_base_change(input);
  json roots = json::array();
  for (const auto& r : n.form.roots()) roots.push_back(root_json(r));
  out.result = json{{"sign", n.form.sign()}, {"m", n.form.m()}, {"roots", roots}, {"base_change", matrix_json(n.base_change)}};
  out.provenance.emplace_back(kNormalFormFact);
  out.provenance.emplace_back("an odd number of real roots is made even by z -> 1/(z - t), which adds a root at 0");
  return out;
}

Response do_intervals(const json& p) {
  Response out;
  ConicBundleNF nf = nf_of(p, out);
  out.result = interval_set_json(interval_set(nf));
  out.provenance.emplace_back("I(f) is the set of points of P^1 over which the conic has real points, a union of m closed intervals");
  return out;
}

Response do_equiv(const json& p) {
  Response out;
  ConicBundleNF first = nf_of(field(p, "first"), out);
  ConicBundleNF second = nf_of(field(p, "second"), out);
  auto w = fibration_equivalent(first, second);
  out.result["equivalent"] = w.has_value();
  if (w) {
    out.result["witness"] = json{{"matrix", matrix_json(w->map)}, {"permutation", w->permutation}};
  }
  out.provenance.emplace_back(
      "two normal forms are isomorphic fibrations iff a'_sigma(i) = (alpha a_i + beta)/(gamma a_i + delta) and "
      "sign(c') = sign(c prod (gamma a_i + delta))");
  return out;
}

Response do_surface_equiv(const json& p) {
  Response out;
  ConicBundleNF first = nf_of(field(p, "first"), out);
  ConicBundleNF second = nf_of(field(p, "second"), out);
  bool eq = surface_equivalent(first, second);
  out.result = json{{"equivalent", eq}, {"m", {first.m(), second.m()}}};
  if (first.m() != second.m()) {
    out.provenance.emplace_back("the number of connected components of F(R) is a birational invariant");
  } else if (first.m() == 0) {
    out.provenance.emplace_back("there are 2 conic fibrations without singular fibers, told apart by I(f)");
  } else if (first.m() <= 2) {
    out.provenance.emplace_back("minimal conic bundles with 2 (resp. 4) singular fibers are all birational");
  } else {
    out.provenance.emplace_back("if K^2 <= 2 a birational map of minimal conic bundles preserves the fibrations");
  }
  return out;
}

Response do_topology(const json& p) {
  Response out;
  if (has(p, "minimal")) {
    SurfaceDescription d = description_of(p);
    Manifold2 m = topology(d);
    out.result = json{{"topology", manifold_json(m)}, {"euler_characteristic", euler_char(m)},
                      {"comessatti", comessatti_check(m)}};
    out.provenance.emplace_back("blowing up a real point takes a connected sum with RP^2; a conjugate pair leaves F(R) unchanged");
    return out;
  }
  ConicBundleNF nf = nf_of(p, out);
  Manifold2 m = topology(nf);
  out.result = json{{"topology", manifold_json(m)}, {"euler_characteristic", euler_char(m)},
                    {"k_squared", k_squared(nf.m())}};
  out.provenance.emplace_back("a conic bundle with 2m singular fibers over P^1 has F(R) = m S^2 when m >= 1");
  out.provenance.emplace_back("conic bundle K^2 = 8(1 - g(B)) - 2m");
  return out;
}

Response do_classify(const json& p) {
  Response out;
  SurfaceDescription d = description_of(p);
  BirationalClass c = birational_class(d);
  Manifold2 m = topology(d);
  out.result["class"] = class_name(c);
  if (c.kind == BirationalClass::Kind::ConicBundle) out.result["m"] = c.m;
  out.result["components"] = m.component_count();
  out.result["topology"] = manifold_json(m);
  out.result["k_squared"] = k_squared(d);
  out.result["picard_number"] = picard_number(d);
  out.result["comessatti"] = comessatti_check(m);
  out.provenance.emplace_back("a geometrically rational real surface is birational to exactly one of: empty, rational, "
                              "a minimal conic bundle with m >= 2 components, minimal Del Pezzo of degree 2 or 1");
  out.provenance.emplace_back("the real locus of the class has 0, 1, m, 4 or 5 connected components respectively");
  return out;
}

Response do_lines(const json& p) {
  Response out;
  int r = small_int(p, "r");
  int count = 0;
  if (has(p, "swapped")) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& pr : p["swapped"]) {
      if (!pr.is_array() || pr.size() != 2) schema_error("'swapped' entries must be index pairs");
      pairs.emplace_back(static_cast<int>(integer_of(pr[0], "index")), static_cast<int>(integer_of(pr[1], "index")));
    }
    count = real_line_count(GaloisAction(r, std::move(pairs)));
  } else {
    count = real_line_count(r, small_int(p, "real"), small_int(p, "pairs"));
  }
  out.result = json{{"count", count}, {"total", minus_one_classes(r).size()}};
  out.provenance.emplace_back("lines are the classes dH - sum m_i e_i with square -1 and anticanonical degree 1; "
                              "real lines are those fixed by conjugation");
  return out;
}

Response do_bitangents(const json& p) {
  Response out;
  out.result = json{{"count", bitangent_count(small_int(p, "d"))}};
  out.provenance.emplace_back("a smooth real plane quartic with d outer ovals has 4 + 2d(d-1) real bitangents");
  return out;
}

json pair_json(const DoubleCoverPair& row) {
  return json{{"f_plus", manifold_json(row.f_plus)}, {"f_minus", manifold_json(row.f_minus)}};
}

std::string string_field(const json& p, const char* key) {
  const json& v = field(p, key);
  if (!v.is_string()) schema_error(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

Response do_dp_table(const json& p) {
  Response out;
  if (has(p, "quartic")) {
    out.result = pair_json(dp2_table(parse_quartic_config(string_field(p, "quartic"))));
    out.provenance.emplace_back("degree 2 Del Pezzo surfaces u^2 = +-f(x, y, z) over a real plane quartic");
    return out;
  }
  if (has(p, "sextic")) {
    out.result = pair_json(dp1_table(parse_sextic_config(string_field(p, "sextic"))));
    out.provenance.emplace_back("degree 1 Del Pezzo surfaces as double covers of the quadric cone branched along a sextic");
    return out;
  }
  int degree = small_int(p, "degree");
  json types = json::array();
  for (const auto& t : dp_types(degree)) {
    types.push_back(json{{"topology", manifold_json(t.topology)}, {"family_count", t.family_count}, {"notes", t.notes}});
  }
  out.result = json{{"degree", degree}, {"types", types}};
  out.provenance.emplace_back("topological types of real Del Pezzo surfaces of degree " + std::to_string(degree));
  return out;
}

Response do_qf_split(const json& p) {
  Response out;
  DiagForm form(rationals_of(field(p, "form")));
  Integer a = integer_of(field(p, "a"), "a");
  const json& witness = field(p, "witness");
  if (!witness.is_array()) schema_error("'witness' must be an array of [p, q] pairs");
  std::vector<QuadExtElem> v;
  for (const auto& entry : witness) {
    if (!entry.is_array() || entry.size() != 2) schema_error("witness entries must be [p, q] for p + q sqrt(a)");
    v.emplace_back(rational_of(entry[0]), rational_of(entry[1]), a);
  }
  Split split = split_witness(form, a, v);
  json q_prime = json::array();
  for (const auto& c : split.q_prime.coefficients()) q_prime.push_back(rational_json(c));
  json t = json::array();
  json pullback = json::array();
  for (const auto& row : split.basis_change) {
    json r = json::array();
    for (const auto& x : row) r.push_back(rational_json(x));
    t.push_back(r);
    pullback.push_back({rational_json(row[1]), rational_json(row[0])});
  }
  out.result = json{{"a", squarefree_split(a).kernel.get_str()},
                    {"b", rational_json(split.b)},
                    {"q_prime", q_prime},
                    {"basis_change", t},
                    {"isotropic_vector", pullback}};
  out.provenance.emplace_back("a form anisotropic over k with a zero over k(sqrt a) is b(y0^2 - a y1^2) + Q'(y2, ..., yn)");
  return out;
}

using Handler = Response (*)(const json&);

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> table{
      {"normalize", &do_normalize}, {"intervals", &do_intervals},     {"equiv", &do_equiv},
      {"surface-equiv", &do_surface_equiv}, {"topology", &do_topology}, {"classify", &do_classify},
      {"lines", &do_lines},         {"bitangents", &do_bitangents},   {"dp-table", &do_dp_table},
      {"qf-split", &do_qf_split}};
  return table;
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, handler] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

json to_json(const Request& request) { return json{{"subcommand", request.subcommand}, {"payload", request.payload}}; }

Request request_from_json(const json& doc) {
  const json& sub = field(doc, "subcommand");
  if (!sub.is_string()) schema_error("'subcommand' must be a string");
  Request r{sub.get<std::string>(), has(doc, "payload") ? doc["payload"] : json::object()};
  return r;
}

json to_json(const Response& response) {
  json out{{"status", response.ok ? "ok" : "error"}};
  if (response.ok) {
    out["result"] = response.result;
    out["provenance"] = response.provenance;
  } else {
    out["error"] = json{{"code", response.error_code}, {"message", response.error_message}};
  }
  return out;
}

Response response_from_json(const json& doc) {
  const json& status = field(doc, "status");
  if (status == "ok") {
    Response r;
    r.result = field(doc, "result");
    const json& prov = field(doc, "provenance");
    if (!prov.is_array()) schema_error("'provenance' must be an array");
    for (const auto& s : prov) {
      if (!s.is_string()) schema_error("provenance entries must be strings");
      r.provenance.push_back(s.get<std::string>());
    }
    return r;
  }
  if (status == "error") {
    const json& err = field(doc, "error");
    const json& code = field(err, "code");
    const json& message = field(err, "message");
    if (!code.is_string() || !message.is_string()) schema_error("error code and message must be strings");
    return error_response(code.get<std::string>(), message.get<std::string>());
  }
  schema_error("status must be 'ok' or 'error'");
}

Response error_response(const std::string& code, const std::string& message) {
  Response r;
  r.ok = false;
  r.result = json::object();
  r.error_code = code;
  r.error_message = message;
  return r;
}

Response run(const Request& request) {
  const auto& table = handlers();
  auto it = std::find_if(table.begin(), table.end(), [&](const auto& h) { return h.first == request.subcommand; });
  if (it == table.end()) {
    return error_response(std::string(to_string(ErrorCode::SchemaError)), "unknown subcommand '" + request.subcommand + "'");
  }
  try {
    return it->second(request.payload);
  } catch (const Error& e) {
    return error_response(std::string(to_string(e.code())), e.what());
  } catch (const json::exception& e) {
    return error_response(std::string(to_string(ErrorCode::SchemaError)), e.what());
  } catch (const std::exception& e) {
    return error_response("InternalError", e.what());
  }
}

std::vector<Response> run_batch(const std::vector<Request>& requests, unsigned threads) {
  std::vector<Response> out(requests.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(requests.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < requests.size(); i = next++) out[i] = run(requests[i]);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

int exit_code(const Response& response) {
  if (response.ok) return 0;
  if (response.error_code == to_string(ErrorCode::ParseError) || response.error_code == to_string(ErrorCode::SchemaError)) {
    return 2;
  }
  if (response.error_code == "InternalError") return 1;
  return 3;
}

namespace {

void render_value(std::string& out, const std::string& key, const json& v, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object() && v.contains("render") && v.contains("components")) {
    out += pad + key + ": " + v["render"].get<std::string>() + "\n";
  } else if (v.is_object()) {
    out += pad + key + ":\n";
    for (const auto& [k, x] : v.items()) render_value(out, k, x, indent + 2);
  } else if (v.is_array() && !v.empty() && v.front().is_object()) {
    out += pad + key + ":\n";
    for (std::size_t i = 0; i < v.size(); ++i) render_value(out, "- " + std::to_string(i), v[i], indent + 2);
  } else if (v.is_string()) {
    out += pad + key + ": " + v.get<std::string>() + "\n";
  } else {
    out += pad + key + ": " + v.dump() + "\n";
  }
}

}  // namespace

std::string render_text(const Response& response) {
  if (!response.ok) return "error " + response.error_code + ": " + response.error_message + "\n";
  std::string out;
  for (const auto& [k, v] : response.result.items()) render_value(out, k, v, 0);
  for (const auto& p : response.provenance) out += "  [" + p + "]\n";
  return out;
}

}  // namespace realsurf::cli
