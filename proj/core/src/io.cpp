#include "toric/io.hpp"

#include <json.hpp>

#include "toric/error.hpp"

namespace toric {

namespace {

using Json = nlohmann::ordered_json;

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Integer parse_integer(const Json& j, const std::string& what) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const Rational r = parse_rational(j.get<std::string>());
    if (r.get_den() != 1) throw InputError(what + " must be an integer");
    return r.get_num();
  }
  throw InputError(what + " must be an integer");
}

Rational parse_rational_json(const Json& j, const std::string& what) {
  if (!j.is_string()) throw InputError(what + " must be a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw InputError(std::string("missing field \"") + key + "\"");
  }
  return obj.at(key);
}

const Json& array_field(const Json& obj, const char* key) {
  const Json& j = field(obj, key);
  if (!j.is_array()) throw InputError(std::string("field \"") + key + "\" must be an array");
  return j;
}

template <typename Vector>
Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& c : v.coords()) out.push_back(integer_json(c));
  return out;
}

template <typename Vector>
Vector parse_vector(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array of integers");
  std::vector<Integer> coords;
  for (const auto& c : j) coords.push_back(parse_integer(c, what + " entry"));
  return Vector(std::move(coords));
}

Json point_json(const RationalPoint& p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(to_string(c));
  return out;
}

Json pair_json(const ToricPair& pair) {
  Json j = Json::object();
  if (!pair.name.empty()) j["name"] = pair.name;
  j["dim"] = pair.dim;
  Json rays = Json::array();
  for (const auto& r : pair.rays) rays.push_back(vector_json(r));
  j["rays"] = std::move(rays);
  Json coeffs = Json::array();
  for (const auto& a : pair.coeffs) coeffs.push_back(to_string(a));
  j["coeffs"] = std::move(coeffs);
  return j;
}

ToricPair pair_from_json(const Json& j, bool check = true) {
  if (!j.is_object()) throw InputError("pair document must be a JSON object");
  ToricPair pair;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw InputError("name must be a string");
    pair.name = j.at("name").get<std::string>();
  }
  const Json& dim = field(j, "dim");
  if (!dim.is_number_integer() || dim.get<std::int64_t>() < 1) {
    throw InputError("dim must be a positive integer");
  }
  pair.dim = dim.get<std::size_t>();
  for (const auto& r : array_field(j, "rays")) pair.rays.push_back(parse_vector<LatticeVector>(r, "ray"));
  for (const auto& a : array_field(j, "coeffs")) pair.coeffs.push_back(parse_rational_json(a, "coefficient"));
  if (check) require_valid(pair);
  return pair;
}

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json level_json(const RecursionLevel& level) {
  Json j = Json::object();
  j["dim"] = level.dim;
  j["phi"] = vector_json(level.phi);
  j["w"] = to_string(level.w);
  j["w_minus"] = to_string(level.w_minus);
  j["w_plus"] = to_string(level.w_plus);
  j["t"] = to_string(level.t);
  j["gamma"] = to_string(level.gamma);
  j["epsilon"] = to_string(level.epsilon);
  j["fiber_witness"] = to_string(level.fiber_witness);
  j["witness"] = to_string(level.witness);
  j["recursion_bound_holds"] = level.recursion_bound_holds;
  Json slice = Json::array();
  for (const auto& v : level.slice_body.vertices) slice.push_back(point_json(v));
  j["slice_body"] = std::move(slice);
  Json lifts = Json::array();
  for (const auto& l : level.lifts) {
    Json lj = Json::object();
    lj["fiber_functional"] = vector_json(l.fiber_functional);
    lj["functional"] = vector_json(l.functional);
    lj["width"] = to_string(l.width);
    lj["bound"] = to_string(l.bound);
    lj["shift"] = integer_json(l.shift);
    lifts.push_back(std::move(lj));
  }
  j["lifts"] = std::move(lifts);
  return j;
}

RecursionLevel level_from_json(const Json& j) {
  RecursionLevel level;
  const Json& dim = field(j, "dim");
  if (!dim.is_number_integer() || dim.get<std::int64_t>() < 1) throw InputError("trace dim must be positive");
  level.dim = dim.get<std::size_t>();
  level.phi = parse_vector<DualFunctional>(field(j, "phi"), "trace phi");
  level.w = parse_rational_json(field(j, "w"), "w");
  level.w_minus = parse_rational_json(field(j, "w_minus"), "w_minus");
  level.w_plus = parse_rational_json(field(j, "w_plus"), "w_plus");
  level.t = parse_rational_json(field(j, "t"), "t");
  level.gamma = parse_rational_json(field(j, "gamma"), "gamma");
  level.epsilon = parse_rational_json(field(j, "epsilon"), "epsilon");
  level.fiber_witness = parse_rational_json(field(j, "fiber_witness"), "fiber_witness");
  level.witness = parse_rational_json(field(j, "witness"), "witness");
  const Json& bound_flag = field(j, "recursion_bound_holds");
  if (!bound_flag.is_boolean()) throw InputError("recursion_bound_holds must be a boolean");
  level.recursion_bound_holds = bound_flag.get<bool>();
  level.slice_body.dim = level.dim - 1;
  for (const auto& v : array_field(j, "slice_body")) {
    if (!v.is_array()) throw InputError("slice_body points must be arrays");
    RationalPoint p;
    for (const auto& c : v) p.push_back(parse_rational_json(c, "slice_body coordinate"));
    if (p.size() != level.slice_body.dim) throw InputError("slice_body point has wrong dimension");
    level.slice_body.vertices.push_back(std::move(p));
  }
  for (const auto& lj : array_field(j, "lifts")) {
    LiftRecord l;
    l.fiber_functional = parse_vector<DualFunctional>(field(lj, "fiber_functional"), "fiber_functional");
    l.functional = parse_vector<DualFunctional>(field(lj, "functional"), "functional");
    l.width = parse_rational_json(field(lj, "width"), "lift width");
    l.bound = parse_rational_json(field(lj, "bound"), "lift bound");
    l.shift = parse_integer(field(lj, "shift"), "shift");
    level.lifts.push_back(std::move(l));
  }
  return level;
}

}  // namespace

ToricPair parse_pair(std::string_view text) { return pair_from_json(parse_document(text)); }

ToricPair parse_pair_unchecked(std::string_view text) {
  return pair_from_json(parse_document(text), false);
}

std::string emit_pair(const ToricPair& pair) { return pair_json(pair).dump(2) + "\n"; }

std::string emit_certificate(const ComplementCertificate& cert, bool verified) {
  Json j = Json::object();
  j["pair"] = pair_json(cert.pair);
  j["mode"] = to_string(cert.mode);
  j["epsilon"] = to_string(cert.epsilon);
  j["budget"] = to_string(cert.budget);
  Json basis = Json::array();
  for (const auto& phi : cert.basis) basis.push_back(vector_json(phi));
  j["basis"] = std::move(basis);
  j["witness"] = to_string(cert.witness);
  j["n"] = integer_json(cert.n);
  Json coeffs = Json::array();
  for (const auto& m : cert.divisor_coeffs) coeffs.push_back(to_string(m));
  j["divisor_coeffs"] = std::move(coeffs);
  Json trace = Json::array();
  for (const auto& level : cert.trace) trace.push_back(level_json(level));
  j["trace"] = std::move(trace);
  j["verified"] = verified;
  return j.dump(2) + "\n";
}

ComplementCertificate parse_certificate(std::string_view text, bool reverify) {
  const Json j = parse_document(text);
  if (!j.is_object()) throw InputError("certificate document must be a JSON object");
  ComplementCertificate cert;
  cert.pair = pair_from_json(field(j, "pair"));
  const Json& mode = field(j, "mode");
  if (!mode.is_string()) throw InputError("mode must be a string");
  cert.mode = parse_mode(mode.get<std::string>());
  cert.epsilon = parse_rational_json(field(j, "epsilon"), "epsilon");
  cert.budget = parse_rational_json(field(j, "budget"), "budget");
  for (const auto& phi : array_field(j, "basis")) {
    cert.basis.push_back(parse_vector<DualFunctional>(phi, "basis functional"));
  }
  cert.witness = parse_rational_json(field(j, "witness"), "witness");
  cert.n = parse_integer(field(j, "n"), "n");
  for (const auto& m : array_field(j, "divisor_coeffs")) {
    cert.divisor_coeffs.push_back(parse_rational_json(m, "divisor coefficient"));
  }
  for (const auto& level : array_field(j, "trace")) cert.trace.push_back(level_from_json(level));

  bool verified = false;
  if (j.contains("verified")) {
    if (!j.at("verified").is_boolean()) throw InputError("verified must be a boolean");
    verified = j.at("verified").get<bool>();
  }
  if (verified && reverify) {
    const VerificationReport report = verify_certificate(cert.pair, cert);
    for (const auto& item : report.items) {
      if (!item.passed) {
        throw InputError("certificate marked verified fails check \"" + item.name + "\": " + item.detail);
      }
    }
  }
  return cert;
}

}  // namespace toric
