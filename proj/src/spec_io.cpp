#include "bnf/spec_io.hpp"

#include <fstream>

namespace bnf {

namespace {

int parse_int(const Json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  const Json& v = doc.at(key);
  if (!v.is_number_integer()) throw ParseError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<int> parse_index(const Json& v, int n, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": multi-index must be an array");
  if (static_cast<int>(v.size()) != n)
    throw ParseError(where + ": multi-index has length " + std::to_string(v.size()) + ", expected n = " +
                     std::to_string(n));
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer() || x.get<long long>() < 0 || x.get<long long>() > kMaxExponent)
      throw ParseError(where + ": exponents must be integers in [0, " + std::to_string(kMaxExponent) + "]");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

Rational parse_rational_json(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) throw ParseError(where + ": rational must be a string \"p/q\" or an integer");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(where + ": malformed rational \"" + v.get<std::string>() + "\"");
  }
}

GaussianRational parse_gaussian_json(const Json& v, const std::string& where) {
  if (!v.is_object()) return {parse_rational_json(v, where), Rational(0)};
  for (const auto& [key, _] : v.items())
    if (key != "re" && key != "im") throw ParseError(where + ": unexpected key \"" + key + "\"");
  Rational re = v.contains("re") ? parse_rational_json(v.at("re"), where + ".re") : Rational(0);
  Rational im = v.contains("im") ? parse_rational_json(v.at("im"), where + ".im") : Rational(0);
  return {std::move(re), std::move(im)};
}

Json gaussian_to_json(const GaussianRational& g) { return Json{{"re", g.re().str()}, {"im", g.im().str()}}; }

ProblemSpec parse_spec(const Json& doc) {
  if (!doc.is_object()) throw ParseError("spec must be a JSON object");
  ProblemSpec spec;
  spec.n = parse_int(doc, "n");
  if (spec.n < 1 || spec.n > kMaxDim)
    throw ParseError("n = " + std::to_string(spec.n) + " outside [1, " + std::to_string(kMaxDim) + "]");
  spec.order = parse_int(doc, "order");
  if (spec.order < 3) throw ParseError("order must be at least 3");
  if (spec.order > kMaxExponent) throw ParseError("order exceeds " + std::to_string(kMaxExponent));

  if (!doc.contains("lambda") || !doc.at("lambda").is_array()) throw ParseError("missing array field \"lambda\"");
  const Json& lam = doc.at("lambda");
  if (static_cast<int>(lam.size()) != spec.n)
    throw ParseError("lambda has " + std::to_string(lam.size()) + " entries, expected n = " + std::to_string(spec.n));
  for (std::size_t j = 0; j < lam.size(); ++j) {
    auto where = "lambda[" + std::to_string(j) + "]";
    auto v = parse_gaussian_json(lam[j], where);
    if (v.is_zero()) throw ParseError(where + ": entry is zero");
    spec.lambda.push_back(std::move(v));
  }

  if (doc.contains("terms")) {
    const Json& terms = doc.at("terms");
    if (!terms.is_array()) throw ParseError("field \"terms\" must be an array");
    for (std::size_t i = 0; i < terms.size(); ++i) {
      auto where = "terms[" + std::to_string(i) + "]";
      const Json& t = terms[i];
      if (!t.is_object() || !t.contains("alpha") || !t.contains("beta") || !t.contains("coeff"))
        throw ParseError(where + ": term needs \"alpha\", \"beta\" and \"coeff\"");
      auto a = parse_index(t.at("alpha"), spec.n, where + ".alpha");
      auto b = parse_index(t.at("beta"), spec.n, where + ".beta");
      ExponentPair e(a, b);
      if (e.degree() < 3)
        throw ParseError(where + ": degree " + std::to_string(e.degree()) +
                         " < 3; the quadratic part comes from lambda");
      auto c = parse_gaussian_json(t.at("coeff"), where + ".coeff");
      auto& slot = spec.terms[e];
      slot += c;
      if (slot.is_zero()) spec.terms.erase(e);
    }
  }
  if (doc.contains("flags")) {
    if (!doc.at("flags").is_object()) throw ParseError("field \"flags\" must be an object");
    spec.flags = doc.at("flags");
  }
  return spec;
}

ProblemSpec parse_spec(std::istream& in) {
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_spec(doc);
}

ProblemSpec parse_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return parse_spec(in);
}

Json emit_spec(const ProblemSpec& spec) {
  Json lam = Json::array();
  for (const auto& l : spec.lambda) lam.push_back(gaussian_to_json(l));
  Json terms = Json::array();
  for (const auto& [e, c] : spec.terms) {
    Json t = pair_to_json(e, spec.n);
    t["coeff"] = gaussian_to_json(c);
    terms.push_back(std::move(t));
  }
  Json out{{"n", spec.n}, {"lambda", std::move(lam)}, {"order", spec.order}, {"terms", std::move(terms)}};
  if (!spec.flags.empty()) out["flags"] = spec.flags;
  return out;
}

}  // namespace bnf
