#pragma once

// Problem specs and JSON (de)serialization.
//
// Spec schema:
//   {"n": 1, "lambda": [{"re": "1", "im": "0"}], "order": 8,
//    "terms": [{"alpha": [3], "beta": [0], "coeff": {"re": "1", "im": "0"}}],
//    "flags": {...}}
// Rationals are strings "p/q" or JSON integers; a coefficient may also be a
// bare rational (imaginary part zero). "flags" is optional and opaque.

#include "bnf/poly_series.hpp"
#include "bnf/split_ops.hpp"

#include <json.hpp>

#include <filesystem>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>

namespace bnf {

using Json = nlohmann::json;

class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct ProblemSpec {
  int n = 1;
  std::vector<GaussianRational> lambda;
  int order = 3;
  /// Terms of degree >= 3; duplicates in the input are summed, zeros dropped.
  std::map<ExponentPair, GaussianRational> terms;
  Json flags = Json::object();

  [[nodiscard]] FreqVector freq() const { return FreqVector(lambda); }
  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

ProblemSpec parse_spec(const Json& doc);
ProblemSpec parse_spec(std::istream& in);
ProblemSpec parse_spec_file(const std::filesystem::path& path);

/// Canonical JSON: sorted keys, terms in series order.
Json emit_spec(const ProblemSpec& spec);

Rational parse_rational_json(const Json& v, const std::string& where);
GaussianRational parse_gaussian_json(const Json& v, const std::string& where);
Json gaussian_to_json(const GaussianRational& g);

inline Json coeff_to_json(const Rational& c, int /*n*/) { return gaussian_to_json(GaussianRational(c)); }
inline Json coeff_to_json(const GaussianRational& c, int /*n*/) { return gaussian_to_json(c); }
inline Json coeff_to_json(const SymScalar& c, int n) { return c.str(n); }

inline Json pair_to_json(const ExponentPair& e, int n) {
  return Json{{"alpha", e.alpha_vec(n)}, {"beta", e.beta_vec(n)}};
}

template <CoefficientRing K>
Json series_to_json(const PolySeries<K>& f) {
  Json out = Json::array();
  for (const auto& [e, c] : f.terms()) {
    Json t = pair_to_json(e, f.n());
    t["coeff"] = coeff_to_json(c, f.n());
    out.push_back(std::move(t));
  }
  return out;
}

/// H = H_2(lambda) + sum of the spec's terms, truncated at the spec order.
template <CoefficientRing K>
PolySeries<K> build_hamiltonian(const ProblemSpec& spec) {
  auto h = PolySeries<K>::quadratic(spec.order, spec.lambda);
  for (const auto& [e, c] : spec.terms) h.add_term(e, K(RingTraits<K>::field_from(c)));
  return h;
}

}  // namespace bnf
