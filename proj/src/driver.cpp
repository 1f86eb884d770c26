#include "bnf/driver.hpp"

#include "bnf/random.hpp"

#include <sstream>

namespace bnf {

using Num = GaussianRational;

Method parse_method(std::string_view name) {
  if (name == "lie") return Method::kLie;
  if (name == "trees") return Method::kTrees;
  if (name == "onedof") return Method::kOnedof;
  throw UsageError("unknown method \"" + std::string(name) + "\" (expected lie, trees or onedof)");
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::kLie: return "lie";
    case Method::kTrees: return "trees";
    case Method::kOnedof: return "onedof";
  }
  return "?";
}

int linearizable_up_to(const UniSeries<GaussianRational>& s, int order) {
  for (int j = 2; j <= s.order(); ++j)
    if (!s[j].is_zero()) return 2 * j - 1;
  return order;
}

namespace {

/// C(2n + M, 2n), saturating at `cap`.
std::uint64_t pair_count(int n, int order, std::uint64_t cap) {
  std::uint64_t c = 1;
  for (int k = 1; k <= 2 * n; ++k) {
    // c = C(order + k, k) built incrementally; exact at every step.
    unsigned __int128 next = static_cast<unsigned __int128>(c) * static_cast<unsigned>(order + k) / static_cast<unsigned>(k);
    if (next > cap) return cap + 1;
    c = static_cast<std::uint64_t>(next);
  }
  return c;
}

void add_resonance_report(Json& out, const ProblemSpec& spec, const DriverOptions& options) {
  Json pairs = Json::array();
  Json& warnings = out["warnings"];
  if (pair_count(spec.n, spec.order, options.resonance_scan_limit) > options.resonance_scan_limit) {
    warnings.push_back("resonance scan skipped: too many exponent pairs at this n and order");
  } else {
    auto found = nontrivial_resonances(spec.freq(), spec.order);
    for (const auto& r : found) pairs.push_back(pair_to_json(r.pair, spec.n));
    if (!found.empty())
      warnings.push_back("lambda has " + std::to_string(found.size()) + " nontrivial resonance(s) through order " +
                         std::to_string(spec.order) + " (lowest " + found.front().pair.monomial_str(spec.n) +
                         "); the normal form keeps resonant terms");
  }
  out["resonant_pairs"] = std::move(pairs);
}

Json check_entry(std::string name, bool pass, std::string detail) {
  return Json{{"name", std::move(name)}, {"pass", pass}, {"detail", std::move(detail)}};
}

Json skipped_entry(std::string name, std::string reason) {
  return Json{{"name", std::move(name)}, {"pass", true}, {"skipped", true}, {"detail", std::move(reason)}};
}

std::string mismatch_detail(const PolySeries<Num>& a, const PolySeries<Num>& b, const char* la, const char* lb) {
  auto diff = a - b;
  std::ostringstream os;
  os << la << " - " << lb << " = " << diff.str();
  return os.str();
}

/// Fails with the name of the first identity that breaks; empty when all hold.
std::string operator_identities(const ProblemSpec& spec, const PolySeries<Num>& h, const DriverOptions& options) {
  const auto lambda = spec.freq();
  const int n = spec.n;
  const int order = spec.order;
  SeriesRng rng(options.seed);
  auto identity_for = [&](const PolySeries<Num>& f) -> std::string {
    auto af = op_A(f, lambda);
    auto bf = op_B(f, lambda);
    auto df = op_D(f, lambda);
    if (!op_A(df, lambda).is_zero() || !op_D(af, lambda).is_zero()) return "AD = DA = 0";
    if (!op_A(bf, lambda).is_zero() || !op_B(af, lambda).is_zero()) return "AB = BA = 0";
    if (op_D(bf, lambda) != f - af || op_B(df, lambda) != f - af) return "DB = BD = I - A";
    if (op_A(af, lambda) != af) return "A^2 = A";
    if (af + op_D(bf, lambda) != f) return "F = AF + D(BF)";
    return {};
  };
  auto hstar = h.degree_range(3, order);
  if (auto bad = identity_for(hstar); !bad.empty()) return bad + " on H_*";
  for (int i = 0; i < options.identity_samples; ++i) {
    auto f = random_series<Num>(rng, n, order, 2, order, 5);
    auto g = random_series<Num>(rng, n, order, 2, order, 5);
    auto k = random_series<Num>(rng, n, order, 2, order, 5);
    if (auto bad = identity_for(f); !bad.empty()) return bad;
    auto jac = poisson(f, poisson(g, k)) + poisson(g, poisson(k, f)) + poisson(k, poisson(f, g));
    if (!jac.is_zero()) return "Jacobi";
    if (poisson(f, g * k) != poisson(f, g) * k + g * poisson(f, k)) return "Leibniz";
    if (poisson(f, g) != -poisson(g, f)) return "antisymmetry";
  }
  return {};
}

Json structure_check(const ProblemSpec& spec, const PolySeries<Num>& numeric_tail, const DriverOptions& options) {
  const char* name = "structure";
  if (spec.order > options.structure.max_order)
    return skipped_entry(name, "order " + std::to_string(spec.order) + " above the symbolic limit " +
                                   std::to_string(options.structure.max_order));
  if (static_cast<int>(spec.terms.size()) > options.structure.max_support)
    return skipped_entry(name, "support size " + std::to_string(spec.terms.size()) + " above the symbolic limit " +
                                   std::to_string(options.structure.max_support));
  std::vector<ExponentPair> support;
  for (const auto& [e, _] : spec.terms) support.push_back(e);
  const auto lambda = spec.freq();
  auto nf = normalize_symbolic(support, lambda, spec.order, options.structure, options.inner);
  auto report = check_structure(nf);
  if (!report.pass()) return check_entry(name, false, *report.first_violation);

  auto value = [&](const ExponentPair& e) { return spec.terms.at(e); };
  PolySeries<Num> evaluated(spec.n, spec.order);
  for (const auto& [e, c] : nf.tail.terms()) evaluated.add_term(e, c.evaluate(value));
  if (evaluated != numeric_tail)
    return check_entry(name, false, "specialized symbolic normal form differs from the numeric one");

  auto sym_h = symbolic_hamiltonian(support, lambda, spec.order);
  auto via_trees = nf_via_trees(sym_h, lambda, spec.order, nullptr, options.max_leaves, options.inner) -
                   PolySeries<SymScalar>::quadratic(spec.order, spec.lambda);
  if (via_trees != nf.tail) return check_entry(name, false, "symbolic lie and trees normal forms differ");
  return check_entry(name, true,
                     std::to_string(report.monomials_checked) + " monomials checked over lie and trees, 0 violations");
}

}  // namespace

Json run_compute(const ProblemSpec& spec, Method method, const DriverOptions& options) {
  const auto lambda = spec.freq();
  Json out{{"method", std::string(method_name(method))}, {"order", spec.order}, {"warnings", Json::array()}};
  add_resonance_report(out, spec, options);
  const auto h = build_hamiltonian<Num>(spec);
  switch (method) {
    case Method::kLie: {
      auto r = lie_normalize(h, lambda, spec.order, options.inner);
      out["normal_form"] = series_to_json(r.normal_form);
      out["normal_form_text"] = r.normal_form.str();
      out["generator"] = series_to_json(r.generator);
      break;
    }
    case Method::kTrees: {
      std::vector<TreeContribution<Num>> parts;
      auto nf = nf_via_trees(h, lambda, spec.order, &parts, options.max_leaves, options.inner);
      out["normal_form"] = series_to_json(nf);
      out["normal_form_text"] = nf.str();
      Json breakdown = Json::array();
      for (const auto& p : parts)
        breakdown.push_back(Json{{"degree", p.degree},
                                 {"tree", p.tree},
                                 {"code", p.code.str()},
                                 {"mu", p.mu.str()},
                                 {"weight", p.weight.str()},
                                 {"terms", series_to_json(p.resonant)}});
      out["breakdown"] = std::move(breakdown);
      break;
    }
    case Method::kOnedof: {
      if (spec.n != 1) throw UsageError("method onedof requires n = 1 (got n = " + std::to_string(spec.n) + ")");
      auto s = compute_S(h, lambda, spec.order);
      auto nf = nu_to_series(nf_from_S(s, lambda, options.convention), spec.order);
      out["normal_form"] = series_to_json(nf);
      out["normal_form_text"] = nf.str();
      Json sj = Json::array();
      for (int j = 2; j <= s.order(); ++j) sj.push_back(Json::array({std::to_string(j), s[j].str()}));
      out["S"] = std::move(sj);
      break;
    }
  }
  return out;
}

Json run_check(const ProblemSpec& spec, const DriverOptions& options) {
  const auto lambda = spec.freq();
  const auto h = build_hamiltonian<Num>(spec);
  const auto quad = PolySeries<Num>::quadratic(spec.order, spec.lambda);
  Json checks = Json::array();

  auto lie = lie_normalize(h, lambda, spec.order, options.inner);
  auto trees = nf_via_trees(h, lambda, spec.order, nullptr, options.max_leaves, options.inner);
  bool agreement = true;

  bool ok = lie.normal_form == trees;
  agreement = agreement && ok;
  checks.push_back(check_entry("lie_vs_trees", ok,
                               ok ? "identical normal forms"
                                  : mismatch_detail(lie.normal_form, trees, "lie", "trees")));

  if (spec.n == 1) {
    auto onedof = nf_via_S(h, lambda, spec.order, options.convention);
    ok = lie.normal_form == onedof;
    agreement = agreement && ok;
    checks.push_back(check_entry("lie_vs_onedof", ok,
                                 ok ? "identical normal forms"
                                    : mismatch_detail(lie.normal_form, onedof, "lie", "onedof")));
  } else {
    checks.push_back(skipped_entry("lie_vs_onedof", "n>1"));
  }

  auto closed = exp_lie(lie.generator, h, spec.order);
  ok = closed == lie.normal_form;
  checks.push_back(check_entry("exp_lie_closure", ok,
                               ok ? "exp_lie(F, H) = N" : mismatch_detail(closed, lie.normal_form, "exp_lie", "N")));

  ok = op_A(lie.normal_form, lambda) == lie.normal_form;
  checks.push_back(check_entry("resonant_normal_form", ok,
                               ok ? "every term of N is resonant" : "N has nonresonant terms"));

  auto bad = operator_identities(spec, h, options);
  checks.push_back(check_entry("operator_identities", bad.empty(),
                               bad.empty() ? std::to_string(options.identity_samples) + " random instances"
                                           : "failed: " + bad));

  if (spec.n == 1) {
    auto s = compute_S(h, lambda, spec.order);
    auto moved = random_symplectic_conjugate(h, options.seed);
    auto s2 = compute_S(moved, lambda, spec.order);
    ok = s == s2;
    checks.push_back(check_entry("s_invariance", ok,
                                 ok ? "S unchanged under a random exp_lie conjugation"
                                    : "S = " + s.str() + " but after conjugation " + s2.str()));
  } else {
    checks.push_back(skipped_entry("s_invariance", "n>1"));
  }

  checks.push_back(structure_check(spec, lie.normal_form - quad, options));

  bool pass = true;
  for (const auto& c : checks) pass = pass && c.at("pass").get<bool>();
  return Json{{"checks", std::move(checks)},
              {"normal_form", series_to_json(lie.normal_form)},
              {"agreement", agreement},
              {"pass", pass}};
}

Json run_s_series(const ProblemSpec& spec, const DriverOptions& /*options*/) {
  if (spec.n != 1) throw UsageError("s-series requires n = 1 (got n = " + std::to_string(spec.n) + ")");
  auto s = compute_S(build_hamiltonian<Num>(spec), spec.freq(), spec.order);
  Json sj = Json::array();
  for (int j = 2; j <= s.order(); ++j) sj.push_back(Json::array({std::to_string(j), s[j].str()}));
  return Json{{"S", std::move(sj)}, {"linearizable_up_to", linearizable_up_to(s, spec.order)}};
}

Json structure_report_to_json(const StructureReport& report) {
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json monos = Json::array();
    for (const auto& m : e.monomials)
      monos.push_back(Json{{"coefficient", m.coefficient},
                           {"factors", m.factors},
                           {"degree", m.degree},
                           {"weight", pair_to_json(m.weight, report.n)},
                           {"T", m.t_vector},
                           {"degree_ok", m.degree_ok},
                           {"T_nonnegative", m.t_nonnegative},
                           {"delta_T_zero", m.delta_t_zero},
                           {"T_norm_ok", m.t_norm_ok}});
    Json entry = pair_to_json(e.pair, report.n);
    entry["monomials"] = std::move(monos);
    entries.push_back(std::move(entry));
  }
  Json out{{"n", report.n},
           {"order", report.order},
           {"entries", std::move(entries)},
           {"monomials_checked", report.monomials_checked},
           {"violations", report.violations},
           {"pass", report.pass()}};
  out["first_violation"] = report.first_violation ? Json(*report.first_violation) : Json(nullptr);
  return out;
}

Json run_structure(const ProblemSpec& spec, const DriverOptions& options) {
  std::vector<ExponentPair> support;
  for (const auto& [e, _] : spec.terms) support.push_back(e);
  auto nf = normalize_symbolic(support, spec.freq(), spec.order, options.structure, options.inner);
  return structure_report_to_json(check_structure(nf));
}

}  // namespace bnf
