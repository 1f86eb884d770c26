// Acceptance suite: one PASS/FAIL line per criterion, every comparison exact.
// Exit status is the number of failed criteria.

#include "bnf/jsequence.hpp"
#include "bnf/lie.hpp"
#include "bnf/onedof.hpp"
#include "bnf/random.hpp"
#include "bnf/structure.hpp"
#include "bnf/treeforms.hpp"
#include "bnf/trees.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace bnf;
using G = GaussianRational;
using Q = Rational;
using Poly = PolySeries<G>;

/// Accumulates the first few mismatches of one criterion.
class Tally {
public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ << (failures_ > 1 ? "; " : "") << what;
  }
  [[nodiscard]] bool ok() const { return failures_ == 0 && checks_ > 0; }
  [[nodiscard]] std::string summary() const {
    std::ostringstream out;
    out << checks_ << " checks";
    if (failures_ > 0) out << ", " << failures_ << " failed: " << notes_.str();
    return out.str();
  }

private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::ostringstream notes_;
};

/// Every (H, lambda, order) normalized by criteria 1 to 3, replayed by criterion 8.
struct Normalization {
  Poly h;
  FreqVector lambda;
  int order;
  std::string label;
};
std::vector<Normalization> g_normalizations;

Poly quadratic_plus(const std::vector<G>& lambda, int order, const std::vector<std::pair<ExponentPair, Q>>& terms) {
  auto h = Poly::quadratic(order, lambda);
  for (const auto& [e, c] : terms) h.add_term(e, G(c));
  return h;
}

Poly random_hamiltonian(std::uint64_t seed, const std::vector<G>& lambda, int order, int max_deg) {
  SeriesRng rng(seed);
  Poly h = Poly::quadratic(order, lambda);
  Poly tail(static_cast<int>(lambda.size()), order);
  while (tail.is_zero()) tail = random_series<G>(rng, static_cast<int>(lambda.size()), order, 3, max_deg, 6);
  return h + tail;
}

/// Bernoulli numbers with B_1 = +1/2 from sum_{k<=m} C(m+1, k) B_k = m + 1.
std::vector<Q> bernoulli_plus(int count) {
  std::vector<Q> b;
  for (int m = 0; m < count; ++m) {
    Q acc(m + 1);
    Q binom(1);
    for (int k = 0; k < m; ++k) {
      acc -= binom * b[static_cast<std::size_t>(k)];
      binom = binom * Q(m + 1 - k) / Q(k + 1);
    }
    b.push_back(acc / binom);
  }
  return b;
}

bool criterion_three_way(std::string& detail) {
  Tally t;
  const int order = 8;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const std::vector<G> lam = {G(i % 2 == 0 ? 1 : 2)};
    FreqVector fv(lam);
    auto h = random_hamiltonian(1000 + i, lam, order, 5);
    auto lie = lie_normalize(h, fv, order).normal_form;
    auto trees = nf_via_trees(h, fv, order);
    auto onedof = nf_via_S(h, fv, order);
    const std::string label = "seed " + std::to_string(1000 + i);
    t.expect(lie == trees, label + " lie != trees");
    t.expect(lie == onedof, label + " lie != onedof");
    g_normalizations.push_back({h, fv, order, label});
  }
  detail = "50 Hamiltonians, lambda in {1, 2}, M = 8: " + t.summary();
  return t.ok();
}

bool criterion_lie_trees_multi(std::string& detail) {
  Tally t;
  const int order = 6;
  const std::vector<std::vector<G>> lams = {{G(1), G(Q(2, 7))}, {G(1), G(Q(-5, 9))},
                                            {G(1), G(Q(2, 7)), G(Q(-3, 11))}, {G(1), G(Q(5, 13)), G(Q(-7, 17))}};
  for (const auto& lam : lams)
    t.expect(nontrivial_resonances(FreqVector(lam), order).empty(), "lambda resonant below M");
  for (std::uint64_t i = 0; i < 30; ++i) {
    const auto& lam = lams[i % lams.size()];
    FreqVector fv(lam);
    auto h = random_hamiltonian(2000 + i, lam, order, order);
    auto lie = lie_normalize(h, fv, order).normal_form;
    t.expect(lie == nf_via_trees(h, fv, order), "seed " + std::to_string(2000 + i));
    g_normalizations.push_back({h, fv, order, "seed " + std::to_string(2000 + i)});
  }
  detail = "30 Hamiltonians, n in {2, 3}, M = 6: " + t.summary();
  return t.ok();
}

bool criterion_worked_values(std::string& detail) {
  Tally t;
  const ExponentPair xy({1}, {1}), x2y2({2}, {2});
  {
    auto h = quadratic_plus({G(1)}, 4, {{ExponentPair({2}, {1}), Q(1)}, {ExponentPair({1}, {2}), Q(1)}});
    FreqVector fv({G(1)});
    Poly expected(1, 4);
    expected.add_term(xy, G(1));
    expected.add_term(x2y2, G(-3));
    t.expect(lie_normalize(h, fv, 4).normal_form == expected, "lambda = 1: lie");
    t.expect(nf_via_trees(h, fv, 4) == expected, "lambda = 1: trees");
    t.expect(nf_via_S(h, fv, 4) == expected, "lambda = 1: onedof");
    g_normalizations.push_back({h, fv, 4, "x y + x^2 y + x y^2, lambda = 1"});
  }
  {
    auto h = quadratic_plus({G(2)}, 4, {{ExponentPair({2}, {1}), Q(1)}, {ExponentPair({1}, {2}), Q(1)}});
    FreqVector fv({G(2)});
    t.expect(lie_normalize(h, fv, 4).normal_form.coefficient(x2y2) == G(Q(-3, 2)), "lambda = 2: lie");
    t.expect(nf_via_trees(h, fv, 4).coefficient(x2y2) == G(Q(-3, 2)), "lambda = 2: trees");
    t.expect(nf_via_S(h, fv, 4).coefficient(x2y2) == G(Q(-3, 2)), "lambda = 2: onedof");
    t.expect(compute_S(h, fv, 4)[2] == G(Q(-3, 2)), "lambda = 2: S_2");
    g_normalizations.push_back({h, fv, 4, "x y + x^2 y + x y^2, lambda = 2"});
  }
  for (int order = 3; order <= 10; ++order) {
    auto h = quadratic_plus({G(1)}, order, {{ExponentPair({3}, {0}), Q(1)}});
    FreqVector fv({G(1)});
    auto quad = Poly::quadratic(order, {G(1)});
    const std::string label = "x y + x^3, M = " + std::to_string(order);
    t.expect(lie_normalize(h, fv, order).normal_form == quad, label + ": lie");
    t.expect(nf_via_trees(h, fv, order) == quad, label + ": trees");
    t.expect(nf_via_S(h, fv, order) == quad, label + ": onedof");
    t.expect(compute_S(h, fv, order).is_zero(), label + ": S");
    g_normalizations.push_back({h, fv, order, label});
  }
  detail = t.summary();
  return t.ok();
}

bool criterion_constants(std::string& detail) {
  Tally t;
  TreeCatalog catalog;
  const Fbt o = Fbt::leaf();
  t.expect(catalog.trees(2).size() == 1 && mu(catalog.trees(2)[0]) == Q(1, 2), "Lambda_2 coefficient");
  t.expect(mu(product(product(o, o), o)) == Q(1, 4), "Lambda_3 coefficient 1/4");
  t.expect(mu(product(o, product(o, o))) == Q(1, 12), "Lambda_3 coefficient 1/12");

  // The same coefficients from the recursive definition of Lambda_s.
  SeriesRng rng(3);
  FreqVector fv({G(1), G(Q(2, 7))});
  auto g1 = random_series<G>(rng, 2, 9, 3, 3, 4), g2 = random_series<G>(rng, 2, 9, 3, 3, 4),
       g3 = random_series<G>(rng, 2, 9, 4, 4, 4);
  auto b = [&](const Poly& p) { return op_B(p, fv); };
  std::vector<Poly> two = {g1, g2}, three = {g1, g2, g3};
  t.expect(lambda_s_recursive<G>(two, fv) == poisson(b(g1), g2).scaled(G(Q(1, 2))), "Lambda_2 form");
  t.expect(lambda_s_recursive<G>(three, fv) == poisson(b(poisson(b(g1), g2)), g3).scaled(G(Q(1, 4))) +
                                                  poisson(b(g1), poisson(b(g2), g3)).scaled(G(Q(1, 12))),
           "Lambda_3 form");

  auto j = j_sequence(13);
  const std::vector<Q> first = {Q(1), Q(1, 2), Q(1, 12), Q(0), Q(-1, 720)};
  for (int k = 1; k <= 5; ++k) t.expect(j(k) == first[static_cast<std::size_t>(k - 1)], "J_" + std::to_string(k));

  auto sample = product(product(o, product(o, o)), o);
  t.expect(to_code(sample).str() == "\\1,1,3,2\\", "code of ((o (o o)) o)");
  t.expect(catalog.trees(4).size() == 5, "|T_4|");
  for (int s = 1; s <= 10; ++s) t.expect(mu_sum(s) == Q(1, s), "sum mu, s = " + std::to_string(s));

  auto bern = bernoulli_plus(13);
  for (int k = 0; k <= 12; ++k)
    t.expect(j(k + 1) == bern[static_cast<std::size_t>(k)] / factorial(static_cast<unsigned>(k)),
             "J_" + std::to_string(k + 1) + " vs Bernoulli");
  detail = t.summary();
  return t.ok();
}

bool criterion_identities(std::string& detail) {
  Tally t;
  SeriesRng rng(5);
  const std::vector<FreqVector> lams = {FreqVector({G(1)}), FreqVector({G(1), G(-1)}),
                                        FreqVector({G(1), G(Q(2, 7)), G(Q(-3, 11))}),
                                        FreqVector({G::i(), G(Q(1), Q(1))})};
  for (int i = 0; i < 200; ++i) {
    const auto& fv = lams[static_cast<std::size_t>(i) % lams.size()];
    auto f = random_series<G>(rng, fv.n(), 6, 0, 6, 8);
    auto af = op_A(f, fv), bf = op_B(f, fv), df = op_D(f, fv);
    t.expect(op_A(df, fv).is_zero() && op_D(af, fv).is_zero(), "AD = DA = 0");
    t.expect(op_A(bf, fv).is_zero() && op_B(af, fv).is_zero(), "AB = BA = 0");
    t.expect(op_D(bf, fv) == f - af && op_B(df, fv) == f - af, "DB = BD = I - A");
    t.expect(op_A(af, fv) == af, "A^2 = A");
    t.expect(af + op_D(bf, fv) == f, "F = AF + D(BF)");
  }
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + i % 2;
    const int order = n == 1 ? 8 : 6;
    // Degrees >= 2 so truncation commutes with both sides.
    auto f = random_series<G>(rng, n, order, 2, 5, 4), g = random_series<G>(rng, n, order, 2, 5, 4),
         h = random_series<G>(rng, n, order, 2, 5, 4);
    t.expect((poisson(f, poisson(g, h)) + poisson(g, poisson(h, f)) + poisson(h, poisson(f, g))).is_zero(),
             "Jacobi");
    t.expect(poisson(f, g * h) == poisson(f, g) * h + g * poisson(f, h), "Leibniz");
  }
  TreeCatalog catalog;
  FreqVector fv2({G(1), G(Q(2, 7))});
  for (int i = 0; i < 200; ++i) {
    const int s1 = 1 + i % 3, s2 = 1 + (i / 3) % 3;
    const auto& ls = catalog.trees(s1);
    const auto& rs = catalog.trees(s2);
    auto t1 = ls[static_cast<std::size_t>(i) % ls.size()];
    auto t2 = rs[static_cast<std::size_t>(i / 7) % rs.size()];
    std::vector<Poly> args;
    for (int k = 0; k < s1 + s2; ++k) args.push_back(random_series<G>(rng, 2, 8, 3, 3, 4));
    std::span<const Poly> all(args);
    auto lhs = poisson(op_B(q_apply<G>(t1, all.subspan(0, static_cast<std::size_t>(s1)), fv2), fv2),
                       q_apply<G>(t2, all.subspan(static_cast<std::size_t>(s1)), fv2));
    t.expect(lhs == q_apply<G>(product(t1, t2), all, fv2), "homomorphism");
  }
  const std::vector<G> one_dof = {G(1), G(2), G(Q(-1, 3)), G::i()};
  for (int i = 0; i < 200; ++i) {
    const G lam = one_dof[static_cast<std::size_t>(i) % one_dof.size()];
    FreqVector fv({lam});
    auto g1 = random_series<G>(rng, 1, 12, 3, 5, 5), g2 = random_series<G>(rng, 1, 12, 3, 5, 5);
    auto lhs = average(poisson(op_B(g1, fv), g2));
    auto inner = average(g1 * g2) - average(g1) * average(g2);
    auto rhs = inner.derivative().scaled(-(G(1) / lam));
    bool same = true;
    for (int k = 0; k <= 5; ++k) same = same && lhs.coefficient(k) == rhs.coefficient(k);
    t.expect(same, "bracket-average lemma");
  }
  detail = "200 instances per identity family: " + t.summary();
  return t.ok();
}

bool criterion_s_invariance(std::string& detail) {
  Tally t;
  for (std::uint64_t i = 0; i < 30; ++i) {
    const std::vector<G> lam = {G(i % 3 == 0 ? Q(1) : i % 3 == 1 ? Q(2) : Q(-2, 3))};
    FreqVector fv(lam);
    auto h = random_hamiltonian(3000 + i, lam, 8, 8);
    auto moved = random_symplectic_conjugate(h, 4000 + i);
    t.expect(moved != h, "conjugation was trivial");
    t.expect(compute_S(h, fv, 8) == compute_S(moved, fv, 8), "pair " + std::to_string(i));
  }
  detail = "30 pairs, n = 1, M = 8: " + t.summary();
  return t.ok();
}

std::vector<ExponentPair> all_pairs(int n, int min_deg, int max_deg) {
  std::vector<ExponentPair> out;
  std::vector<int> ex(static_cast<std::size_t>(2 * n), 0);
  std::function<void(int, int)> rec = [&](int idx, int remaining) {
    if (idx == 2 * n - 1) {
      ex[static_cast<std::size_t>(idx)] = remaining;
      out.emplace_back(std::vector<int>(ex.begin(), ex.begin() + n), std::vector<int>(ex.begin() + n, ex.end()));
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      ex[static_cast<std::size_t>(idx)] = v;
      rec(idx + 1, remaining - v);
    }
  };
  for (int d = min_deg; d <= max_deg; ++d) rec(0, d);
  return out;
}

bool criterion_structure(std::string& detail) {
  Tally t;
  std::mt19937_64 gen(6);
  std::size_t monomials = 0;
  const std::vector<FreqVector> lams = {FreqVector({G(1)}), FreqVector({G(2)}), FreqVector({G(1), G(-1)}),
                                        FreqVector({G(1), G(Q(2, 7))})};
  for (int i = 0; i < 24; ++i) {
    const auto& fv = lams[static_cast<std::size_t>(i) % lams.size()];
    const int order = 4 + i % 3;
    auto pool = all_pairs(fv.n(), 3, order);
    std::shuffle(pool.begin(), pool.end(), gen);
    const std::size_t size = fv.n() == 1 ? 10 : (order == 6 ? 6 : 9);
    pool.resize(std::min(pool.size(), size));
    auto report = check_structure(normalize_symbolic(pool, fv, order, StructureLimits{6, 16}));
    monomials += report.monomials_checked;
    t.expect(report.pass(), report.first_violation.value_or("violation"));
  }
  // Full supports: every coefficient of H_* is an indeterminate.
  for (const auto& [fv, order] : {std::pair{FreqVector({G(1)}), 6}, std::pair{FreqVector({G(1), G(-1)}), 4},
                                  std::pair{FreqVector({G(1), G(Q(2, 7))}), 6}}) {
    auto pool = all_pairs(fv.n(), 3, order);
    auto report = check_structure(
        normalize_symbolic(pool, fv, order, StructureLimits{6, static_cast<int>(pool.size())}));
    monomials += report.monomials_checked;
    t.expect(report.pass(), report.first_violation.value_or("violation"));
  }
  t.expect(monomials > 0, "no monomials produced");
  detail = "24 random and 3 full supports, n in {1, 2}, M <= 6, " + std::to_string(monomials) + " monomials: " + t.summary();
  return t.ok();
}

bool criterion_closure(std::string& detail) {
  Tally t;
  for (const auto& nz : g_normalizations) {
    auto r = lie_normalize(nz.h, nz.lambda, nz.order);
    t.expect(exp_lie(r.generator, nz.h, nz.order) == r.normal_form, nz.label);
  }
  detail = std::to_string(g_normalizations.size()) + " normalizations: " + t.summary();
  return t.ok();
}

bool criterion_codec(std::string& detail) {
  Tally t;
  TreeCatalog catalog;
  // |T_s| is the Catalan number C_{s-1}: 4862 trees at s = 10, 16796 at s = 11.
  t.expect(catalog.trees(10).size() == 4862, "|T_10|");
  t.expect(catalog.trees(11).size() == 16796, "|T_11|");
  std::size_t total = 0;
  for (int s = 1; s <= 11; ++s) {
    std::set<std::vector<int>> seen;
    for (const auto& tree : catalog.trees(s)) {
      auto code = to_code(tree);
      ++total;
      t.expect(code.valid(), "invalid code " + code.str());
      t.expect(from_code(code) == tree, "round trip " + tree.str());
      seen.insert(code.k);
    }
    t.expect(seen.size() == catalog.trees(s).size(), "codes not distinct at s = " + std::to_string(s));
  }
  detail = "exhaustive for s <= 11, " + std::to_string(total) + " trees: " + t.summary();
  return t.ok();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool(std::string&)>>> criteria = {
      {"three-way agreement (n = 1)", criterion_three_way},
      {"lie = trees (n = 2, 3)", criterion_lie_trees_multi},
      {"worked values", criterion_worked_values},
      {"constants", criterion_constants},
      {"identity suite", criterion_identities},
      {"S invariance", criterion_s_invariance},
      {"structure constraints", criterion_structure},
      {"exp_lie closure", criterion_closure},
      {"tree codec", criterion_codec},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].second(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failed;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first << "): " << detail
              << "\n";
  }
  return failed;
}
