#include "support.hpp"

namespace bnf {
namespace {

using test::hamiltonian;
using test::series;

using Q = Rational;

TEST(Lie, WorkedValueUnitLambda) {
  auto h = hamiltonian({1}, 4, {{{2}, {1}, 1}, {{1}, {2}, 1}});
  auto r = lie_normalize(h, FreqVector({1}), 4);
  EXPECT_EQ(r.normal_form, series(1, 4, {{{1}, {1}, 1}, {{2}, {2}, -3}}));
  EXPECT_EQ(r.normal_form.str(), "x1 y1 - 3 x1^2 y1^2");
}

TEST(Lie, WorkedValueLambdaTwo) {
  auto h = hamiltonian({2}, 4, {{{2}, {1}, 1}, {{1}, {2}, 1}});
  auto r = lie_normalize(h, FreqVector({2}), 4);
  EXPECT_EQ(r.normal_form.coefficient(ExponentPair({2}, {2})), Q(-3, 2));
}

TEST(Lie, ShearOracleForCubic) {
  // x y + x^3 = X Y with X = x, Y = y + x^2, the time-one map of F = x^3/3.
  for (int order : {3, 6, 10}) {
    auto h = hamiltonian({1}, order, {{{3}, {0}, 1}});
    auto r = lie_normalize(h, FreqVector({1}), order);
    EXPECT_EQ(r.normal_form, PolySeries<Q>::quadratic(order, {1}));
    EXPECT_EQ(r.generator.homogeneous_part(3), series(1, order, {{{3}, {0}, Q(1, 3)}}));
  }
  auto h = hamiltonian({1}, 10, {{{3}, {0}, 1}});
  EXPECT_EQ(exp_lie(series(1, 10, {{{3}, {0}, Q(1, 3)}}), h, 10), PolySeries<Q>::quadratic(10, {1}));
}

TEST(Lie, ResonantInputIsEchoed) {
  auto h = hamiltonian({1, -1}, 6, {{{1, 1}, {0, 0}, 2}, {{2, 0}, {2, 0}, -1}, {{1, 1}, {1, 1}, Q(1, 2)}});
  // h carries an extra quadratic term, so its quadratic part is not H_2.
  auto hh = hamiltonian({1, -1}, 6, {{{2, 0}, {2, 0}, -1}, {{1, 1}, {1, 1}, Q(1, 2)}, {{2, 1}, {1, 0}, 3}});
  auto r = lie_normalize(hh, FreqVector({1, -1}), 6);
  EXPECT_EQ(r.normal_form, hh);
  EXPECT_TRUE(r.generator.is_zero());
  EXPECT_THROW(lie_normalize(h, FreqVector({1, -1}), 6), UsageError);
}

TEST(Lie, ClosureOnRandomHamiltonians) {
  const std::vector<std::vector<GaussianRational>> lams = {
      {1}, {2}, {Q(-1, 2)}, {1, -1}, {1, 2}, {1, Q(1, 3)}, {1, Q(2, 5), Q(-3, 7)}};
  for (std::uint64_t seed = 0; seed < 28; ++seed) {
    const auto& lam = lams[seed % lams.size()];
    const int order = lam.size() == 1 ? 8 : 6;
    auto h = test::random_hamiltonian<GaussianRational>(seed, lam, order, order);
    FreqVector fv(lam);
    auto r = lie_normalize(h, fv, order);
    EXPECT_EQ(exp_lie(r.generator, h, order), r.normal_form) << "seed " << seed;
    EXPECT_EQ(op_A(r.normal_form, fv), r.normal_form);
    EXPECT_TRUE(op_A(r.generator, fv).is_zero());
  }
}

TEST(Lie, NonresonantNormalFormIsConjugationInvariant) {
  const std::vector<GaussianRational> lam = {1, Q(2, 7)};
  FreqVector fv(lam);
  for (std::uint64_t seed = 100; seed < 110; ++seed) {
    auto h = test::random_hamiltonian<GaussianRational>(seed, lam, 6, 6);
    auto moved = random_symplectic_conjugate(h, seed * 7 + 1);
    EXPECT_EQ(lie_normalize(h, fv, 6).normal_form, lie_normalize(moved, fv, 6).normal_form);
  }
}

TEST(Lie, LiteralRecursionBreaksClosure) {
  auto h = hamiltonian({1}, 6, {{{2}, {1}, 1}, {{1}, {2}, 1}});
  FreqVector fv({1});
  auto literal = lie_normalize(h, fv, 6, InnerTerm::kFullPhi);
  auto closed = lie_normalize(h, fv, 6);
  EXPECT_EQ(literal.normal_form.coefficient(ExponentPair({3}, {3})), Q(-4));
  EXPECT_EQ(closed.normal_form.coefficient(ExponentPair({3}, {3})), Q(-12));
  EXPECT_NE(exp_lie(literal.generator, h, 6), literal.normal_form);
  EXPECT_EQ(exp_lie(closed.generator, h, 6), closed.normal_form);
  // The two agree through degree 5: the first N_j that feeds back is N_4.
  EXPECT_EQ(literal.normal_form.degree_range(0, 5), closed.normal_form.degree_range(0, 5));
}

TEST(Lie, PhiThreeIsCubicPart) {
  auto h = hamiltonian({1}, 5, {{{3}, {0}, 2}, {{2}, {1}, 1}, {{4}, {0}, 1}});
  auto phi = phi_recursion(h, FreqVector({1}), 5);
  EXPECT_EQ(phi[3], h.homogeneous_part(3));
  // Phi_4 = H_4 + {F_3, H_3} - 1/2 {F_3, (I - A) H_3}, here A H_3 = 0.
  auto f3 = op_B(h.homogeneous_part(3), FreqVector({1}));
  EXPECT_EQ(phi[4], h.homogeneous_part(4) + poisson(f3, h.homogeneous_part(3)).scaled(Q(1, 2)));
}

TEST(Lie, InputValidation) {
  FreqVector fv({1});
  auto ok = hamiltonian({1}, 5, {{{3}, {0}, 1}});
  EXPECT_THROW(lie_normalize(ok, FreqVector({2}), 5), UsageError);
  EXPECT_THROW(lie_normalize(ok, fv, 2), UsageError);
  EXPECT_THROW(lie_normalize(ok, fv, 6), UsageError);
  EXPECT_THROW(lie_normalize(ok, FreqVector({1, 1}), 5), UsageError);
  auto linear = ok + series(1, 5, {{{1}, {0}, 1}});
  EXPECT_THROW(lie_normalize(linear, fv, 5), UsageError);
  EXPECT_THROW(exp_lie(series(1, 5, {{{1}, {1}, 1}}), ok, 5), UsageError);
}

TEST(Lie, ExpLieSeriesTerms) {
  auto f = series(1, 6, {{{3}, {0}, 1}});
  auto y = series(1, 6, {{{0}, {1}, 1}});
  // {x^3, y} = -3x^2, {x^3, x^2} = 0: y -> y - 3 x^2.
  EXPECT_EQ(exp_lie(f, y, 6), series(1, 6, {{{0}, {1}, 1}, {{2}, {0}, -3}}));
}

}  // namespace
}  // namespace bnf
