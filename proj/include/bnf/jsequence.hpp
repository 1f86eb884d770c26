#pragma once

// Tree weights.
//
// J_1 = 1, J_k = 1/(k-1)! - sum_{i<k} J_i / (k+1-i)!, whose generating
// function is x^2 / (1 - e^{-x}); hence J_{k+1} = B_k / k! with the Bernoulli
// convention x / (1 - e^{-x}) = sum B_m x^m / m! (so B_1 = +1/2).
//
// mu_t = prod_j J_{k_j} over the backslash code of t.

#include "bnf/rational.hpp"
#include "bnf/trees.hpp"

#include <vector>

namespace bnf {

class JSequence {
public:
  /// J_1..J_count from the recursion.
  explicit JSequence(int count);

  [[nodiscard]] int size() const { return static_cast<int>(values_.size()); }
  /// J_k, 1-based. Throws std::out_of_range past size().
  [[nodiscard]] const Rational& operator()(int k) const { return values_.at(static_cast<std::size_t>(k - 1)); }

private:
  std::vector<Rational> values_;
};

JSequence j_sequence(int count);

/// mu_t from the backslash code.
Rational mu(const Fbt& t);
/// mu_t from the basic right factorization t = t_k ... t_1:
/// mu_t = J_k prod_j mu_{t_j}, with mu_tau = 1.
Rational mu_via_factorization(const Fbt& t);
/// sum of mu_t over every tree with s leaves.
Rational mu_sum(int s, int max_leaves = kDefaultMaxLeaves);

}  // namespace bnf
