#include "bnf/jsequence.hpp"

#include <stdexcept>

namespace bnf {

JSequence::JSequence(int count) {
  if (count < 1) throw std::invalid_argument("J sequence length must be positive");
  values_.reserve(static_cast<std::size_t>(count));
  values_.emplace_back(1);
  for (int k = 2; k <= count; ++k) {
    Rational v = Rational(1) / factorial(static_cast<unsigned>(k - 1));
    for (int i = 1; i < k; ++i) v -= values_[static_cast<std::size_t>(i - 1)] / factorial(static_cast<unsigned>(k + 1 - i));
    values_.push_back(std::move(v));
  }
}

JSequence j_sequence(int count) { return JSequence(count); }

namespace {

const JSequence& weights_for(int max_index) {
  static const JSequence kTable(64);
  if (max_index > kTable.size()) throw std::out_of_range("tree too large for the J table");
  return kTable;
}

}  // namespace

Rational mu(const Fbt& t) {
  auto code = to_code(t);
  const auto& j = weights_for(t.leaves() * 2);
  Rational r(1);
  for (int k : code.k) r *= j(k);
  return r;
}

Rational mu_via_factorization(const Fbt& t) {
  if (t.is_leaf()) return Rational(1);
  auto factors = basic_right_factorization(t);
  const auto& j = weights_for(static_cast<int>(factors.size()));
  Rational r = j(static_cast<int>(factors.size()));
  for (const auto& f : factors) r *= mu_via_factorization(f);
  return r;
}

Rational mu_sum(int s, int max_leaves) {
  TreeCatalog catalog(max_leaves);
  Rational total;
  for (const auto& t : catalog.trees(s)) total += mu(t);
  return total;
}

}  // namespace bnf
