#pragma once

// Normal forms from full binary trees.
//
// Q[t](G_1..G_s) puts G_i on the leaves of t and reads every internal node
// (L R) as {B L, R}. The s-linear forms
//
//   Lambda_s = sum_{t in T_s} mu_t Q[t]
//
// solve the recursion
//
//   Lambda_1 = I,
//   Lambda_s =   sum_{k>=1} 1/k! sum_{s_1+..+s_k = s-1} {B Lambda_s1, {... {B Lambda_sk, I}}}
//              - sum_{k>=2} 1/k! sum_{s_1+..+s_k = s}   {B Lambda_s1, {... {B Lambda_s(k-1), Lambda_sk}}}
//
// with arguments handed out left to right, i.e. Phi = beta(ad_F) H_* with
// beta(x) = x / (1 - e^{-x}) and F = B Phi. That is the Phi recursion with
// the inner slot holding Phi_j (InnerTerm::kFullPhi).
//
// With the inner slot holding (I - A) Phi_j the fixed point is
//
//   Phi = beta(ad_F) H_* + (1 - beta(-ad_F)) A Phi,
//
// whose expansion runs over marked trees: full binary trees in which some
// right children are marked, a marked vertex standing for A applied to its
// subtree. Every vertex lies on one maximal right chain (spine) that starts at
// the root, a left child or a marked vertex. A spine with k edges ending at an
// unmarked leaf weighs beta_k = J_{k+1}; one ending at a marked vertex weighs
// gamma_k = (-1)^{k+1} beta_k. The weight of a marked tree is the product over
// its spines; without marks it is mu_t.
#include "bnf/jsequence.hpp"
#include "bnf/lie.hpp"
#include "bnf/trees.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

namespace bnf {

/// Calls fn(parts) for every ordered tuple of `count` integers in
/// [min_part, max_part] summing to `total`.
inline void for_each_composition(int total, int count, int min_part, int max_part,
                                 const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> parts(static_cast<std::size_t>(count));
  std::function<void(int, int)> rec = [&](int idx, int remaining) {
    if (idx == count - 1) {
      if (remaining >= min_part && remaining <= max_part) {
        parts[static_cast<std::size_t>(idx)] = remaining;
        fn(parts);
      }
      return;
    }
    int rest_min = min_part * (count - idx - 1);
    for (int v = min_part; v <= max_part && remaining - v >= rest_min; ++v) {
      parts[static_cast<std::size_t>(idx)] = v;
      rec(idx + 1, remaining - v);
    }
  };
  if (count >= 1) rec(0, total);
}

/// The nested-bracket form read off t, applied to args (one per leaf).
template <CoefficientRing K>
PolySeries<K> q_apply(const Fbt& t, std::span<const PolySeries<K>> args, const FreqVector& lambda) {
  if (static_cast<int>(args.size()) != t.leaves())
    throw UsageError("tree with " + std::to_string(t.leaves()) + " leaves applied to " +
                     std::to_string(args.size()) + " arguments");
  if (t.is_leaf()) return args[0];
  const auto split = static_cast<std::size_t>(t.left().leaves());
  auto left = q_apply(t.left(), args.subspan(0, split), lambda);
  auto right = q_apply(t.right(), args.subspan(split), lambda);
  return poisson(op_B(left, lambda), right);
}

namespace detail {

template <CoefficientRing K>
void require_form_arguments(std::span<const PolySeries<K>> args) {
  if (args.empty()) throw UsageError("Lambda_s needs at least one argument");
  for (std::size_t i = 0; i < args.size(); ++i) {
    const auto& g = args[i];
    if (!g.is_homogeneous()) throw UsageError("argument " + std::to_string(i + 1) + " is not homogeneous");
    if (!g.is_zero() && g.min_degree() < 3)
      throw UsageError("argument " + std::to_string(i + 1) + " has degree < 3");
  }
}

}  // namespace detail

/// Lambda_s(args) = sum_t mu_t Q[t](args), s = args.size().
template <CoefficientRing K>
PolySeries<K> lambda_s_tree(std::span<const PolySeries<K>> args, const FreqVector& lambda,
                            TreeCatalog& catalog) {
  detail::require_form_arguments(args);
  PolySeries<K> total(args[0].n(), args[0].order());
  for (const auto& t : catalog.trees(static_cast<int>(args.size()))) {
    auto value = q_apply(t, args, lambda);
    if (!value.is_zero()) total += value.scaled(field_const<K>(mu(t)));
  }
  return total;
}

/// Lambda_s(args) from the recursion over s.
template <CoefficientRing K>
PolySeries<K> lambda_s_recursive(std::span<const PolySeries<K>> args, const FreqVector& lambda) {
  detail::require_form_arguments(args);
  const int s_total = static_cast<int>(args.size());
  const PolySeries<K> zero(args[0].n(), args[0].order());
  std::map<std::pair<int, int>, PolySeries<K>> memo;  // [begin, end) -> Lambda

  std::function<const PolySeries<K>&(int, int)> form = [&](int begin, int end) -> const PolySeries<K>& {
    auto key = std::make_pair(begin, end);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int s = end - begin;
    PolySeries<K> value = zero;
    if (s == 1) {
      value = args[static_cast<std::size_t>(begin)];
    } else {
      // Blocks of sizes `parts` cover [begin, begin + sum(parts)); innermost
      // is either the single argument (identity slot) or the last block's form.
      auto nest = [&](const std::vector<int>& blocks, int inner_begin, bool identity_inner) {
        PolySeries<K> acc = identity_inner ? args[static_cast<std::size_t>(inner_begin)]
                                           : form(inner_begin, end);
        std::vector<int> starts(blocks.size());
        int pos = begin;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
          starts[b] = pos;
          pos += blocks[b];
        }
        for (std::size_t b = blocks.size(); b-- > 0;)
          acc = poisson(op_B(form(starts[b], starts[b] + blocks[b]), lambda), acc);
        return acc;
      };
      Rational fact(1);
      for (int k = 1; k <= s - 1; ++k) {
        fact *= Rational(k);
        for_each_composition(s - 1, k, 1, s - 1, [&](const std::vector<int>& parts) {
          value += nest(parts, end - 1, true).divided(field_const<K>(fact));
        });
      }
      fact = Rational(1);
      for (int k = 2; k <= s; ++k) {
        fact *= Rational(k);
        for_each_composition(s, k, 1, s, [&](const std::vector<int>& parts) {
          std::vector<int> outer(parts.begin(), parts.end() - 1);
          value -= nest(outer, end - parts.back(), false).divided(field_const<K>(fact));
        });
      }
    }
    return memo.emplace(key, std::move(value)).first->second;
  };
  return form(0, s_total);
}

/// A full binary tree with some right children marked.
class MarkedTree {
public:
  static MarkedTree leaf(bool marked = false);
  /// Throws std::invalid_argument when `left` is marked.
  static MarkedTree product(const MarkedTree& left, const MarkedTree& right, bool marked = false);

  [[nodiscard]] bool is_leaf() const { return node_->left == nullptr; }
  [[nodiscard]] bool marked() const { return node_->marked; }
  [[nodiscard]] int leaves() const { return node_->leaves; }
  [[nodiscard]] int marks() const { return node_->marks; }
  [[nodiscard]] MarkedTree left() const;
  [[nodiscard]] MarkedTree right() const;
  /// The underlying tree with marks forgotten.
  [[nodiscard]] Fbt shape() const;
  /// "o", "(L R)"; a marked vertex is written "[o]" or "[L R]".
  [[nodiscard]] std::string str() const;
  [[nodiscard]] const void* id() const { return node_.get(); }

private:
  struct Node {
    std::shared_ptr<const Node> left, right;
    bool marked;
    int leaves;
    int marks;
  };
  explicit MarkedTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Product of the spine weights; equals mu(shape()) when nothing is marked.
Rational marked_weight(const MarkedTree& t);

/// Marked trees with an unmarked root, built with shared subtrees. With
/// `allow_marks` false this is T_s in TreeCatalog order.
class MarkedTreeCatalog {
public:
  explicit MarkedTreeCatalog(bool allow_marks = true, int max_leaves = kDefaultMaxLeaves)
      : allow_marks_(allow_marks), max_leaves_(max_leaves) {}
  const std::vector<MarkedTree>& trees(int s);
  [[nodiscard]] bool allow_marks() const { return allow_marks_; }

private:
  bool allow_marks_;
  int max_leaves_;
  std::vector<std::vector<MarkedTree>> plain_;   // unmarked root, by leaf count
  std::vector<std::vector<MarkedTree>> marked_;  // marked root
};

/// One marked tree's share of N_m: weight * A Q[t] summed over degree
/// compositions.
template <CoefficientRing K>
struct TreeContribution {
  int degree;
  std::string tree;  // marked rendering
  BackslashCode code;  // of the shape
  Rational mu;         // mu of the shape
  Rational weight;
  PolySeries<K> resonant;
};

/// H_2 + sum_m N_m assembled from tree forms,
///
///   N_m = sum_{s=1}^{m-2} sum_{j_1+...+j_s = m-2+2s, j_i >= 3} sum_t w_t A Q[t](H_j1, ..., H_js),
///
/// over marked trees (InnerTerm::kNonresonantPart, agreeing with
/// lie_normalize) or plain trees with w_t = mu_t (InnerTerm::kFullPhi).
/// When `breakdown` is given it receives every nonzero per-(degree, tree)
/// contribution.
template <CoefficientRing K>
PolySeries<K> nf_via_trees(const PolySeries<K>& hamiltonian, const FreqVector& lambda, int order,
                           std::type_identity_t<std::vector<TreeContribution<K>>>* breakdown = nullptr,
                           int max_leaves = kDefaultMaxLeaves, InnerTerm inner = InnerTerm::kNonresonantPart) {
  const PolySeries<K> h = prepare_hamiltonian(hamiltonian, lambda, order);
  const int n = h.n();
  const PolySeries<K> zero(n, order);
  std::vector<PolySeries<K>> grades(static_cast<std::size_t>(order + 1), zero);
  for (int d = 3; d <= order; ++d) grades[static_cast<std::size_t>(d)] = h.homogeneous_part(d);

  MarkedTreeCatalog catalog(inner == InnerTerm::kNonresonantPart, max_leaves);
  std::map<std::pair<const void*, std::vector<int>>, PolySeries<K>> memo;
  std::function<const PolySeries<K>&(const MarkedTree&, std::span<const int>)> q =
      [&](const MarkedTree& t, std::span<const int> degs) -> const PolySeries<K>& {
    if (t.is_leaf() && !t.marked()) return grades[static_cast<std::size_t>(degs[0])];
    auto key = std::make_pair(t.id(), std::vector<int>(degs.begin(), degs.end()));
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    PolySeries<K> value = zero;
    if (t.is_leaf()) {
      value = op_A(grades[static_cast<std::size_t>(degs[0])], lambda);
    } else {
      const auto split = static_cast<std::size_t>(t.left().leaves());
      const auto& left = q(t.left(), degs.subspan(0, split));
      const auto& right = q(t.right(), degs.subspan(split));
      if (!left.is_zero() && !right.is_zero()) value = poisson(op_B(left, lambda), right);
      if (t.marked()) value = op_A(value, lambda);
    }
    return memo.emplace(std::move(key), std::move(value)).first->second;
  };

  PolySeries<K> normal = PolySeries<K>::quadratic(order, lambda.values());
  for (int m = 3; m <= order; ++m) {
    for (int s = 1; s <= m - 2; ++s) {
      const auto& trees = catalog.trees(s);
      std::vector<Rational> weights;
      weights.reserve(trees.size());
      for (const auto& t : trees) weights.push_back(marked_weight(t));
      std::vector<PolySeries<K>> per_tree(trees.size(), zero);
      for_each_composition(m - 2 + 2 * s, s, 3, order, [&](const std::vector<int>& degs) {
        for (int d : degs)
          if (grades[static_cast<std::size_t>(d)].is_zero()) return;
        for (std::size_t i = 0; i < trees.size(); ++i) {
          if (weights[i].is_zero()) continue;
          const auto& v = q(trees[i], degs);
          if (!v.is_zero()) per_tree[i] += op_A(v, lambda);
        }
      });
      for (std::size_t i = 0; i < trees.size(); ++i) {
        if (per_tree[i].is_zero()) continue;
        auto contribution = per_tree[i].scaled(field_const<K>(weights[i]));
        normal += contribution;
        if (breakdown) {
          auto shape = trees[i].shape();
          breakdown->push_back(
              {m, trees[i].str(), to_code(shape), mu(shape), weights[i], std::move(contribution)});
        }
      }
    }
  }
  return normal;
}

}  // namespace bnf
