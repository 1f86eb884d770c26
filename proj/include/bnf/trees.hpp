#pragma once

// Full binary trees with ordered leaves.
//
// A tree is either the single leaf (tau) or the product t1 t2, the tree
// whose root has left subtree t1 and right subtree t2. Products are neither
// associative nor commutative; unparenthesized chains associate to the
// right, t4 t3 t2 t1 = t4 (t3 (t2 t1)).
//
// Drawing left edges as '/' and right edges as '\', every vertex lies on
// exactly one maximal backslash line, and each line ends at a leaf. The
// backslash code (k_1, ..., k_s) lists the number of vertices on the line
// ending at leaf j.

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace bnf {

class Fbt {
public:
  /// The single-leaf tree tau.
  Fbt();

  static Fbt leaf() { return Fbt(); }
  /// Root joining t1 (left) and t2 (right).
  static Fbt product(const Fbt& left, const Fbt& right);

  [[nodiscard]] bool is_leaf() const { return node_->left == nullptr; }
  [[nodiscard]] int leaves() const { return node_->leaves; }
  [[nodiscard]] int vertices() const { return 2 * node_->leaves - 1; }
  /// Children of an internal node; throws std::logic_error on a leaf.
  [[nodiscard]] Fbt left() const;
  [[nodiscard]] Fbt right() const;

  /// Number of vertices on the right spine (root down to the last leaf).
  [[nodiscard]] int right_spine() const;

  /// Canonical parenthesization: "o" for a leaf, "(L R)" for a product.
  [[nodiscard]] std::string str() const;

  /// Identity of the shared node, stable while any copy is alive.
  [[nodiscard]] const void* id() const { return node_.get(); }

  friend bool operator==(const Fbt& a, const Fbt& b);

private:
  struct Node {
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    int leaves = 1;
  };
  explicit Fbt(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static bool equal(const Node* a, const Node* b);

  std::shared_ptr<const Node> node_;
};

inline Fbt product(const Fbt& left, const Fbt& right) { return Fbt::product(left, right); }

/// Right-nested product t_k (t_{k-1} (... (t_2 t_1))) of factors given as (t_k, ..., t_1).
Fbt right_product(const std::vector<Fbt>& factors);

class TreeLimitError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kDefaultMaxLeaves = 16;

/// All trees with a given leaf count, built once per leaf count and shared.
/// Order: by left-subtree leaf count, then the left subtree's position, then
/// the right subtree's position. Subtrees are shared between entries, so
/// Fbt::id() of a subtree is the same wherever it occurs.
class TreeCatalog {
public:
  explicit TreeCatalog(int max_leaves = kDefaultMaxLeaves) : max_leaves_(max_leaves) {}
  /// Throws TreeLimitError when s < 1 or s exceeds the configured bound.
  const std::vector<Fbt>& trees(int s);
  [[nodiscard]] int max_leaves() const { return max_leaves_; }

private:
  int max_leaves_;
  std::vector<std::vector<Fbt>> by_size_;
};

/// All trees with s leaves (count = Catalan number C_{s-1}).
std::vector<Fbt> enumerate_trees(int s, int max_leaves = kDefaultMaxLeaves);

/// The unique factorization t = t_k ... t_1 with t_1 = tau, returned as
/// (t_k, ..., t_1).
std::vector<Fbt> basic_right_factorization(const Fbt& t);

class CodeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Backslash code; s = size(). Valid codes: k_j >= 1 for j < s, k_s >= 2
/// when s >= 2, k_1+...+k_j <= 2j-1 for j < s, total 2s-1. The one-leaf
/// tree has code (1).
struct BackslashCode {
  std::vector<int> k;

  [[nodiscard]] int size() const { return static_cast<int>(k.size()); }
  /// Text form "\1,1,3,2\".
  [[nodiscard]] std::string str() const;
  /// Throws CodeError naming the first violated condition.
  void validate() const;
  [[nodiscard]] bool valid() const;

  friend bool operator==(const BackslashCode&, const BackslashCode&) = default;
};

BackslashCode to_code(const Fbt& t);
/// Inverse of to_code; rebuilds the tree by peeling one leaf at a time.
Fbt from_code(const BackslashCode& code);

/// Compares to_code(t) with the concatenation of the factors' codes followed
/// by the number of factors.
bool code_concatenation_check(const Fbt& t);

}  // namespace bnf
