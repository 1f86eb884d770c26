#include "bnf/trees.hpp"

#include <functional>

namespace bnf {

Fbt::Fbt() {
  static const auto kLeaf = std::make_shared<const Node>();
  node_ = kLeaf;
}

Fbt Fbt::product(const Fbt& left, const Fbt& right) {
  auto node = std::make_shared<Node>();
  node->left = left.node_;
  node->right = right.node_;
  node->leaves = left.node_->leaves + right.node_->leaves;
  return Fbt(std::move(node));
}

Fbt Fbt::left() const {
  if (is_leaf()) throw std::logic_error("leaf has no children");
  return Fbt(node_->left);
}

Fbt Fbt::right() const {
  if (is_leaf()) throw std::logic_error("leaf has no children");
  return Fbt(node_->right);
}

int Fbt::right_spine() const {
  int k = 1;
  for (const Node* p = node_.get(); p->right; p = p->right.get()) ++k;
  return k;
}

std::string Fbt::str() const {
  std::string out;
  std::function<void(const Node*)> rec = [&](const Node* p) {
    if (!p->left) {
      out += 'o';
      return;
    }
    out += '(';
    rec(p->left.get());
    out += ' ';
    rec(p->right.get());
    out += ')';
  };
  rec(node_.get());
  return out;
}

bool Fbt::equal(const Node* a, const Node* b) {
  if (a == b) return true;
  if (a->leaves != b->leaves) return false;
  if (!a->left || !b->left) return !a->left && !b->left;
  return equal(a->left.get(), b->left.get()) && equal(a->right.get(), b->right.get());
}

bool operator==(const Fbt& a, const Fbt& b) { return Fbt::equal(a.node_.get(), b.node_.get()); }

Fbt right_product(const std::vector<Fbt>& factors) {
  if (factors.empty()) throw std::invalid_argument("empty factor list");
  Fbt t = factors.back();
  for (auto it = factors.rbegin() + 1; it != factors.rend(); ++it) t = product(*it, t);
  return t;
}

const std::vector<Fbt>& TreeCatalog::trees(int s) {
  if (s < 1) throw TreeLimitError("leaf count must be at least 1");
  if (s > max_leaves_)
    throw TreeLimitError("leaf count " + std::to_string(s) + " exceeds the limit " + std::to_string(max_leaves_));
  if (by_size_.empty()) by_size_.push_back({Fbt::leaf()});
  while (static_cast<int>(by_size_.size()) < s) {
    int size = static_cast<int>(by_size_.size()) + 1;
    std::vector<Fbt> level;
    for (int l = 1; l < size; ++l) {
      const auto& lefts = by_size_[static_cast<std::size_t>(l - 1)];
      const auto& rights = by_size_[static_cast<std::size_t>(size - l - 1)];
      for (const auto& a : lefts)
        for (const auto& b : rights) level.push_back(product(a, b));
    }
    by_size_.push_back(std::move(level));
  }
  return by_size_[static_cast<std::size_t>(s - 1)];
}

std::vector<Fbt> enumerate_trees(int s, int max_leaves) {
  TreeCatalog catalog(max_leaves);
  return catalog.trees(s);
}

std::vector<Fbt> basic_right_factorization(const Fbt& t) {
  std::vector<Fbt> factors;
  Fbt cur = t;
  while (!cur.is_leaf()) {
    factors.push_back(cur.left());
    cur = cur.right();
  }
  factors.push_back(cur);
  return factors;
}

std::string BackslashCode::str() const {
  std::string s = "\\";
  for (std::size_t j = 0; j < k.size(); ++j) s += (j ? "," : "") + std::to_string(k[j]);
  return s + "\\";
}

void BackslashCode::validate() const {
  const int s = size();
  if (s == 0) throw CodeError("empty backslash code");
  if (s == 1) {
    if (k[0] != 1) throw CodeError("a one-leaf code must be \\1\\");
    return;
  }
  int partial = 0;
  for (int j = 1; j < s; ++j) {
    partial += k[static_cast<std::size_t>(j - 1)];
    if (partial > 2 * j - 1)
      throw CodeError("partial-sum condition violated: k_1+...+k_" + std::to_string(j) + " = " +
                      std::to_string(partial) + " > " + std::to_string(2 * j - 1));
  }
  if (partial + k.back() != 2 * s - 1)
    throw CodeError("total condition violated: sum = " + std::to_string(partial + k.back()) + " != " +
                    std::to_string(2 * s - 1));
  for (int j = 1; j < s; ++j)
    if (k[static_cast<std::size_t>(j - 1)] < 1)
      throw CodeError("positivity condition violated: k_" + std::to_string(j) + " < 1");
  if (k.back() < 2) throw CodeError("last-entry condition violated: k_" + std::to_string(s) + " < 2");
}

bool BackslashCode::valid() const {
  try {
    validate();
    return true;
  } catch (const CodeError&) {
    return false;
  }
}

BackslashCode to_code(const Fbt& t) {
  BackslashCode code;
  code.k.reserve(static_cast<std::size_t>(t.leaves()));
  // chain = vertices on the current backslash line down to and including this node
  std::function<void(const Fbt&, int)> rec = [&](const Fbt& node, int chain) {
    if (node.is_leaf()) {
      code.k.push_back(chain);
      return;
    }
    rec(node.left(), 1);
    rec(node.right(), chain + 1);
  };
  rec(t, 1);
  return code;
}

namespace {

// Replaces the subtree at right-spine position pos (root = 1) by (subtree tau).
Fbt graft_leaf(const Fbt& t, int pos) {
  if (pos == 1) return product(t, Fbt::leaf());
  if (t.is_leaf()) throw std::logic_error("right spine shorter than graft position");
  return product(t.left(), graft_leaf(t.right(), pos - 1));
}

}  // namespace

Fbt from_code(const BackslashCode& code) {
  code.validate();
  // Peeling the last leaf of t maps (k_1..k_{s-1}, k_s) to
  // (k_1..k_{s-2}, k_{s-1} + k_s - 2); undo those steps from tau upward.
  std::vector<int> cur = code.k;
  std::vector<int> last_entries;
  while (cur.size() > 1) {
    int ks = cur.back();
    cur.pop_back();
    cur.back() += ks - 2;
    last_entries.push_back(ks);
  }
  Fbt t = Fbt::leaf();
  for (auto it = last_entries.rbegin(); it != last_entries.rend(); ++it) t = graft_leaf(t, *it - 1);
  return t;
}

bool code_concatenation_check(const Fbt& t) {
  auto factors = basic_right_factorization(t);
  BackslashCode joined;
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    auto c = to_code(factors[i]);
    joined.k.insert(joined.k.end(), c.k.begin(), c.k.end());
  }
  joined.k.push_back(static_cast<int>(factors.size()));
  return joined == to_code(t);
}

}  // namespace bnf
