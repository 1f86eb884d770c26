#include "bnf/treeforms.hpp"

namespace bnf {

MarkedTree MarkedTree::leaf(bool marked) {
  return MarkedTree(std::make_shared<const Node>(Node{nullptr, nullptr, marked, 1, marked ? 1 : 0}));
}

MarkedTree MarkedTree::product(const MarkedTree& left, const MarkedTree& right, bool marked) {
  if (left.marked()) throw std::invalid_argument("a left child cannot be marked");
  return MarkedTree(std::make_shared<const Node>(Node{left.node_, right.node_, marked, left.leaves() + right.leaves(),
                                                      left.marks() + right.marks() + (marked ? 1 : 0)}));
}

MarkedTree MarkedTree::left() const {
  if (is_leaf()) throw std::logic_error("leaf has no children");
  return MarkedTree(node_->left);
}

MarkedTree MarkedTree::right() const {
  if (is_leaf()) throw std::logic_error("leaf has no children");
  return MarkedTree(node_->right);
}

Fbt MarkedTree::shape() const {
  if (is_leaf()) return Fbt::leaf();
  return Fbt::product(left().shape(), right().shape());
}

std::string MarkedTree::str() const {
  std::string body = is_leaf() ? "o" : left().str() + " " + right().str();
  if (marked()) return "[" + body + "]";
  return is_leaf() ? body : "(" + body + ")";
}

namespace {

const JSequence& spine_table() {
  static const JSequence kTable(64);
  return kTable;
}

Rational beta(int k) {
  if (k + 1 > spine_table().size()) throw std::out_of_range("spine too long for the J table");
  return spine_table()(k + 1);
}

Rational gamma(int k) { return k % 2 == 1 ? beta(k) : -beta(k); }

// `t` sits k edges down a spine that has not ended yet.
Rational spine_weight(const MarkedTree& t, int k) {
  if (t.is_leaf()) return beta(k);
  Rational w = spine_weight(t.left(), 0);
  if (w.is_zero()) return w;
  MarkedTree r = t.right();
  if (r.marked()) return w * gamma(k + 1) * spine_weight(r, 0);
  return w * spine_weight(r, k + 1);
}

}  // namespace

Rational marked_weight(const MarkedTree& t) {
  if (t.marked()) throw std::invalid_argument("the root of a marked tree is unmarked");
  return spine_weight(t, 0);
}

const std::vector<MarkedTree>& MarkedTreeCatalog::trees(int s) {
  if (s < 1) throw TreeLimitError("leaf count must be at least 1");
  if (s > max_leaves_)
    throw TreeLimitError("leaf count " + std::to_string(s) + " exceeds the limit " + std::to_string(max_leaves_));
  if (plain_.empty()) {
    plain_.push_back({MarkedTree::leaf(false)});
    marked_.push_back({});
    if (allow_marks_) marked_[0].push_back(MarkedTree::leaf(true));
  }
  while (static_cast<int>(plain_.size()) < s) {
    const int size = static_cast<int>(plain_.size()) + 1;
    std::vector<MarkedTree> plain;
    std::vector<MarkedTree> marked;
    for (int l = 1; l < size; ++l) {
      const auto& lefts = plain_[static_cast<std::size_t>(l - 1)];
      const auto r = static_cast<std::size_t>(size - l - 1);
      for (const auto& a : lefts) {
        for (const auto* rights : {&plain_[r], &marked_[r]}) {
          for (const auto& b : *rights) {
            plain.push_back(MarkedTree::product(a, b, false));
            if (allow_marks_) marked.push_back(MarkedTree::product(a, b, true));
          }
        }
      }
    }
    plain_.push_back(std::move(plain));
    marked_.push_back(std::move(marked));
  }
  return plain_[static_cast<std::size_t>(s - 1)];
}

}  // namespace bnf
