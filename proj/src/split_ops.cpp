#include "bnf/split_ops.hpp"

#include <algorithm>
#include <functional>

namespace bnf {

namespace {

void enumerate_pairs(int slot, int n, int remaining, ExponentPair& cur,
                     const std::function<void(const ExponentPair&)>& visit) {
  if (slot == 2 * n) {
    visit(cur);
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    if (slot < n) {
      cur.set_alpha(slot, v);
    } else {
      cur.set_beta(slot - n, v);
    }
    enumerate_pairs(slot + 1, n, remaining - v, cur, visit);
  }
  if (slot < n) {
    cur.set_alpha(slot, 0);
  } else {
    cur.set_beta(slot - n, 0);
  }
}

}  // namespace

std::vector<ResonanceClass> nontrivial_resonances(const FreqVector& lambda, int order) {
  std::vector<ResonanceClass> out;
  ExponentPair cur;
  enumerate_pairs(0, lambda.n(), order, cur, [&](const ExponentPair& e) {
    if (e.degree() < 3 || e.is_diagonal()) return;
    auto ev = lambda.eigenvalue(e);
    if (ev.is_zero()) out.push_back({e, -ev});
  });
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.pair < b.pair; });
  return out;
}

}  // namespace bnf
