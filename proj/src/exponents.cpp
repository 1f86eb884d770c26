#include "bnf/exponents.hpp"

#include <stdexcept>

namespace bnf {

ExponentPair::ExponentPair(std::span<const int> alpha, std::span<const int> beta) {
  if (alpha.size() != beta.size())
    throw std::invalid_argument("alpha and beta have different lengths");
  if (alpha.size() > static_cast<std::size_t>(kMaxDim))
    throw std::invalid_argument("dimension exceeds " + std::to_string(kMaxDim));
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha[j] < 0 || beta[j] < 0 || alpha[j] > kMaxExponent || beta[j] > kMaxExponent)
      throw std::invalid_argument("exponent out of range [0, 255]");
    set_alpha(static_cast<int>(j), alpha[j]);
    set_beta(static_cast<int>(j), beta[j]);
  }
}

std::vector<int> ExponentPair::alpha_vec(int n) const {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = alpha(j);
  return v;
}

std::vector<int> ExponentPair::beta_vec(int n) const {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = beta(j);
  return v;
}

ExponentPair operator+(const ExponentPair& a, const ExponentPair& b) {
  ExponentPair r;
  for (std::size_t k = 0; k < a.e_.size(); ++k) {
    int v = a.e_[k] + b.e_[k];
    if (v > kMaxExponent) throw std::overflow_error("exponent overflow");
    r.e_[k] = static_cast<std::uint8_t>(v);
  }
  return r;
}

std::string ExponentPair::monomial_str(int n) const {
  std::string out;
  auto emit = [&](char var, int j, int p) {
    if (p == 0) return;
    if (!out.empty()) out += ' ';
    out += var;
    out += std::to_string(j + 1);
    if (p > 1) out += "^" + std::to_string(p);
  };
  for (int j = 0; j < n; ++j) emit('x', j, alpha(j));
  for (int j = 0; j < n; ++j) emit('y', j, beta(j));
  return out.empty() ? "1" : out;
}

}  // namespace bnf
