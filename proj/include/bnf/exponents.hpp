#pragma once

// Exponent pair (alpha, beta) labelling the monomial x^alpha y^beta.
//
// Storage is a fixed 16-byte array: alpha occupies slots [0, kMaxDim) and
// beta occupies [kMaxDim, 2*kMaxDim). Unused slots stay zero, so the
// ordering and hashing below do not depend on the session dimension n.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bnf {

inline constexpr int kMaxDim = 8;
inline constexpr int kMaxExponent = 255;

class ExponentPair {
public:
  ExponentPair() = default;
  /// Throws std::invalid_argument when sizes differ, exceed kMaxDim, or an
  /// entry is negative or larger than kMaxExponent.
  ExponentPair(std::span<const int> alpha, std::span<const int> beta);
  ExponentPair(std::initializer_list<int> alpha, std::initializer_list<int> beta)
      : ExponentPair(std::span<const int>(alpha.begin(), alpha.size()),
                     std::span<const int>(beta.begin(), beta.size())) {}

  [[nodiscard]] int alpha(int j) const { return e_[static_cast<std::size_t>(j)]; }
  [[nodiscard]] int beta(int j) const { return e_[static_cast<std::size_t>(kMaxDim + j)]; }
  void set_alpha(int j, int v) { e_[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(v); }
  void set_beta(int j, int v) { e_[static_cast<std::size_t>(kMaxDim + j)] = static_cast<std::uint8_t>(v); }

  [[nodiscard]] int degree() const {
    int d = 0;
    for (auto v : e_) d += v;
    return d;
  }
  [[nodiscard]] bool is_diagonal() const {
    for (int j = 0; j < kMaxDim; ++j)
      if (alpha(j) != beta(j)) return false;
    return true;
  }
  /// Smallest n that can hold this pair.
  [[nodiscard]] int used_dim() const {
    for (int j = kMaxDim - 1; j >= 0; --j)
      if (alpha(j) != 0 || beta(j) != 0) return j + 1;
    return 0;
  }

  [[nodiscard]] std::vector<int> alpha_vec(int n) const;
  [[nodiscard]] std::vector<int> beta_vec(int n) const;

  /// Componentwise sum; throws std::overflow_error past kMaxExponent.
  friend ExponentPair operator+(const ExponentPair& a, const ExponentPair& b);

  /// Graded order: lower total degree first; within a degree the
  /// lexicographically larger (alpha_1..alpha_n, beta_1..beta_n) comes first.
  friend std::strong_ordering operator<=>(const ExponentPair& a, const ExponentPair& b) {
    int da = a.degree();
    int db = b.degree();
    if (da != db) return da <=> db;
    for (std::size_t k = 0; k < a.e_.size(); ++k)
      if (a.e_[k] != b.e_[k]) return b.e_[k] <=> a.e_[k];
    return std::strong_ordering::equal;
  }
  friend bool operator==(const ExponentPair& a, const ExponentPair& b) = default;

  [[nodiscard]] const std::array<std::uint8_t, 2 * kMaxDim>& raw() const { return e_; }

  /// Monomial text such as "x1^2 y1"; "1" for the empty monomial.
  [[nodiscard]] std::string monomial_str(int n) const;

private:
  std::array<std::uint8_t, 2 * kMaxDim> e_{};
};

}  // namespace bnf
