#pragma once

// Test helpers and independent oracles.

#include "bnf/lie.hpp"
#include "bnf/spec_io.hpp"

#include <gtest/gtest.h>

#include <initializer_list>
#include <vector>

namespace bnf::test {

struct TermSpec {
  std::vector<int> alpha;
  std::vector<int> beta;
  Rational coeff;
};

template <CoefficientRing K = Rational>
PolySeries<K> series(int n, int order, std::initializer_list<TermSpec> terms) {
  PolySeries<K> p(n, order);
  for (const auto& t : terms) p.add_term(ExponentPair(t.alpha, t.beta), K(t.coeff));
  return p;
}

/// H_2(lambda) plus the given terms.
template <CoefficientRing K = Rational>
PolySeries<K> hamiltonian(const std::vector<GaussianRational>& lambda, int order, std::initializer_list<TermSpec> terms) {
  auto h = PolySeries<K>::quadratic(order, lambda);
  for (const auto& t : terms) h.add_term(ExponentPair(t.alpha, t.beta), K(t.coeff));
  return h;
}

/// Random H_2(lambda) + H_* with min_deg <= deg H_* <= max_deg.
template <CoefficientRing K = Rational>
PolySeries<K> random_hamiltonian(std::uint64_t seed, const std::vector<GaussianRational>& lambda, int order,
                                 int max_deg, int max_terms = 6) {
  SeriesRng rng(seed);
  auto h = PolySeries<K>::quadratic(order, lambda);
  return h + random_series<K>(rng, static_cast<int>(lambda.size()), order, 3, max_deg, max_terms);
}

/// Dense polynomial in x_1..x_n, y_1..y_n truncated at total degree M, stored
/// on the full (M+1)^{2n} exponent grid. Shares nothing with PolySeries.
class DensePoly {
public:
  DensePoly(int n, int order) : n_(n), m_(order), c_(grid_size(n, order)) {}

  static DensePoly from(const PolySeries<Rational>& f) {
    DensePoly d(f.n(), f.order());
    for (const auto& [e, c] : f.terms()) {
      std::vector<int> ex;
      for (int j = 0; j < f.n(); ++j) ex.push_back(e.alpha(j));
      for (int j = 0; j < f.n(); ++j) ex.push_back(e.beta(j));
      d.at(ex) += c;
    }
    return d;
  }

  [[nodiscard]] PolySeries<Rational> to_series() const {
    PolySeries<Rational> f(n_, m_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      auto ex = decode(i);
      std::vector<int> a(ex.begin(), ex.begin() + n_);
      std::vector<int> b(ex.begin() + n_, ex.end());
      f.add_term(ExponentPair(a, b), c_[i]);
    }
    return f;
  }

  friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    DensePoly r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
  }
  friend DensePoly operator-(const DensePoly& a, const DensePoly& b) {
    DensePoly r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
  }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    DensePoly r(a.n_, a.m_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      auto ea = a.decode(i);
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j].is_zero()) continue;
        auto eb = b.decode(j);
        std::vector<int> e(ea.size());
        int deg = 0;
        for (std::size_t k = 0; k < e.size(); ++k) deg += e[k] = ea[k] + eb[k];
        if (deg > a.m_) continue;
        r.at(e) += a.c_[i] * b.c_[j];
      }
    }
    return r;
  }

  /// Partial derivative in variable slot v (x_j is slot j, y_j is slot n+j).
  [[nodiscard]] DensePoly partial(int v) const {
    DensePoly r(n_, m_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      auto e = decode(i);
      int p = e[static_cast<std::size_t>(v)];
      if (p == 0) continue;
      e[static_cast<std::size_t>(v)] = p - 1;
      r.at(e) += c_[i] * Rational(p);
    }
    return r;
  }

  /// sum_j dF/dy_j dG/dx_j - dF/dx_j dG/dy_j, every product truncated at M.
  friend DensePoly bracket(const DensePoly& f, const DensePoly& g) {
    DensePoly r(f.n_, f.m_);
    for (int j = 0; j < f.n_; ++j)
      r = r + f.partial(f.n_ + j) * g.partial(j) - f.partial(j) * g.partial(f.n_ + j);
    return r;
  }

private:
  static std::size_t grid_size(int n, int order) {
    std::size_t s = 1;
    for (int k = 0; k < 2 * n; ++k) s *= static_cast<std::size_t>(order + 1);
    return s;
  }
  [[nodiscard]] std::vector<int> decode(std::size_t i) const {
    std::vector<int> e(static_cast<std::size_t>(2 * n_));
    for (auto& x : e) {
      x = static_cast<int>(i % static_cast<std::size_t>(m_ + 1));
      i /= static_cast<std::size_t>(m_ + 1);
    }
    return e;
  }
  Rational& at(const std::vector<int>& e) {
    std::size_t i = 0;
    for (std::size_t k = e.size(); k-- > 0;) i = i * static_cast<std::size_t>(m_ + 1) + static_cast<std::size_t>(e[k]);
    return c_[i];
  }

  int n_;
  int m_;
  std::vector<Rational> c_;
};

}  // namespace bnf::test
