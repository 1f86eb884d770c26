#pragma once

// One degree of freedom: the normal form nu(xy) read off directly from H.
//
//   <G>   = sum_{a>=2} G_{aa} w^a
//   S[H]  = sum_{m>=1} (-1)^{m-1} / (lambda^{m-1} m!) d^{m-1}/dw^{m-1} <H_*^m>
//
// and the inverse of nu is recovered from S (see SConvention). nu itself is
// obtained by Lagrange-Buermann reversion and cross-checked against the
// closed partition formula for its coefficients.

#include "bnf/lie.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace bnf {

/// Raised when two routes to the same quantity disagree.
class InternalCheckError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Dense truncated series sum_{j=0}^{order} c_j w^j.
template <CoefficientRing K>
class UniSeries {
public:
  explicit UniSeries(int order) : c_(static_cast<std::size_t>(order < 0 ? 0 : order + 1)), order_(order) {}

  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] const K& operator[](int j) const { return c_[static_cast<std::size_t>(j)]; }
  [[nodiscard]] K coefficient(int j) const { return j >= 0 && j <= order_ ? c_[static_cast<std::size_t>(j)] : K(); }
  void set(int j, K v) {
    if (j < 0 || j > order_) throw UsageError("series index out of range");
    c_[static_cast<std::size_t>(j)] = std::move(v);
  }
  void add(int j, const K& v) {
    if (j < 0 || j > order_) return;
    auto& slot = c_[static_cast<std::size_t>(j)];
    slot = slot + v;
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& v : c_)
      if (!v.is_zero()) return false;
    return true;
  }

  [[nodiscard]] UniSeries with_order(int order) const {
    UniSeries r(order);
    for (int j = 0; j <= std::min(order, order_); ++j) r.c_[static_cast<std::size_t>(j)] = c_[static_cast<std::size_t>(j)];
    return r;
  }

  [[nodiscard]] UniSeries derivative() const {
    UniSeries r(order_ - 1);
    for (int j = 1; j <= order_; ++j)
      r.c_[static_cast<std::size_t>(j - 1)] = c_[static_cast<std::size_t>(j)] * field_const<K>(Rational(j));
    return r;
  }

  [[nodiscard]] UniSeries scaled(const FieldOf<K>& q) const {
    UniSeries r(order_);
    for (std::size_t j = 0; j < c_.size(); ++j) r.c_[j] = c_[j] * q;
    return r;
  }

  friend UniSeries operator+(const UniSeries& a, const UniSeries& b) {
    UniSeries r(std::min(a.order_, b.order_));
    for (int j = 0; j <= r.order_; ++j) r.set(j, a[j] + b[j]);
    return r;
  }
  friend UniSeries operator-(const UniSeries& a, const UniSeries& b) {
    UniSeries r(std::min(a.order_, b.order_));
    for (int j = 0; j <= r.order_; ++j) r.set(j, a[j] - b[j]);
    return r;
  }
  friend UniSeries operator*(const UniSeries& a, const UniSeries& b) {
    UniSeries r(std::min(a.order_, b.order_));
    for (int i = 0; i <= r.order_; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; i + j <= r.order_; ++j)
        if (!b[j].is_zero()) r.add(i + j, a[i] * b[j]);
    }
    return r;
  }
  friend bool operator==(const UniSeries&, const UniSeries&) = default;

  [[nodiscard]] std::string str(int n = 1) const {
    std::string s;
    for (int j = 0; j <= order_; ++j) {
      if (c_[static_cast<std::size_t>(j)].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + RingTraits<K>::to_string(c_[static_cast<std::size_t>(j)], n) + ") w^" + std::to_string(j);
    }
    return s.empty() ? "0" : s;
  }

private:
  std::vector<K> c_;
  int order_;
};

/// nu(z) = lambda z + N_2 z^2 + ... + N_order z^order.
template <CoefficientRing K>
struct NuSeries {
  FieldOf<K> lambda;
  UniSeries<K> tail;  // coefficients at powers >= 2; entries 0 and 1 unused

  [[nodiscard]] UniSeries<K> full() const {
    UniSeries<K> r = tail;
    r.set(0, K());
    if (r.order() >= 1) r.set(1, K(lambda));
    return r;
  }
};

/// Which relation ties S[H] to the inverse of nu.
enum class SConvention {
  /// nu^{-1}(w) = w/lambda - S(w/lambda)/lambda. Agrees with the Lie and tree
  /// normalizations; the default.
  kOracleValidated,
  /// nu^{-1}(w) = w/lambda + S(w/lambda), the relation written without the
  /// sign and 1/lambda factor. Kept for comparison only.
  kLiteral,
};

namespace detail {
inline void require_one_dof(int n) {
  if (n != 1) throw UsageError("one-degree-of-freedom routine called with n = " + std::to_string(n));
}
}  // namespace detail

/// <G> = sum_{a>=2} G_{aa} w^a, truncated at w^{floor(M/2)}.
template <CoefficientRing K>
UniSeries<K> average(const PolySeries<K>& g) {
  detail::require_one_dof(g.n());
  UniSeries<K> r(g.order() / 2);
  for (const auto& [e, c] : g.terms())
    if (e.alpha(0) == e.beta(0) && e.alpha(0) >= 2) r.set(e.alpha(0), c);
  return r;
}

/// S[H] through w^{floor(M/2)}, the part determined by H truncated at M.
template <CoefficientRing K>
UniSeries<K> compute_S(const PolySeries<K>& hamiltonian, const FreqVector& lambda, int order) {
  detail::require_one_dof(hamiltonian.n());
  const PolySeries<K> h = prepare_hamiltonian(hamiltonian, lambda, order);
  const int top = order / 2;
  UniSeries<K> s(top);
  if (top < 2) return s;
  const FieldOf<K> lam = RingTraits<K>::field_from(lambda[0]);

  // <H_*^m> has lowest power ceil(3m/2); it feeds S only while that does not
  // exceed top + m - 1.
  int m_max = 0;
  while ((3 * (m_max + 1) + 1) / 2 <= top + m_max) ++m_max;
  const int work_order = 2 * (top + m_max - 1);
  const PolySeries<K> hstar = h.degree_range(3, 2 * top).with_order(work_order);

  PolySeries<K> power = hstar;
  FieldOf<K> lam_pow = field_const<K>(Rational(1));
  for (int m = 1; m <= m_max; ++m) {
    if (m > 1) {
      power = power * hstar;
      lam_pow = lam_pow * lam;
    }
    if (power.is_zero()) break;
    UniSeries<K> avg = average(power);
    Rational base = Rational(m % 2 == 1 ? 1 : -1) / factorial(static_cast<unsigned>(m));
    for (int j = 2; j <= top; ++j) {
      int p = j + m - 1;  // d^{m-1} w^p = p!/j! w^j
      K c = avg.coefficient(p);
      if (c.is_zero()) continue;
      Rational falling = factorial(static_cast<unsigned>(p)) / factorial(static_cast<unsigned>(j));
      s.add(j, (c * field_const<K>(base * falling)) / lam_pow);
    }
  }
  return s;
}

/// True iff S[H] vanishes through the order fixed by M.
template <CoefficientRing K>
bool is_linearizable(const PolySeries<K>& h, const FreqVector& lambda, int order) {
  return compute_S(h, lambda, order).is_zero();
}

/// Compositional inverse of nu by Lagrange-Buermann:
/// g_s = (1/s) [z^{s-1}] (z / nu(z))^s.
template <CoefficientRing K>
UniSeries<K> revert_series(const NuSeries<K>& nu) {
  const int top = nu.tail.order();
  UniSeries<K> g(top);
  if (top < 1) return g;
  const FieldOf<K> inv_lam = field_const<K>(Rational(1)) / nu.lambda;
  g.set(1, K(inv_lam));
  if (top < 2) return g;

  // z/nu(z) = (1/lambda) / (1 + u),  u = sum_{k>=2} (N_k/lambda) z^{k-1}
  const int work = top - 1;
  UniSeries<K> u(work);
  for (int k = 2; k <= top; ++k) u.set(k - 1, nu.tail[k] * inv_lam);
  UniSeries<K> geometric(work);
  UniSeries<K> upow(work);
  upow.set(0, K(field_const<K>(Rational(1))));
  for (int j = 0; j <= work; ++j) {
    geometric = j % 2 == 0 ? geometric + upow : geometric - upow;
    upow = upow * u;
  }
  UniSeries<K> phi = geometric.scaled(inv_lam);

  UniSeries<K> phi_pow = phi;
  for (int s = 2; s <= top; ++s) {
    phi_pow = phi_pow * phi;
    g.set(s, phi_pow[s - 1] / field_const<K>(Rational(s)));
  }
  return g;
}

/// nu_m = lambda * sum over alpha_2 + 2 alpha_3 + ... = m-1 of
/// (m-1+|alpha|)! / (alpha! m!) prod (S_j/lambda)^{alpha_j}.
/// At lambda = 1 this is exactly the classical partition formula.
template <CoefficientRing K>
UniSeries<K> partition_formula(const UniSeries<K>& s, const FieldOf<K>& lambda) {
  const int top = s.order();
  UniSeries<K> out(top);
  std::vector<K> shat(static_cast<std::size_t>(top + 1));
  for (int j = 2; j <= top; ++j) shat[static_cast<std::size_t>(j)] = s[j] / lambda;

  for (int m = 2; m <= top; ++m) {
    K total;
    std::vector<int> alpha(static_cast<std::size_t>(m + 1), 0);
    // distribute weight m-1 over parts j = 2..m, part j carrying weight j-1
    std::function<void(int, int)> rec = [&](int j, int remaining) {
      if (remaining == 0) {
        int size = 0;
        Rational denom = factorial(static_cast<unsigned>(m));
        K prod(field_const<K>(Rational(1)));
        for (int i = 2; i <= m; ++i) {
          int a = alpha[static_cast<std::size_t>(i)];
          size += a;
          denom *= factorial(static_cast<unsigned>(a));
          for (int r = 0; r < a; ++r) prod = prod * shat[static_cast<std::size_t>(i)];
        }
        Rational coeff = factorial(static_cast<unsigned>(m - 1 + size)) / denom;
        total = total + prod * field_const<K>(coeff);
        return;
      }
      if (j > m) return;
      for (int a = 0; a * (j - 1) <= remaining; ++a) {
        alpha[static_cast<std::size_t>(j)] = a;
        rec(j + 1, remaining - a * (j - 1));
      }
      alpha[static_cast<std::size_t>(j)] = 0;
    };
    rec(2, m - 1);
    out.set(m, total * lambda);
  }
  return out;
}

/// nu from S by reverting the convention's expression for nu^{-1}. Under
/// the default convention the result is also checked against
/// partition_formula; a mismatch raises InternalCheckError.
template <CoefficientRing K>
NuSeries<K> nf_from_S(const UniSeries<K>& s, const FreqVector& lambda,
                      SConvention convention = SConvention::kOracleValidated) {
  detail::require_one_dof(lambda.n());
  const int top = s.order();
  const FieldOf<K> lam = RingTraits<K>::field_from(lambda[0]);
  const FieldOf<K> one = field_const<K>(Rational(1));

  NuSeries<K> inverse{one / lam, UniSeries<K>(top)};
  FieldOf<K> lam_pow = lam;  // lambda^m
  for (int m = 2; m <= top; ++m) {
    lam_pow = lam_pow * lam;
    if (convention == SConvention::kOracleValidated) {
      inverse.tail.set(m, -(s[m] / (lam_pow * lam)));
    } else {
      inverse.tail.set(m, s[m] / lam_pow);
    }
  }
  UniSeries<K> nu_full = revert_series(inverse);
  NuSeries<K> nu{lam, UniSeries<K>(top)};
  for (int m = 2; m <= top; ++m) nu.tail.set(m, nu_full[m]);

  if (top >= 1 && nu_full[1] != K(lam)) throw InternalCheckError("reverted series has wrong linear term");
  if (convention == SConvention::kOracleValidated) {
    UniSeries<K> closed = partition_formula(s, lam);
    for (int m = 2; m <= top; ++m) {
      if (closed[m] != nu.tail[m]) {
        std::ostringstream msg;
        msg << "partition formula disagrees with series reversion at N_" << m << ": "
            << RingTraits<K>::to_string(closed[m], 1) << " vs " << RingTraits<K>::to_string(nu.tail[m], 1);
        throw InternalCheckError(msg.str());
      }
    }
  }
  return nu;
}

/// N(x, y) = nu(xy) as a series truncated at `order`.
template <CoefficientRing K>
PolySeries<K> nu_to_series(const NuSeries<K>& nu, int order) {
  PolySeries<K> r(1, order);
  ExponentPair e({1}, {1});
  r.add_term(e, K(nu.lambda));
  for (int j = 2; j <= nu.tail.order() && 2 * j <= order; ++j) r.add_term(ExponentPair({j}, {j}), nu.tail[j]);
  return r;
}

/// Full 1-DOF route: H -> S[H] -> nu -> nu(xy).
template <CoefficientRing K>
PolySeries<K> nf_via_S(const PolySeries<K>& h, const FreqVector& lambda, int order,
                       SConvention convention = SConvention::kOracleValidated) {
  return nu_to_series(nf_from_S(compute_S(h, lambda, order), lambda, convention), order);
}

}  // namespace bnf
