#include "bnf/sym_scalar.hpp"

#include <stdexcept>

namespace bnf {

int SymMonomial::degree() const {
  int d = 0;
  for (const auto& [var, mult] : factors_) d += mult;
  return d;
}

ExponentPair SymMonomial::weight() const {
  ExponentPair w;
  for (const auto& [var, mult] : factors_)
    for (int k = 0; k < mult; ++k) w = w + var;
  return w;
}

SymMonomial operator*(const SymMonomial& a, const SymMonomial& b) {
  SymMonomial r;
  r.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      r.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      r.factors_.push_back(*j++);
    } else {
      r.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return r;
}

std::strong_ordering operator<=>(const SymMonomial& a, const SymMonomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.factors_ <=> b.factors_;
}

std::string indeterminate_name(const ExponentPair& var, int n) {
  bool compact = n == 1 && var.alpha(0) < 10 && var.beta(0) < 10;
  if (compact) return "h_{" + std::to_string(var.alpha(0)) + std::to_string(var.beta(0)) + "}";
  std::string s = "h_{";
  for (int j = 0; j < n; ++j) s += (j ? "," : "") + std::to_string(var.alpha(j));
  s += ";";
  for (int j = 0; j < n; ++j) s += (j ? "," : "") + std::to_string(var.beta(j));
  return s + "}";
}

std::string SymMonomial::str(int n) const {
  std::string s;
  for (const auto& [var, mult] : factors_) {
    if (!s.empty()) s += ' ';
    s += indeterminate_name(var, n);
    if (mult > 1) s += "^" + std::to_string(mult);
  }
  return s.empty() ? "1" : s;
}

SymScalar::SymScalar(const GaussianRational& c) {
  if (!c.is_zero()) terms_.emplace(SymMonomial{}, c);
}

SymScalar SymScalar::indeterminate(const ExponentPair& var) {
  SymScalar s;
  s.terms_.emplace(SymMonomial(var), GaussianRational(1));
  return s;
}

void SymScalar::accumulate(const SymMonomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymScalar& SymScalar::operator+=(const SymScalar& o) {
  for (const auto& [m, c] : o.terms_) accumulate(m, c);
  return *this;
}

SymScalar& SymScalar::operator-=(const SymScalar& o) {
  for (const auto& [m, c] : o.terms_) accumulate(m, -c);
  return *this;
}

SymScalar& SymScalar::operator*=(const GaussianRational& q) {
  if (q.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= q;
  return *this;
}

SymScalar& SymScalar::operator/=(const GaussianRational& q) {
  if (q.is_zero()) throw std::domain_error("symbolic scalar division by zero");
  for (auto& [m, c] : terms_) c /= q;
  return *this;
}

SymScalar operator*(const SymScalar& a, const SymScalar& b) {
  SymScalar r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.accumulate(ma * mb, ca * cb);
  return r;
}

SymScalar operator-(SymScalar a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

GaussianRational SymScalar::evaluate(
    const std::function<GaussianRational(const ExponentPair&)>& value) const {
  GaussianRational total;
  for (const auto& [m, c] : terms_) {
    GaussianRational t = c;
    for (const auto& [var, mult] : m.factors()) t *= pow(value(var), mult);
    total += t;
  }
  return total;
}

std::string SymScalar::str(int n) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    bool constant = m.factors().empty();
    std::string coeff = c.str();
    bool negative = c.is_real() && c.re().sign() < 0;
    if (negative) coeff = (-c).str();
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    if (constant) {
      s += coeff;
    } else {
      if (coeff != "1") s += coeff + " ";
      s += m.str(n);
    }
  }
  return s;
}

}  // namespace bnf
