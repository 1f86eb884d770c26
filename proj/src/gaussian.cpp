#include "bnf/gaussian.hpp"

#include <stdexcept>

namespace bnf {

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("gaussian rational division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  Rational n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  std::string imag;
  if (im_ == Rational(1)) {
    imag = "i";
  } else if (im_ == Rational(-1)) {
    imag = "-i";
  } else {
    imag = im_.str() + "*i";
  }
  if (re_.is_zero()) return imag;
  if (imag.front() == '-') return "(" + re_.str() + imag + ")";
  return "(" + re_.str() + "+" + imag + ")";
}

GaussianRational pow(const GaussianRational& base, int exponent) {
  GaussianRational b = exponent < 0 ? GaussianRational(1) / base : base;
  unsigned e = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  GaussianRational r(1);
  while (e) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

}  // namespace bnf
