#include "timps/scalars.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <ostream>

#include <mpfr.h>

namespace timps {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::from_ratio(long num, long den) {
  if (den == 0) throw DivisionByZero();
  mpq_class q(num, den);
  q.canonicalize();
  return {q, 0};
}

GaussianRational GaussianRational::inv() const {
  if (is_zero()) throw DivisionByZero();
  mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inv();
}

GaussianRational GaussianRational::pow(unsigned e) const {
  GaussianRational result(1);
  GaussianRational base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

std::string GaussianRational::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "*i";
  }
  if (sgn(re_) == 0) return imag;
  if (sgn(im_) > 0) return re_.get_str() + "+" + imag;
  return re_.get_str() + imag;
}

std::size_t GaussianRational::hash() const {
  std::hash<std::string> h;
  return h(str());
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& a) { return os << a.str(); }

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
    }
  }

  GaussianRational run() {
    if (s_.empty()) fail("empty scalar");
    mpq_class re = 0;
    mpq_class im = 0;
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = (s_[pos_] == '-') ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [value, imaginary] = term();
      if (sign < 0) value = -value;
      (imaginary ? im : re) += value;
    }
    return {re, im};
  }

private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse scalar '" + s_ + "': " + what);
  }

  mpz_class digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(s_.substr(start, pos_ - start));
  }

  std::pair<mpq_class, bool> term() {
    if (peek() == 'i') {
      ++pos_;
      return {mpq_class(1), true};
    }
    mpz_class num = digits();
    mpz_class den = 1;
    if (peek() == '/') {
      ++pos_;
      den = digits();
      if (den == 0) fail("zero denominator");
    }
    mpq_class value(num, den);
    value.canonicalize();
    bool imaginary = false;
    if (peek() == '*') {
      ++pos_;
      if (peek() != 'i') fail("expected 'i' after '*'");
      ++pos_;
      imaginary = true;
    } else if (peek() == 'i') {
      ++pos_;
      imaginary = true;
    }
    return {value, imaginary};
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) { return Parser(text).run(); }

GaussianRational gr_add(const GaussianRational& a, const GaussianRational& b) { return a + b; }
GaussianRational gr_mul(const GaussianRational& a, const GaussianRational& b) { return a * b; }
GaussianRational gr_neg(const GaussianRational& a) { return -a; }
GaussianRational gr_inv(const GaussianRational& a) { return a.inv(); }

double to_double(const mpq_class& q) {
  mpfr_t tmp;
  mpfr_init2(tmp, 53);
  mpfr_set_q(tmp, q.get_mpq_t(), MPFR_RNDN);
  double d = mpfr_get_d(tmp, MPFR_RNDN);
  mpfr_clear(tmp);
  if (!std::isfinite(d)) throw std::range_error("rational out of double range");
  return d;
}

ComplexF to_complex(const GaussianRational& a) { return {to_double(a.re()), to_double(a.im())}; }

}  // namespace timps
