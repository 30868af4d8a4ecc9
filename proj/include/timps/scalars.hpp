#pragma once

// Exact arithmetic over the Gaussian rationals Q(i).

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace timps {

using ComplexF = std::complex<double>;

class DivisionByZero : public std::domain_error {
public:
  DivisionByZero() : std::domain_error("division by zero in Q(i)") {}
};

class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// a + b i with a, b arbitrary-precision rationals kept in lowest terms.
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational i() { return {0, 1}; }
  static GaussianRational from_ratio(long num, long den);

  /// Accepts "p/q", "r/s*i", "p/q+r/s*i", "i", "-i" with optional whitespace.
  static GaussianRational parse(std::string_view text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2, always rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inv() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  GaussianRational pow(unsigned e) const;

  std::string str() const;
  std::size_t hash() const;

private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& a);

GaussianRational gr_add(const GaussianRational& a, const GaussianRational& b);
GaussianRational gr_mul(const GaussianRational& a, const GaussianRational& b);
GaussianRational gr_neg(const GaussianRational& a);
GaussianRational gr_inv(const GaussianRational& a);

/// Nearest double componentwise. Throws std::range_error when a component
/// does not fit in a finite double.
ComplexF to_complex(const GaussianRational& a);

/// Nearest double to an exact rational.
double to_double(const mpq_class& q);

}  // namespace timps

template <>
struct std::hash<timps::GaussianRational> {
  std::size_t operator()(const timps::GaussianRational& a) const noexcept { return a.hash(); }
};
