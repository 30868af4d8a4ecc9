#pragma once

// Small dense square matrices over the three scalar domains used by reps:
// exact Q(i), floating complex, and univariate polynomials.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "timps/polynomials.hpp"
#include "timps/scalars.hpp"

namespace timps {

template <class T>
struct ScalarOps;

template <>
struct ScalarOps<GaussianRational> {
  static GaussianRational zero() { return {}; }
  static GaussianRational one() { return GaussianRational(1); }
  static bool is_zero(const GaussianRational& a) { return a.is_zero(); }
};

template <>
struct ScalarOps<ComplexF> {
  static ComplexF zero() { return {0.0, 0.0}; }
  static ComplexF one() { return {1.0, 0.0}; }
  static bool is_zero(const ComplexF& a) { return a == ComplexF(0.0, 0.0); }
};

/// Univariate polynomials (arity 1) in the formal variable x.
template <>
struct ScalarOps<MultiPoly> {
  static MultiPoly zero() { return MultiPoly(1); }
  static MultiPoly one() { return MultiPoly::constant(1, GaussianRational(1)); }
  static bool is_zero(const MultiPoly& a) { return a.is_zero(); }
};

template <class T>
class Matrix {
public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim, ScalarOps<T>::zero()) {}
  Matrix(std::size_t dim, std::vector<T> row_major) : dim_(dim), data_(std::move(row_major)) {
    if (data_.size() != dim * dim) throw std::invalid_argument("matrix data does not match dimension");
  }

  static Matrix identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = ScalarOps<T>::one();
    return m;
  }

  /// E_{row,col}: one at (row, col), zero elsewhere (0-based).
  static Matrix unit(std::size_t dim, std::size_t row, std::size_t col) {
    Matrix m(dim);
    m(row, col) = ScalarOps<T>::one();
    return m;
  }

  std::size_t dim() const { return dim_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
  const std::vector<T>& data() const { return data_; }

  T trace() const {
    T t = ScalarOps<T>::zero();
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
    Matrix c(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i) {
      for (std::size_t k = 0; k < a.dim_; ++k) {
        const T& aik = a(i, k);
        if (ScalarOps<T>::is_zero(aik)) continue;
        for (std::size_t j = 0; j < a.dim_; ++j) {
          if (!ScalarOps<T>::is_zero(b(k, j))) c(i, j) += aik * b(k, j);
        }
      }
    }
    return c;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  Matrix scaled(const T& s) const {
    Matrix m(dim_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] * s;
    return m;
  }

  Matrix pow(unsigned e) const {
    Matrix result = identity(dim_);
    Matrix base = *this;
    while (e > 0) {
      if (e & 1u) result = result * base;
      e >>= 1u;
      if (e > 0) base = base * base;
    }
    return result;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<U> out;
    out.reserve(data_.size());
    for (const auto& v : data_) out.push_back(f(v));
    return Matrix<U>(dim_, std::move(out));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) { return a.dim_ == b.dim_ && a.data_ == b.data_; }

private:
  std::size_t dim_ = 0;
  std::vector<T> data_;
};

}  // namespace timps
