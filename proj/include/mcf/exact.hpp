#pragma once

// Exact scalars, dense square matrices and the integer-matrix algorithms
// (determinant, unimodular inverse, Hermite normal form) used everywhere else.

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcf/error.hpp"

namespace mcf {

using Int = mpz_class;
using Rat = mpq_class;

// Square matrix with row-major storage. Values are immutable once built;
// every operation returns a new matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;

  Matrix(std::size_t dim, std::vector<T> entries)
      : dim_(dim), entries_(std::move(entries)) {
    if (dim_ == 0) throw Error(ErrorKind::InvalidDimension, "matrix dimension must be >= 1");
    if (entries_.size() != dim_ * dim_)
      throw Error(ErrorKind::InvalidInput, "matrix entry count does not match dimension");
  }

  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    dim_ = rows.size();
    for (const auto& r : rows) {
      if (r.size() != dim_) throw Error(ErrorKind::InvalidInput, "matrix must be square");
      entries_.insert(entries_.end(), r.begin(), r.end());
    }
    if (dim_ == 0) throw Error(ErrorKind::InvalidDimension, "matrix dimension must be >= 1");
  }

  template <class F>
  static Matrix generate(std::size_t dim, F&& f) {
    std::vector<T> e;
    e.reserve(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) e.push_back(T(f(i, j)));
    return Matrix(dim, std::move(e));
  }

  static Matrix identity(std::size_t dim) {
    return generate(dim, [](std::size_t i, std::size_t j) { return i == j ? 1 : 0; });
  }

  std::size_t dim() const noexcept { return dim_; }
  const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  const std::vector<T>& entries() const noexcept { return entries_; }

  std::span<const T> row(std::size_t i) const {
    return std::span<const T>(entries_).subspan(i * dim_, dim_);
  }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c;
    c.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  Matrix transpose() const {
    return generate(dim_, [this](std::size_t i, std::size_t j) { return (*this)(j, i); });
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.dim_ != b.dim_) throw Error(ErrorKind::InvalidDimension, "matrix product size mismatch");
    const std::size_t n = a.dim_;
    std::vector<T> e(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < n; ++j) e[i * n + j] += aik * b(k, j);
      }
    return Matrix(n, std::move(e));
  }

  friend std::vector<T> operator*(const Matrix& a, std::span<const T> v) {
    if (v.size() != a.dim_) throw Error(ErrorKind::InvalidDimension, "matrix-vector size mismatch");
    std::vector<T> r(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i)
      for (std::size_t j = 0; j < a.dim_; ++j) r[i] += a(i, j) * v[j];
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<T> entries_;
};

using IntMat = Matrix<Int>;
using RatMat = Matrix<Rat>;

// Primitive integer projective coordinates: gcd of the entries is 1 and the
// last entry is positive. Only normalize_proj builds one.
class ProjVec {
 public:
  const std::vector<Int>& coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  const Int& operator[](std::size_t i) const { return coords_[i]; }
  friend bool operator==(const ProjVec& a, const ProjVec& b) { return a.coords_ == b.coords_; }

 private:
  friend ProjVec normalize_proj(std::vector<Int> v);
  std::vector<Int> coords_;
};

ProjVec normalize_proj(std::vector<Int> v);

RatMat to_rat(const IntMat& m);
// Throws InvalidInput if some entry is not an integer.
IntMat to_int(const RatMat& m);

Int det(const IntMat& m);
Rat det(const RatMat& m);

// Throws SingularMatrix.
RatMat inverse(const RatMat& m);
// Throws NotUnimodular unless det(m) = +-1.
IntMat unimodular_inverse(const IntMat& m);

// Solves m x = b exactly; throws SingularMatrix.
std::vector<Rat> solve(const RatMat& m, std::span<const Rat> b);

// Row Hermite normal form H = X m with X in GL_n(Z): upper triangular,
// positive diagonal, entries above the diagonal reduced into [0, H_jj).
// Throws SingularMatrix.
IntMat hnf(const IntMat& m);

Int gcd(std::span<const Int> v);

std::string to_string(const Rat& r);
std::string to_string(const Int& z);
// Accepts "p", "-p", "p/q"; canonicalizes. Throws InvalidInput.
Rat parse_rational(std::string_view s);

// log of a positive integer or rational, valid far beyond double range.
double log_abs(const Int& z);
double log_abs(const Rat& q);

}  // namespace mcf
