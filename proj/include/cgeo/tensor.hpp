#pragma once

// Small fixed-capacity tensors for chart computations in dimension 2..8.
//
// Vectors, covectors and chart points are distinct types so that index
// placement is checked by the compiler: a Covector can only be paired with a
// Vector, and the metric is needed to move between the two.

#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "cgeo/error.hpp"

namespace cgeo {

inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 8;

void check_dimension(int n);
void check_same_dimension(int a, int b, const char* what);

template <class Tag>
class Components {
 public:
  Components() = default;

  explicit Components(int n) : n_(n) { check_dimension(n); }

  Components(std::initializer_list<double> values)
      : Components(std::span<const double>(values.begin(), values.size())) {}

  explicit Components(std::span<const double> values)
      : n_(static_cast<int>(values.size())) {
    check_dimension(n_);
    for (int i = 0; i < n_; ++i) c_[i] = values[i];
  }

  static Components zero(int n) { return Components(n); }

  static Components unit(int n, int axis) {
    Components v(n);
    v[axis] = 1.0;
    return v;
  }

  int dim() const noexcept { return n_; }
  double operator[](int i) const noexcept { return c_[i]; }
  double& operator[](int i) noexcept { return c_[i]; }

  std::span<const double> values() const noexcept { return {c_.data(), static_cast<std::size_t>(n_)}; }
  std::span<double> values() noexcept { return {c_.data(), static_cast<std::size_t>(n_)}; }

  bool finite() const noexcept {
    for (int i = 0; i < n_; ++i)
      if (!std::isfinite(c_[i])) return false;
    return true;
  }

  /// Plain Euclidean (chart) norm of the components.
  double chart_norm() const noexcept {
    double s = 0.0;
    for (int i = 0; i < n_; ++i) s += c_[i] * c_[i];
    return std::sqrt(s);
  }

  Components& operator+=(const Components& o) {
    check_same_dimension(n_, o.n_, "component addition");
    for (int i = 0; i < n_; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Components& operator-=(const Components& o) {
    check_same_dimension(n_, o.n_, "component subtraction");
    for (int i = 0; i < n_; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Components& operator*=(double s) noexcept {
    for (int i = 0; i < n_; ++i) c_[i] *= s;
    return *this;
  }

  friend Components operator+(Components a, const Components& b) { return a += b; }
  friend Components operator-(Components a, const Components& b) { return a -= b; }
  friend Components operator*(double s, Components a) noexcept { return a *= s; }
  friend Components operator*(Components a, double s) noexcept { return a *= s; }
  friend Components operator-(Components a) noexcept { return a *= -1.0; }

  friend bool operator==(const Components& a, const Components& b) noexcept {
    if (a.n_ != b.n_) return false;
    for (int i = 0; i < a.n_; ++i)
      if (a.c_[i] != b.c_[i]) return false;
    return true;
  }

 private:
  int n_ = 0;
  std::array<double, kMaxDim> c_{};
};

struct VectorTag;
struct CovectorTag;
struct PointTag;

/// Contravariant components X^a.
using Vector = Components<VectorTag>;
/// Covariant components w_a.
using Covector = Components<CovectorTag>;
/// Chart coordinates x^a.
using Point = Components<PointTag>;

/// Displacement of a chart point along a vector.
Point displaced(const Point& x, const Vector& v, double scale = 1.0);
/// Chart-coordinate difference b - a.
Vector chart_difference(const Point& b, const Point& a);
double chart_distance(const Point& a, const Point& b);

/// Symmetric n x n matrix with the lower triangle as the only storage.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int n) : n_(n) { check_dimension(n); }

  static SymMatrix zero(int n) { return SymMatrix(n); }
  static SymMatrix identity(int n) { return scaled_identity(n, 1.0); }
  static SymMatrix scaled_identity(int n, double s);

  int dim() const noexcept { return n_; }
  double operator()(int i, int j) const noexcept { return tri_[index(i, j)]; }
  double& operator()(int i, int j) noexcept { return tri_[index(i, j)]; }

  bool finite() const noexcept;

  SymMatrix& operator+=(const SymMatrix& o);
  SymMatrix& operator-=(const SymMatrix& o);
  SymMatrix& operator*=(double s) noexcept;
  friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
  friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
  friend SymMatrix operator*(double s, SymMatrix a) noexcept { return a *= s; }

 private:
  static constexpr std::size_t index(int i, int j) noexcept {
    return i >= j ? static_cast<std::size_t>(i * (i + 1) / 2 + j)
                  : static_cast<std::size_t>(j * (j + 1) / 2 + i);
  }

  int n_ = 0;
  std::array<double, kMaxDim*(kMaxDim + 1) / 2> tri_{};
};

/// General n x n matrix, row-major. Used for mixed tensors such as P_b^a,
/// stored so that (M * V)^a = sum_b M(a, b) V^b.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n) { check_dimension(n); }

  int dim() const noexcept { return n_; }
  double operator()(int i, int j) const noexcept { return m_[i * kMaxDim + j]; }
  double& operator()(int i, int j) noexcept { return m_[i * kMaxDim + j]; }

  Vector apply(const Vector& v) const;

 private:
  int n_ = 0;
  std::array<double, kMaxDim * kMaxDim> m_{};
};

/// Dense rank-3 array with runtime dimension, indexed (i, j, k).
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int n) : n_(n), d_(static_cast<std::size_t>(n * n * n), 0.0) {}

  int dim() const noexcept { return n_; }
  double operator()(int i, int j, int k) const noexcept { return d_[(i * n_ + j) * n_ + k]; }
  double& operator()(int i, int j, int k) noexcept { return d_[(i * n_ + j) * n_ + k]; }
  std::span<const double> flat() const noexcept { return d_; }

 private:
  int n_ = 0;
  std::vector<double> d_;
};

/// Dense rank-4 array with runtime dimension, indexed (i, j, k, l).
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(int n) : n_(n), d_(static_cast<std::size_t>(n * n * n * n), 0.0) {}

  int dim() const noexcept { return n_; }
  double operator()(int i, int j, int k, int l) const noexcept {
    return d_[((i * n_ + j) * n_ + k) * n_ + l];
  }
  double& operator()(int i, int j, int k, int l) noexcept {
    return d_[((i * n_ + j) * n_ + k) * n_ + l];
  }
  std::span<const double> flat() const noexcept { return d_; }

 private:
  int n_ = 0;
  std::vector<double> d_;
};

/// X^a g_ab Y^b.
double inner(const SymMatrix& g, const Vector& x, const Vector& y);
/// w_a X^a; no metric involved.
double pair(const Covector& w, const Vector& x);
/// X_a = g_ab X^b.
Covector lower(const SymMatrix& g, const Vector& x);
/// w^a = g^ab w_b, given the inverse metric.
Vector raise(const SymMatrix& g_inverse, const Covector& w);

/// Inverse of a positive-definite matrix via Cholesky. A failed factorization
/// means the input is not a Riemannian metric and raises kArgument.
SymMatrix inverse(const SymMatrix& g);
/// True when the Cholesky factorization succeeds.
bool positive_definite(const SymMatrix& g) noexcept;

/// P_b^a = g^ac P_cb as a Matrix acting on vectors.
Matrix mix(const SymMatrix& g_inverse, const SymMatrix& p);

}  // namespace cgeo
