#include "cgeo/tensor.hpp"

#include <optional>
#include <string>

namespace cgeo {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kArgument: return "argument";
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kUnsupportedDimension: return "unsupported_dimension";
    case ErrorCode::kDegenerateVelocity: return "degenerate_velocity";
    case ErrorCode::kConstraintDrift: return "constraint_drift";
    case ErrorCode::kPole: return "pole";
    case ErrorCode::kOutOfRange: return "out_of_range";
    case ErrorCode::kConfig: return "config";
  }
  return "unknown";
}

void check_dimension(int n) {
  if (n < kMinDim || n > kMaxDim)
    throw Error(ErrorCode::kUnsupportedDimension,
                "dimension " + std::to_string(n) + " outside supported range [2, 8]");
}

void check_same_dimension(int a, int b, const char* what) {
  if (a != b)
    throw Error(ErrorCode::kArgument, std::string("dimension mismatch in ") + what + ": " +
                                          std::to_string(a) + " vs " + std::to_string(b));
}

Point displaced(const Point& x, const Vector& v, double scale) {
  check_same_dimension(x.dim(), v.dim(), "displaced");
  Point out = x;
  for (int i = 0; i < x.dim(); ++i) out[i] += scale * v[i];
  return out;
}

Vector chart_difference(const Point& b, const Point& a) {
  check_same_dimension(a.dim(), b.dim(), "chart_difference");
  Vector out(a.dim());
  for (int i = 0; i < a.dim(); ++i) out[i] = b[i] - a[i];
  return out;
}

double chart_distance(const Point& a, const Point& b) { return chart_difference(b, a).chart_norm(); }

SymMatrix SymMatrix::scaled_identity(int n, double s) {
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

bool SymMatrix::finite() const noexcept {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j <= i; ++j)
      if (!std::isfinite((*this)(i, j))) return false;
  return true;
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& o) {
  check_same_dimension(n_, o.n_, "matrix addition");
  for (std::size_t k = 0; k < tri_.size(); ++k) tri_[k] += o.tri_[k];
  return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& o) {
  check_same_dimension(n_, o.n_, "matrix subtraction");
  for (std::size_t k = 0; k < tri_.size(); ++k) tri_[k] -= o.tri_[k];
  return *this;
}

SymMatrix& SymMatrix::operator*=(double s) noexcept {
  for (auto& v : tri_) v *= s;
  return *this;
}

Vector Matrix::apply(const Vector& v) const {
  check_same_dimension(n_, v.dim(), "matrix apply");
  Vector out(n_);
  for (int i = 0; i < n_; ++i) {
    double s = 0.0;
    for (int j = 0; j < n_; ++j) s += (*this)(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

double inner(const SymMatrix& g, const Vector& x, const Vector& y) {
  check_same_dimension(g.dim(), x.dim(), "inner");
  check_same_dimension(g.dim(), y.dim(), "inner");
  // Symmetrized summation order so that inner(g,X,Y) == inner(g,Y,X) bitwise.
  const int n = g.dim();
  double diag = 0.0;
  double off = 0.0;
  for (int i = 0; i < n; ++i) {
    diag += g(i, i) * (x[i] * y[i]);
    for (int j = 0; j < i; ++j) off += g(i, j) * (x[i] * y[j] + x[j] * y[i]);
  }
  return diag + off;
}

double pair(const Covector& w, const Vector& x) {
  check_same_dimension(w.dim(), x.dim(), "pair");
  double s = 0.0;
  for (int i = 0; i < w.dim(); ++i) s += w[i] * x[i];
  return s;
}

Covector lower(const SymMatrix& g, const Vector& x) {
  check_same_dimension(g.dim(), x.dim(), "lower");
  Covector out(g.dim());
  for (int a = 0; a < g.dim(); ++a) {
    double s = 0.0;
    for (int b = 0; b < g.dim(); ++b) s += g(a, b) * x[b];
    out[a] = s;
  }
  return out;
}

Vector raise(const SymMatrix& g_inverse, const Covector& w) {
  check_same_dimension(g_inverse.dim(), w.dim(), "raise");
  Vector out(g_inverse.dim());
  for (int a = 0; a < g_inverse.dim(); ++a) {
    double s = 0.0;
    for (int b = 0; b < g_inverse.dim(); ++b) s += g_inverse(a, b) * w[b];
    out[a] = s;
  }
  return out;
}

namespace {

// Lower-triangular L with g = L L^T, or nothing if g is not positive-definite.
std::optional<std::array<double, kMaxDim * kMaxDim>> cholesky(const SymMatrix& g) {
  const int n = g.dim();
  std::array<double, kMaxDim * kMaxDim> l{};
  for (int j = 0; j < n; ++j) {
    double d = g(j, j);
    for (int k = 0; k < j; ++k) d -= l[j * kMaxDim + k] * l[j * kMaxDim + k];
    if (!(d > 0.0) || !std::isfinite(d)) return std::nullopt;
    const double ljj = std::sqrt(d);
    l[j * kMaxDim + j] = ljj;
    for (int i = j + 1; i < n; ++i) {
      double s = g(i, j);
      for (int k = 0; k < j; ++k) s -= l[i * kMaxDim + k] * l[j * kMaxDim + k];
      l[i * kMaxDim + j] = s / ljj;
    }
  }
  return l;
}

}  // namespace

bool positive_definite(const SymMatrix& g) noexcept {
  if (g.dim() < kMinDim) return false;
  return cholesky(g).has_value();
}

SymMatrix inverse(const SymMatrix& g) {
  const auto fact = cholesky(g);
  if (!fact) throw Error(ErrorCode::kArgument, "matrix is not positive-definite");
  const auto& l = *fact;
  const int n = g.dim();

  // Invert L (lower-triangular), then g^-1 = L^-T L^-1.
  std::array<double, kMaxDim * kMaxDim> li{};
  for (int i = 0; i < n; ++i) {
    li[i * kMaxDim + i] = 1.0 / l[i * kMaxDim + i];
    for (int j = 0; j < i; ++j) {
      double s = 0.0;
      for (int k = j; k < i; ++k) s -= l[i * kMaxDim + k] * li[k * kMaxDim + j];
      li[i * kMaxDim + j] = s / l[i * kMaxDim + i];
    }
  }
  SymMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      double s = 0.0;
      for (int k = i; k < n; ++k) s += li[k * kMaxDim + i] * li[k * kMaxDim + j];
      out(i, j) = s;
    }
  return out;
}

Matrix mix(const SymMatrix& g_inverse, const SymMatrix& p) {
  check_same_dimension(g_inverse.dim(), p.dim(), "mix");
  const int n = p.dim();
  Matrix m(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double s = 0.0;
      for (int c = 0; c < n; ++c) s += g_inverse(a, c) * p(c, b);
      m(a, b) = s;
    }
  return m;
}

}  // namespace cgeo
