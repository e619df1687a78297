#ifndef SKEWGEOM_JET_HPP
#define SKEWGEOM_JET_HPP

#include <Eigen/Core>

#include <cmath>

namespace skewgeom {

/// Second-order jet of a scalar field at a chart point: value, gradient and
/// Hessian with respect to (x1, x2, x3, x4). The Hessian is always filled
/// through `mirror_upper`, so hess(i, j) == hess(j, i) bit for bit.
struct Jet2 {
  double value = 0.0;
  Eigen::Vector4d grad = Eigen::Vector4d::Zero();
  Eigen::Matrix4d hess = Eigen::Matrix4d::Zero();

  static Jet2 constant(double c) {
    Jet2 j;
    j.value = c;
    return j;
  }

  /// The coordinate function x^{index+1} (0-based index).
  static Jet2 coordinate(int index, double at) {
    Jet2 j;
    j.value = at;
    j.grad[index] = 1.0;
    return j;
  }
};

namespace detail {

inline void mirror_upper(Eigen::Matrix4d& h) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) h(j, i) = h(i, j);
}

// Chain rule for a unary function with derivatives f0, f1, f2 at u.value.
inline Jet2 chain(const Jet2& u, double f0, double f1, double f2) {
  Jet2 r;
  r.value = f0;
  r.grad = f1 * u.grad;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j)
      r.hess(i, j) = f2 * u.grad[i] * u.grad[j] + f1 * u.hess(i, j);
  mirror_upper(r.hess);
  return r;
}

}  // namespace detail

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
  Jet2 r;
  r.value = a.value + b.value;
  r.grad = a.grad + b.grad;
  r.hess = a.hess + b.hess;
  return r;
}

inline Jet2 operator-(const Jet2& a, const Jet2& b) {
  Jet2 r;
  r.value = a.value - b.value;
  r.grad = a.grad - b.grad;
  r.hess = a.hess - b.hess;
  return r;
}

inline Jet2 operator-(const Jet2& a) {
  Jet2 r;
  r.value = -a.value;
  r.grad = -a.grad;
  r.hess = -a.hess;
  return r;
}

inline Jet2 operator*(const Jet2& a, const Jet2& b) {
  Jet2 r;
  r.value = a.value * b.value;
  r.grad = a.grad * b.value + a.value * b.grad;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j)
      r.hess(i, j) = a.hess(i, j) * b.value + a.grad[i] * b.grad[j] +
                     b.grad[i] * a.grad[j] + a.value * b.hess(i, j);
  detail::mirror_upper(r.hess);
  return r;
}

inline Jet2 operator*(double s, const Jet2& a) {
  Jet2 r;
  r.value = s * a.value;
  r.grad = s * a.grad;
  r.hess = s * a.hess;
  return r;
}

/// Reciprocal; the caller guarantees a.value != 0.
inline Jet2 reciprocal(const Jet2& a) {
  const double v = a.value;
  return detail::chain(a, 1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v));
}

inline Jet2 operator/(const Jet2& a, const Jet2& b) { return a * reciprocal(b); }

inline Jet2 exp(const Jet2& a) {
  const double e = std::exp(a.value);
  return detail::chain(a, e, e, e);
}

inline Jet2 log(const Jet2& a) {
  const double v = a.value;
  return detail::chain(a, std::log(v), 1.0 / v, -1.0 / (v * v));
}

inline Jet2 sin(const Jet2& a) {
  const double s = std::sin(a.value), c = std::cos(a.value);
  return detail::chain(a, s, c, -s);
}

inline Jet2 cos(const Jet2& a) {
  const double s = std::sin(a.value), c = std::cos(a.value);
  return detail::chain(a, c, -s, -c);
}

inline Jet2 sqrt(const Jet2& a) {
  const double r = std::sqrt(a.value);
  return detail::chain(a, r, 0.5 / r, -0.25 / (r * a.value));
}

/// Integer power. Negative exponents require a.value != 0.
inline Jet2 pow(const Jet2& a, int n) {
  if (n == 0) return Jet2::constant(1.0);
  const double v = a.value;
  const double f0 = std::pow(v, n);
  const double f1 = n * std::pow(v, n - 1);
  const double f2 = n == 1 ? 0.0 : double(n) * (n - 1) * std::pow(v, n - 2);
  return detail::chain(a, f0, f1, f2);
}

/// First-order jet in the four chart directions. Used as an Eigen scalar so
/// that the connection can be differentiated by running the same templated
/// code on dual numbers.
struct Dual4 {
  double v = 0.0;
  Eigen::Vector4d d = Eigen::Vector4d::Zero();

  Dual4() = default;
  Dual4(double value) : v(value) {}  // NOLINT: implicit promotion from constants
  Dual4(double value, const Eigen::Vector4d& deriv) : v(value), d(deriv) {}

  Dual4& operator+=(const Dual4& o) {
    v += o.v;
    d += o.d;
    return *this;
  }
  Dual4& operator-=(const Dual4& o) {
    v -= o.v;
    d -= o.d;
    return *this;
  }
  Dual4& operator*=(const Dual4& o) {
    d = d * o.v + v * o.d;
    v *= o.v;
    return *this;
  }
  Dual4& operator/=(const Dual4& o) {
    d = (d * o.v - v * o.d) / (o.v * o.v);
    v /= o.v;
    return *this;
  }
};

inline Dual4 operator+(Dual4 a, const Dual4& b) { return a += b; }
inline Dual4 operator-(Dual4 a, const Dual4& b) { return a -= b; }
inline Dual4 operator*(Dual4 a, const Dual4& b) { return a *= b; }
inline Dual4 operator/(Dual4 a, const Dual4& b) { return a /= b; }
inline Dual4 operator-(const Dual4& a) { return {-a.v, -a.d}; }
inline bool operator==(const Dual4& a, const Dual4& b) { return a.v == b.v && a.d == b.d; }
inline bool operator!=(const Dual4& a, const Dual4& b) { return !(a == b); }

inline double value_of(double x) { return x; }
inline double value_of(const Dual4& x) { return x.v; }

}  // namespace skewgeom

namespace Eigen {

template <>
struct NumTraits<skewgeom::Dual4> : NumTraits<double> {
  using Real = skewgeom::Dual4;
  using NonInteger = skewgeom::Dual4;
  using Nested = skewgeom::Dual4;
  using Literal = skewgeom::Dual4;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 5,
    AddCost = 5,
    MulCost = 13
  };
};

}  // namespace Eigen

#endif  // SKEWGEOM_JET_HPP
