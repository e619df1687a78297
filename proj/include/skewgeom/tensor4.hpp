#ifndef SKEWGEOM_TENSOR4_HPP
#define SKEWGEOM_TENSOR4_HPP

#include "skewgeom/errors.hpp"
#include "skewgeom/jet.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace skewgeom {

// Fixed dimension 4 everywhere. Indices are 0-based in code; diagnostics
// print them 1-based.

template <class T>
using Vec4 = Eigen::Matrix<T, 4, 1>;
template <class T>
using Mat4 = Eigen::Matrix<T, 4, 4>;

using Vec4d = Vec4<double>;
using Mat4d = Mat4<double>;

struct ChartPoint {
  Eigen::Vector4d x = Eigen::Vector4d::Zero();
};

/// Dense 4x4x4 array, element (i, j, k) at i*16 + j*4 + k.
template <class T>
class Tensor3 {
 public:
  Tensor3() { c_.fill(T(0.0)); }

  T& operator()(int i, int j, int k) { return c_[i * 16 + j * 4 + k]; }
  const T& operator()(int i, int j, int k) const { return c_[i * 16 + j * 4 + k]; }

  static Tensor3 Zero() { return Tensor3(); }

  Tensor3& operator+=(const Tensor3& o) {
    for (int n = 0; n < 64; ++n) c_[n] += o.c_[n];
    return *this;
  }
  Tensor3& operator-=(const Tensor3& o) {
    for (int n = 0; n < 64; ++n) c_[n] -= o.c_[n];
    return *this;
  }
  Tensor3& operator*=(const T& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend Tensor3 operator*(const T& s, Tensor3 a) { return a *= s; }

  const std::array<T, 64>& data() const { return c_; }

 private:
  std::array<T, 64> c_;
};

/// Dense 4x4x4x4 array, element (i, j, k, l) at i*64 + j*16 + k*4 + l.
template <class T>
class Tensor4 {
 public:
  Tensor4() { c_.fill(T(0.0)); }

  T& operator()(int i, int j, int k, int l) { return c_[i * 64 + j * 16 + k * 4 + l]; }
  const T& operator()(int i, int j, int k, int l) const {
    return c_[i * 64 + j * 16 + k * 4 + l];
  }

  static Tensor4 Zero() { return Tensor4(); }

  Tensor4& operator+=(const Tensor4& o) {
    for (int n = 0; n < 256; ++n) c_[n] += o.c_[n];
    return *this;
  }
  Tensor4& operator-=(const Tensor4& o) {
    for (int n = 0; n < 256; ++n) c_[n] -= o.c_[n];
    return *this;
  }
  Tensor4& operator*=(const T& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend Tensor4 operator+(Tensor4 a, const Tensor4& b) { return a += b; }
  friend Tensor4 operator-(Tensor4 a, const Tensor4& b) { return a -= b; }
  friend Tensor4 operator*(const T& s, Tensor4 a) { return a *= s; }

  const std::array<T, 256>& data() const { return c_; }

 private:
  std::array<T, 256> c_;
};

using Tensor3d = Tensor3<double>;
using Tensor4d = Tensor4<double>;

inline double max_abs(double x) { return std::abs(x); }

template <class Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

inline double max_abs(const Tensor3d& t) {
  double m = 0.0;
  for (double x : t.data()) m = std::max(m, std::abs(x));
  return m;
}

inline double max_abs(const Tensor4d& t) {
  double m = 0.0;
  for (double x : t.data()) m = std::max(m, std::abs(x));
  return m;
}

// Elementwise conversion from dual-valued containers.
inline Tensor3d values(const Tensor3<Dual4>& t) {
  Tensor3d r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) r(i, j, k) = t(i, j, k).v;
  return r;
}

inline Mat4d values(const Mat4<Dual4>& m) {
  return m.unaryExpr([](const Dual4& x) { return x.v; });
}

/// Determinant by Laplace expansion over 2x2 minors; valid for any ring scalar.
template <class T>
T determinant4(const Mat4<T>& m) {
  const T s0 = m(0, 0) * m(1, 1) - m(1, 0) * m(0, 1);
  const T s1 = m(0, 0) * m(1, 2) - m(1, 0) * m(0, 2);
  const T s2 = m(0, 0) * m(1, 3) - m(1, 0) * m(0, 3);
  const T s3 = m(0, 1) * m(1, 2) - m(1, 1) * m(0, 2);
  const T s4 = m(0, 1) * m(1, 3) - m(1, 1) * m(0, 3);
  const T s5 = m(0, 2) * m(1, 3) - m(1, 2) * m(0, 3);
  const T c5 = m(2, 2) * m(3, 3) - m(3, 2) * m(2, 3);
  const T c4 = m(2, 1) * m(3, 3) - m(3, 1) * m(2, 3);
  const T c3 = m(2, 1) * m(3, 2) - m(3, 1) * m(2, 2);
  const T c2 = m(2, 0) * m(3, 3) - m(3, 0) * m(2, 3);
  const T c1 = m(2, 0) * m(3, 2) - m(3, 0) * m(2, 2);
  const T c0 = m(2, 0) * m(3, 1) - m(3, 0) * m(2, 1);
  return s0 * c5 - s1 * c4 + s2 * c3 + s3 * c2 - s4 * c1 + s5 * c0;
}

/// Inverse through the adjugate. Throws SingularMatrixError when
/// |det| <= 1e-30 * (max |entry|)^4.
template <class T>
Mat4<T> invert4(const Mat4<T>& m) {
  const T s0 = m(0, 0) * m(1, 1) - m(1, 0) * m(0, 1);
  const T s1 = m(0, 0) * m(1, 2) - m(1, 0) * m(0, 2);
  const T s2 = m(0, 0) * m(1, 3) - m(1, 0) * m(0, 3);
  const T s3 = m(0, 1) * m(1, 2) - m(1, 1) * m(0, 2);
  const T s4 = m(0, 1) * m(1, 3) - m(1, 1) * m(0, 3);
  const T s5 = m(0, 2) * m(1, 3) - m(1, 2) * m(0, 3);
  const T c5 = m(2, 2) * m(3, 3) - m(3, 2) * m(2, 3);
  const T c4 = m(2, 1) * m(3, 3) - m(3, 1) * m(2, 3);
  const T c3 = m(2, 1) * m(3, 2) - m(3, 1) * m(2, 2);
  const T c2 = m(2, 0) * m(3, 3) - m(3, 0) * m(2, 3);
  const T c1 = m(2, 0) * m(3, 2) - m(3, 0) * m(2, 2);
  const T c0 = m(2, 0) * m(3, 1) - m(3, 0) * m(2, 1);
  const T det = s0 * c5 - s1 * c4 + s2 * c3 + s3 * c2 - s4 * c1 + s5 * c0;

  double scale = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) scale = std::max(scale, std::abs(value_of(m(i, j))));
  const double detv = value_of(det);
  if (!(std::abs(detv) > 1e-30 * scale * scale * scale * scale)) throw SingularMatrixError(detv);

  const T inv = T(1.0) / det;
  Mat4<T> r;
  r(0, 0) = (m(1, 1) * c5 - m(1, 2) * c4 + m(1, 3) * c3) * inv;
  r(0, 1) = (-m(0, 1) * c5 + m(0, 2) * c4 - m(0, 3) * c3) * inv;
  r(0, 2) = (m(3, 1) * s5 - m(3, 2) * s4 + m(3, 3) * s3) * inv;
  r(0, 3) = (-m(2, 1) * s5 + m(2, 2) * s4 - m(2, 3) * s3) * inv;
  r(1, 0) = (-m(1, 0) * c5 + m(1, 2) * c2 - m(1, 3) * c1) * inv;
  r(1, 1) = (m(0, 0) * c5 - m(0, 2) * c2 + m(0, 3) * c1) * inv;
  r(1, 2) = (-m(3, 0) * s5 + m(3, 2) * s2 - m(3, 3) * s1) * inv;
  r(1, 3) = (m(2, 0) * s5 - m(2, 2) * s2 + m(2, 3) * s1) * inv;
  r(2, 0) = (m(1, 0) * c4 - m(1, 1) * c2 + m(1, 3) * c0) * inv;
  r(2, 1) = (-m(0, 0) * c4 + m(0, 1) * c2 - m(0, 3) * c0) * inv;
  r(2, 2) = (m(3, 0) * s4 - m(3, 1) * s2 + m(3, 3) * s0) * inv;
  r(2, 3) = (-m(2, 0) * s4 + m(2, 1) * s2 - m(2, 3) * s0) * inv;
  r(3, 0) = (-m(1, 0) * c3 + m(1, 1) * c1 - m(1, 2) * c0) * inv;
  r(3, 1) = (m(0, 0) * c3 - m(0, 1) * c1 + m(0, 2) * c0) * inv;
  r(3, 2) = (-m(3, 0) * s3 + m(3, 1) * s1 - m(3, 2) * s0) * inv;
  r(3, 3) = (m(2, 0) * s3 - m(2, 1) * s1 + m(2, 2) * s0) * inv;
  return r;
}

namespace detail {

inline void check_pair(int rank, int p, int q) {
  if (p < 0 || q < 0 || p >= rank || q >= rank || p == q)
    throw IndexError("cannot contract positions " + std::to_string(p + 1) + " and " +
                     std::to_string(q + 1) + " of a rank-" + std::to_string(rank) + " tensor");
}

}  // namespace detail

/// Full contraction of a rank-2 tensor against a (0,2) or (2,0) pairing
/// matrix: sum_ij pair(i,j) m(i,j). With pair = identity this is the trace.
template <class T>
T contract(const Mat4<T>& m, const Mat4<T>& pair) {
  T s(0.0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s += pair(i, j) * m(i, j);
  return s;
}

template <class T>
T contract(const Mat4<T>& m) {
  return contract(m, Mat4<T>(Mat4<T>::Identity()));
}

/// Contract positions p, q (0-based) of a rank-3 tensor through `pair`;
/// the free index is the remaining one.
template <class T>
Vec4<T> contract(const Tensor3<T>& t, int p, int q, const Mat4<T>& pair) {
  detail::check_pair(3, p, q);
  Vec4<T> r = Vec4<T>::Zero();
  int idx[3];
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int f = 0; f < 4; ++f) {
        int free = 3 - p - q;
        idx[p] = a;
        idx[q] = b;
        idx[free] = f;
        r[f] += pair(a, b) * t(idx[0], idx[1], idx[2]);
      }
  return r;
}

template <class T>
Vec4<T> contract(const Tensor3<T>& t, int p, int q) {
  return contract(t, p, q, Mat4<T>(Mat4<T>::Identity()));
}

/// Contract positions p, q of a rank-4 tensor through `pair`; the two free
/// indices keep their relative order.
template <class T>
Mat4<T> contract(const Tensor4<T>& t, int p, int q, const Mat4<T>& pair) {
  detail::check_pair(4, p, q);
  int free[2], n = 0;
  for (int s = 0; s < 4; ++s)
    if (s != p && s != q) free[n++] = s;
  Mat4<T> r = Mat4<T>::Zero();
  int idx[4];
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) {
          idx[p] = a;
          idx[q] = b;
          idx[free[0]] = u;
          idx[free[1]] = v;
          r(u, v) += pair(a, b) * t(idx[0], idx[1], idx[2], idx[3]);
        }
  return r;
}

/// v^k = inv(k, s) v_s.
template <class T>
Vec4<T> raise_index(const Vec4<T>& v, const Mat4<T>& metric_inverse) {
  return metric_inverse * v;
}

/// Raise the index at `position` (0-based) of a rank-3 tensor.
template <class T>
Tensor3<T> raise_index(const Tensor3<T>& t, int position, const Mat4<T>& metric_inverse) {
  if (position < 0 || position > 2)
    throw IndexError("index position " + std::to_string(position + 1) +
                     " out of range for a rank-3 tensor");
  Tensor3<T> r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        T s(0.0);
        for (int a = 0; a < 4; ++a) {
          int idx[3] = {i, j, k};
          const int kept = idx[position];
          idx[position] = a;
          s += metric_inverse(kept, a) * t(idx[0], idx[1], idx[2]);
        }
        r(i, j, k) = s;
      }
  return r;
}

/// Lowering is raising with the metric itself.
template <class T>
Tensor3<T> lower_index(const Tensor3<T>& t, int position, const Mat4<T>& metric) {
  return raise_index(t, position, metric);
}

}  // namespace skewgeom

#endif  // SKEWGEOM_TENSOR4_HPP
