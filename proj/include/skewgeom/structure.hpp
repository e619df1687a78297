#ifndef SKEWGEOM_STRUCTURE_HPP
#define SKEWGEOM_STRUCTURE_HPP

#include "skewgeom/tensor4.hpp"

#include <Eigen/Core>

namespace skewgeom {

// The skew-circulant structure and the matrices built from it. All
// matrices act on column vectors: column j holds the components of the
// image of e_j.

using Mat4i = Eigen::Matrix<int, 4, 4>;

/// S e1 = -e4, S e2 = e1, S e3 = e2, S e4 = e3; S^4 = -id.
inline Mat4i structure_S() {
  Mat4i s;
  s << 0, 1, 0, 0,
       0, 0, 1, 0,
       0, 0, 0, 1,
      -1, 0, 0, 0;
  return s;
}

/// J = S^2, an almost complex structure.
inline Mat4i structure_J() { return structure_S() * structure_S(); }

/// Phi = S - S^3 (symmetric, Phi^2 = 2 id).
inline Mat4i structure_Phi() {
  const Mat4i s = structure_S();
  return s - s * s * s;
}

template <class T>
Mat4<T> as(const Mat4i& m) {
  return m.unaryExpr([](int x) { return T(double(x)); });
}

/// g for the functions (A, B):
///   [ A  B  0 -B ]
///   [ B  A  B  0 ]
///   [ 0  B  A  B ]
///   [-B  0  B  A ]
template <class T>
Mat4<T> metric_matrix(const T& a, const T& b) {
  const T z(0.0);
  Mat4<T> g;
  g << a, b, z, -b,
       b, a, b, z,
       z, b, a, b,
      -b, z, b, a;
  return g;
}

/// The associated metric g~(x, y) = g(x, Sy) + g(Sx, y) in closed form:
/// diagonal 2B, off-diagonal pattern of g with B replaced by A.
template <class T>
Mat4<T> associated_matrix(const T& a, const T& b) {
  const T z(0.0);
  const T b2 = b + b;
  Mat4<T> g;
  g << b2, a, z, -a,
       a, b2, a, z,
       z, a, b2, a,
      -a, z, a, b2;
  return g;
}

/// Closed-form g^{-1} = (1/D) [A -B 0 B; -B A -B 0; 0 -B A -B; B 0 -B A],
/// D = A^2 - 2B^2.
template <class T>
Mat4<T> metric_inverse_closed_form(const T& a, const T& b) {
  const T d = a * a - T(2.0) * b * b;
  const T z(0.0);
  Mat4<T> m;
  m << a, -b, z, b,
      -b, a, -b, z,
       z, -b, a, -b,
       b, z, -b, a;
  return m / d;
}

/// Closed-form g~^{-1} = 1/(2D) [-2B A 0 -A; A -2B A 0; 0 A -2B A; -A 0 A -2B].
template <class T>
Mat4<T> associated_inverse_closed_form(const T& a, const T& b) {
  const T d = a * a - T(2.0) * b * b;
  const T z(0.0);
  const T mb2 = -(b + b);
  Mat4<T> m;
  m << mb2, a, z, -a,
       a, mb2, a, z,
       z, a, mb2, a,
      -a, z, a, mb2;
  return m / (T(2.0) * d);
}

}  // namespace skewgeom

#endif  // SKEWGEOM_STRUCTURE_HPP
