#ifndef SKEWGEOM_GEOMETRY_HPP
#define SKEWGEOM_GEOMETRY_HPP

// Scalar-generic building blocks shared by the chart, hermitian, conformal
// and curvature modules. Running them with T = double gives pointwise
// values; with T = Dual4 every output also carries its first partials,
// which is how the curvature tensors get dGamma without finite differences.

#include "skewgeom/jet.hpp"
#include "skewgeom/structure.hpp"
#include "skewgeom/tensor4.hpp"

#include <array>

namespace skewgeom {

/// A, B and their first partials at a point.
template <class T>
struct MetricField {
  T A{0.0}, B{0.0};
  Vec4<T> dA = Vec4<T>::Zero();
  Vec4<T> dB = Vec4<T>::Zero();
};

inline MetricField<double> first_order(const Jet2& a, const Jet2& b) {
  MetricField<double> f;
  f.A = a.value;
  f.B = b.value;
  f.dA = a.grad;
  f.dB = b.grad;
  return f;
}

/// Promote second-order jets to dual-valued first-order data: the value slot
/// of each dual is A (or A_m), the derivative slot is grad A (or row m of
/// hess A).
inline MetricField<Dual4> second_order(const Jet2& a, const Jet2& b) {
  MetricField<Dual4> f;
  f.A = Dual4(a.value, a.grad);
  f.B = Dual4(b.value, b.grad);
  for (int m = 0; m < 4; ++m) {
    f.dA[m] = Dual4(a.grad[m], a.hess.row(m).transpose());
    f.dB[m] = Dual4(b.grad[m], b.hess.row(m).transpose());
  }
  return f;
}

template <class T>
using Partials = std::array<Mat4<T>, 4>;

template <class T>
Partials<T> metric_partials(const MetricField<T>& f) {
  Partials<T> d;
  for (int m = 0; m < 4; ++m) d[m] = metric_matrix(f.dA[m], f.dB[m]);
  return d;
}

template <class T>
Partials<T> associated_partials(const MetricField<T>& f) {
  Partials<T> d;
  for (int m = 0; m < 4; ++m) d[m] = associated_matrix(f.dA[m], f.dB[m]);
  return d;
}

/// Levi-Civita symbols gamma(k, i, j) = Gamma^k_ij of a (possibly
/// indefinite) metric h:  2 Gamma^k_ij = h^{ak}(d_i h_aj + d_j h_ai - d_a h_ij).
template <class T>
Tensor3<T> levi_civita(const Mat4<T>& h_inv, const Partials<T>& dh) {
  Tensor3<T> lower;  // (a, i, j)
  for (int a = 0; a < 4; ++a)
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) {
        const T v = T(0.5) * (dh[i](a, j) + dh[j](a, i) - dh[a](i, j));
        lower(a, i, j) = v;
        lower(a, j, i) = v;
      }
  Tensor3<T> gamma;
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) {
        T s(0.0);
        for (int a = 0; a < 4; ++a) s += h_inv(k, a) * lower(a, i, j);
        gamma(k, i, j) = s;
        gamma(k, j, i) = s;
      }
  return gamma;
}

/// (nabla_i h)_jk = d_i h_jk - Gamma^a_ij h_ak - Gamma^a_ik h_ja for any (0,2) tensor h.
template <class T>
Tensor3<T> covariant_derivative(const Tensor3<T>& gamma, const Mat4<T>& h,
                                const Partials<T>& dh) {
  Tensor3<T> r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        T s = dh[i](j, k);
        for (int a = 0; a < 4; ++a) s -= gamma(a, i, j) * h(a, k) + gamma(a, i, k) * h(j, a);
        r(i, j, k) = s;
      }
  return r;
}

/// (nabla_i L)^k_j = Gamma^k_ia L^a_j - L^k_a Gamma^a_ij for a (1,1) tensor with
/// constant components.
template <class T>
Tensor3<T> covariant_derivative_endomorphism(const Tensor3<T>& gamma, const Mat4<T>& l) {
  Tensor3<T> r;  // (i, k, j)
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) {
        T s(0.0);
        for (int a = 0; a < 4; ++a) s += gamma(k, i, a) * l(a, j) - l(k, a) * gamma(a, i, j);
        r(i, k, j) = s;
      }
  return r;
}

/// Curvature endomorphism from dual-valued symbols:
/// op(i, j, k, p) = [R(e_i, e_j) e_k]^p
///   = d_i Gamma^p_jk - d_j Gamma^p_ik + Gamma^a_jk Gamma^p_ia - Gamma^a_ik Gamma^p_ja.
inline Tensor4d curvature_endomorphism(const Tensor3<Dual4>& gamma) {
  Tensor4d op;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int p = 0; p < 4; ++p) {
          double s = gamma(p, j, k).d[i] - gamma(p, i, k).d[j];
          for (int a = 0; a < 4; ++a)
            s += gamma(a, j, k).v * gamma(p, i, a).v - gamma(a, i, k).v * gamma(p, j, a).v;
          op(i, j, k, p) = s;
        }
  return op;
}

/// R(x, y, z, u) = h(R(x, y) z, u).
inline Tensor4d lower_curvature(const Tensor4d& op, const Mat4d& h) {
  Tensor4d r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int s = 0; s < 4; ++s) {
          double v = 0.0;
          for (int p = 0; p < 4; ++p) v += h(s, p) * op(i, j, k, p);
          r(i, j, k, s) = v;
        }
  return r;
}

}  // namespace skewgeom

#endif  // SKEWGEOM_GEOMETRY_HPP
