#pragma once

// Small dense complex matrices over double or DD, sized for N <= 8.
// Used by the embedded side only: spectral bounds and the power series.

#include <vector>

#include "breg/dd.hpp"

namespace breg {

inline double r_sqrt(double x) { return x < 0 ? 0.0 : std::sqrt(x); }
inline DD r_sqrt(DD x) { return dd_sqrt(x); }

template <typename R>
struct NMat {
  int n = 0;
  std::vector<Cx<R>> a;  // row-major

  NMat() = default;
  explicit NMat(int n_) : n(n_), a(size_t(n_) * n_) {}
  static NMat identity(int n_) {
    NMat m(n_);
    for (int i = 0; i < n_; ++i) m(i, i) = Cx<R>(R(1.0));
    return m;
  }
  Cx<R>& operator()(int i, int j) { return a[size_t(i) * n + j]; }
  const Cx<R>& operator()(int i, int j) const { return a[size_t(i) * n + j]; }
};

template <typename R>
NMat<R> operator*(const NMat<R>& x, const NMat<R>& y) {
  NMat<R> r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      Cx<R> v = x(i, k);
      if (to_double(v.re) == 0.0 && to_double(v.im) == 0.0) continue;
      for (int j = 0; j < x.n; ++j) r(i, j) += v * y(k, j);
    }
  return r;
}

template <typename R>
NMat<R> operator-(const NMat<R>& x, const NMat<R>& y) {
  NMat<R> r(x.n);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

template <typename R>
NMat<R> hermitian_transpose(const NMat<R>& x) {
  NMat<R> r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) r(i, j) = conj(x(j, i));
  return r;
}

template <typename R>
Cx<R> trace_of_product(const NMat<R>& x, const NMat<R>& y) {
  Cx<R> t;
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) t += x(i, j) * y(j, i);
  return t;
}

template <typename R>
NMat<R> scale(const NMat<R>& x, R s) {
  NMat<R> r(x.n);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = s * x.a[i];
  return r;
}

// Largest eigenvalue of a Hermitian matrix by cyclic complex Jacobi sweeps.
// Only the diagonal is needed, so no eigenvectors are accumulated.
template <typename R>
R jacobi_max_eigenvalue(NMat<R> h) {
  int n = h.n;
  for (int sweep = 0; sweep < 30; ++sweep) {
    R off(0.0);
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += abs2(h(p, q));
    if (to_double(off) < 1e-60) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        R b2 = abs2(h(p, q));
        if (to_double(b2) == 0.0) continue;
        R babs = r_sqrt(b2);
        Cx<R> phase = h(p, q) / babs;  // e^{i phi}
        R apq = h(p, p).re, aqq = h(q, q).re;
        R theta = (apq - aqq) / (R(2.0) * babs);
        double th = to_double(theta);
        R t;
        {
          R at = theta;
          if (th < 0) at = -at;
          R tt = R(1.0) / (at + r_sqrt(at * at + R(1.0)));
          t = (th < 0) ? -tt : tt;
        }
        R c = R(1.0) / r_sqrt(t * t + R(1.0));
        R sig = c * t;
        Cx<R> s = sig * phase;  // rotation parameter
        // apply U on rows/cols p,q with U = [[c, -s],[conj(s), c]]
        for (int k = 0; k < n; ++k) {
          Cx<R> hkp = h(k, p), hkq = h(k, q);
          h(k, p) = c * hkp + conj(s) * hkq;
          h(k, q) = -(R(1.0) * s) * hkp + c * hkq;
        }
        for (int k = 0; k < n; ++k) {
          Cx<R> hpk = h(p, k), hqk = h(q, k);
          h(p, k) = c * hpk + s * hqk;
          h(q, k) = -(R(1.0) * conj(s)) * hpk + c * hqk;
        }
      }
  }
  R best = h(0, 0).re;
  for (int i = 1; i < n; ++i)
    if (h(i, i).re > best) best = h(i, i).re;
  return best;
}

}  // namespace breg
