#pragma once

// Double-double arithmetic (~106-bit significand) built from pairs of
// IEEE doubles with error-free transformations.  This is the working
// precision of the numeric side of the pipeline; the symbolic side never
// touches floating point.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

namespace breg {

struct DD {
  double hi = 0.0;
  double lo = 0.0;

  DD() = default;
  DD(double h) : hi(h), lo(0.0) {}
  DD(double h, double l) : hi(h), lo(l) {}
  static DD from_int(long long n) {
    // |n| < 2^53 in all uses, but split anyway
    double h = static_cast<double>(n);
    double l = static_cast<double>(n - static_cast<long long>(h));
    return DD(h, l);
  }
  double to_double() const { return hi + lo; }
  bool is_zero() const { return hi == 0.0 && lo == 0.0; }
};

namespace ddk {  // kernels
inline void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  double bb = s - a;
  e = (a - (s - bb)) + (b - bb);
}
inline void quick_two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  e = b - (s - a);
}
inline void two_prod(double a, double b, double& p, double& e) {
  p = a * b;
  e = std::fma(a, b, -p);
}
}  // namespace ddk

inline DD operator+(DD a, DD b) {
  double s1, s2, t1, t2;
  ddk::two_sum(a.hi, b.hi, s1, s2);
  ddk::two_sum(a.lo, b.lo, t1, t2);
  s2 += t1;
  ddk::quick_two_sum(s1, s2, s1, s2);
  s2 += t2;
  ddk::quick_two_sum(s1, s2, s1, s2);
  return DD(s1, s2);
}
inline DD operator-(DD a) { return DD(-a.hi, -a.lo); }
inline DD operator-(DD a, DD b) { return a + (-b); }
inline DD operator*(DD a, DD b) {
  double p1, p2;
  ddk::two_prod(a.hi, b.hi, p1, p2);
  p2 += a.hi * b.lo + a.lo * b.hi;
  ddk::quick_two_sum(p1, p2, p1, p2);
  return DD(p1, p2);
}
inline DD operator/(DD a, DD b) {
  double q1 = a.hi / b.hi;
  DD r = a - DD(q1) * b;
  double q2 = r.hi / b.hi;
  r = r - DD(q2) * b;
  double q3 = r.hi / b.hi;
  double s, e;
  ddk::quick_two_sum(q1, q2, s, e);
  DD q(s, e);
  return q + DD(q3);
}
inline DD& operator+=(DD& a, DD b) { a = a + b; return a; }
inline DD& operator-=(DD& a, DD b) { a = a - b; return a; }
inline DD& operator*=(DD& a, DD b) { a = a * b; return a; }
inline DD& operator/=(DD& a, DD b) { a = a / b; return a; }
inline bool operator<(DD a, DD b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(DD a, DD b) { return b < a; }
inline bool operator<=(DD a, DD b) { return !(b < a); }
inline bool operator>=(DD a, DD b) { return !(a < b); }
inline bool operator==(DD a, DD b) { return a.hi == b.hi && a.lo == b.lo; }

inline DD dd_abs(DD a) { return (a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0)) ? -a : a; }

inline DD dd_sqrt(DD x) {
  if (x.hi <= 0.0) return DD(0.0);
  double d = std::sqrt(x.hi);
  DD r = x - DD(d) * DD(d);
  DD corr = r / DD(2.0 * d);
  return DD(d) + corr;
}

// pi = pi_hi + pi_lo to ~32 digits
inline DD dd_pi() { return DD(3.141592653589793116e+00, 1.224646799147353207e-16); }
inline DD dd_two_pi() { return DD(6.283185307179586232e+00, 2.449293598294706414e-16); }

// sin/cos by Taylor series after reduction to |t| <= pi/4.
// Arguments in all uses are 2*pi*k/n with 0 <= k < n, so the reduction is a
// handful of exact-ish subtractions; accuracy ~1e-30 abs.
void dd_sincos(DD theta, DD& s, DD& c);

inline std::string dd_hex(DD a) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%a %a", a.hi, a.lo);
  return buf;
}
bool dd_from_hex(const std::string& s, DD& out);

// Generic complex over double or DD.
template <typename R>
struct Cx {
  R re{}, im{};
  Cx() = default;
  Cx(R r) : re(r), im(R(0.0)) {}
  Cx(R r, R i) : re(r), im(i) {}
};
template <typename R> inline Cx<R> operator+(Cx<R> a, Cx<R> b) { return {a.re + b.re, a.im + b.im}; }
template <typename R> inline Cx<R> operator-(Cx<R> a, Cx<R> b) { return {a.re - b.re, a.im - b.im}; }
template <typename R> inline Cx<R> operator-(Cx<R> a) { return {-a.re, -a.im}; }
template <typename R> inline Cx<R> operator*(Cx<R> a, Cx<R> b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <typename R> inline Cx<R> conj(Cx<R> a) { return {a.re, -a.im}; }
template <typename R> inline R abs2(Cx<R> a) { return a.re * a.re + a.im * a.im; }
template <typename R> inline Cx<R> operator*(R s, Cx<R> a) { return {s * a.re, s * a.im}; }
template <typename R> inline Cx<R> operator/(Cx<R> a, R s) { return {a.re / s, a.im / s}; }
template <typename R> inline Cx<R>& operator+=(Cx<R>& a, Cx<R> b) { a = a + b; return a; }
template <typename R> inline Cx<R>& operator-=(Cx<R>& a, Cx<R> b) { a = a - b; return a; }

inline double to_double(double x) { return x; }
inline double to_double(DD x) { return x.to_double(); }

}  // namespace breg
