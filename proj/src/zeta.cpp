#include "breg/zeta.hpp"

namespace breg {

// Euler-Maclaurin for the tail sum_{k>=K} (k+a)^{-2}:
//   integral (K+a)^{-1} + f(K)/2 + sum_j B_{2j} (K+a)^{-2j-1}
// (the derivative factors cancel the (2j)! in B_{2j}/(2j)! exactly).
// With K = 64 and 8 Bernoulli terms the first omitted term is
// |B_18| * 64^{-19} < 1e-33.
DD hurwitz_zeta2(DD a) {
  const int K = 64;
  DD s(0.0);
  for (int k = 0; k < K; ++k) {
    DD t = DD(double(k)) + a;
    s += DD(1.0) / (t * t);
  }
  DD x = DD(double(K)) + a;
  DD inv = DD(1.0) / x;
  DD inv2 = inv * inv;
  s += inv;                 // integral
  s += inv2 / DD(2.0);      // f(K)/2
  // B_2..B_16
  static const double bnum[8] = {1, -1, 1, -1, 5, -691, 7, -3617};
  static const double bden[8] = {6, 30, 42, 30, 66, 2730, 6, 510};
  DD p = inv2 * inv;  // (K+a)^{-3}
  for (int j = 0; j < 8; ++j) {
    s += (DD(bnum[j]) / DD(bden[j])) * p;
    p = p * inv2;
  }
  return s;
}

DD zeta_F2() {
  DD pi = dd_pi();
  DD zeta2 = pi * pi / DD(6.0);
  DD L = (hurwitz_zeta2(DD(1.0) / DD(3.0)) - hurwitz_zeta2(DD(2.0) / DD(3.0))) / DD(9.0);
  return zeta2 * L;
}

DD zeta_star_minus1() {
  DD pi = dd_pi();
  DD b = DD(3.0) / (DD(4.0) * pi * pi);
  DD pow32 = b * dd_sqrt(b);
  return -(pow32 * zeta_F2());
}

DD regulator_target() { return dd_abs(zeta_star_minus1()); }

}  // namespace breg
