#include "breg/dd.hpp"

#include <cstdlib>
#include <sstream>

namespace breg {

// Taylor evaluation on |t| <= pi/4 (worst term ~ (pi/4)^33/33! ~ 1e-41).
static void sincos_taylor(DD t, DD& s, DD& c) {
  DD t2 = t * t;
  // sin
  DD term = t, sum = t;
  for (int k = 1; k <= 17; ++k) {
    term = term * t2 / DD(double((2 * k) * (2 * k + 1)));
    sum = (k % 2) ? sum - term : sum + term;
  }
  s = sum;
  // cos
  term = DD(1.0);
  sum = DD(1.0);
  for (int k = 1; k <= 17; ++k) {
    term = term * t2 / DD(double((2 * k - 1) * (2 * k)));
    sum = (k % 2) ? sum - term : sum + term;
  }
  c = sum;
}

void dd_sincos(DD theta, DD& s, DD& c) {
  // reduce to [0, 2pi)
  DD tp = dd_two_pi();
  while (theta >= tp) theta -= tp;
  while (theta < DD(0.0)) theta += tp;
  // quadrant reduction by pi/2
  DD half_pi = dd_pi() / DD(2.0);
  int q = 0;
  while (theta > half_pi / DD(2.0) && q < 4) {  // bring into [-pi/4, pi/4] mod pi/2
    theta -= half_pi;
    ++q;
  }
  DD ss, cc;
  sincos_taylor(theta, ss, cc);
  switch (q % 4) {
    case 0: s = ss; c = cc; break;
    case 1: s = cc; c = -ss; break;
    case 2: s = -ss; c = -cc; break;
    default: s = -cc; c = ss; break;
  }
}

bool dd_from_hex(const std::string& str, DD& out) {
  std::istringstream is(str);
  std::string a, b;
  if (!(is >> a >> b)) return false;
  char* end = nullptr;
  double hi = std::strtod(a.c_str(), &end);
  if (end == a.c_str()) return false;
  double lo = std::strtod(b.c_str(), &end);
  if (end == b.c_str()) return false;
  out = DD(hi, lo);
  return true;
}

}  // namespace breg
