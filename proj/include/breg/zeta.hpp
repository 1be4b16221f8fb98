#pragma once

// Dedekind zeta target for F = Q(zeta_3): zeta_F(2) via Hurwitz zeta values
// and the leading Taylor coefficient zeta_F^*(-1), the external anchor the
// regulator computation is compared against.

#include "breg/dd.hpp"

namespace breg {

// zeta(2, a) = sum_{k>=0} (k+a)^{-2}, 0 < a <= 1, Euler-Maclaurin with the
// remainder below 1e-32 absolute.
DD hurwitz_zeta2(DD a);

// zeta_F(2) = zeta(2) * 3^{-2} (zeta(2,1/3) - zeta(2,2/3))
DD zeta_F2();

// zeta_F^*(-1) = -(3/(4 pi^2))^{3/2} * zeta_F(2)
DD zeta_star_minus1();

// |zeta_F^*(-1)|; the sign of the regulator is reported, not asserted.
DD regulator_target();

}  // namespace breg
