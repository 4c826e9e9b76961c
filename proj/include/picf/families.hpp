#pragma once

#include <string>
#include <utility>
#include <vector>

#include "picf/cf.hpp"
#include "picf/int_util.hpp"

namespace picf {

// The four parametric families of radicands carrying short periodic
// expansions of sqrt(m):
//   M1 : t^2 + 1                          (period 1; s ignored)
//   M2 : s^2 t^2 + t                      (period 2)
//   M2P: s^2 t^2 + 2t                     (period 2)
//   M3 : (4s^2+1)^2 t^2 + 2s(4s^2+3) t + s^2 + 1   (period 3)
enum class FamilyId { M1, M2, M2P, M3 };

const char* family_name(FamilyId fam);
FamilyId family_from_name(const std::string& name);

Int family_eval(FamilyId fam, const Int& s, const Int& t);

// One signed periodic expansion: the PCF evaluates to sign * sqrt(m).
struct SignedPcf {
    int sign;
    PCF pcf;
    // The period-3 family at t = 0 collapses to a tripled period-1
    // expansion; flagged so callers can tell.
    bool minimal_period = true;
};

// The closed-form expansions of sign * sqrt(family value):
//   M1 : sgn(t)  sqrt(m) = [t, per 2t]
//   M2 : sgn(st) sqrt(m) = [st, per 2s, 2st]
//   M2P: sgn(st) sqrt(m) = [st, per s, 2st]
//   M3, s != 0:   sgn via the sign of the trace coordinate,
//                 [y, per 2s, 2s, 2y] with y = s + (4s^2+1)t
//   M3, s == 0:   the two special forms [t-2, per 1,-2,2t-1] and
//                 [t-1, per 2,-1,2t+1]
//   M3, s == +-1: additionally the two special forms
//                 [5u+2, per -2,3,10u+3] and [5u+1, per 3,-2,10u+3],
//                 where u solves 25u^2+14u+2 = m (u = t for s = 1,
//                 u = -t for s = -1).
// Throws when the family value is non-positive or the parameters are
// degenerate (zero s or t where the family requires them nonzero).
std::vector<SignedPcf> family_picf(FamilyId fam, const Int& s, const Int& t);

// Closed-form regular expansions (all period terms >= 1):
//   M2 , t < 0: [-st-1, per 1, 2s-2, 1, 2(-st-1)]     (s >= 2)
//               [-t-1,  per 2, -2t-2]                 (s = 1, t != -1)
//   M2P, t < 0: [-st-1, per 1, s-2, 1, 2(-st-1)]      (s >= 3)
//               [-2t-1, per 2, 2(-2t-1)]              (s = 2)
//               [-t-2,  per 1, 2(-t-2)]               (s = 1, t != -1,-2)
//   M3 , t > 0, s < 0: [y-1, per 1, -2s-1, -2s-1, 1, 2(y-1)]
// Parameters outside these cases are rejected.
PCF family_rpcf(FamilyId fam, const Int& s, const Int& t);

// All parameter pairs with family_eval = m, via the same bounded sweeps
// that back the variety enumeration. M1 reports (0, t). M2/M2P require
// s, t != 0; M3 requires (s, t) != (0, 0). Sorted lexicographically.
std::vector<std::pair<Int, Int>> family_witnesses(const Int& m, FamilyId fam);

}  // namespace picf
