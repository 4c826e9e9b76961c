#pragma once

#include <utility>
#include <vector>

#include "picf/cf.hpp"
#include "picf/int_util.hpp"

namespace picf {

// Integer point (b1; a_1..a_l) tested against the period-l variety of
// sqrt(m): the candidate expansion [b1, period a_1..a_l]. Non-degenerate
// means every period coordinate is nonzero (b1 = 0 is allowed).
struct VarietyPoint {
    Int b1;
    std::vector<Int> a;

    bool non_degenerate() const {
        for (const Int& x : a) {
            if (x == 0) {
                return false;
            }
        }
        return true;
    }

    VarietyPoint negated() const {
        VarietyPoint p{-b1, a};
        for (Int& x : p.a) {
            x = -x;
        }
        return p;
    }

    PCF to_pcf() const { return PCF({b1}, a); }

    friend bool operator==(const VarietyPoint& x, const VarietyPoint& y) {
        return x.b1 == y.b1 && x.a == y.a;
    }
    friend bool operator<(const VarietyPoint& x, const VarietyPoint& y) {
        if (x.b1 != y.b1) {
            return x.b1 < y.b1;
        }
        return x.a < y.a;
    }
};

// Residuals (E11 - E22, E12 - m*E21) of E(pt); the point lies on the
// variety iff both vanish. This one rule reproduces the explicit
// period-1/2/3 polynomial systems.
std::pair<Int, Int> variety_residuals(const Int& m, const VarietyPoint& pt);

// All non-degenerate integer points, by closed-form parametrization:
//   l=1: +-(t, 2t) when m = t^2+1;
//   l=2: +-(st, 2s, 2st) for m = s^2t^2+t and +-(st, s, 2st) for
//        m = s^2t^2+2t, via a bounded sweep over s with a square
//        discriminant test on the quadratic in t;
//   l=3: the (y,2s,2s,2y) family with y = s+(4s^2+1)t over all integer t
//        (t = 0 included), the two (1,-2)/(2,-1)-shaped orbits when
//        m = t^2+1, and the two (-2,3)/(3,-2)-shaped orbits when
//        25m - 1 is a perfect square.
// Output is deduplicated and sorted lexicographically.
std::vector<VarietyPoint> enumerate_points(const Int& m, int l);

// Exhaustive search over the coordinate box [-bound, bound], solving the
// first (linear-in-a3) equation for a3 when l = 3. Uses the explicit
// polynomial systems directly, so it is an oracle independent of the
// matrix calculus behind variety_residuals. The box may be partitioned
// across threads; output is canonical (sorted) regardless.
std::vector<VarietyPoint> brute_force_points(const Int& m, int l, const Int& bound,
                                             int threads = 1);

}  // namespace picf
