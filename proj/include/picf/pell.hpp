#pragma once

#include <optional>
#include <string>
#include <vector>

#include "picf/cf.hpp"
#include "picf/families.hpp"
#include "picf/int_util.hpp"

namespace picf {

// Unit x + y*sqrt(m) of Z[sqrt(m)]: x^2 - m y^2 = norm in {+1, -1}.
struct PellSolution {
    Int x;
    Int y;
    int norm;
};

// Canonical regular expansion [a0, per a1..al] of sqrt(m) with minimal
// period, via the classical (P, Q) recurrence with exact integer floors:
// P0 = 0, Q0 = 1, a_k = floor((P_k + sqrt(m))/Q_k), period detected on the
// first repeat of the (P, Q) state.
PCF sqrt_rcf(const Int& m);

// (p_{l-1}, q_{l-1}) of sqrt_rcf(m), the generator of the unit group
// modulo torsion; its norm is (-1)^l.
PellSolution fundamental_solution(const Int& m);

// True iff x + y*sqrt(m) is one of the four classes +-eps^{+-1} of the
// generator eps, i.e. (|x|, |y|) equals the fundamental pair. Requires
// (x, y) to be a unit.
bool is_fundamental(const Int& m, const Int& x, const Int& y);

// Convergent (p_index, q_index) of p together with its norm relative to m.
// A convergent that is not a unit is reported, not rejected.
struct ConvergentSolution {
    Int x;
    Int y;
    Int norm_value;  // x^2 - m y^2
    bool is_unit;    // norm_value in {+1, -1}
};

ConvergentSolution convergent_solution(const PCF& p, size_t index, const Int& m);

// Does the (l-1)th convergent of each closed-form periodic expansion of
// sqrt(m) yield a fundamental solution? The report compares the observed
// outcome against the expected closed-form predicate:
//   M1 : fundamental (0th convergent), always;
//   M2 : fundamental at the 1st convergent except |s| >= 2, t = -1
//        (where the 0th convergent is fundamental instead);
//   M2P: fundamental at the 1st convergent, always;
//   M3 : fundamental at the 2nd convergent for (s,t) outside
//        {(0,0), (1,0), (-1,0)}.
// Disagreements are flagged as erratum candidates, never asserted away;
// callers decide what to make of them.
struct ExpansionCheck {
    PCF pcf;
    ConvergentSolution solution;  // (l-1)th convergent
    bool fundamental;
};

struct FundamentalityReport {
    FamilyId fam;
    Int s;
    Int t;
    Int m;
    bool expected_fundamental;
    std::vector<ExpansionCheck> expansions;
    bool observed_fundamental;  // all expansions fundamental at index l-1
    bool agrees;
    bool erratum_candidate;
    // For M2: the 0th convergent, the fallback the predicate points at.
    std::optional<ExpansionCheck> zeroth;
    std::string note;
};

FundamentalityReport check_convergent_fundamentality(FamilyId fam, const Int& s, const Int& t);

}  // namespace picf
