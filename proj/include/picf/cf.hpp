#pragma once

#include <utility>
#include <vector>

#include "picf/int_util.hpp"
#include "picf/mat2.hpp"
#include "picf/surd.hpp"

namespace picf {

// Finite continued-fraction word; entries are arbitrary integers (zero and
// negative entries permitted).
using FiniteCF = std::vector<Int>;

// Periodic continued fraction [b_1,...,b_N, period a_1..a_l repeating].
// Zero partial quotients are allowed everywhere; non-degeneracy is a
// concern of the variety layer, not of the engine.
struct PCF {
    std::vector<Int> preperiod;
    std::vector<Int> period;

    PCF(std::vector<Int> pre, std::vector<Int> per)
        : preperiod(std::move(pre)), period(std::move(per)) {
        if (period.empty()) {
            throw std::invalid_argument("PCF: period must be non-empty");
        }
    }

    // n-th term of the unrolled stream, n >= 0.
    const Int& term(size_t n) const {
        if (n < preperiod.size()) {
            return preperiod[n];
        }
        return period[(n - preperiod.size()) % period.size()];
    }

    friend bool operator==(const PCF& x, const PCF& y) {
        return x.preperiod == y.preperiod && x.period == y.period;
    }
};

// M([c_1,...,c_n]) = D(c_1)...D(c_n).
Mat2<Int> word_matrix(const FiniteCF& word);

// E(P): the period word conjugated through the pre-period,
// M([b_1..b_N, a_1..a_l, 0, -b_N..-b_1, 0]) for N >= 1, or the plain period
// word matrix for N = 0. det E(P) = (-1)^l either way.
Mat2<Int> pcf_matrix(const PCF& p);

// Convergents (p_n, q_n) for n = 0..upto of the unrolled stream, with the
// usual seeds (p_-1,q_-1) = (1,0), (p_0,q_0) = (a_0,1). Index 0 sits on the
// first emitted term (the pre-period term for (1,l)-type expansions).
std::vector<std::pair<Int, Int>> convergents(const PCF& p, size_t upto);

// First n terms of the unrolled stream.
FiniteCF unroll(const PCF& p, size_t n);

// Convergence certificate. The three conditions:
//   (1) E(P) != +-I;
//   (2) every cyclic shift of the period has M_21 != 0 or |M_22| <= 1;
//   (3) (-1)^l Tr(E(P))^2 < 0  or  (-1)^l Tr(E(P))^2 >= 4.
// For odd l, (3) reads Tr != 0; for even l, |Tr| >= 2.
struct ShiftWitness {
    FiniteCF word;
    Int m21;
    Int m22;
    bool ok;
};

struct ConvergenceReport {
    Mat2<Int> e;
    bool cond1;
    std::vector<ShiftWitness> shifts;
    bool cond2;
    Int trace;
    Int signed_trace_sq;  // (-1)^l * Tr(E)^2
    bool cond3;

    bool converges() const { return cond1 && cond2 && cond3; }
    const char* verdict() const { return converges() ? "converges" : "rejected"; }
};

ConvergenceReport convergence_check(const PCF& p);

// Spectral data of E(P). The eigenvalues are (Tr +- k*sqrt(m'))/2 with
// Tr^2 - 4 det = k^2 m'; lambda_plus is the one with |lambda| >= 1, decided
// exactly. The value of a convergent PCF is (lambda_plus - E22)/E21.
struct PcfEigen {
    Mat2<Int> e;
    Int trace;
    Int det;
    Int disc;  // Tr^2 - 4 det
    Surd lambda_plus;
    bool has_value;  // false iff E21 == 0
    Surd value;
};

PcfEigen pcf_eigen(const PCF& p);

// Value of a convergent PCF as an exact Surd. Preconditions: the
// convergence certificate passes and E21 != 0. E21 == 0 (the Moebius fixed
// point equation degenerates) and negative discriminant are reported as
// distinct errors.
Surd pcf_value(const PCF& p);

}  // namespace picf
