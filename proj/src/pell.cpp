#include "picf/pell.hpp"

#include <sstream>

namespace picf {

namespace {

void require_radicand(const Int& m) {
    if (m < 2 || is_perfect_square(m)) {
        throw std::invalid_argument("pell: m must be a non-square integer >= 2");
    }
}

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

}  // namespace

PCF sqrt_rcf(const Int& m) {
    require_radicand(m);
    Int a0 = isqrt(m);
    Int p = a0;           // P_1
    Int q = m - a0 * a0;  // Q_1
    const Int p1 = p, q1 = q;
    std::vector<Int> period;
    while (true) {
        // Q_k > 0 throughout for sqrt(m), so the floor is exact.
        Int a;
        mpz_fdiv_q(a.get_mpz_t(), Int(p + a0).get_mpz_t(), q.get_mpz_t());
        period.push_back(a);
        p = a * q - p;
        q = exact_div(m - p * p, q);
        if (p == p1 && q == q1) {
            break;
        }
    }
    return PCF({a0}, std::move(period));
}

PellSolution fundamental_solution(const Int& m) {
    PCF rcf = sqrt_rcf(m);
    size_t l = rcf.period.size();
    auto conv = convergents(rcf, l - 1);
    const auto& [x, y] = conv.back();
    Int n = x * x - m * y * y;
    if (n != 1 && n != -1) {
        throw std::logic_error("fundamental_solution: convergent is not a unit");
    }
    return {x, y, static_cast<int>(n.get_si())};
}

bool is_fundamental(const Int& m, const Int& x, const Int& y) {
    Int n = x * x - m * y * y;
    if (n != 1 && n != -1) {
        throw std::invalid_argument("is_fundamental: (x, y) is not a unit of Z[sqrt(m)]");
    }
    PellSolution f = fundamental_solution(m);
    return abs_int(x) == f.x && abs_int(y) == f.y;
}

ConvergentSolution convergent_solution(const PCF& p, size_t index, const Int& m) {
    auto conv = convergents(p, index);
    const auto& [x, y] = conv.back();
    Int n = x * x - m * y * y;
    return {x, y, n, n == 1 || n == -1};
}

FundamentalityReport check_convergent_fundamentality(FamilyId fam, const Int& s, const Int& t) {
    FundamentalityReport rep;
    rep.fam = fam;
    rep.s = s;
    rep.t = t;
    rep.m = family_eval(fam, s, t);
    require_radicand(rep.m);

    switch (fam) {
        case FamilyId::M1:
            rep.expected_fundamental = true;
            break;
        case FamilyId::M2:
            rep.expected_fundamental = !(abs_int(s) >= 2 && t == -1);
            break;
        case FamilyId::M2P:
            rep.expected_fundamental = true;
            break;
        case FamilyId::M3:
            rep.expected_fundamental = !(t == 0 && abs_int(s) <= 1);
            break;
    }

    rep.observed_fundamental = true;
    for (SignedPcf& sp : family_picf(fam, s, t)) {
        size_t idx = sp.pcf.period.size() - 1;
        ConvergentSolution sol = convergent_solution(sp.pcf, idx, rep.m);
        bool fund = sol.is_unit && is_fundamental(rep.m, sol.x, sol.y);
        rep.observed_fundamental = rep.observed_fundamental && fund;
        rep.expansions.push_back({std::move(sp.pcf), std::move(sol), fund});
    }

    if (fam == FamilyId::M2) {
        ConvergentSolution sol0 = convergent_solution(rep.expansions.front().pcf, 0, rep.m);
        bool fund0 = sol0.is_unit && is_fundamental(rep.m, sol0.x, sol0.y);
        rep.zeroth = ExpansionCheck{rep.expansions.front().pcf, std::move(sol0), fund0};
    }

    rep.agrees = rep.observed_fundamental == rep.expected_fundamental;
    rep.erratum_candidate = !rep.agrees;
    if (!rep.agrees) {
        std::ostringstream os;
        os << "closed-form predicate expects "
           << (rep.expected_fundamental ? "fundamental" : "non-fundamental")
           << " at convergent " << rep.expansions.front().pcf.period.size() - 1
           << " for m=" << rep.m << ", observed the opposite";
        rep.note = os.str();
    }
    return rep;
}

}  // namespace picf
