#include "picf/cf.hpp"

#include <algorithm>

namespace picf {

namespace {

const Int kZero(0);
const Int kOne(1);

}  // namespace

Mat2<Int> word_matrix(const FiniteCF& word) {
    return word_matrix_generic<Int>(word, kZero, kOne);
}

Mat2<Int> pcf_matrix(const PCF& p) {
    if (p.preperiod.empty()) {
        return word_matrix(p.period);
    }
    FiniteCF word;
    word.reserve(2 * p.preperiod.size() + p.period.size() + 2);
    word.insert(word.end(), p.preperiod.begin(), p.preperiod.end());
    word.insert(word.end(), p.period.begin(), p.period.end());
    word.push_back(0);
    for (auto it = p.preperiod.rbegin(); it != p.preperiod.rend(); ++it) {
        word.push_back(-*it);
    }
    word.push_back(0);
    return word_matrix(word);
}

std::vector<std::pair<Int, Int>> convergents(const PCF& p, size_t upto) {
    std::vector<std::pair<Int, Int>> out;
    out.reserve(upto + 1);
    Int p_prev = 1, q_prev = 0;        // (p_-1, q_-1)
    Int p_cur = p.term(0), q_cur = 1;  // (p_0, q_0)
    out.emplace_back(p_cur, q_cur);
    for (size_t n = 1; n <= upto; ++n) {
        const Int& a = p.term(n);
        Int p_next = a * p_cur + p_prev;
        Int q_next = a * q_cur + q_prev;
        p_prev = std::move(p_cur);
        q_prev = std::move(q_cur);
        p_cur = std::move(p_next);
        q_cur = std::move(q_next);
        out.emplace_back(p_cur, q_cur);
    }
    return out;
}

FiniteCF unroll(const PCF& p, size_t n) {
    FiniteCF out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        out.push_back(p.term(i));
    }
    return out;
}

ConvergenceReport convergence_check(const PCF& p) {
    ConvergenceReport rep;
    rep.e = pcf_matrix(p);

    Mat2<Int> id{1, 0, 0, 1};
    Mat2<Int> neg_id{-1, 0, 0, -1};
    rep.cond1 = rep.e != id && rep.e != neg_id;

    const size_t l = p.period.size();
    rep.cond2 = true;
    for (size_t j = 0; j < l; ++j) {
        FiniteCF w;
        w.reserve(l);
        for (size_t i = 0; i < l; ++i) {
            w.push_back(p.period[(j + i) % l]);
        }
        Mat2<Int> m = word_matrix(w);
        bool ok = m.e21 != 0 || abs(m.e22) <= 1;
        rep.shifts.push_back({std::move(w), m.e21, m.e22, ok});
        rep.cond2 = rep.cond2 && ok;
    }

    rep.trace = rep.e.trace();
    Int tr_sq = rep.trace * rep.trace;
    rep.signed_trace_sq = (l % 2 == 0) ? tr_sq : Int(-tr_sq);
    rep.cond3 = rep.signed_trace_sq < 0 || rep.signed_trace_sq >= 4;
    return rep;
}

PcfEigen pcf_eigen(const PCF& p) {
    PcfEigen eg;
    eg.e = pcf_matrix(p);
    eg.trace = eg.e.trace();
    eg.det = eg.e.det();
    eg.disc = eg.trace * eg.trace - 4 * eg.det;
    if (eg.disc < 0) {
        throw std::domain_error("pcf_eigen: negative discriminant (elliptic period matrix)");
    }

    if (eg.disc == 0) {
        eg.lambda_plus = Surd(Rat(eg.trace) / 2);
    } else {
        SquarefreeParts parts = squarefree_decompose(eg.disc);
        Surd plus(Rat(eg.trace) / 2, Rat(parts.k) / 2, parts.squarefree);
        Surd minus(Rat(eg.trace) / 2, Rat(-parts.k) / 2, parts.squarefree);
        // det = +-1, so |lambda_+||lambda_-| = 1 and at most one root has
        // absolute value > 1. Ties (both exactly 1) only arise for period
        // matrices the certificate rejects; the + branch wins then.
        eg.lambda_plus = plus.abs_at_least_one() ? plus : minus;
    }

    eg.has_value = eg.e.e21 != 0;
    if (eg.has_value) {
        eg.value = (eg.lambda_plus - Surd(Rat(eg.e.e22))) / Surd(Rat(eg.e.e21));
    }
    return eg;
}

Surd pcf_value(const PCF& p) {
    PcfEigen eg = pcf_eigen(p);
    if (!eg.has_value) {
        throw std::domain_error("pcf_value: E21 == 0, fixed-point formula degenerates");
    }
    return eg.value;
}

}  // namespace picf
