#include "picf/variety.hpp"

#include <algorithm>
#include <thread>

namespace picf {

namespace {

void require_period(int l) {
    if (l < 1 || l > 3) {
        throw std::invalid_argument("variety: period length must be 1, 2 or 3");
    }
}

void require_radicand(const Int& m) {
    if (m < 2 || is_perfect_square(m)) {
        throw std::invalid_argument("variety: m must be a non-square integer >= 2");
    }
}

void add_with_negation(std::vector<VarietyPoint>& out, VarietyPoint pt) {
    out.push_back(pt.negated());
    out.push_back(std::move(pt));
}

void canonicalize(std::vector<VarietyPoint>& pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

using i64 = long long;
using i128 = __int128;

Int to_int(i64 v) { return Int(static_cast<long>(v)); }

// Polynomial systems cut out by E11 = E22, E12 = m*E21, written out
// explicitly per period length. Kept separate from the matrix route on
// purpose: brute force is the independent oracle.
bool on_variety_l1(i64 m, i64 y1, i64 x1) {
    i128 eq1 = (i128)x1 - 2 * (i128)y1;
    i128 eq2 = (i128)y1 * y1 - (i128)x1 * y1 - 1 + m;
    return eq1 == 0 && eq2 == 0;
}

bool on_variety_l2(i64 m, i64 y1, i64 x1, i64 x2) {
    i128 eq1 = (i128)x1 * x2 - 2 * (i128)y1 * x1;
    i128 eq2 = (i128)y1 * y1 * x1 - (i128)y1 * x1 * x2 - x2 + (i128)m * x1;
    return eq1 == 0 && eq2 == 0;
}

bool on_variety_l3_second(i64 m, i64 y1, i64 x1, i64 x2, i64 x3) {
    i128 c = (i128)x2 * x1 + 1;
    i128 lhs = (i128)y1 * ((i128)x3 * x2 * x1 + x1 + x3 - x2) - (i128)y1 * y1 * c +
               (i128)x3 * x2 + 1;
    return lhs == (i128)m * c;
}

}  // namespace

std::pair<Int, Int> variety_residuals(const Int& m, const VarietyPoint& pt) {
    require_period(static_cast<int>(pt.a.size()));
    Mat2<Int> e = pcf_matrix(pt.to_pcf());
    return {e.e11 - e.e22, e.e12 - m * e.e21};
}

std::vector<VarietyPoint> enumerate_points(const Int& m, int l) {
    require_period(l);
    require_radicand(m);
    std::vector<VarietyPoint> pts;

    if (l == 1) {
        if (is_perfect_square(m - 1)) {
            Int t = isqrt(m - 1);
            add_with_negation(pts, {t, {2 * t}});
        }
    } else if (l == 2) {
        // m = s^2 t^2 + c t with c = 1 (period 2s,2st) or c = 2 (period
        // s,2st); negative s is covered by negation of the (s,t) point.
        Int s_max = isqrt(m) + 1;
        for (Int s = 1; s <= s_max; ++s) {
            for (const Int& t : integer_quadratic_roots(s * s, 1, -m)) {
                if (t != 0) {
                    add_with_negation(pts, {s * t, {2 * s, 2 * s * t}});
                }
            }
            for (const Int& t : integer_quadratic_roots(s * s, 2, -m)) {
                if (t != 0) {
                    add_with_negation(pts, {s * t, {s, 2 * s * t}});
                }
            }
        }
    } else {
        // Orbits with period (2s, 2s, 2y), y = s + (4s^2+1)t. The t = 0
        // case (m = s^2 + 1, a tripled period-1 expansion) is a genuine
        // point and is enumerated; the sweep bound covers |t| >= 1, where
        // m grows like (4s^2+1)^2 t^2.
        if (is_perfect_square(m - 1)) {
            Int s0 = isqrt(m - 1);
            add_with_negation(pts, {s0, {2 * s0, 2 * s0, 2 * s0}});
        }
        Int s_max = isqrt(isqrt(16 * m)) + 2;
        for (Int s = 1; s <= s_max; ++s) {
            Int u = 4 * s * s + 1;
            for (const Int& t : integer_quadratic_roots(u * u, 2 * s * (u + 2), s * s + 1 - m)) {
                if (t == 0) {
                    continue;  // already added above
                }
                Int y = s + u * t;
                add_with_negation(pts, {y, {2 * s, 2 * s, 2 * y}});
            }
        }
        // Orbits with m = t^2 + 1; both signs of t contribute distinct
        // points.
        if (is_perfect_square(m - 1)) {
            Int t0 = isqrt(m - 1);
            for (const Int& t : {t0, Int(-t0)}) {
                add_with_negation(pts, {t - 2, {1, -2, 2 * t - 1}});
                add_with_negation(pts, {t - 1, {2, -1, 2 * t + 1}});
            }
        }
        // Orbits with 25m - 1 a perfect square: m = 25t^2 + 14t + 2.
        for (const Int& t : integer_quadratic_roots(25, 14, 2 - m)) {
            add_with_negation(pts, {5 * t + 2, {-2, 3, 10 * t + 3}});
            add_with_negation(pts, {5 * t + 1, {3, -2, 10 * t + 3}});
        }
    }

    std::erase_if(pts, [](const VarietyPoint& p) { return !p.non_degenerate(); });
    canonicalize(pts);
    return pts;
}

std::vector<VarietyPoint> brute_force_points(const Int& m, int l, const Int& bound,
                                             int threads) {
    require_period(l);
    require_radicand(m);
    if (bound < 1) {
        throw std::invalid_argument("brute_force_points: bound must be >= 1");
    }
    if (bound > 1000000 || m > Int("1000000000000")) {
        throw std::invalid_argument("brute_force_points: bound/m outside the supported range");
    }
    const i64 b = bound.get_si();
    const i64 mm = m.get_si();
    if (threads < 1) {
        threads = 1;
    }

    auto search_chunk = [&](i64 y_lo, i64 y_hi, std::vector<VarietyPoint>& out) {
        for (i64 y1 = y_lo; y1 <= y_hi; ++y1) {
            if (l == 1) {
                for (i64 x1 = -b; x1 <= b; ++x1) {
                    if (x1 != 0 && on_variety_l1(mm, y1, x1)) {
                        out.push_back(VarietyPoint{to_int(y1), {to_int(x1)}});
                    }
                }
            } else if (l == 2) {
                for (i64 x1 = -b; x1 <= b; ++x1) {
                    if (x1 == 0) {
                        continue;
                    }
                    for (i64 x2 = -b; x2 <= b; ++x2) {
                        if (x2 != 0 && on_variety_l2(mm, y1, x1, x2)) {
                            out.push_back(VarietyPoint{to_int(y1), {to_int(x1), to_int(x2)}});
                        }
                    }
                }
            } else {
                for (i64 x1 = -b; x1 <= b; ++x1) {
                    if (x1 == 0) {
                        continue;
                    }
                    for (i64 x2 = -b; x2 <= b; ++x2) {
                        if (x2 == 0) {
                            continue;
                        }
                        // First equation, linear in x3:
                        //   x3*(x1*x2 + 1) = 2*y1*(x1*x2 + 1) + x2 - x1.
                        i128 c = (i128)x1 * x2 + 1;
                        if (c == 0) {
                            continue;  // forces x1 = x2, impossible with x1*x2 = -1
                        }
                        i128 num = (i128)(x2 - x1);
                        if (num % c != 0) {
                            continue;
                        }
                        i128 x3w = 2 * (i128)y1 + num / c;
                        if (x3w == 0 || x3w > b || x3w < -b) {
                            continue;
                        }
                        i64 x3 = (i64)x3w;
                        if (on_variety_l3_second(mm, y1, x1, x2, x3)) {
                            out.push_back(VarietyPoint{to_int(y1), {to_int(x1), to_int(x2), to_int(x3)}});
                        }
                    }
                }
            }
        }
    };

    std::vector<VarietyPoint> pts;
    if (threads == 1) {
        search_chunk(-b, b, pts);
    } else {
        std::vector<std::vector<VarietyPoint>> partial(threads);
        std::vector<std::thread> pool;
        i64 total = 2 * b + 1;
        for (int i = 0; i < threads; ++i) {
            i64 lo = -b + total * i / threads;
            i64 hi = -b + total * (i + 1) / threads - 1;
            pool.emplace_back(search_chunk, lo, hi, std::ref(partial[i]));
        }
        for (auto& th : pool) {
            th.join();
        }
        for (auto& part : partial) {
            pts.insert(pts.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
        }
    }
    canonicalize(pts);
    return pts;
}

}  // namespace picf
