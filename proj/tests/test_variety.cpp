#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "picf/variety.hpp"

using namespace picf;

namespace {

VarietyPoint pt(long b1, std::initializer_list<long> a) {
    VarietyPoint p;
    p.b1 = b1;
    for (long x : a) {
        p.a.emplace_back(x);
    }
    return p;
}

bool contains(const std::vector<VarietyPoint>& pts, const VarietyPoint& p) {
    return std::find(pts.begin(), pts.end(), p) != pts.end();
}

}  // namespace

TEST_CASE("residuals detect membership") {
    CHECK(variety_residuals(Int(2), pt(1, {2})) == std::pair<Int, Int>(0, 0));
    CHECK(variety_residuals(Int(5), pt(2, {4, 4})) == std::pair<Int, Int>(0, 0));
    CHECK(variety_residuals(Int(5), pt(1, {1})) == std::pair<Int, Int>(1, -4));
    CHECK(variety_residuals(Int(5), pt(0, {1, -2, 3})) == std::pair<Int, Int>(0, 0));
    CHECK_THROWS_AS(variety_residuals(Int(5), pt(1, {1, 1, 1, 1})), std::invalid_argument);
}

TEST_CASE("enumerated point sets at m = 5") {
    auto l1 = enumerate_points(Int(5), 1);
    CHECK(l1 == std::vector<VarietyPoint>{pt(-2, {-4}), pt(2, {4})});

    auto l2 = enumerate_points(Int(5), 2);
    CHECK(l2 == std::vector<VarietyPoint>{pt(-2, {-4, -4}), pt(2, {4, 4})});

    auto l3 = enumerate_points(Int(5), 3);
    CHECK(contains(l3, pt(0, {1, -2, 3})));
    CHECK(contains(l3, pt(1, {2, -1, 5})));
    CHECK(contains(l3, pt(2, {4, 4, 4})));
    // both square roots of m-1 contribute orbits
    CHECK(contains(l3, pt(-4, {1, -2, -5})));
    CHECK(contains(l3, pt(-3, {2, -1, -3})));
    CHECK(l3.size() == 10);
}

TEST_CASE("enumerated point set at m = 41") {
    auto l3 = enumerate_points(Int(41), 3);
    std::vector<VarietyPoint> expected = {
        pt(-7, {2, -3, -13}), pt(-6, {-3, 2, -13}), pt(-6, {-2, -2, -12}),
        pt(6, {2, 2, 12}),    pt(6, {3, -2, 13}),   pt(7, {-2, 3, 13}),
    };
    std::sort(expected.begin(), expected.end());
    CHECK(l3 == expected);
}

TEST_CASE("brute force examples") {
    auto p = brute_force_points(Int(2), 3, Int(5));
    CHECK(contains(p, pt(2, {-2, 3, 3})));
    CHECK(contains(p, pt(-2, {2, -3, -3})));
    CHECK(contains(p, pt(1, {3, -2, 3})));
    CHECK(contains(p, pt(-1, {-3, 2, -3})));

    CHECK(contains(brute_force_points(Int(5), 3, Int(12)), pt(2, {4, 4, 4})));
    CHECK(brute_force_points(Int(7), 1, Int(10)).empty());
}

TEST_CASE("closed-form enumeration matches brute force for small m") {
    for (long m = 2; m <= 60; ++m) {
        if (is_perfect_square(Int(m))) {
            continue;
        }
        Int bound = 3 * isqrt(Int(m)) + 10;
        for (int l = 1; l <= 3; ++l) {
            auto closed = enumerate_points(Int(m), l);
            auto brute = brute_force_points(Int(m), l, bound);
            CAPTURE(m);
            CAPTURE(l);
            CHECK(closed == brute);
        }
    }
}

TEST_CASE("brute force is canonical across thread counts") {
    auto a = brute_force_points(Int(41), 3, Int(25), 1);
    auto b = brute_force_points(Int(41), 3, Int(25), 4);
    auto c = brute_force_points(Int(41), 3, Int(25), 7);
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("point sets are closed under negation") {
    for (long m : {2L, 5L, 10L, 13L, 41L, 58L}) {
        for (int l = 1; l <= 3; ++l) {
            auto pts = enumerate_points(Int(m), l);
            for (const VarietyPoint& p : pts) {
                CHECK(contains(pts, p.negated()));
            }
        }
    }
}

TEST_CASE("every enumerated point expands plus or minus sqrt(m)") {
    for (long m = 2; m <= 50; ++m) {
        if (is_perfect_square(Int(m))) {
            continue;
        }
        for (int l = 1; l <= 3; ++l) {
            for (const VarietyPoint& p : enumerate_points(Int(m), l)) {
                PCF expansion = p.to_pcf();
                CHECK(convergence_check(expansion).converges());
                Surd v = pcf_value(expansion);
                Surd root = Surd::sqrt_of(Int(m));
                CHECK((v == root || v == -root));
            }
        }
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(enumerate_points(Int(9), 2), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_points(Int(1), 1), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_points(Int(5), 4), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_points(Int(5), 2, Int(0)), std::invalid_argument);
}
