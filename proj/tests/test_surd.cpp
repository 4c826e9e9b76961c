#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "picf/real.hpp"
#include "picf/surd.hpp"

using namespace picf;

TEST_CASE("construction normalizes the radicand") {
    // 3 + sqrt(8) = 3 + 2 sqrt(2)
    Surd x(Rat(3), Rat(1), Int(8));
    CHECK(x.a() == 3);
    CHECK(x.b() == 2);
    CHECK(x.m() == 2);
    CHECK(x.norm() == 1);

    // radicand 1 collapses to a rational
    Surd y(Rat(2), Rat(5), Int(1));
    CHECK(y.is_rational());
    CHECK(y.a() == 7);
}

TEST_CASE("multiplication") {
    Surd a(Rat(2), Rat(1), Int(5));
    Surd b(Rat(2), Rat(-1), Int(5));
    Surd prod = a * b;
    CHECK(prod.is_rational());
    CHECK(prod.a() == -1);

    Surd c(Rat(1), Rat(1), Int(2));
    Surd sq = c * c;
    CHECK(sq == Surd(Rat(3), Rat(2), Int(2)));

    CHECK(a * Surd(Rat(1)) == a);
    CHECK_THROWS_AS(a * c, std::invalid_argument);
}

TEST_CASE("sign is exact") {
    CHECK(Surd(Rat(9), Rat(-4), Int(5)).sign() == 1);    // 81 > 80
    CHECK(Surd(Rat(2), Rat(-1), Int(5)).sign() == -1);   // 4 < 5
    CHECK(Surd(Rat(0), Rat(0), Int(5)).sign() == 0);
    CHECK(Surd(Rat(-9), Rat(4), Int(5)).sign() == -1);
    CHECK(Surd(Rat(-2), Rat(1), Int(5)).sign() == 1);
}

TEST_CASE("norm examples") {
    CHECK(Surd(Rat(9), Rat(4), Int(5)).norm() == 1);
    for (int t = -5; t <= 5; ++t) {
        if (t == 0) {
            continue;  // radicand 1 collapses to the rational 1
        }
        Surd u(Rat(t), Rat(1), Int(t * t + 1));
        CHECK(u.norm() == -1);
    }
    CHECK(Surd(Rat(3), Rat(1), Int(8)).norm() == 1);
}

TEST_CASE("inverse and division") {
    Surd a(Rat(2), Rat(1), Int(5));
    CHECK(a * a.inverse() == Surd(Rat(1)));
    CHECK_THROWS_AS(Surd().inverse(), std::domain_error);
    Surd b(Rat(-7), Rat(-5), Int(2));
    CHECK((b / b) == Surd(Rat(1)));
}

TEST_CASE("norm equals x times conjugate") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
        Rat a(static_cast<long>(rng() % 200) - 100, 1 + rng() % 20);
        Rat b(static_cast<long>(rng() % 200) - 100, 1 + rng() % 20);
        a.canonicalize();
        b.canonicalize();
        Int m(2 + rng() % 400);
        Surd x(a, b, m);
        Surd prod = x * x.conj();
        CHECK(prod.is_rational());
        CHECK(prod.a() == x.norm());
    }
}

TEST_CASE("sign agrees with 192-bit numeric evaluation") {
    std::mt19937_64 rng(17);
    const mpfr_prec_t prec = 192;
    for (int i = 0; i < 10000; ++i) {
        Rat a(static_cast<long>(rng() % 2001) - 1000, 1 + rng() % 50);
        Rat b(static_cast<long>(rng() % 2001) - 1000, 1 + rng() % 50);
        a.canonicalize();
        b.canonicalize();
        Int m(2 + rng() % 999);
        Surd x(a, b, m);

        Real value = Real::of(x.a().get_num(), prec) / Real::of(x.a().get_den(), prec) +
                     Real::of(x.b().get_num(), prec) / Real::of(x.b().get_den(), prec) *
                         Real::of(x.m(), prec).sqrt();
        if (!value.abs_less_than_pow10(-40)) {
            CHECK(x.sign() == (value > Real::of(0L, prec) ? 1 : -1));
        } else {
            CHECK(x.sign() == 0);
        }
    }
}
