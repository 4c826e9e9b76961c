#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "picf/tower.hpp"

using namespace picf;

namespace {

TowerElem elem(int level, std::initializer_list<long> coords) {
    std::vector<Int> v;
    for (long c : coords) {
        v.emplace_back(c);
    }
    return TowerElem(level, std::move(v));
}

TowerElem random_elem(int level, std::mt19937_64& rng) {
    std::vector<Int> v;
    for (size_t i = 0; i < (size_t{1} << level); ++i) {
        v.emplace_back(static_cast<long>(rng() % 9) - 4);
    }
    return TowerElem(level, std::move(v));
}

}  // namespace

TEST_CASE("minimal polynomials") {
    CHECK(minimal_poly(0) == std::vector<Int>{0, 1});
    CHECK(minimal_poly(1) == std::vector<Int>{-2, 0, 1});
    CHECK(minimal_poly(2) == std::vector<Int>{2, 0, -4, 0, 1});
}

TEST_CASE("generator annihilated by its minimal polynomial") {
    for (int n = 0; n <= 5; ++n) {
        TowerElem x = TowerElem::generator(n);
        std::vector<Int> mu = minimal_poly(n);
        TowerElem acc = TowerElem::constant(n, 0);
        for (size_t i = mu.size(); i-- > 0;) {
            acc = acc * x + TowerElem::constant(n, mu[i]);
        }
        CHECK(acc.is_zero());
    }
}

TEST_CASE("numeric roots of the minimal polynomial are the cosine conjugates") {
    const mpfr_prec_t prec = 256;
    for (int n = 1; n <= 5; ++n) {
        std::vector<Int> mu = minimal_poly(n);
        for (unsigned k = 1; k < (2u << n); k += 2) {
            // evaluate mu at 2cos(k pi / 2^(n+1)) via the embedding of X_n
            TowerElem x = TowerElem::generator(n);
            Real root = numeric_embed(x, k, prec);
            Real acc = Real::of(0L, prec);
            for (size_t i = mu.size(); i-- > 0;) {
                acc = acc * root + Real::of(mu[i], prec);
            }
            CHECK(acc.abs_less_than_pow10(-20));
        }
    }
}

TEST_CASE("ring arithmetic basics") {
    TowerElem x1 = TowerElem::generator(1);
    CHECK(x1 * x1 == TowerElem::constant(1, 2));  // X_1^2 = 2

    TowerElem one_plus_x2 = elem(2, {1, 1, 0, 0});
    CHECK(one_plus_x2 * one_plus_x2 == elem(2, {1, 2, 1, 0}));

    std::mt19937_64 rng(31);
    TowerElem y = random_elem(3, rng);
    CHECK(y * TowerElem::constant(3, 1) == y);
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937_64 rng(101);
    for (int level = 0; level <= 4; ++level) {
        for (int i = 0; i < 40; ++i) {
            TowerElem a = random_elem(level, rng);
            TowerElem b = random_elem(level, rng);
            TowerElem c = random_elem(level, rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
        }
    }
}

TEST_CASE("embed_up") {
    CHECK(embed_up(TowerElem::generator(1)) == elem(2, {-2, 0, 1, 0}));
    CHECK(embed_up(TowerElem::constant(0, 7)) == elem(1, {7, 0}));

    std::mt19937_64 rng(55);
    for (int level = 0; level <= 3; ++level) {
        for (int i = 0; i < 30; ++i) {
            TowerElem a = random_elem(level, rng);
            TowerElem b = random_elem(level, rng);
            CHECK(embed_up(a * b) == embed_up(a) * embed_up(b));
            CHECK(embed_up(a + b) == embed_up(a) + embed_up(b));
        }
    }
}

TEST_CASE("split and recompose") {
    auto [a, b] = split(eta(2));
    CHECK(a == eta(1));
    CHECK(b == TowerElem::generator(1));

    for (int n = 1; n <= 4; ++n) {
        auto [za, zb] = split(TowerElem::generator(n));
        CHECK(za.is_zero());
        CHECK(zb == TowerElem::constant(n - 1, 1));
    }

    std::mt19937_64 rng(77);
    for (int n = 1; n <= 4; ++n) {
        for (int i = 0; i < 30; ++i) {
            TowerElem x = random_elem(n, rng);
            auto [xa, xb] = split(x);
            CHECK(embed_up(xa) + TowerElem::generator(n) * embed_up(xb) == x);
        }
    }
}

TEST_CASE("cos_poly recurrence") {
    CHECK(cos_poly(1) == std::vector<Int>{0, 1});
    CHECK(cos_poly(2) == std::vector<Int>{-2, 0, 1});
    CHECK(cos_poly(3) == std::vector<Int>{0, -3, 0, 1});
}

TEST_CASE("eta values") {
    CHECK(eta(0) == TowerElem::constant(0, 1));
    CHECK(eta(1) == elem(1, {1, 1}));
    CHECK(eta(2) == elem(2, {-1, -2, 1, 1}));
}

TEST_CASE("relative norm") {
    CHECK(relative_norm(eta(1)) == TowerElem::constant(0, -1));
    CHECK(relative_norm(eta(2)) == TowerElem::constant(1, -1));
    for (int n = 1; n <= 5; ++n) {
        CHECK(relative_norm(eta(n)) == TowerElem::constant(n - 1, -1));
        TowerElem xn = TowerElem::generator(n);
        TowerElem expected =
            -(TowerElem::constant(n - 1, 2) + TowerElem::generator(n - 1));
        CHECK(relative_norm(xn) == expected);
    }
}

TEST_CASE("relative norm is multiplicative") {
    std::mt19937_64 rng(13);
    for (int n = 1; n <= 4; ++n) {
        for (int i = 0; i < 25; ++i) {
            TowerElem x = random_elem(n, rng);
            TowerElem y = random_elem(n, rng);
            CHECK(relative_norm(x * y) == relative_norm(x) * relative_norm(y));
        }
    }
}

TEST_CASE("unit_divide") {
    TowerElem x1 = TowerElem::generator(1);
    TowerElem u = elem(1, {1, 1});  // 1 + X_1
    CHECK(unit_divide(elem(1, {1, 2}), u) == elem(1, {3, -1}));
    CHECK(unit_divide(elem(1, {-1, 1}), u) == elem(1, {3, -2}));
    CHECK(unit_divide(x1, TowerElem::constant(1, 1)) == x1);
    CHECK_THROWS_AS(unit_divide(elem(1, {1, 0}), elem(1, {2, 0})), std::domain_error);
    CHECK_THROWS_AS(unit_divide(x1, TowerElem::constant(1, 0)), std::domain_error);
}

TEST_CASE("period triple construction") {
    TowerTriple t1 = period_triple(1);
    CHECK(t1.x1 == TowerElem::constant(0, 1));
    CHECK(t1.x2 == TowerElem::constant(0, 1));
    CHECK(t1.x3 == TowerElem::constant(0, 0));

    TowerTriple t2 = period_triple(2);
    CHECK(t2.x1 == elem(1, {3, -1}));
    CHECK(t2.x2 == elem(1, {1, 1}));
    CHECK(t2.x3 == elem(1, {3, -2}));

    // real embedding at k = 1: (1.5857..., 2.4142..., 0.1715...)
    const mpfr_prec_t prec = 128;
    CHECK((numeric_embed(t2.x1, 1, prec) - Real::of(158579L, prec) / Real::of(100000L, prec))
              .abs_less_than_pow10(-4));
    CHECK((numeric_embed(t2.x2, 1, prec) - Real::of(241421L, prec) / Real::of(100000L, prec))
              .abs_less_than_pow10(-4));
    CHECK((numeric_embed(t2.x3, 1, prec) - Real::of(17157L, prec) / Real::of(100000L, prec))
              .abs_less_than_pow10(-4));
}

TEST_CASE("period triple satisfies the defining system") {
    for (int n = 1; n <= 4; ++n) {
        TowerTriple t = period_triple(n);
        TowerElem one = TowerElem::constant(n - 1, 1);
        TowerElem base = TowerElem::constant(n - 1, 2) + TowerElem::generator(n - 1);

        CHECK((t.x2 - t.x1 * t.x2 * t.x3 - t.x1 - t.x3).is_zero());
        CHECK(t.x1 * t.x2 + one == base * (t.x2 * t.x3 + one));

        // norm-form identity x2^2 - Xn^2 (x2 x3 + 1)^2 = -1
        TowerElem q = t.x2 * t.x3 + one;
        CHECK(t.x2 * t.x2 - base * q * q == TowerElem::constant(n - 1, -1));
    }
}

TEST_CASE("numeric embeddings") {
    const mpfr_prec_t prec = 128;
    // X_2 at k=1 is 2cos(pi/8) = 1.847759...
    Real x2 = numeric_embed(TowerElem::generator(2), 1, prec);
    CHECK((x2 - Real::of(1847759L, prec) / Real::of(1000000L, prec)).abs_less_than_pow10(-6));

    // eta_2 at k=3 is -1.496605...
    Real e23 = numeric_embed(eta(2), 3, prec);
    CHECK((e23 + Real::of(1496605L, prec) / Real::of(1000000L, prec)).abs_less_than_pow10(-6));

    // constants are fixed by every embedding
    for (unsigned k : {1u, 3u, 5u, 7u}) {
        CHECK(numeric_embed(TowerElem::constant(2, 9), k, prec).cmp(Real::of(9L, prec)) == 0);
    }

    CHECK_THROWS_AS(numeric_embed(TowerElem::generator(2), 2, prec), std::invalid_argument);
    CHECK_THROWS_AS(numeric_embed(TowerElem::generator(2), 9, prec), std::invalid_argument);
}

TEST_CASE("verified period expansion at n = 1 and 2") {
    TowerVerification v1 = verify_period_expansion(1, 256, 60);
    CHECK(v1.fixed_point_ok);
    CHECK(v1.norm_eta_ok);
    CHECK(v1.convergent_identity_ok);
    REQUIRE(v1.embeddings.size() == 2);
    CHECK(v1.embeddings[0].eta_dominant);       // |1+sqrt2| > 1
    CHECK_FALSE(v1.embeddings[1].eta_dominant); // |1-sqrt2| < 1
    CHECK(v1.all_ok);

    TowerVerification v2 = verify_period_expansion(2, 256, 80);
    CHECK(v2.all_ok);
    REQUIRE(v2.embeddings.size() == 4);
    CHECK(v2.embeddings[0].eta_dominant);        // k=1: 5.027 > 1
    CHECK(v2.embeddings[1].eta_dominant);        // k=3: |-1.4966| > 1
    CHECK_FALSE(v2.embeddings[2].eta_dominant);  // k=5
    CHECK_FALSE(v2.embeddings[3].eta_dominant);  // k=7
    CHECK(v2.embeddings[0].target_sign == 1);
    CHECK(v2.embeddings[1].target_sign == 1);
    CHECK(v2.embeddings[2].target_sign == -1);
    CHECK(v2.embeddings[3].target_sign == -1);
}
