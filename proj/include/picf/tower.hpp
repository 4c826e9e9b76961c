#pragma once

#include <string>
#include <utility>
#include <vector>

#include "picf/int_util.hpp"
#include "picf/real.hpp"

namespace picf {

// Element of Z[X_n] for the tower generators X_n = 2 cos(pi / 2^(n+1)),
// stored as an integer coordinate vector in the power basis
// 1, X_n, ..., X_n^(2^n - 1) and reduced eagerly modulo the minimal
// polynomial mu_n. The defining relation of the tower is
// X_n^2 = 2 + X_(n-1), whence mu_0(x) = x and mu_n(x) = mu_(n-1)(x^2 - 2).
// Level-0 elements are plain integers.
class TowerElem {
  public:
    TowerElem() : level_(0), c_(1, Int(0)) {}
    TowerElem(int level, std::vector<Int> coords);

    static TowerElem constant(int level, const Int& c);
    static TowerElem generator(int level);  // X_level (the zero element at level 0)

    int level() const { return level_; }
    const std::vector<Int>& coords() const { return c_; }
    bool is_zero() const;
    bool is_constant() const;

    friend TowerElem operator+(const TowerElem& x, const TowerElem& y);
    friend TowerElem operator-(const TowerElem& x, const TowerElem& y);
    friend TowerElem operator*(const TowerElem& x, const TowerElem& y);
    TowerElem operator-() const;

    friend bool operator==(const TowerElem& x, const TowerElem& y) {
        return x.level_ == y.level_ && x.c_ == y.c_;
    }
    friend bool operator!=(const TowerElem& x, const TowerElem& y) { return !(x == y); }

    std::string str() const;

  private:
    static void require_same_level(const TowerElem& x, const TowerElem& y);

    int level_;
    std::vector<Int> c_;  // length 2^level_
};

// Coefficients (ascending) of the monic degree-2^n minimal polynomial of X_n.
std::vector<Int> minimal_poly(int n);

// Coefficients of 2 cos(k*theta) as a polynomial in x = 2 cos(theta):
// C_0 = 2, C_1 = x, C_(k+1) = x C_k - C_(k-1).
std::vector<Int> cos_poly(unsigned k);

// Re-expresses a level-(n-1) element at level n via X_(n-1) = X_n^2 - 2.
// Injective ring map.
TowerElem embed_up(const TowerElem& x);

// The unique pair (a, b) over Z[X_(n-1)] with x = a + X_n b: even-index
// coordinates form a, odd-index ones form b (both as polynomials in
// X_n^2 = 2 + X_(n-1)).
std::pair<TowerElem, TowerElem> split(const TowerElem& x);

// x * tau(x) for the conjugation tau : X_n -> -X_n; with (a, b) = split(x)
// this is a^2 - (2 + X_(n-1)) b^2, an element one level down.
TowerElem relative_norm(const TowerElem& x);

// eta_n = 1 + sum_(k=1)^(2^n - 1) 2 cos(k pi / 2^(n+1)), the unit with
// relative norm -1 at every level.
TowerElem eta(int n);

// The unique y with y * u = x, found by solving the linear system over the
// rationals in the power basis; throws if u does not divide x in the ring.
TowerElem unit_divide(const TowerElem& x, const TowerElem& u);

// Period triple (x1, x2, x3) over Z[X_(n-1)] of the purely periodic
// length-3 expansion of X_n:
//   x2 = eta_(n-1),
//   x3 = ((eta_n - eta_(n-1))/X_n - 1) / eta_(n-1),
//   x1 = ((eta_n - eta_(n-1))*X_n - 1) / eta_(n-1).
// The division by X_n uses split (the even part must vanish exactly), and
// both unit divisions must come out integral; failures throw.
struct TowerTriple {
    TowerElem x1, x2, x3;
};

TowerTriple period_triple(int n);

// Evaluates the coordinate polynomial of x at the conjugate root
// 2 cos(k pi / 2^(n+1)); k must be odd and in [1, 2^(n+1) - 1].
Real numeric_embed(const TowerElem& x, unsigned k, mpfr_prec_t precision_bits);

// Checks of the period triple, exact where possible:
//   (a) fixed point: E21 X_n^2 + (E22 - E11) X_n - E12 = 0 exactly in
//       Z[X_n], for E the period word matrix;
//   (b) relative_norm(eta_n) = -1 exactly;
//   (c) convergent identity: p2 + X_n q2 = eta_n exactly, where
//       p2 = x1 x2 x3 + x1 + x3 and q2 = x2 x3 + 1;
//   (d) per real embedding: convergents after `iterations` applications of
//       the period land within 10^-10 of +sigma(X_n) when |sigma(eta_n)|>1
//       and of -sigma(X_n) otherwise.
struct EmbeddingVerdict {
    unsigned k;
    bool eta_dominant;   // |sigma(eta_n)| > 1
    int target_sign;     // +1 -> +sigma(X_n), -1 -> -sigma(X_n)
    std::string target;  // decimal rendering of the target
    std::string residual;
    bool ok;
};

struct TowerVerification {
    int n;
    TowerTriple triple;
    bool fixed_point_ok;
    bool norm_eta_ok;
    bool convergent_identity_ok;
    std::vector<EmbeddingVerdict> embeddings;
    bool all_ok;
    mpfr_prec_t precision_bits;
    int iterations;
};

TowerVerification verify_period_expansion(int n, mpfr_prec_t precision_bits = 256,
                                          int iterations = 200);

}  // namespace picf
