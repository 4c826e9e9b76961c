#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace picf {

using Int = mpz_class;
using Rat = mpq_class;

// Floor of the square root of a non-negative integer.
Int isqrt(const Int& n);

bool is_perfect_square(const Int& n);

// Sign as -1 / 0 / +1.
int sgn(const Int& n);
int sgn(const Rat& q);

// Writes n = k^2 * m with m squarefree, n >= 1. Trial division up to
// isqrt(n); fine at desk scale.
struct SquarefreeParts {
    Int k;
    Int squarefree;
};
SquarefreeParts squarefree_decompose(const Int& n);

// Integer roots of a*t^2 + b*t + c = 0 (a != 0), deduplicated, ascending.
std::vector<Int> integer_quadratic_roots(const Int& a, const Int& b, const Int& c);

// Exact quotient n / d, throwing if d == 0 or d does not divide n.
Int exact_div(const Int& n, const Int& d);

}  // namespace picf
