#include "picf/int_util.hpp"

#include <algorithm>

namespace picf {

Int isqrt(const Int& n) {
    if (n < 0) {
        throw std::invalid_argument("isqrt: negative input");
    }
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const Int& n) {
    if (n < 0) {
        return false;
    }
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

int sgn(const Int& n) { return mpz_sgn(n.get_mpz_t()); }

int sgn(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }

SquarefreeParts squarefree_decompose(const Int& n) {
    if (n < 1) {
        throw std::invalid_argument("squarefree_decompose: input must be >= 1");
    }
    if (mpz_fits_ulong_p(n.get_mpz_t())) {
        unsigned long rest = n.get_ui();
        unsigned long k = 1, sf = 1;
        for (unsigned long d = 2; d <= rest / d; ++d) {
            if (rest % d != 0) {
                continue;
            }
            unsigned e = 0;
            while (rest % d == 0) {
                rest /= d;
                ++e;
            }
            for (unsigned i = 0; i + 1 < e; i += 2) {
                k *= d;
            }
            if (e % 2 == 1) {
                sf *= d;
            }
        }
        return {Int(k), Int(sf * rest)};
    }
    Int rest = n;
    Int k = 1;
    Int sf = 1;
    for (Int d = 2; d * d <= rest; ++d) {
        if (rest % d != 0) {
            continue;
        }
        unsigned long e = 0;
        while (rest % d == 0) {
            rest /= d;
            ++e;
        }
        for (unsigned long i = 0; i + 1 < e; i += 2) {
            k *= d;
        }
        if (e % 2 == 1) {
            sf *= d;
        }
    }
    sf *= rest;
    return {k, sf};
}

std::vector<Int> integer_quadratic_roots(const Int& a, const Int& b, const Int& c) {
    if (a == 0) {
        throw std::invalid_argument("integer_quadratic_roots: leading coefficient is zero");
    }
    Int disc = b * b - 4 * a * c;
    if (disc < 0 || !is_perfect_square(disc)) {
        return {};
    }
    Int r = isqrt(disc);
    std::vector<Int> roots;
    for (const Int& num : {Int(-b + r), Int(-b - r)}) {
        if (num % (2 * a) == 0) {
            roots.push_back(num / (2 * a));
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

Int exact_div(const Int& n, const Int& d) {
    if (d == 0 || n % d != 0) {
        throw std::domain_error("exact_div: not divisible");
    }
    return n / d;
}

}  // namespace picf
