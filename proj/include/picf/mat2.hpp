#pragma once

#include <span>

namespace picf {

// 2x2 matrix over a commutative ring. Continued-fraction words multiply
// D(a) = [[a,1],[1,0]] factors, so the determinant of a word of length n
// is (-1)^n.
template <typename T>
struct Mat2 {
    T e11, e12, e21, e22;

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return Mat2{x.e11 * y.e11 + x.e12 * y.e21, x.e11 * y.e12 + x.e12 * y.e22,
                    x.e21 * y.e11 + x.e22 * y.e21, x.e21 * y.e12 + x.e22 * y.e22};
    }

    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.e11 == y.e11 && x.e12 == y.e12 && x.e21 == y.e21 && x.e22 == y.e22;
    }
    friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }

    T det() const { return e11 * e22 - e12 * e21; }
    T trace() const { return e11 + e22; }
};

// Product D(c1)...D(cn); the empty word gives the identity. The ring's 0
// and 1 are passed in so the same code serves integers and ring elements
// whose shape carries extra data (tower level).
template <typename T>
Mat2<T> word_matrix_generic(std::span<const T> word, const T& zero, const T& one) {
    Mat2<T> m{one, zero, zero, one};
    for (const T& c : word) {
        m = m * Mat2<T>{c, one, one, zero};
    }
    return m;
}

}  // namespace picf
