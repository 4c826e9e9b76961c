#pragma once

#include <iosfwd>
#include <string>

#include "picf/int_util.hpp"

namespace picf {

// Exact element a + b*sqrt(m) of a real quadratic field, with rational a, b
// and squarefree radicand m >= 1. Construction normalizes eagerly: the
// square part of the radicand is folded into b, and radicand 1 collapses to
// a plain rational (b = 0). This makes equality and sign decisions
// canonical. Values with different radicands combine only if one of them is
// rational.
class Surd {
  public:
    Surd() : a_(0), b_(0), m_(1) {}
    Surd(Rat rational) : a_(std::move(rational)), b_(0), m_(1) {}  // NOLINT(google-explicit-constructor)
    Surd(const Int& integer) : a_(Rat(integer)), b_(0), m_(1) {}   // NOLINT(google-explicit-constructor)
    Surd(Rat a, Rat b, const Int& m);

    static Surd sqrt_of(const Int& m) { return Surd(Rat(0), Rat(1), m); }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    const Int& m() const { return m_; }

    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    Surd operator-() const;
    Surd conj() const;  // negates the sqrt(m) coefficient

    friend Surd operator+(const Surd& x, const Surd& y);
    friend Surd operator-(const Surd& x, const Surd& y);
    friend Surd operator*(const Surd& x, const Surd& y);
    friend Surd operator/(const Surd& x, const Surd& y);

    Surd inverse() const;

    // a^2 - m*b^2, equal to x * conj(x).
    Rat norm() const;

    // Exact sign (-1, 0, +1) by comparing a^2 against m*b^2; no real
    // approximation involved.
    int sign() const;

    // sign(x^2 - 1) >= 0, i.e. |x| >= 1, decided exactly.
    bool abs_at_least_one() const;

    friend bool operator==(const Surd& x, const Surd& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.m_ == y.m_;
    }
    friend bool operator!=(const Surd& x, const Surd& y) { return !(x == y); }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Surd& x);

  private:
    // Shared radicand for combining x and y; throws on a genuine mismatch.
    static Int common_radicand(const Surd& x, const Surd& y);

    Rat a_;
    Rat b_;
    Int m_;
};

inline Rat surd_norm(const Surd& x) { return x.norm(); }
inline int surd_sign(const Surd& x) { return x.sign(); }

}  // namespace picf
