#include "picf/surd.hpp"

#include <ostream>
#include <sstream>

namespace picf {

Surd::Surd(Rat a, Rat b, const Int& m) : a_(std::move(a)), b_(std::move(b)) {
    if (m < 1) {
        throw std::invalid_argument("Surd: radicand must be positive");
    }
    if (b_ == 0) {
        m_ = 1;
        return;
    }
    SquarefreeParts parts = squarefree_decompose(m);
    b_ *= Rat(parts.k);
    m_ = parts.squarefree;
    if (m_ == 1) {
        a_ += b_;
        b_ = 0;
    }
}

Surd Surd::operator-() const {
    Surd r;
    r.a_ = -a_;
    r.b_ = -b_;
    r.m_ = m_;
    return r;
}

Surd Surd::conj() const {
    Surd r;
    r.a_ = a_;
    r.b_ = -b_;
    r.m_ = m_;
    return r;
}

Int Surd::common_radicand(const Surd& x, const Surd& y) {
    if (x.m_ == y.m_) {
        return x.m_;
    }
    if (x.b_ == 0) {
        return y.m_;
    }
    if (y.b_ == 0) {
        return x.m_;
    }
    throw std::invalid_argument("Surd: radicand mismatch");
}

Surd operator+(const Surd& x, const Surd& y) {
    Surd r;
    r.m_ = Surd::common_radicand(x, y);
    r.a_ = x.a_ + y.a_;
    r.b_ = x.b_ + y.b_;
    if (r.b_ == 0) {
        r.m_ = 1;
    }
    return r;
}

Surd operator-(const Surd& x, const Surd& y) { return x + (-y); }

Surd operator*(const Surd& x, const Surd& y) {
    Surd r;
    r.m_ = Surd::common_radicand(x, y);
    r.a_ = x.a_ * y.a_ + Rat(r.m_) * x.b_ * y.b_;
    r.b_ = x.a_ * y.b_ + x.b_ * y.a_;
    if (r.b_ == 0) {
        r.m_ = 1;
    }
    return r;
}

Surd Surd::inverse() const {
    if (is_zero()) {
        throw std::domain_error("Surd: inversion of zero");
    }
    Rat n = norm();
    // norm == 0 with nonzero value would force m to be a rational square,
    // which normalization rules out.
    Surd r;
    r.a_ = a_ / n;
    r.b_ = -b_ / n;
    r.m_ = m_;
    if (r.b_ == 0) {
        r.m_ = 1;
    }
    return r;
}

Surd operator/(const Surd& x, const Surd& y) { return x * y.inverse(); }

Rat Surd::norm() const { return a_ * a_ - Rat(m_) * b_ * b_; }

int Surd::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) {
        return sa;
    }
    if (sa == 0) {
        return sb;
    }
    if (sa == sb) {
        return sa;
    }
    // Opposite signs: compare |a| against |b|*sqrt(m) via squares.
    int cmp = sgn(norm());  // sign of a^2 - m b^2
    return sa * cmp;
}

bool Surd::abs_at_least_one() const {
    Surd sq = (*this) * (*this);
    sq.a_ -= 1;
    return sq.sign() >= 0;
}

std::string Surd::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Surd& x) {
    if (x.is_rational()) {
        return os << x.a();
    }
    if (x.a() != 0) {
        os << x.a();
        if (sgn(x.b()) >= 0) {
            os << "+";
        }
    }
    if (x.b() == 1) {
        // nothing
    } else if (x.b() == -1) {
        os << "-";
    } else {
        os << x.b() << "*";
    }
    return os << "sqrt(" << x.m() << ")";
}

}  // namespace picf
