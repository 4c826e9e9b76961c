#include "picf/tower.hpp"

#include <sstream>

#include "picf/mat2.hpp"

namespace picf {

namespace {

size_t dim_of_level(int level) {
    if (level < 0 || level > 24) {
        throw std::invalid_argument("tower: level out of range");
    }
    return size_t{1} << level;
}

// Substitute q(x) = x^2 - 2 into a polynomial (ascending coefficients).
std::vector<Int> compose_with_x2_minus_2(const std::vector<Int>& p) {
    std::vector<Int> result(1, Int(0));
    std::vector<Int> power(1, Int(1));  // q^0
    for (size_t i = 0; i < p.size(); ++i) {
        if (result.size() < power.size()) {
            result.resize(power.size(), Int(0));
        }
        for (size_t j = 0; j < power.size(); ++j) {
            result[j] += p[i] * power[j];
        }
        if (i + 1 < p.size()) {
            // power *= x^2 - 2
            std::vector<Int> next(power.size() + 2, Int(0));
            for (size_t j = 0; j < power.size(); ++j) {
                next[j + 2] += power[j];
                next[j] -= 2 * power[j];
            }
            power = std::move(next);
        }
    }
    return result;
}

// Reduce ascending coefficients modulo the monic mu_n in place, then trim
// to the power-basis length 2^n.
std::vector<Int> reduce_mod_minimal(std::vector<Int> c, int level) {
    size_t dim = dim_of_level(level);
    if (c.size() > dim) {
        std::vector<Int> mu = minimal_poly(level);  // degree dim, monic
        for (size_t i = c.size(); i-- > dim;) {
            if (c[i] == 0) {
                continue;
            }
            Int lead = std::move(c[i]);
            c[i] = 0;
            for (size_t j = 0; j < dim; ++j) {
                c[i - dim + j] -= lead * mu[j];
            }
        }
    }
    c.resize(dim, Int(0));
    return c;
}

}  // namespace

TowerElem::TowerElem(int level, std::vector<Int> coords) : level_(level) {
    c_ = reduce_mod_minimal(std::move(coords), level);
}

TowerElem TowerElem::constant(int level, const Int& c) {
    std::vector<Int> v(dim_of_level(level), Int(0));
    v[0] = c;
    TowerElem e;
    e.level_ = level;
    e.c_ = std::move(v);
    return e;
}

TowerElem TowerElem::generator(int level) {
    if (level == 0) {
        return TowerElem();  // X_0 = 0
    }
    std::vector<Int> v(dim_of_level(level), Int(0));
    v[1] = 1;
    TowerElem e;
    e.level_ = level;
    e.c_ = std::move(v);
    return e;
}

bool TowerElem::is_zero() const {
    for (const Int& x : c_) {
        if (x != 0) {
            return false;
        }
    }
    return true;
}

bool TowerElem::is_constant() const {
    for (size_t i = 1; i < c_.size(); ++i) {
        if (c_[i] != 0) {
            return false;
        }
    }
    return true;
}

void TowerElem::require_same_level(const TowerElem& x, const TowerElem& y) {
    if (x.level_ != y.level_) {
        throw std::invalid_argument("tower: level mismatch");
    }
}

TowerElem operator+(const TowerElem& x, const TowerElem& y) {
    TowerElem::require_same_level(x, y);
    TowerElem r = x;
    for (size_t i = 0; i < r.c_.size(); ++i) {
        r.c_[i] += y.c_[i];
    }
    return r;
}

TowerElem operator-(const TowerElem& x, const TowerElem& y) {
    TowerElem::require_same_level(x, y);
    TowerElem r = x;
    for (size_t i = 0; i < r.c_.size(); ++i) {
        r.c_[i] -= y.c_[i];
    }
    return r;
}

TowerElem TowerElem::operator-() const {
    TowerElem r = *this;
    for (Int& x : r.c_) {
        x = -x;
    }
    return r;
}

TowerElem operator*(const TowerElem& x, const TowerElem& y) {
    TowerElem::require_same_level(x, y);
    std::vector<Int> prod(2 * x.c_.size() - 1, Int(0));
    for (size_t i = 0; i < x.c_.size(); ++i) {
        if (x.c_[i] == 0) {
            continue;
        }
        for (size_t j = 0; j < y.c_.size(); ++j) {
            prod[i + j] += x.c_[i] * y.c_[j];
        }
    }
    return TowerElem(x.level_, std::move(prod));
}

std::string TowerElem::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i > 0) {
            os << ",";
        }
        os << c_[i];
    }
    os << "]@" << level_;
    return os.str();
}

std::vector<Int> minimal_poly(int n) {
    std::vector<Int> mu = {0, 1};  // mu_0 = x
    for (int i = 1; i <= n; ++i) {
        mu = compose_with_x2_minus_2(mu);
    }
    return mu;
}

std::vector<Int> cos_poly(unsigned k) {
    if (k == 0) {
        return {2};
    }
    std::vector<Int> prev = {2};     // C_0
    std::vector<Int> cur = {0, 1};   // C_1
    for (unsigned i = 1; i < k; ++i) {
        // next = x*cur - prev
        std::vector<Int> next(cur.size() + 1, Int(0));
        for (size_t j = 0; j < cur.size(); ++j) {
            next[j + 1] = cur[j];
        }
        for (size_t j = 0; j < prev.size(); ++j) {
            next[j] -= prev[j];
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

TowerElem embed_up(const TowerElem& x) {
    return TowerElem(x.level() + 1, compose_with_x2_minus_2(x.coords()));
}

std::pair<TowerElem, TowerElem> split(const TowerElem& x) {
    if (x.level() < 1) {
        throw std::invalid_argument("split: needs level >= 1");
    }
    int down = x.level() - 1;
    size_t half = dim_of_level(down);
    // a(y) = sum c_{2j} (2+y)^j, b(y) = sum c_{2j+1} (2+y)^j.
    auto assemble = [&](size_t parity) {
        std::vector<Int> out(half, Int(0));
        std::vector<Int> power(1, Int(1));  // (2+y)^0
        for (size_t j = 0; j < half; ++j) {
            const Int& cj = x.coords()[2 * j + parity];
            if (cj != 0) {
                for (size_t i = 0; i < power.size(); ++i) {
                    out[i] += cj * power[i];
                }
            }
            if (j + 1 < half) {
                std::vector<Int> next(power.size() + 1, Int(0));
                for (size_t i = 0; i < power.size(); ++i) {
                    next[i] += 2 * power[i];
                    next[i + 1] += power[i];
                }
                power = std::move(next);
            }
        }
        return TowerElem(down, std::move(out));
    };
    return {assemble(0), assemble(1)};
}

TowerElem relative_norm(const TowerElem& x) {
    auto [a, b] = split(x);
    TowerElem base = TowerElem::constant(a.level(), 2) + TowerElem::generator(a.level());
    return a * a - base * b * b;
}

TowerElem eta(int n) {
    size_t dim = dim_of_level(n);
    std::vector<Int> coeffs(dim, Int(0));
    coeffs[0] = 1;
    for (unsigned k = 1; k < dim; ++k) {
        std::vector<Int> ck = cos_poly(k);  // degree k < dim, no reduction needed
        for (size_t i = 0; i < ck.size(); ++i) {
            coeffs[i] += ck[i];
        }
    }
    return TowerElem(n, std::move(coeffs));
}

TowerElem unit_divide(const TowerElem& x, const TowerElem& u) {
    if (x.level() != u.level()) {
        throw std::invalid_argument("unit_divide: level mismatch");
    }
    const int level = x.level();
    const size_t dim = dim_of_level(level);

    // Column j of the multiplication-by-u matrix is u * X^j in the power
    // basis.
    std::vector<std::vector<Rat>> aug(dim, std::vector<Rat>(dim + 1, Rat(0)));
    TowerElem xz = TowerElem::generator(level);
    TowerElem col = u;
    for (size_t j = 0; j < dim; ++j) {
        for (size_t i = 0; i < dim; ++i) {
            aug[i][j] = Rat(col.coords()[i]);
        }
        if (j + 1 < dim) {
            col = col * xz;
        }
    }
    for (size_t i = 0; i < dim; ++i) {
        aug[i][dim] = Rat(x.coords()[i]);
    }

    // Gaussian elimination over Q.
    for (size_t c = 0; c < dim; ++c) {
        size_t pivot = c;
        while (pivot < dim && aug[pivot][c] == 0) {
            ++pivot;
        }
        if (pivot == dim) {
            throw std::domain_error("unit_divide: divisor is zero (singular system)");
        }
        std::swap(aug[c], aug[pivot]);
        Rat inv = aug[c][c];
        for (size_t j = c; j <= dim; ++j) {
            aug[c][j] /= inv;
        }
        for (size_t r = 0; r < dim; ++r) {
            if (r == c || aug[r][c] == 0) {
                continue;
            }
            Rat f = aug[r][c];
            for (size_t j = c; j <= dim; ++j) {
                aug[r][j] -= f * aug[c][j];
            }
        }
    }

    std::vector<Int> result(dim);
    for (size_t i = 0; i < dim; ++i) {
        const Rat& v = aug[i][dim];
        if (v.get_den() != 1) {
            throw std::domain_error("unit_divide: quotient is not integral");
        }
        result[i] = v.get_num();
    }
    TowerElem q(level, std::move(result));
    if (q * u != x) {
        throw std::logic_error("unit_divide: verification failed");
    }
    return q;
}

TowerTriple period_triple(int n) {
    if (n < 1) {
        throw std::invalid_argument("period_triple: needs n >= 1");
    }
    TowerElem eta_n = eta(n);
    TowerElem eta_down = eta(n - 1);
    TowerElem diff = eta_n - embed_up(eta_down);

    // diff = X_n * b exactly: the even part must vanish.
    auto [even, odd] = split(diff);
    if (!even.is_zero()) {
        throw std::logic_error("period_triple: eta_n - eta_(n-1) is not divisible by X_n");
    }
    const TowerElem& eps_sum = odd;  // (eta_n - eta_(n-1)) / X_n

    TowerElem one = TowerElem::constant(n - 1, 1);
    TowerElem base = TowerElem::constant(n - 1, 2) + TowerElem::generator(n - 1);  // X_n^2

    TowerTriple triple{
        unit_divide(base * eps_sum - one, eta_down),  // ((eta_n-eta_(n-1)) X_n - 1)/eta_(n-1)
        eta_down,
        unit_divide(eps_sum - one, eta_down),
    };
    return triple;
}

Real numeric_embed(const TowerElem& x, unsigned k, mpfr_prec_t precision_bits) {
    size_t dim = dim_of_level(x.level());
    if (k % 2 == 0 || k >= 2 * dim) {
        throw std::invalid_argument("numeric_embed: k must be odd and < 2^(level+1)");
    }
    // root = 2 cos(k pi / 2^(level+1))
    Real angle = Real::of(long(k), precision_bits) * Real::pi(precision_bits) /
                 Real::of(long(2 * dim), precision_bits);
    Real root = Real::of(2L, precision_bits) * angle.cos();
    Real acc = Real::of(0L, precision_bits);
    for (size_t i = x.coords().size(); i-- > 0;) {
        acc = acc * root + Real::of(x.coords()[i], precision_bits);
    }
    return acc;
}

TowerVerification verify_period_expansion(int n, mpfr_prec_t precision_bits, int iterations) {
    if (n < 1 || iterations < 1) {
        throw std::invalid_argument("verify_period_expansion: bad arguments");
    }
    TowerVerification ver;
    ver.n = n;
    ver.precision_bits = precision_bits;
    ver.iterations = iterations;
    ver.triple = period_triple(n);

    const TowerElem x1 = embed_up(ver.triple.x1);
    const TowerElem x2 = embed_up(ver.triple.x2);
    const TowerElem x3 = embed_up(ver.triple.x3);
    const TowerElem zero = TowerElem::constant(n, 0);
    const TowerElem one = TowerElem::constant(n, 1);
    const TowerElem xn = TowerElem::generator(n);

    const std::vector<TowerElem> word = {x1, x2, x3};
    Mat2<TowerElem> e = word_matrix_generic<TowerElem>(word, zero, one);
    ver.fixed_point_ok = (e.e21 * xn * xn + (e.e22 - e.e11) * xn - e.e12).is_zero();

    TowerElem eta_n = eta(n);
    ver.norm_eta_ok = relative_norm(eta_n) == TowerElem::constant(n - 1, -1);

    TowerElem p2 = ver.triple.x1 * ver.triple.x2 * ver.triple.x3 + ver.triple.x1 + ver.triple.x3;
    TowerElem q2 = ver.triple.x2 * ver.triple.x3 + TowerElem::constant(n - 1, 1);
    ver.convergent_identity_ok = embed_up(p2) + xn * embed_up(q2) == eta_n;

    ver.all_ok = ver.fixed_point_ok && ver.norm_eta_ok && ver.convergent_identity_ok;

    const size_t dim = size_t{1} << n;
    for (unsigned k = 1; k < 2 * dim; k += 2) {
        EmbeddingVerdict verdict;
        verdict.k = k;

        Real eta_k = numeric_embed(eta_n, k, precision_bits);
        Real one_r = Real::of(1L, precision_bits);
        verdict.eta_dominant = eta_k.abs() > one_r;
        verdict.target_sign = verdict.eta_dominant ? 1 : -1;

        Real xn_k = numeric_embed(xn, k, precision_bits);
        Real target = verdict.target_sign > 0 ? xn_k : -xn_k;
        verdict.target = target.str(25);

        Real a1 = numeric_embed(x1, k, precision_bits);
        Real a2 = numeric_embed(x2, k, precision_bits);
        Real a3 = numeric_embed(x3, k, precision_bits);

        Real p_prev = Real::of(1L, precision_bits);
        Real q_prev = Real::of(0L, precision_bits);
        Real p_cur = a1;
        Real q_cur = Real::of(1L, precision_bits);
        auto step = [&](const Real& a) {
            Real p_next = a * p_cur + p_prev;
            Real q_next = a * q_cur + q_prev;
            p_prev = std::move(p_cur);
            q_prev = std::move(q_cur);
            p_cur = std::move(p_next);
            q_cur = std::move(q_next);
        };
        for (int it = 0; it < iterations; ++it) {
            if (it > 0) {
                step(a1);
            }
            step(a2);
            step(a3);
        }

        Real residual = (p_cur / q_cur - target).abs();
        verdict.residual = residual.str(8);
        verdict.ok = residual.abs_less_than_pow10(-10);
        ver.all_ok = ver.all_ok && verdict.ok;
        ver.embeddings.push_back(std::move(verdict));
    }
    return ver;
}

}  // namespace picf
