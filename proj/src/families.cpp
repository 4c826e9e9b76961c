#include "picf/families.hpp"

#include <algorithm>

namespace picf {

namespace {

int sign_or(int s, int fallback) { return s != 0 ? s : fallback; }

void require_positive_value(const Int& m) {
    if (m < 1) {
        throw std::invalid_argument("family: non-positive family value");
    }
}

void require_nonzero(const Int& v, const char* what) {
    if (v == 0) {
        throw std::invalid_argument(std::string("family: degenerate parameter ") + what);
    }
}

}  // namespace

const char* family_name(FamilyId fam) {
    switch (fam) {
        case FamilyId::M1:
            return "M1";
        case FamilyId::M2:
            return "M2";
        case FamilyId::M2P:
            return "M2P";
        case FamilyId::M3:
            return "M3";
    }
    return "?";
}

FamilyId family_from_name(const std::string& name) {
    if (name == "M1") return FamilyId::M1;
    if (name == "M2") return FamilyId::M2;
    if (name == "M2P") return FamilyId::M2P;
    if (name == "M3") return FamilyId::M3;
    throw std::invalid_argument("unknown family: " + name);
}

Int family_eval(FamilyId fam, const Int& s, const Int& t) {
    switch (fam) {
        case FamilyId::M1:
            return t * t + 1;
        case FamilyId::M2:
            return s * s * t * t + t;
        case FamilyId::M2P:
            return s * s * t * t + 2 * t;
        case FamilyId::M3: {
            Int u = 4 * s * s + 1;
            return u * u * t * t + 2 * s * (u + 2) * t + s * s + 1;
        }
    }
    throw std::invalid_argument("family_eval: bad family");
}

std::vector<SignedPcf> family_picf(FamilyId fam, const Int& s, const Int& t) {
    Int m = family_eval(fam, s, t);
    std::vector<SignedPcf> out;

    switch (fam) {
        case FamilyId::M1:
            require_nonzero(t, "t");
            require_positive_value(m);
            out.push_back({sgn(t), PCF({t}, {2 * t})});
            break;
        case FamilyId::M2:
            require_nonzero(s, "s");
            require_nonzero(t, "t");
            require_positive_value(m);
            out.push_back({sgn(s * t), PCF({s * t}, {2 * s, 2 * s * t})});
            break;
        case FamilyId::M2P:
            require_nonzero(s, "s");
            require_nonzero(t, "t");
            require_positive_value(m);
            out.push_back({sgn(s * t), PCF({s * t}, {s, 2 * s * t})});
            break;
        case FamilyId::M3: {
            require_positive_value(m);
            if (s == 0) {
                require_nonzero(t, "t");
                out.push_back({sgn(t), PCF({t - 2}, {1, -2, 2 * t - 1})});
                out.push_back({sgn(t), PCF({t - 1}, {2, -1, 2 * t + 1})});
                break;
            }
            Int y = s + (4 * s * s + 1) * t;
            // The value is sgn(x) sqrt(m) for x the trace coordinate of the
            // period matrix; x = t*(4s^2+1)^2 + s(4s^2+3), never zero.
            Int x = (4 * s * s + 1) * y + 2 * s;
            out.push_back({sgn(x), PCF({y}, {2 * s, 2 * s, 2 * y}), t != 0});
            if (s == 1 || s == -1) {
                Int u = s == 1 ? t : Int(-t);
                int sg = sign_or(sgn(u), 1);
                out.push_back({sg, PCF({5 * u + 2}, {-2, 3, 10 * u + 3})});
                out.push_back({sg, PCF({5 * u + 1}, {3, -2, 10 * u + 3})});
            }
            break;
        }
    }
    return out;
}

PCF family_rpcf(FamilyId fam, const Int& s, const Int& t) {
    Int m = family_eval(fam, s, t);
    switch (fam) {
        case FamilyId::M2: {
            if (t >= 0 || s < 1 || (s == 1 && t == -1)) {
                break;
            }
            require_positive_value(m);
            Int h = -s * t - 1;
            if (s >= 2) {
                return PCF({h}, {1, 2 * s - 2, 1, 2 * h});
            }
            return PCF({-t - 1}, {2, -2 * t - 2});  // s = 1
        }
        case FamilyId::M2P: {
            if (t >= 0 || s < 1 || (s == 1 && (t == -1 || t == -2))) {
                break;
            }
            require_positive_value(m);
            if (s >= 3) {
                Int h = -s * t - 1;
                return PCF({h}, {1, s - 2, 1, 2 * h});
            }
            if (s == 2) {
                Int h = -2 * t - 1;
                return PCF({h}, {2, 2 * h});
            }
            return PCF({-t - 2}, {1, -2 * t - 4});  // s = 1
        }
        case FamilyId::M3: {
            if (t <= 0 || s >= 0) {
                break;
            }
            Int y = s + (4 * s * s + 1) * t;
            return PCF({y - 1}, {1, -2 * s - 1, -2 * s - 1, 1, 2 * (y - 1)});
        }
        case FamilyId::M1:
            break;
    }
    throw std::invalid_argument("family_rpcf: parameters outside the closed-form cases");
}

std::vector<std::pair<Int, Int>> family_witnesses(const Int& m, FamilyId fam) {
    std::vector<std::pair<Int, Int>> out;
    switch (fam) {
        case FamilyId::M1:
            if (m >= 1 && is_perfect_square(m - 1)) {
                Int t = isqrt(m - 1);
                out.emplace_back(0, t);
                if (t != 0) {
                    out.emplace_back(0, -t);
                }
            }
            break;
        case FamilyId::M2:
        case FamilyId::M2P: {
            Int c = fam == FamilyId::M2 ? 1 : 2;
            Int s_max = isqrt(m) + 1;
            for (Int s = 1; s <= s_max; ++s) {
                for (const Int& t : integer_quadratic_roots(s * s, c, -m)) {
                    if (t != 0) {
                        out.emplace_back(s, t);
                        out.emplace_back(-s, t);
                    }
                }
            }
            break;
        }
        case FamilyId::M3: {
            if (m >= 1 && is_perfect_square(m - 1)) {
                Int t = isqrt(m - 1);
                if (t != 0) {
                    out.emplace_back(0, t);
                    out.emplace_back(0, -t);
                }
            }
            Int s_max = isqrt(isqrt(16 * m)) + 2;
            for (Int s = 1; s <= s_max; ++s) {
                Int u = 4 * s * s + 1;
                for (const Int& t :
                     integer_quadratic_roots(u * u, 2 * s * (u + 2), s * s + 1 - m)) {
                    out.emplace_back(s, t);
                    out.emplace_back(-s, -t);
                }
            }
            break;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace picf
