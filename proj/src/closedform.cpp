#include "lsf/closedform.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "lsf/exactlinalg.hpp"

namespace lsf {

namespace {

bool all_zero(std::initializer_list<const Rational*> xs) {
    for (const Rational* x : xs)
        if (*x != 0) return false;
    return true;
}

// 0 <= x_0 <= x_1 <= ...
bool chain(const std::vector<Rational>& xs) {
    if (xs.front() < 0) return false;
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (xs[i] < xs[i - 1]) return false;
    return true;
}

int need_vars(const Mode& mode, int minimum) {
    if (!mode.nvars) return 0;
    if (*mode.nvars < minimum)
        throw std::invalid_argument("closed form needs at least " + std::to_string(minimum) + " variables");
    return *mode.nvars;
}

}  // namespace

RegionVerdict degree2(const Rational& a, const Rational& b, const Mode& mode) {
    need_vars(mode, 2);
    if (all_zero({&a, &b})) return RegionVerdict::no("nonzero");
    if (!chain({a, b})) return RegionVerdict::no("0<=a<=b");
    return RegionVerdict::yes();
}

RegionVerdict degree3(const Rational& a, const Rational& b, const Rational& c, const Mode& mode) {
    const int vars = need_vars(mode, 3);
    if (all_zero({&a, &b, &c})) return RegionVerdict::no("nonzero");
    if (!chain({a, b, c})) return RegionVerdict::no("0<=a<=b<=c");
    if (mode.is_function()) {
        if (a * c > b * b) return RegionVerdict::no("ac<=b^2");
        return RegionVerdict::yes();
    }
    // Stated for n + 1 variables.
    const Rational n = vars - 1;
    if (a * b + (n - 1) * a * c > n * b * b) return RegionVerdict::no("ab+(n-1)ac<=nb^2");
    return RegionVerdict::yes();
}

RegionVerdict degree3_nschur(const Rational& a, const Rational& b, const Rational& c, int nvars) {
    if (nvars < 3) throw std::invalid_argument("closed form needs at least 3 variables");
    if (all_zero({&a, &b, &c})) return RegionVerdict::no("nonzero");
    if (a < 0 || b < 0 || b + c < 0) return RegionVerdict::no("a,b,b+c>=0");
    const Rational n = nvars - 1;
    if (a * c - a * (b + c) / n > b * b) return RegionVerdict::no("ac-a(b+c)/n<=b^2");
    return RegionVerdict::yes();
}

RegionVerdict degree3_nschur(const Rational& a, const Rational& b, const Rational& c) {
    if (all_zero({&a, &b, &c})) return RegionVerdict::no("nonzero");
    if (a < 0 || b < 0 || b + c < 0) return RegionVerdict::no("a,b,b+c>=0");
    if (a * c > b * b) return RegionVerdict::no("ac<=b^2");
    return RegionVerdict::yes();
}

RegionVerdict degree4(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                      const Rational& e, const Mode& mode) {
    const int vars = need_vars(mode, 4);
    if (all_zero({&a, &b, &c, &d, &e})) return RegionVerdict::no("nonzero");
    if (!chain({a, b, c, d, e})) return RegionVerdict::no("0<=a<=b<=c<=d<=e");
    if (mode.is_function()) {
        if (a * d > b * b) return RegionVerdict::no("ad<=b^2");
        if ((b + c) * e > 2 * d * d) return RegionVerdict::no("(b+c)e<=2d^2");
        return RegionVerdict::yes();
    }
    const Rational n = vars;
    if (a * (c + d * (n - 2)) > (n - 1) * b * b) return RegionVerdict::no("a(c+d(n-2))<=(n-1)b^2");
    if ((b + c) * (d + e * (n - 3)) > 2 * (n - 2) * d * d) return RegionVerdict::no("(b+c)(d+e(n-3))<=2(n-2)d^2");
    return RegionVerdict::yes();
}

RegionVerdict degree5_fn(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                         const Rational& e, const Rational& f, const Rational& g) {
    if (all_zero({&a, &b, &c, &d, &e, &f, &g})) return RegionVerdict::no("nonzero");
    if (!chain({a, b, c, d, e, f, g})) return RegionVerdict::no("0<=a<=b<=c<=d<=e<=f<=g");
    if (a * d > b * b) return RegionVerdict::no("ad<=b^2");
    if ((d + 2 * e) * g > 3 * f * f) return RegionVerdict::no("(d+2e)g<=3f^2");
    if (b * f > d * d) return RegionVerdict::no("bf<=d^2");
    if (c * f > e * e) return RegionVerdict::no("cf<=e^2");
    const SymMatrix m{{b, c, d}, {c, c, e}, {d, e, f}};
    const std::vector<std::size_t> all{0, 1, 2};
    if (principal_minor(m, all) < 0) return RegionVerdict::no("det(b c d; c c e; d e f)>=0");
    return RegionVerdict::yes();
}

RegionVerdict degree6_fn(const std::map<Partition, Rational>& coeffs) {
    auto c = [&](std::initializer_list<int> parts) {
        auto it = coeffs.find(Partition(parts));
        return it == coeffs.end() ? Rational(0) : it->second;
    };
    for (const auto& [p, v] : coeffs)
        if (p.weight() != 6) throw std::invalid_argument("degree six coefficients expected");
    const auto parts = generate_partitions(6);
    bool nonzero = false;
    for (const auto& p : parts) {
        auto it = coeffs.find(p);
        if (it == coeffs.end()) continue;
        if (it->second < 0) return RegionVerdict::no("nonneg");
        if (it->second != 0) nonzero = true;
    }
    if (!nonzero) return RegionVerdict::no("nonzero");
    auto at = [&](const Partition& p) {
        auto it = coeffs.find(p);
        return it == coeffs.end() ? Rational(0) : it->second;
    };
    for (const auto& upper : parts)
        for (const auto& lower : parts)
            if (lower != upper && dominance_leq(lower, upper) && at(lower) < at(upper))
                return RegionVerdict::no("dominance");

    const Rational c6 = c({6}), c51 = c({5, 1}), c42 = c({4, 2}), c411 = c({4, 1, 1}), c33 = c({3, 3}),
                   c321 = c({3, 2, 1}), c3111 = c({3, 1, 1, 1}), c222 = c({2, 2, 2}), c2211 = c({2, 2, 1, 1}),
                   c21111 = c({2, 1, 1, 1, 1}), c1_6 = c({1, 1, 1, 1, 1, 1});
    if (c6 * c411 > c51 * c51) return RegionVerdict::no("c6*c411<=c51^2");
    if (c2211 * (c42 + c33) > 2 * c321 * c321) return RegionVerdict::no("c2211*(c42+c33)<=2*c321^2");
    if (c1_6 * (c3111 + 3 * c2211) > 4 * c21111 * c21111) return RegionVerdict::no("c1^6*(c3111+3*c2211)<=4*c21111^2");
    const SymMatrix q31{{c51, c42, c411}, {c42, c33, c321}, {c411, c321, c3111}};
    if (!at_most_one_positive_eigenvalue(q31).holds) return RegionVerdict::no("Q31");
    const Rational mid = (c321 + c222) / 2;
    const SymMatrix q211{{c411, c321, c3111}, {c321, mid, c2211}, {c3111, c2211, c21111}};
    if (!at_most_one_positive_eigenvalue(q211).holds) return RegionVerdict::no("Q211");
    return RegionVerdict::yes();
}

RegionVerdict closed_form_membership(const SymPoly& f, const Mode& mode) {
    const SymPoly g = convert_basis(f, Basis::NormalizedMonomial);
    const std::vector<Rational> v = g.dense();
    const int vars = mode.nvars.value_or(1 << 30);
    switch (g.degree()) {
        case 2:
            if (vars >= 2) return degree2(v[0], v[1], mode);
            break;
        case 3:
            if (vars >= 3) return degree3(v[0], v[1], v[2], mode);
            break;
        case 4:
            if (vars >= 4) return degree4(v[0], v[1], v[2], v[3], v[4], mode);
            break;
        case 5:
            if (mode.is_function()) return degree5_fn(v[0], v[1], v[2], v[3], v[4], v[5], v[6]);
            break;
        case 6:
            if (mode.is_function()) {
                std::map<Partition, Rational> m(g.coeffs().begin(), g.coeffs().end());
                return degree6_fn(m);
            }
            break;
        default:
            break;
    }
    if (g.is_zero()) return RegionVerdict::no("nonzero");
    const Verdict verdict = is_lorentzian(g, mode);
    if (verdict.lorentzian) return RegionVerdict::yes();
    return RegionVerdict::no(std::string(failure_kind_name(verdict.failure->kind)));
}

}  // namespace lsf
