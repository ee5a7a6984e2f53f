#include "lsf/dense_poly.hpp"

#include <numeric>
#include <stdexcept>

namespace lsf {

DensePoly::DensePoly(int nvars, int degree) : nvars_(nvars), degree_(degree) {
    if (nvars < 0 || degree < 0) throw std::invalid_argument("negative variable count or degree");
}

DensePoly DensePoly::from_terms(int nvars, const std::vector<std::pair<Exponent, Rational>>& terms) {
    if (terms.empty()) throw std::invalid_argument("empty term list");
    const int d = std::accumulate(terms.front().first.begin(), terms.front().first.end(), 0);
    DensePoly p(nvars, d);
    for (const auto& [e, c] : terms) {
        if (static_cast<int>(e.size()) == nvars && std::accumulate(e.begin(), e.end(), 0) != d)
            throw std::invalid_argument("inhomogeneous polynomial");
        p.add_term(e, c);
    }
    return p;
}

void DensePoly::add_term(const Exponent& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent length mismatch");
    int sum = 0;
    for (int v : e) {
        if (v < 0) throw std::invalid_argument("negative exponent");
        sum += v;
    }
    if (sum != degree_) throw std::invalid_argument("inhomogeneous polynomial");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational DensePoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

DensePoly DensePoly::derivative(std::span<const int> alpha) const {
    if (static_cast<int>(alpha.size()) != nvars_) throw std::invalid_argument("derivative order length mismatch");
    const int order = std::accumulate(alpha.begin(), alpha.end(), 0);
    if (order > degree_) return DensePoly(nvars_, 0);
    DensePoly out(nvars_, degree_ - order);
    for (const auto& [e, c] : terms_) {
        Exponent f(e);
        Integer falling = 1;
        bool vanishes = false;
        for (int i = 0; i < nvars_ && !vanishes; ++i) {
            if (e[i] < alpha[i]) {
                vanishes = true;
                break;
            }
            for (int j = 0; j < alpha[i]; ++j) falling *= e[i] - j;
            f[i] -= alpha[i];
        }
        if (!vanishes) out.add_term(f, Rational(c * falling));
    }
    return out;
}

DensePoly DensePoly::restrict_last_to_zero() const {
    if (nvars_ == 0) throw std::invalid_argument("no variable to restrict");
    DensePoly out(nvars_ - 1, degree_);
    for (const auto& [e, c] : terms_) {
        if (e.back() != 0) continue;
        out.add_term(Exponent(e.begin(), e.end() - 1), c);
    }
    return out;
}

DensePoly DensePoly::permuted(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != nvars_) throw std::invalid_argument("permutation length mismatch");
    DensePoly out(nvars_, degree_);
    for (const auto& [e, c] : terms_) {
        Exponent f(e.size());
        for (int i = 0; i < nvars_; ++i) f[static_cast<std::size_t>(perm[i])] = e[i];
        out.add_term(f, c);
    }
    return out;
}

DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.nvars_ != b.nvars_ || a.degree_ != b.degree_)
        throw std::invalid_argument("cannot add polynomials of different shape");
    DensePoly out(a);
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("cannot multiply polynomials in different variables");
    DensePoly out(a.nvars_, a.degree_ + b.degree_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e(ea);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out.add_term(e, Rational(ca * cb));
        }
    return out;
}

DensePoly disjoint_product(const DensePoly& a, const DensePoly& b) {
    DensePoly out(a.nvars() + b.nvars(), a.degree() + b.degree());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            Exponent e(ea);
            e.insert(e.end(), eb.begin(), eb.end());
            out.add_term(e, Rational(ca * cb));
        }
    return out;
}

Integer exponent_factorial(std::span<const int> alpha) {
    Integer r = 1;
    for (int a : alpha) r *= factorial(a);
    return r;
}

namespace {

void compositions_into(int remaining, int slot, Exponent& cur, std::vector<Exponent>& out) {
    if (slot + 1 == static_cast<int>(cur.size())) {
        cur[static_cast<std::size_t>(slot)] = remaining;
        out.push_back(cur);
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        cur[static_cast<std::size_t>(slot)] = v;
        compositions_into(remaining - v, slot + 1, cur, out);
    }
}

}  // namespace

std::vector<Exponent> compositions(int d, int n) {
    if (d < 0 || n < 0) throw std::invalid_argument("negative argument");
    std::vector<Exponent> out;
    if (n == 0) {
        if (d == 0) out.emplace_back();
        return out;
    }
    Exponent cur(static_cast<std::size_t>(n), 0);
    compositions_into(d, 0, cur, out);
    return out;
}

}  // namespace lsf
