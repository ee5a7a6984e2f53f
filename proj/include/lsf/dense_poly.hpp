#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "lsf/rational.hpp"

namespace lsf {

using Exponent = std::vector<int>;

/// Explicit homogeneous polynomial: every stored exponent has length nvars and
/// sums to degree. Zero coefficients are never stored.
class DensePoly {
public:
    DensePoly() = default;
    DensePoly(int nvars, int degree);

    /// Infers the degree from the terms. Throws "inhomogeneous polynomial",
    /// or "empty term list" when there is nothing to infer it from.
    static DensePoly from_terms(int nvars, const std::vector<std::pair<Exponent, Rational>>& terms);

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c to the coefficient of x^e.
    void add_term(const Exponent& e, const Rational& c);
    Rational coeff(const Exponent& e) const;

    /// d^alpha / dx^alpha.
    DensePoly derivative(std::span<const int> alpha) const;
    /// Sets x_n = 0 and drops that variable.
    DensePoly restrict_last_to_zero() const;
    /// Variable i becomes variable perm[i].
    DensePoly permuted(std::span<const int> perm) const;

    friend DensePoly operator+(const DensePoly& a, const DensePoly& b);
    friend DensePoly operator*(const DensePoly& a, const DensePoly& b);
    friend bool operator==(const DensePoly& a, const DensePoly& b) = default;

private:
    int nvars_ = 0;
    int degree_ = 0;
    std::map<Exponent, Rational> terms_;
};

/// a(x_1..x_p) * b(y_1..y_q) as a polynomial in p + q variables, x first.
DensePoly disjoint_product(const DensePoly& a, const DensePoly& b);

/// alpha! = product of factorials of the entries.
Integer exponent_factorial(std::span<const int> alpha);

/// All weak compositions of d into n parts, in descending lexicographic order.
std::vector<Exponent> compositions(int d, int n);

}  // namespace lsf
