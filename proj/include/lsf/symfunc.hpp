#pragma once

#include <functional>
#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "lsf/dense_poly.hpp"
#include "lsf/partition.hpp"
#include "lsf/rational.hpp"

namespace lsf {

enum class Basis {
    Monomial,            // m_lambda
    NormalizedMonomial,  // m~_lambda = m_lambda / lambda!
    Schur,               // s_lambda
    NormalizedSchur,     // Ns_lambda
};

std::string_view basis_name(Basis b);  // "m", "mtilde", "s", "ns"
Basis parse_basis(std::string_view name);

/// Partitions iterate largest first (reverse-lexicographic).
using CoeffMap = std::map<Partition, Rational, std::greater<>>;

/// Homogeneous symmetric function of a fixed degree in one basis.
class SymPoly {
public:
    SymPoly() = default;
    SymPoly(int degree, Basis basis);
    /// Throws when a key has the wrong weight. Zero coefficients are dropped.
    SymPoly(int degree, Basis basis, const CoeffMap& coeffs);
    /// Coefficients listed against generate_partitions(degree).
    static SymPoly from_dense(int degree, Basis basis, const std::vector<Rational>& values);

    int degree() const { return degree_; }
    Basis basis() const { return basis_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coeff(const Partition& lambda) const;
    void set(const Partition& lambda, const Rational& value);
    void add(const Partition& lambda, const Rational& value);

    /// Coefficients against generate_partitions(degree), zeros included.
    std::vector<Rational> dense() const;

    friend bool operator==(const SymPoly&, const SymPoly&) = default;

private:
    void check_key(const Partition& lambda) const;

    int degree_ = 0;
    Basis basis_ = Basis::NormalizedMonomial;
    CoeffMap coeffs_;
};

SymPoly operator*(const Rational& s, const SymPoly& f);
SymPoly operator+(const SymPoly& f, const SymPoly& g);  // converts g to f's basis

/// Kostka numbers of one degree. parts is generate_partitions(degree); both
/// matrices are upper unitriangular in that order.
struct KostkaTable {
    int degree = 0;
    std::vector<Partition> parts;
    std::map<Partition, std::size_t> index;
    std::vector<std::vector<Integer>> k;     // k[i][j] = K_{parts[i], parts[j]}
    std::vector<std::vector<Integer>> kinv;  // inverse of k
};

/// Built once per degree and shared; safe to call from any thread.
const KostkaTable& kostka_table(int degree);

/// Number of semistandard tableaux of shape lambda and content mu, by direct
/// enumeration. Throws on unequal weights.
Integer kostka(const Partition& lambda, const Partition& mu);

/// Same count for an arbitrary weak composition as content.
Integer kostka_composition(const Partition& lambda, std::span<const int> content);

SymPoly convert_basis(const SymPoly& f, Basis target);

/// f * g, in f's basis.
SymPoly product(const SymPoly& f, const SymPoly& g);

/// The truncation f(x_1, ..., x_n, 0, 0, ...).
DensePoly expand(const SymPoly& f, int n);

/// s_lambda(x_1..x_n) straight from tableau counts.
DensePoly schur_polynomial(const Partition& lambda, int n);

/// Reads a symmetric polynomial back into the given basis. Throws if g is not
/// symmetric.
SymPoly from_dense_poly(const DensePoly& g, Basis basis = Basis::Monomial);

/// Conjugates the indices in the normalized Schur basis; result is in f's
/// basis.
SymPoly omega_normalized(const SymPoly& f);

/// Sum of c * m_mu(x) m_nu(y).
class BiSymPoly {
public:
    using Key = std::pair<Partition, Partition>;
    void add(const Partition& x, const Partition& y, const Rational& c);
    const std::map<Key, Rational>& terms() const { return terms_; }

private:
    std::map<Key, Rational> terms_;
};

/// <f, s_lambda(x)>: contracts the x alphabet, result in the m basis over y.
/// Terms whose x-degree differs from |lambda| pair to zero. Throws when the
/// surviving terms have more than one y-degree.
SymPoly hall_with_schur_x(const BiSymPoly& f, const Partition& lambda);

/// f(x_1..x_nx, y_1..y_ny) in nx + ny variables, x first.
DensePoly expand(const BiSymPoly& f, int nx, int ny);

/// prod_{i<=n, j<=m} (x_i + y_j) == sum over lambda in the n x m box of
/// s_lambda(x) s_{complement of lambda'}(y), compared exactly.
bool dual_cauchy_check(int n, int m);

}  // namespace lsf
