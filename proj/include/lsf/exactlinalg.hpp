#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "lsf/exec.hpp"
#include "lsf/rational.hpp"

namespace lsf {

/// Square symmetric matrix over the rationals. set() writes both (i,j) and
/// (j,i), so symmetry cannot be broken after construction.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t dim);
    /// Row-major rows; throws std::invalid_argument unless square and symmetric.
    SymMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
    static SymMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t dim() const { return dim_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
    void set(std::size_t i, std::size_t j, const Rational& v);

    /// D A D for D = diag(scale).
    SymMatrix congruence_diagonal(std::span<const Rational> scale) const;
    /// B(i,j) = A(perm[i], perm[j]).
    SymMatrix permuted(std::span<const std::size_t> perm) const;

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Rational> a_;
};

/// 0-based, strictly increasing.
using IndexSet = std::vector<std::size_t>;

enum class MinorMethod {
    // Fraction-free Gaussian elimination with pivoting. Fast; the number of
    // operations depends on the zero pattern of the data.
    Elimination,
    // Laplace expansion memoized over column subsets. The operation count
    // depends only on |S|, which keeps tester op counts data-independent.
    Expansion,
};

/// det A[S]. Throws for an empty or out-of-range S.
Rational principal_minor(const SymMatrix& a, std::span<const std::size_t> s,
                         MinorMethod method = MinorMethod::Elimination, OpCounter* ops = nullptr);

struct SignatureCheck {
    bool holds = true;
    std::optional<IndexSet> witness;  // smallest |S|, then lexicographically smallest
};

/// For a symmetric matrix with non-negative entries: at most one positive
/// eigenvalue iff (-1)^{|S|-1} det A[S] >= 0 for every nonempty S. All
/// 2^n - 1 minors are evaluated; the witness is then chosen from the full set
/// of violations, so Serial and Parallel return identical results.
/// Throws std::invalid_argument("minor criterion requires nonnegative matrix").
SignatureCheck at_most_one_positive_eigenvalue(const SymMatrix& a, ExecPolicy policy = ExecPolicy::Serial,
                                               MinorMethod method = MinorMethod::Elimination,
                                               OpCounter* ops = nullptr);

}  // namespace lsf
