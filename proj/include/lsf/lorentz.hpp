#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "lsf/dense_poly.hpp"
#include "lsf/exactlinalg.hpp"
#include "lsf/exec.hpp"
#include "lsf/partition.hpp"
#include "lsf/symfunc.hpp"

namespace lsf {

/// Function mode asks about every truncation; polynomial mode about the
/// truncation to exactly `nvars` variables.
struct Mode {
    std::optional<int> nvars;

    static Mode function() { return {}; }
    static Mode polynomial(int n);
    bool is_function() const { return !nvars.has_value(); }
};

enum class FailureKind { Nonnegativity, SupportM, DominanceD, HessianH, Decomposable };
std::string_view failure_kind_name(FailureKind k);  // "nonneg", "support-M", ...

struct NegativeCoefficient {
    Partition at;
};
struct IncomparableMaxima {
    Partition first, second;
};
struct DominanceViolation {
    Partition lower, upper;  // lower is covered by upper, c_lower < c_upper
};
struct HessianViolation {
    Partition mu;
    IndexSet minor;
};
// Oracle certificates, in exponent-vector coordinates. Indices are 0-based.
struct ExchangeViolation {
    Exponent x, y;
    int i;
};
struct OracleHessianViolation {
    Exponent alpha;
    IndexSet minor;
};
struct Decomposition {
    Exponent alpha;
};

using Witness = std::variant<NegativeCoefficient, IncomparableMaxima, DominanceViolation, HessianViolation,
                             ExchangeViolation, OracleHessianViolation, Decomposition>;

struct Failure {
    FailureKind kind;
    Witness witness;
};

struct Verdict {
    bool lorentzian = false;
    std::optional<Failure> failure;
    std::uint64_t op_count = 0;
};

struct Options {
    ExecPolicy policy = ExecPolicy::Serial;
    // Expansion keeps the operation count independent of the data.
    MinorMethod method = MinorMethod::Expansion;
};

/// Unique dominance-maximal element of the support. Throws "zero polynomial"
/// on empty support.
struct SupportCheck {
    bool holds = true;
    std::optional<Partition> maximum;
    std::optional<IncomparableMaxima> witness;
};
SupportCheck check_support_M(const SymPoly& f);

/// c_mu >= c_lambda on every cover mu < lambda; first failure in
/// reverse-lexicographic order of (lambda, mu).
struct DominanceCheck {
    bool holds = true;
    std::optional<DominanceViolation> witness;
};
DominanceCheck check_dominance_D(const SymPoly& f);

/// Collapsed Hessian of d^mu f: M(mu) in function mode, the matrix Q(mu) with
/// a trailing block of n - l(mu) variables in polynomial mode. Throws "too few
/// variables for μ" when n < l(mu) + 2.
SymMatrix reduced_hessian(const SymPoly& f, const Partition& mu, const Mode& mode);

/// Runs nonnegativity, M, D, and then the signature test for every mu of
/// degree d - 2. Every mu and every minor is evaluated; the reported failure
/// is the first one in reverse-lexicographic mu order.
Verdict is_lorentzian(const SymPoly& f, const Mode& mode, const Options& options = {});

/// Checks the definition directly on an explicit polynomial: M-convex support,
/// indecomposable derivatives up to order d - 2, and every Hessian of order
/// d - 2 via the minor criterion. Throws on negative coefficients or zero.
Verdict oracle_is_lorentzian(const DensePoly& g, ExecPolicy policy = ExecPolicy::Serial);

/// Constant Hessian of d^alpha g, |alpha| = d - 2.
SymMatrix derivative_hessian(const DensePoly& g, std::span<const int> alpha);

struct MConvexCheck {
    bool holds = true;
    std::optional<ExchangeViolation> witness;
};
/// Exhaustive exchange axiom. Vectors must share length and weight.
MConvexCheck is_m_convex(const std::vector<Exponent>& support);

struct ConcavityCheck {
    bool holds = true;
    std::optional<ExchangeViolation> witness;  // (alpha, beta, i)
};
/// Exchange inequality c_a c_b <= max_j c_{a-e_i+e_j} c_{b+e_i-e_j} on the
/// support of the n-variable truncation, compared exactly. Throws when the
/// support is not M-convex.
ConcavityCheck is_nu_m_concave(const SymPoly& f, int n);

/// Re-derives the violation a certificate claims, without reusing the tester.
bool witness_is_genuine(const SymPoly& f, const Mode& mode, const Failure& failure);
bool witness_is_genuine(const DensePoly& g, const Failure& failure);

}  // namespace lsf
