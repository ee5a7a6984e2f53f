#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lsf/dense_poly.hpp"
#include "lsf/exec.hpp"
#include "lsf/partition.hpp"
#include "lsf/symfunc.hpp"

namespace lsf {

/// m~_{1^d}.
SymPoly elementary(int d);

/// Sum of m~_mu over the interval [1^d, lambda].
SymPoly mconvex_generating(const Partition& lambda);

/// Ns_lambda written in the m~ basis (coefficients K_{lambda,mu}).
SymPoly normalized_schur(const Partition& lambda);

/// C(k+l, l) - C(k+l, l-1). Zero when either index is negative; throws when
/// 0 <= k < l.
Integer ballot(int k, int l);

/// Coefficients of the quadratic d^mu Ns_{(s,t)'} for mu = (2^p, 1^q),
/// with k = s - p, l = t - p, q = k + l - 2. When q < 0 there is no such mu
/// and only the ballot values are reported.
struct TwoColumnData {
    int k = 0, l = 0, q = 0;
    Integer a, b, c1, c2;
    /// c2 <= c1 when l >= 1, and (q-1) a c1 <= q b^2 when l >= 2.
    bool inequalities_hold = false;
};
TwoColumnData two_column_quadratic_data(int s, int t, int p);

/// Lattice path of N and E steps from (0,0) to (n,n) never below the diagonal.
class DyckPath {
public:
    explicit DyckPath(std::string steps);  // throws on an invalid path
    const std::string& steps() const { return steps_; }
    int size() const { return static_cast<int>(steps_.size() / 2); }
    /// Number of N steps taken before the i-th E step (0-based i).
    std::vector<int> heights() const;

    /// Every Dyck path of semilength n, in lexicographic order of steps.
    static std::vector<DyckPath> all(int n);

private:
    std::string steps_;
};

/// Simple graph on vertices 0..n-1.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // i < j, sorted
    bool adjacent(int i, int j) const;
};

/// Vertices i < j are adjacent iff j lies under the path's height above
/// column i, i.e. the corresponding square sits between path and diagonal.
Graph indifference_graph(const DyckPath& d);

/// The complement of g is bipartite.
bool is_abelian(const Graph& g);

struct ChromaticResult {
    DensePoly dense;  // X_G(x_1..x_n)
    SymPoly m;        // X_G in the m basis, read off the expansion
};
/// Brute force over all n^|V| colorings.
ChromaticResult chromatic_symmetric(const Graph& g, int nvars, ExecPolicy policy = ExecPolicy::Serial);

/// r_i = c_m(2^i 1^{V-2i}) / (i! (V-2i)!) for X_G in the m basis.
struct RookExtraction {
    bool support_in_two_one = true;  // m-support inside {2^i 1^{V-2i}}
    std::vector<Rational> r;
    bool integral_nonnegative = true;
};
RookExtraction extract_r_numbers(const SymPoly& xg_m);

}  // namespace lsf
