#include "lsf/families.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lsf {

SymPoly elementary(int d) {
    if (d < 1) throw std::invalid_argument("elementary degree must be positive");
    SymPoly f(d, Basis::NormalizedMonomial);
    f.set(Partition(std::vector<int>(static_cast<std::size_t>(d), 1)), 1);
    return f;
}

SymPoly mconvex_generating(const Partition& lambda) {
    SymPoly f(lambda.weight(), Basis::NormalizedMonomial);
    for (const auto& mu : generate_partitions(lambda.weight()))
        if (dominance_leq(mu, lambda)) f.set(mu, 1);
    return f;
}

SymPoly normalized_schur(const Partition& lambda) {
    SymPoly f(lambda.weight(), Basis::NormalizedSchur);
    f.set(lambda, 1);
    return convert_basis(f, Basis::NormalizedMonomial);
}

Integer ballot(int k, int l) {
    if (k < 0 || l < 0) return 0;
    if (k < l) throw std::invalid_argument("ballot number needs k >= l");
    return binomial(k + l, l) - binomial(k + l, l - 1);
}

TwoColumnData two_column_quadratic_data(int s, int t, int p) {
    if (!(s >= t && t >= p && p >= 0)) throw std::invalid_argument("need s >= t >= p >= 0");
    TwoColumnData out;
    out.k = s - p;
    out.l = t - p;
    out.q = out.k + out.l - 2;
    out.a = ballot(out.k - 2, out.l - 2);
    out.b = ballot(out.k - 1, out.l - 1);
    out.c1 = ballot(out.k, out.l);
    out.c2 = ballot(out.k - 1, out.l - 1);
    bool ok = true;
    if (out.l >= 1) ok = ok && out.c2 <= out.c1;
    if (out.l >= 2) ok = ok && (out.q - 1) * out.a * out.c1 <= out.q * out.b * out.b;
    out.inequalities_hold = ok;
    return out;
}

DyckPath::DyckPath(std::string steps) : steps_(std::move(steps)) {
    int height = 0;
    for (char c : steps_) {
        if (c == 'N')
            ++height;
        else if (c == 'E')
            --height;
        else
            throw std::invalid_argument("Dyck path steps must be N or E");
        if (height < 0) throw std::invalid_argument("Dyck path goes below the diagonal");
    }
    if (height != 0) throw std::invalid_argument("Dyck path must end on the diagonal");
}

std::vector<int> DyckPath::heights() const {
    std::vector<int> h;
    int north = 0;
    for (char c : steps_) {
        if (c == 'N')
            ++north;
        else
            h.push_back(north);
    }
    return h;
}

std::vector<DyckPath> DyckPath::all(int n) {
    std::vector<DyckPath> out;
    std::string cur;
    auto rec = [&](auto&& self, int north, int east) -> void {
        if (north == n && east == n) {
            out.emplace_back(cur);
            return;
        }
        if (east < north) {
            cur.push_back('E');
            self(self, north, east + 1);
            cur.pop_back();
        }
        if (north < n) {
            cur.push_back('N');
            self(self, north + 1, east);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end(), [](const DyckPath& a, const DyckPath& b) { return a.steps() < b.steps(); });
    return out;
}

bool Graph::adjacent(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

Graph indifference_graph(const DyckPath& d) {
    Graph g;
    g.n = d.size();
    const std::vector<int> h = d.heights();
    // 1-based: j is adjacent to i < j iff j <= h_i.
    for (int i = 1; i <= g.n; ++i)
        for (int j = i + 1; j <= h[static_cast<std::size_t>(i - 1)]; ++j) g.edges.emplace_back(i - 1, j - 1);
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

bool is_abelian(const Graph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.n), -1);
    for (int start = 0; start < g.n; ++start) {
        if (color[static_cast<std::size_t>(start)] >= 0) continue;
        color[static_cast<std::size_t>(start)] = 0;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < g.n; ++w) {
                if (w == v || g.adjacent(v, w)) continue;  // complement edges only
                int& cw = color[static_cast<std::size_t>(w)];
                const int want = 1 - color[static_cast<std::size_t>(v)];
                if (cw < 0) {
                    cw = want;
                    stack.push_back(w);
                } else if (cw != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

ChromaticResult chromatic_symmetric(const Graph& g, int nvars, ExecPolicy policy) {
    if (g.n < 1 || nvars < 1) throw std::invalid_argument("chromatic expansion needs vertices and variables");
    if (g.n > 10 || nvars > 10) throw std::invalid_argument("brute-force coloring limited to small graphs");
    std::int64_t total = 1;
    for (int i = 0; i < g.n; ++i) total *= nvars;

    using Counts = std::map<Exponent, std::int64_t>;
    auto visit = [&](std::int64_t code, Counts& counts, std::vector<int>& kappa, Exponent& e) {
        for (int v = 0; v < g.n; ++v) {
            kappa[static_cast<std::size_t>(v)] = static_cast<int>(code % nvars);
            code /= nvars;
        }
        for (const auto& [i, j] : g.edges)
            if (kappa[static_cast<std::size_t>(i)] == kappa[static_cast<std::size_t>(j)]) return;
        std::fill(e.begin(), e.end(), 0);
        for (int c : kappa) ++e[static_cast<std::size_t>(c)];
        ++counts[e];
    };

    Counts merged;
    if (policy == ExecPolicy::Parallel) {
#pragma omp parallel
        {
            Counts local;
            std::vector<int> kappa(static_cast<std::size_t>(g.n));
            Exponent e(static_cast<std::size_t>(nvars));
#pragma omp for schedule(static)
            for (std::int64_t code = 0; code < total; ++code) visit(code, local, kappa, e);
#pragma omp critical
            for (const auto& [k, c] : local) merged[k] += c;
        }
    } else {
        std::vector<int> kappa(static_cast<std::size_t>(g.n));
        Exponent e(static_cast<std::size_t>(nvars));
        for (std::int64_t code = 0; code < total; ++code) visit(code, merged, kappa, e);
    }

    ChromaticResult out{DensePoly(nvars, g.n), SymPoly()};
    for (const auto& [e, c] : merged) out.dense.add_term(e, Rational(static_cast<long>(c)));
    out.m = from_dense_poly(out.dense, Basis::Monomial);
    return out;
}

RookExtraction extract_r_numbers(const SymPoly& xg) {
    const SymPoly m = convert_basis(xg, Basis::Monomial);
    const int v = m.degree();
    RookExtraction out;
    for (const auto& [lambda, c] : m.coeffs())
        if (lambda[0] > 2) out.support_in_two_one = false;
    for (int i = 0; 2 * i <= v; ++i) {
        std::vector<int> parts(static_cast<std::size_t>(i), 2);
        parts.resize(static_cast<std::size_t>(v - i), 1);
        const Rational r = m.coeff(Partition(parts)) / Rational(factorial(i) * factorial(v - 2 * i));
        if (r < 0 || r.get_den() != 1) out.integral_nonnegative = false;
        out.r.push_back(r);
    }
    return out;
}

}  // namespace lsf
