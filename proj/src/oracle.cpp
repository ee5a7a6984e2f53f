#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "lsf/lorentz.hpp"

namespace lsf {

namespace {

// Exponents of bounded degree packed into one integer for hashing.
struct Packer {
    int base;
    std::uint64_t operator()(const Exponent& e) const {
        std::uint64_t key = 0;
        for (int v : e) key = key * static_cast<std::uint64_t>(base) + static_cast<std::uint64_t>(v);
        return key;
    }
};

std::optional<ExchangeViolation> first_exchange_failure(const std::vector<Exponent>& support) {
    if (support.empty()) return std::nullopt;
    const std::size_t n = support.front().size();
    const int weight = std::accumulate(support.front().begin(), support.front().end(), 0);
    for (const auto& x : support) {
        if (x.size() != n || std::accumulate(x.begin(), x.end(), 0) != weight)
            throw std::invalid_argument("support vectors must share length and weight");
    }
    const Packer pack{weight + 2};
    std::unordered_set<std::uint64_t> members;
    for (const auto& x : support) members.insert(pack(x));

    Exponent a, b;
    for (const auto& x : support) {
        for (const auto& y : support) {
            for (std::size_t i = 0; i < n; ++i) {
                if (x[i] <= y[i]) continue;
                bool found = false;
                for (std::size_t j = 0; j < n && !found; ++j) {
                    if (y[j] <= x[j]) continue;
                    a = x;
                    b = y;
                    --a[i];
                    ++a[j];
                    ++b[i];
                    --b[j];
                    found = members.count(pack(a)) && members.count(pack(b));
                }
                if (!found) return ExchangeViolation{x, y, static_cast<int>(i)};
            }
        }
    }
    return std::nullopt;
}

bool connected_active_graph(const DensePoly& g) {
    const int n = g.nvars();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    std::vector<char> active(n, 0);
    for (const auto& [e, c] : g.terms()) {
        int first = -1;
        for (int i = 0; i < n; ++i) {
            if (e[i] == 0) continue;
            active[i] = 1;
            if (first < 0)
                first = i;
            else
                parent[find(i)] = find(first);
        }
    }
    int root = -1;
    for (int i = 0; i < n; ++i) {
        if (!active[i]) continue;
        if (root < 0)
            root = find(i);
        else if (find(i) != root)
            return false;
    }
    return true;
}

std::vector<Exponent> orders_up_to(int max_order, int n) {
    std::vector<Exponent> out;
    for (int k = 0; k <= max_order; ++k)
        for (auto& a : compositions(k, n)) out.push_back(std::move(a));
    return out;
}

}  // namespace

SymMatrix derivative_hessian(const DensePoly& g, std::span<const int> alpha) {
    const int n = g.nvars();
    if (static_cast<int>(alpha.size()) != n) throw std::invalid_argument("derivative order length mismatch");
    if (std::accumulate(alpha.begin(), alpha.end(), 0) != g.degree() - 2)
        throw std::invalid_argument("Hessian order must be degree - 2");
    SymMatrix h(static_cast<std::size_t>(n));
    Exponent e(alpha.begin(), alpha.end());
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            ++e[static_cast<std::size_t>(i)];
            ++e[static_cast<std::size_t>(j)];
            const Rational c = g.coeff(e);
            if (c != 0) h.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), Rational(c * exponent_factorial(e)));
            --e[static_cast<std::size_t>(i)];
            --e[static_cast<std::size_t>(j)];
        }
    return h;
}

MConvexCheck is_m_convex(const std::vector<Exponent>& support) {
    MConvexCheck out;
    out.witness = first_exchange_failure(support);
    out.holds = !out.witness;
    return out;
}

Verdict oracle_is_lorentzian(const DensePoly& g, ExecPolicy policy) {
    if (g.is_zero()) throw std::invalid_argument("zero polynomial");
    for (const auto& [e, c] : g.terms())
        if (c < 0) throw std::invalid_argument("negative coefficient");
    Verdict v;
    const int n = g.nvars();
    const int d = g.degree();
    if (d <= 1) {
        v.lorentzian = true;
        return v;
    }

    std::vector<Exponent> support;
    for (const auto& [e, c] : g.terms()) support.push_back(e);
    std::sort(support.begin(), support.end(), std::greater<>());
    if (auto w = first_exchange_failure(support)) {
        v.failure = Failure{FailureKind::SupportM, *w};
        return v;
    }

    for (const auto& alpha : orders_up_to(d - 2, n)) {
        const DensePoly dg = g.derivative(alpha);
        if (!dg.is_zero() && !connected_active_graph(dg)) {
            v.failure = Failure{FailureKind::Decomposable, Decomposition{alpha}};
            return v;
        }
    }

    const std::vector<Exponent> alphas = compositions(d - 2, n);
    const std::int64_t count = static_cast<std::int64_t>(alphas.size());
    std::vector<SignatureCheck> results(alphas.size());
    std::vector<std::uint64_t> task_ops(alphas.size(), 0);
    auto run = [&](std::int64_t idx) {
        OpCounter local;
        const SymMatrix h = derivative_hessian(g, alphas[static_cast<std::size_t>(idx)]);
        results[static_cast<std::size_t>(idx)] =
            at_most_one_positive_eigenvalue(h, ExecPolicy::Serial, MinorMethod::Elimination, &local);
        task_ops[static_cast<std::size_t>(idx)] = local.count;
    };
    if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t idx = 0; idx < count; ++idx) run(idx);
    } else {
        for (std::int64_t idx = 0; idx < count; ++idx) run(idx);
    }
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        v.op_count += task_ops[i];
        if (!v.failure && !results[i].holds)
            v.failure = Failure{FailureKind::HessianH, OracleHessianViolation{alphas[i], *results[i].witness}};
    }
    v.lorentzian = !v.failure;
    return v;
}

ConcavityCheck is_nu_m_concave(const SymPoly& f, int n) {
    const DensePoly g = expand(convert_basis(f, Basis::NormalizedMonomial), n);
    if (g.is_zero()) throw std::invalid_argument("zero polynomial");
    // Normalized coefficient c_alpha = alpha! * coeff(x^alpha).
    auto nu = [&](const Exponent& e) { return Rational(g.coeff(e) * exponent_factorial(e)); };
    std::vector<Exponent> support;
    for (const auto& [e, c] : g.terms()) {
        if (c <= 0) throw std::invalid_argument("coefficients must be positive on the support");
        support.push_back(e);
    }
    std::sort(support.begin(), support.end(), std::greater<>());
    if (first_exchange_failure(support)) throw std::invalid_argument("support is not M-convex");

    ConcavityCheck out;
    const std::size_t len = static_cast<std::size_t>(n);
    for (const auto& a : support) {
        const Rational ca = nu(a);
        for (const auto& b : support) {
            const Rational lhs = ca * nu(b);
            for (std::size_t i = 0; i < len; ++i) {
                if (a[i] <= b[i]) continue;
                Rational best = 0;
                for (std::size_t j = 0; j < len; ++j) {
                    if (b[j] <= a[j]) continue;
                    Exponent a2 = a, b2 = b;
                    --a2[i];
                    ++a2[j];
                    ++b2[i];
                    --b2[j];
                    const Rational prod = nu(a2) * nu(b2);
                    if (prod > best) best = prod;
                }
                if (lhs > best) {
                    out.holds = false;
                    out.witness = ExchangeViolation{a, b, static_cast<int>(i)};
                    return out;
                }
            }
        }
    }
    return out;
}

bool witness_is_genuine(const DensePoly& g, const Failure& failure) {
    switch (failure.kind) {
        case FailureKind::SupportM: {
            const auto* w = std::get_if<ExchangeViolation>(&failure.witness);
            if (!w || w->i < 0 || w->i >= g.nvars()) return false;
            const auto i = static_cast<std::size_t>(w->i);
            if (g.coeff(w->x) == 0 || g.coeff(w->y) == 0 || w->x[i] <= w->y[i]) return false;
            for (std::size_t j = 0; j < w->x.size(); ++j) {
                if (w->y[j] <= w->x[j]) continue;
                Exponent a = w->x, b = w->y;
                --a[i];
                ++a[j];
                ++b[i];
                --b[j];
                if (g.coeff(a) != 0 && g.coeff(b) != 0) return false;
            }
            return true;
        }
        case FailureKind::Decomposable: {
            const auto* w = std::get_if<Decomposition>(&failure.witness);
            if (!w) return false;
            const DensePoly dg = g.derivative(w->alpha);
            return !dg.is_zero() && !connected_active_graph(dg);
        }
        case FailureKind::HessianH: {
            const auto* w = std::get_if<OracleHessianViolation>(&failure.witness);
            if (!w) return false;
            const SymMatrix h = derivative_hessian(g, w->alpha);
            if (w->minor.empty() || w->minor.back() >= h.dim()) return false;
            const Rational det = principal_minor(h, w->minor, MinorMethod::Expansion);
            return (w->minor.size() % 2 == 1) ? det < 0 : det > 0;
        }
        default:
            return false;
    }
}

}  // namespace lsf
