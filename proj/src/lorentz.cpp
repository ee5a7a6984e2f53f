#include "lsf/lorentz.hpp"

#include <algorithm>
#include <stdexcept>

namespace lsf {

Mode Mode::polynomial(int n) {
    if (n < 1) throw std::invalid_argument("polynomial mode needs at least one variable");
    return Mode{n};
}

std::string_view failure_kind_name(FailureKind k) {
    switch (k) {
        case FailureKind::Nonnegativity: return "nonneg";
        case FailureKind::SupportM: return "support-M";
        case FailureKind::DominanceD: return "dominance-D";
        case FailureKind::HessianH: return "hessian-H";
        case FailureKind::Decomposable: return "decomposable";
    }
    return "?";
}

namespace {

// Coefficients of f in the m~ basis, restricted to partitions that survive in
// the truncation. Lengths bounded by n form an up-set in dominance order, so
// covers inside the restriction are covers of the full poset.
struct Reduced {
    int degree;
    std::optional<int> n;
    std::vector<Partition> parts;  // reverse-lexicographic, l <= n
    SymPoly c;

    bool active(const Partition& p) const { return !n || p.length() <= *n; }
    Rational at(const Partition& p) const { return c.coeff(p); }
};

Reduced reduce(const SymPoly& f, const Mode& mode) {
    Reduced r{f.degree(), mode.nvars, {}, SymPoly(f.degree(), Basis::NormalizedMonomial)};
    const SymPoly full = convert_basis(f, Basis::NormalizedMonomial);
    for (const auto& p : generate_partitions(f.degree())) {
        if (!r.active(p)) continue;
        r.parts.push_back(p);
        r.c.set(p, full.coeff(p));
    }
    return r;
}

SupportCheck support_m(const Reduced& r, OpCounter& ops) {
    std::vector<Partition> support;
    for (const auto& p : r.parts) {
        ops.tick();
        if (r.at(p) != 0) support.push_back(p);
    }
    if (support.empty()) throw std::invalid_argument("zero polynomial");
    std::vector<Partition> maxima;
    for (const auto& p : support) {
        bool dominated = false;
        for (const auto& q : support)
            if (q != p && dominance_leq(p, q)) {
                dominated = true;
                break;
            }
        if (!dominated) maxima.push_back(p);
    }
    SupportCheck out;
    if (maxima.size() == 1) {
        out.maximum = maxima.front();
    } else {
        out.holds = false;
        out.witness = IncomparableMaxima{maxima[0], maxima[1]};
    }
    return out;
}

DominanceCheck dominance_d(const Reduced& r, OpCounter& ops) {
    DominanceCheck out;
    for (const auto& lambda : r.parts) {
        for (const auto& mu : dominance_covers(lambda)) {
            if (!r.active(mu)) continue;
            ops.tick();
            if (!out.witness && r.at(mu) < r.at(lambda)) out.witness = DominanceViolation{mu, lambda};
        }
    }
    out.holds = !out.witness.has_value();
    return out;
}

// Coefficient at mu + e_i + e_j (0-based, positions past l(mu) allowed).
Rational shifted(const Reduced& r, const Partition& mu, int i, int j) {
    std::vector<int> v = mu.padded(mu.length() + 2);
    ++v[static_cast<std::size_t>(i)];
    ++v[static_cast<std::size_t>(j)];
    return r.at(Partition::from_composition(v));
}

SymMatrix collapsed(const Reduced& r, const Partition& mu, OpCounter& ops) {
    const BlockStructure b = block_structure(mu, r.n);
    const int k = b.length;
    const int l = b.distinct;
    const std::optional<int> trailing = b.trailing;
    const bool has_tail = !trailing || *trailing >= 1;
    SymMatrix m(static_cast<std::size_t>(l + (has_tail ? 1 : 0)));

    for (int t = 0; t < l; ++t) {
        const int mt = b.starts[t];
        const Rational nt = b.sizes[t];
        Rational diag = shifted(r, mu, mt, mt);
        if (b.sizes[t] >= 2) {
            diag += (nt - 1) * shifted(r, mu, mt, mt + 1);
            ops.tick(3);
        }
        m.set(t, t, Rational(nt * diag));
        ops.tick();
        for (int s = 0; s < t; ++s) {
            m.set(s, t, Rational(Rational(b.sizes[s]) * nt * shifted(r, mu, b.starts[s], mt)));
            ops.tick(2);
        }
    }
    if (!has_tail) return m;

    const std::size_t last = static_cast<std::size_t>(l);
    if (!trailing) {
        for (int s = 0; s < l; ++s) {
            m.set(s, last, Rational(Rational(b.sizes[s]) * shifted(r, mu, b.starts[s], k)));
            ops.tick();
        }
        m.set(last, last, shifted(r, mu, k, k + 1));
        return m;
    }
    // The trailing block's size enters only as a rational factor.
    const Rational n0 = *trailing;
    for (int s = 0; s < l; ++s) {
        m.set(s, last, Rational(n0 * b.sizes[s] * shifted(r, mu, b.starts[s], k)));
        ops.tick(2);
    }
    Rational diag = shifted(r, mu, k, k);
    if (*trailing >= 2) {
        diag += (n0 - 1) * shifted(r, mu, k, k + 1);
        ops.tick(3);
    }
    m.set(last, last, Rational(n0 * diag));
    ops.tick();
    return m;
}

}  // namespace

SupportCheck check_support_M(const SymPoly& f) {
    OpCounter ops;
    return support_m(reduce(f, Mode::function()), ops);
}

DominanceCheck check_dominance_D(const SymPoly& f) {
    OpCounter ops;
    return dominance_d(reduce(f, Mode::function()), ops);
}

SymMatrix reduced_hessian(const SymPoly& f, const Partition& mu, const Mode& mode) {
    if (f.degree() < 2 || mu.weight() != f.degree() - 2)
        throw std::invalid_argument("mu must have weight degree - 2");
    if (mode.nvars && *mode.nvars < mu.length() + 2) throw std::invalid_argument("too few variables for μ");
    OpCounter ops;
    return collapsed(reduce(f, mode), mu, ops);
}

Verdict is_lorentzian(const SymPoly& f, const Mode& mode, const Options& options) {
    const Reduced r = reduce(f, mode);
    OpCounter ops;
    Verdict v;

    bool any_nonzero = false;
    for (const auto& p : r.parts) {
        ops.tick();
        const int sign = sgn(r.at(p));
        if (sign != 0) any_nonzero = true;
        if (sign < 0 && !v.failure) v.failure = Failure{FailureKind::Nonnegativity, NegativeCoefficient{p}};
    }
    if (!any_nonzero) throw std::invalid_argument("zero polynomial");
    if (v.failure || r.degree <= 1) {
        v.lorentzian = !v.failure;
        v.op_count = ops.count;
        return v;
    }

    const SupportCheck sm = support_m(r, ops);
    if (!sm.holds) v.failure = Failure{FailureKind::SupportM, *sm.witness};
    const DominanceCheck dd = dominance_d(r, ops);
    if (!v.failure && !dd.holds) v.failure = Failure{FailureKind::DominanceD, *dd.witness};
    if (v.failure) {
        v.op_count = ops.count;
        return v;
    }

    std::vector<Partition> mus;
    for (const auto& mu : generate_partitions(r.degree - 2))
        if (!r.n || mu.length() <= *r.n) mus.push_back(mu);

    const std::int64_t count = static_cast<std::int64_t>(mus.size());
    std::vector<SignatureCheck> results(mus.size());
    std::vector<std::uint64_t> task_ops(mus.size(), 0);
    auto run = [&](std::int64_t idx) {
        OpCounter local;
        const SymMatrix m = collapsed(r, mus[static_cast<std::size_t>(idx)], local);
        results[static_cast<std::size_t>(idx)] =
            at_most_one_positive_eigenvalue(m, ExecPolicy::Serial, options.method, &local);
        task_ops[static_cast<std::size_t>(idx)] = local.count;
    };
    if (options.policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t idx = 0; idx < count; ++idx) run(idx);
    } else {
        for (std::int64_t idx = 0; idx < count; ++idx) run(idx);
    }
    for (std::size_t i = 0; i < mus.size(); ++i) {
        ops.tick(task_ops[i]);
        if (!v.failure && !results[i].holds)
            v.failure = Failure{FailureKind::HessianH, HessianViolation{mus[i], *results[i].witness}};
    }
    v.lorentzian = !v.failure;
    v.op_count = ops.count;
    return v;
}

namespace {

bool is_cover(const Partition& lower, const Partition& upper) {
    if (lower.weight() != upper.weight() || lower == upper || !dominance_leq(lower, upper)) return false;
    for (const auto& nu : generate_partitions(upper.weight()))
        if (nu != lower && nu != upper && dominance_leq(lower, nu) && dominance_leq(nu, upper)) return false;
    return true;
}

}  // namespace

bool witness_is_genuine(const SymPoly& f, const Mode& mode, const Failure& failure) {
    const int d = f.degree();
    const SymPoly c = convert_basis(f, Basis::NormalizedMonomial);
    auto active = [&](const Partition& p) { return p.weight() == d && (!mode.nvars || p.length() <= *mode.nvars); };
    switch (failure.kind) {
        case FailureKind::Nonnegativity: {
            const auto* w = std::get_if<NegativeCoefficient>(&failure.witness);
            return w && active(w->at) && c.coeff(w->at) < 0;
        }
        case FailureKind::SupportM: {
            const auto* w = std::get_if<IncomparableMaxima>(&failure.witness);
            if (!w || !active(w->first) || !active(w->second)) return false;
            if (c.coeff(w->first) == 0 || c.coeff(w->second) == 0) return false;
            if (dominance_leq(w->first, w->second) || dominance_leq(w->second, w->first)) return false;
            for (const auto& [p, v] : c.coeffs()) {
                if (!active(p)) continue;
                if (p != w->first && dominance_leq(w->first, p)) return false;
                if (p != w->second && dominance_leq(w->second, p)) return false;
            }
            return true;
        }
        case FailureKind::DominanceD: {
            const auto* w = std::get_if<DominanceViolation>(&failure.witness);
            return w && active(w->lower) && active(w->upper) && is_cover(w->lower, w->upper) &&
                   c.coeff(w->lower) < c.coeff(w->upper);
        }
        case FailureKind::HessianH: {
            const auto* w = std::get_if<HessianViolation>(&failure.witness);
            if (!w || w->mu.weight() != d - 2 || (mode.nvars && w->mu.length() > *mode.nvars)) return false;
            OpCounter ops;
            const SymMatrix m = collapsed(reduce(f, mode), w->mu, ops);
            if (w->minor.empty() || w->minor.back() >= m.dim()) return false;
            const Rational det = principal_minor(m, w->minor, MinorMethod::Elimination);
            return (w->minor.size() % 2 == 1) ? det < 0 : det > 0;
        }
        case FailureKind::Decomposable:
            return false;
    }
    return false;
}

}  // namespace lsf
