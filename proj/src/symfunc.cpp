#include "lsf/symfunc.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lsf {

std::string_view basis_name(Basis b) {
    switch (b) {
        case Basis::Monomial: return "m";
        case Basis::NormalizedMonomial: return "mtilde";
        case Basis::Schur: return "s";
        case Basis::NormalizedSchur: return "ns";
    }
    return "?";
}

Basis parse_basis(std::string_view name) {
    if (name == "m") return Basis::Monomial;
    if (name == "mtilde") return Basis::NormalizedMonomial;
    if (name == "s") return Basis::Schur;
    if (name == "ns") return Basis::NormalizedSchur;
    throw std::invalid_argument("unknown basis: " + std::string(name));
}

SymPoly::SymPoly(int degree, Basis basis) : degree_(degree), basis_(basis) {
    if (degree < 0) throw std::invalid_argument("negative degree");
}

SymPoly::SymPoly(int degree, Basis basis, const CoeffMap& coeffs) : SymPoly(degree, basis) {
    for (const auto& [lambda, c] : coeffs) set(lambda, c);
}

SymPoly SymPoly::from_dense(int degree, Basis basis, const std::vector<Rational>& values) {
    const auto parts = generate_partitions(degree);
    if (values.size() != parts.size())
        throw std::invalid_argument("expected " + std::to_string(parts.size()) + " coefficients for degree " +
                                    std::to_string(degree));
    SymPoly f(degree, basis);
    for (std::size_t i = 0; i < parts.size(); ++i) f.set(parts[i], values[i]);
    return f;
}

void SymPoly::check_key(const Partition& lambda) const {
    if (lambda.weight() != degree_)
        throw std::invalid_argument("partition " + lambda.to_string() + " does not have weight " +
                                    std::to_string(degree_));
}

Rational SymPoly::coeff(const Partition& lambda) const {
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void SymPoly::set(const Partition& lambda, const Rational& value) {
    check_key(lambda);
    if (value == 0)
        coeffs_.erase(lambda);
    else
        coeffs_[lambda] = value;
}

void SymPoly::add(const Partition& lambda, const Rational& value) {
    set(lambda, coeff(lambda) + value);
}

std::vector<Rational> SymPoly::dense() const {
    std::vector<Rational> out;
    for (const auto& p : generate_partitions(degree_)) out.push_back(coeff(p));
    return out;
}

SymPoly operator*(const Rational& s, const SymPoly& f) {
    SymPoly out(f.degree(), f.basis());
    for (const auto& [lambda, c] : f.coeffs()) out.set(lambda, s * c);
    return out;
}

SymPoly operator+(const SymPoly& f, const SymPoly& g) {
    if (f.degree() != g.degree()) throw std::invalid_argument("cannot add symmetric functions of different degree");
    SymPoly out(f);
    const SymPoly h = convert_basis(g, f.basis());
    for (const auto& [lambda, c] : h.coeffs()) out.add(lambda, c);
    return out;
}

namespace {

// Places the values 1, 2, ... in turn; value v fills content[v] cells forming
// a horizontal strip, which is exactly column-strictness.
void count_tableaux(const std::vector<int>& shape, std::span<const int> content, std::size_t v,
                    std::vector<int>& filled, Integer& count) {
    while (v < content.size() && content[v] == 0) ++v;
    if (v == content.size()) {
        if (filled == shape) ++count;
        return;
    }
    // Distribute content[v] cells over the rows, top to bottom. Row r may grow
    // to min(shape[r], old length of row r - 1).
    const std::vector<int> before = filled;
    auto place = [&](auto&& self, std::size_t row, int left) -> void {
        if (left == 0) {
            count_tableaux(shape, content, v + 1, filled, count);
            return;
        }
        if (row == shape.size()) return;
        const int cap = std::min(shape[row], row == 0 ? shape[0] : before[row - 1]);
        const int room = cap - before[row];
        for (int a = std::min(room, left); a >= 0; --a) {
            filled[row] = before[row] + a;
            self(self, row + 1, left - a);
        }
        filled[row] = before[row];
    };
    place(place, 0, content[v]);
}

std::unique_ptr<KostkaTable> build_table(int degree) {
    auto t = std::make_unique<KostkaTable>();
    t->degree = degree;
    t->parts = generate_partitions(degree);
    const std::size_t n = t->parts.size();
    for (std::size_t i = 0; i < n; ++i) t->index.emplace(t->parts[i], i);
    t->k.assign(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) t->k[i][j] = kostka(t->parts[i], t->parts[j]);
    // Back substitution: K * Kinv = I with both upper unitriangular.
    t->kinv.assign(n, std::vector<Integer>(n));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t ii = j + 1; ii-- > 0;) {
            Integer acc = (ii == j) ? 1 : 0;
            for (std::size_t l = ii + 1; l <= j; ++l) acc -= t->k[ii][l] * t->kinv[l][j];
            t->kinv[ii][j] = acc;
        }
    }
    return t;
}

std::vector<Rational> to_mtilde(const SymPoly& f, const KostkaTable& t) {
    const std::size_t n = t.parts.size();
    std::vector<Rational> src = f.dense();
    std::vector<Rational> out(n);
    switch (f.basis()) {
        case Basis::NormalizedMonomial:
            return src;
        case Basis::Monomial:
            for (std::size_t i = 0; i < n; ++i) out[i] = src[i] * part_factorial(t.parts[i]);
            return out;
        case Basis::NormalizedSchur:
        case Basis::Schur:
            for (std::size_t j = 0; j < n; ++j) {
                Rational acc = 0;
                for (std::size_t i = 0; i <= j; ++i)
                    if (src[i] != 0) acc += src[i] * t.k[i][j];
                out[j] = acc;
            }
            if (f.basis() == Basis::Schur)
                for (std::size_t j = 0; j < n; ++j) out[j] *= part_factorial(t.parts[j]);
            return out;
    }
    return out;
}

std::vector<Rational> from_mtilde(std::vector<Rational> c, Basis target, const KostkaTable& t) {
    const std::size_t n = t.parts.size();
    if (target == Basis::NormalizedMonomial) return c;
    if (target == Basis::Monomial || target == Basis::Schur)
        for (std::size_t i = 0; i < n; ++i) c[i] /= part_factorial(t.parts[i]);
    if (target == Basis::Monomial) return c;
    std::vector<Rational> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        Rational acc = 0;
        for (std::size_t i = 0; i <= j; ++i)
            if (c[i] != 0) acc += c[i] * t.kinv[i][j];
        out[j] = acc;
    }
    return out;
}

}  // namespace

Integer kostka_composition(const Partition& lambda, std::span<const int> content) {
    if (std::any_of(content.begin(), content.end(), [](int v) { return v < 0; }))
        throw std::invalid_argument("negative content");
    if (std::accumulate(content.begin(), content.end(), 0) != lambda.weight())
        throw std::invalid_argument("incomparable weights");
    Integer count = 0;
    std::vector<int> filled(lambda.parts().size(), 0);
    count_tableaux(lambda.parts(), content, 0, filled, count);
    return count;
}

Integer kostka(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight()) throw std::invalid_argument("incomparable weights");
    return kostka_composition(lambda, mu.parts());
}

const KostkaTable& kostka_table(int degree) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<KostkaTable>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[degree];
    if (!slot) slot = build_table(degree);
    return *slot;
}

SymPoly convert_basis(const SymPoly& f, Basis target) {
    if (f.basis() == target) return f;
    const KostkaTable& t = kostka_table(f.degree());
    return SymPoly::from_dense(f.degree(), target, from_mtilde(to_mtilde(f, t), target, t));
}

namespace {

// Every distinct rearrangement of lambda padded to n entries.
template <typename F>
void for_each_rearrangement(const Partition& lambda, int n, F&& visit) {
    Exponent e = lambda.padded(n);
    std::sort(e.begin(), e.end());
    do {
        visit(e);
    } while (std::next_permutation(e.begin(), e.end()));
}

}  // namespace

DensePoly expand(const SymPoly& f, int n) {
    if (n < 1) throw std::invalid_argument("variable count must be positive");
    const SymPoly m = convert_basis(f, Basis::Monomial);
    DensePoly out(n, f.degree());
    for (const auto& [lambda, c] : m.coeffs()) {
        if (lambda.length() > n) continue;
        for_each_rearrangement(lambda, n, [&](const Exponent& e) { out.add_term(e, c); });
    }
    return out;
}

SymPoly product(const SymPoly& f, const SymPoly& g) {
    // With as many variables as the degree no monomial is lost.
    const int n = std::max(1, f.degree() + g.degree());
    const DensePoly fg = expand(f, n) * expand(g, n);
    if (fg.is_zero()) return SymPoly(f.degree() + g.degree(), f.basis());
    return from_dense_poly(fg, f.basis());
}

DensePoly schur_polynomial(const Partition& lambda, int n) {
    if (n < 1) throw std::invalid_argument("variable count must be positive");
    DensePoly out(n, lambda.weight());
    if (lambda.length() > n) return out;
    for (const auto& mu : generate_partitions(lambda.weight())) {
        if (mu.length() > n || !dominance_leq(mu, lambda)) continue;
        // Kostka numbers are symmetric in the content, so one count per orbit.
        const Integer c = kostka(lambda, mu);
        if (c == 0) continue;
        for_each_rearrangement(mu, n, [&](const Exponent& e) { out.add_term(e, Rational(c)); });
    }
    return out;
}

SymPoly from_dense_poly(const DensePoly& g, Basis basis) {
    SymPoly m(g.degree(), Basis::Monomial);
    for (const auto& [e, c] : g.terms()) {
        const Partition lambda = Partition::from_composition(e);
        Exponent sorted = lambda.padded(g.nvars());
        if (g.coeff(sorted) != c) throw std::invalid_argument("polynomial is not symmetric");
        if (e == sorted) m.set(lambda, c);
    }
    return convert_basis(m, basis);
}

SymPoly omega_normalized(const SymPoly& f) {
    const SymPoly ns = convert_basis(f, Basis::NormalizedSchur);
    SymPoly flipped(f.degree(), Basis::NormalizedSchur);
    for (const auto& [lambda, c] : ns.coeffs()) flipped.set(conjugate(lambda), c);
    return convert_basis(flipped, f.basis());
}

void BiSymPoly::add(const Partition& x, const Partition& y, const Rational& c) {
    auto [it, inserted] = terms_.try_emplace(Key{x, y}, c);
    if (!inserted) it->second += c;
    if (it->second == 0) terms_.erase(it);
}

SymPoly hall_with_schur_x(const BiSymPoly& f, const Partition& lambda) {
    const KostkaTable& t = kostka_table(lambda.weight());
    const std::size_t col = t.index.at(lambda);
    std::optional<SymPoly> out;
    for (const auto& [key, c] : f.terms()) {
        const auto& [x, y] = key;
        if (x.weight() != lambda.weight()) continue;
        // <m_x, s_lambda> is the (x, lambda) entry of the inverse Kostka matrix.
        const Integer pairing = t.kinv[t.index.at(x)][col];
        if (pairing == 0) continue;
        if (!out) out.emplace(y.weight(), Basis::Monomial);
        if (out->degree() != y.weight()) throw std::invalid_argument("mixed y-degrees in pairing");
        out->add(y, Rational(c * pairing));
    }
    return out ? *out : SymPoly(0, Basis::Monomial);
}

DensePoly expand(const BiSymPoly& f, int nx, int ny) {
    DensePoly out;
    for (const auto& [key, c] : f.terms()) {
        const auto& [x, y] = key;
        DensePoly term = disjoint_product(expand(SymPoly(x.weight(), Basis::Monomial, {{x, c}}), nx),
                                          expand(SymPoly(y.weight(), Basis::Monomial, {{y, 1}}), ny));
        out = out + term;
    }
    return out;
}

bool dual_cauchy_check(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("alphabet sizes must be positive");
    if (n * m > 20) throw std::invalid_argument("dual Cauchy check limited to n*m <= 20");
    const int total = n + m;
    DensePoly lhs(total, 0);
    lhs.add_term(Exponent(static_cast<std::size_t>(total), 0), 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            DensePoly lin(total, 1);
            Exponent xi(static_cast<std::size_t>(total), 0), yj(static_cast<std::size_t>(total), 0);
            xi[static_cast<std::size_t>(i)] = 1;
            yj[static_cast<std::size_t>(n + j)] = 1;
            lin.add_term(xi, 1);
            lin.add_term(yj, 1);
            lhs = lhs * lin;
        }

    DensePoly rhs(total, n * m);
    for (int w = 0; w <= n * m; ++w) {
        for (const auto& lambda : generate_partitions(w)) {
            if (lambda.length() > n || lambda[0] > m) continue;
            const Partition lc = conjugate(lambda);
            std::vector<int> comp(static_cast<std::size_t>(m));
            for (int k = 1; k <= m; ++k)
                comp[static_cast<std::size_t>(k - 1)] = n - lc[static_cast<std::size_t>(m - k)];
            const Partition tilde = Partition::from_composition(comp);
            rhs = rhs + disjoint_product(schur_polynomial(lambda, n), schur_polynomial(tilde, m));
        }
    }
    return lhs == rhs;
}

}  // namespace lsf
