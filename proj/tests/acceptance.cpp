// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lsf/closedform.hpp"
#include "lsf/families.hpp"
#include "lsf/json_io.hpp"
#include "lsf/lorentz.hpp"
#include "region_samples.hpp"

using namespace lsf;
using namespace lsf::fixtures;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Collects the first few counterexamples so a failure line is actionable.
class Tally {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (failures_ <= 3) first_ += (first_.empty() ? "" : "; ") + what;
    }
    long checks() const { return checks_; }
    Outcome done(std::string summary) const {
        if (failures_ == 0) return {true, std::move(summary)};
        return {false, std::to_string(failures_) + " of " + std::to_string(checks_) + " failed: " + first_};
    }

private:
    long checks_ = 0, failures_ = 0;
    std::string first_;
};

std::string show(const SymPoly& f) { return to_json(f).dump(); }

// c_{1^d} chosen so the reduced Hessian at mu = 1^{d-2} is singular.
std::optional<std::vector<Rational>> singular_at_bottom(const std::vector<Rational>& v, int d, int n) {
    auto with = [&](const Rational& t) {
        auto w = v;
        w.back() = t;
        return w;
    };
    const Partition mu(std::vector<int>(static_cast<std::size_t>(d - 2), 1));
    auto det_at = [&](const Rational& t) { return det(reduced_hessian(mt(d, with(t)), mu, Mode::polynomial(n))); };
    const Rational d0 = det_at(0), d1 = det_at(1), d2 = det_at(2);
    if (d1 == d0 || d2 - d1 != d1 - d0) return std::nullopt;
    const Rational root = -d0 / (d1 - d0);
    if (root < 0) return std::nullopt;
    auto w = with(root);
    if (det(reduced_hessian(mt(d, w), mu, Mode::polynomial(n))) != 0) return std::nullopt;
    return w;
}

Outcome oracle_equivalence() {
    Tally t;
    std::mt19937_64 rng(20240601);
    long boundary = 0, lorentzian = 0;
    for (int d = 2; d <= 5; ++d)
        for (int n = d; n <= d + 2; ++n) {
            std::vector<std::vector<Rational>> samples;
            for (int k = 0; k < 200; ++k) {
                if (k % 4 == 3)
                    samples.push_back(perturbed_separable(rng, d));
                else
                    samples.push_back(random_coefficients(rng, d, static_cast<Mix>(k % 4)));
            }
            int tight = 0;
            for (int k = 0; k < 200 && tight < 25; ++k) {
                const auto base = perturbed_separable(rng, d, false);
                if (d == 2) {
                    samples.push_back({base[1], base[1]});
                    ++tight;
                } else if (auto w = singular_at_bottom(base, d, n)) {
                    samples.push_back(*w);
                    ++tight;
                }
            }
            boundary += tight;
            for (const auto& v : samples) {
                const SymPoly f = mt(d, v);
                const bool fast = is_lorentzian(f, Mode::polynomial(n)).lorentzian;
                const bool slow = oracle_is_lorentzian(expand(f, n), ExecPolicy::Parallel).lorentzian;
                lorentzian += fast;
                t.expect(fast == slow, "d=" + std::to_string(d) + " n=" + std::to_string(n) + " f=" + show(f));
            }
        }
    return t.done(std::to_string(t.checks()) + " polynomials (" + std::to_string(boundary) + " with a singular reduced Hessian, " +
                  std::to_string(lorentzian) + " Lorentzian), verdicts identical");
}

Outcome closed_form_agreement() {
    Tally t;
    std::mt19937_64 rng(777);
    long boundary = 0;
    for (int d = 2; d <= 6; ++d)
        for (const Mode& mode : modes_for(d)) {
            const std::string where = "d=" + std::to_string(d) + " " + mode_name(mode);
            for (int k = 0; k < 500; ++k) {
                const auto v = k % 5 == 3   ? near_boundary_chain(rng, d)
                               : k % 5 == 4 ? perturbed_separable(rng, d)
                                            : random_coefficients(rng, d, static_cast<Mix>(k % 5));
                t.expect(region(v, mode).member == is_lorentzian(mt(d, v), mode).lorentzian, where);
            }
            std::map<std::string, int> members;
            for (int k = 0; k < 60; ++k)
                for (const auto& [v, tag] : tight_samples(rng, d, mode, k % 2 == 1)) {
                    ++boundary;
                    const RegionVerdict r = region(v, mode);
                    t.expect(r.member == is_lorentzian(mt(d, v), mode).lorentzian, where + " tight " + tag);
                    t.expect(r.member || r.failed != tag, where + " equality rejected for " + tag);
                    members[tag] += r.member;
                }
            for (const auto& [tag, count] : members) t.expect(count > 0, where + " no member with " + tag + " tight");
        }
    return t.done("degrees 2-6, 500 random samples per degree and mode plus " + std::to_string(boundary) +
                  " samples with one printed inequality tight");
}

Outcome quartic_threshold() {
    Tally t;
    const SymPoly f = mt(4, {1, 2, 2, 5, 5});
    for (int n = 4; n <= 8; ++n) {
        t.expect(is_lorentzian(f, Mode::polynomial(n)).lorentzian == (n <= 4), "tester n=" + std::to_string(n));
        t.expect(degree4(1, 2, 2, 5, 5, Mode::polynomial(n)).member == (n <= 4), "closed form n=" + std::to_string(n));
    }
    for (int n = 4; n <= 6; ++n)
        t.expect(oracle_is_lorentzian(expand(f, n), ExecPolicy::Parallel).lorentzian == (n <= 4), "oracle n=" + std::to_string(n));
    return t.done("Lorentzian for n = 4, not for n = 5..8 (oracle agrees for n <= 6)");
}

Outcome normalized_schur_suite() {
    Tally t;
    int count = 0;
    for (int d = 1; d <= 6; ++d)
        for (const auto& l : generate_partitions(d)) {
            ++count;
            t.expect(is_lorentzian(normalized_schur(l), Mode::function()).lorentzian, l.to_string());
        }
    const SymPoly s = convert_basis(normalized_schur({3, 3}), Basis::Schur);
    bool negative = false;
    std::string where;
    for (const auto& [p, c] : s.coeffs())
        if (c < 0) {
            negative = true;
            where = "s" + p.to_string() + " coefficient " + to_string(c);
        }
    t.expect(negative, "Ns[3,3] is Schur positive");
    return t.done(std::to_string(count) + " partitions of d = 1..6 Lorentzian; Ns[3,3] has " + where);
}

Outcome kostka_monotonicity() {
    Tally t;
    for (int d = 0; d <= 6; ++d) {
        const auto parts = generate_partitions(d);
        for (const auto& g : parts)
            for (const auto& mu : parts)
                for (const auto& l : parts)
                    if (dominance_leq(mu, l))
                        t.expect(kostka(g, mu) >= kostka(g, l), "K" + g.to_string() + mu.to_string() + l.to_string());
    }
    return t.done(std::to_string(t.checks()) + " comparable triples up to degree 6");
}

Outcome two_column() {
    Tally t;
    for (int k = 2; k <= 12; ++k)
        for (int l = 2; l <= k; ++l) {
            const Integer lhs = Integer((k + 1) * l) * (k + l - 2) * (k + l - 2);
            const Integer rhs = Integer(k * (l - 1)) * (k + l) * (k + l - 1);
            t.expect(lhs >= rhs, "ballot k=" + std::to_string(k) + " l=" + std::to_string(l));
        }
    int shapes = 0;
    for (int s = 1; s <= 8; ++s)
        for (int u = 0; u <= s && s + u <= 8; ++u) {
            ++shapes;
            const Partition gamma = conjugate(u > 0 ? Partition{s, u} : Partition{s});
            t.expect(is_lorentzian(normalized_schur(gamma), Mode::polynomial(s + u)).lorentzian,
                     "Ns" + gamma.to_string());
        }
    return t.done("ballot inequality for 2 <= l <= k <= 12; " + std::to_string(shapes) +
                  " two-column shapes Lorentzian on s+t variables");
}

Outcome omega_counterexample() {
    SymPoly f(4, Basis::NormalizedMonomial);
    f.set({2, 1, 1}, 1);
    f.set({1, 1, 1, 1}, 1);
    SymPoly expected(4, Basis::NormalizedMonomial);
    expected.set({1, 1, 1, 1}, 1);
    expected.set({2, 2}, -1);
    expected.set({3, 1}, -1);
    expected.set({4}, -2);
    const SymPoly got = omega_normalized(f);
    if (got == expected) return {true, "omega(m~211 + m~1111) = " + show(got)};
    return {false, "got " + show(got)};
}

Outcome hall_counterexample() {
    const BiSymPoly f = hall_example();
    SymPoly half_m2(2, Basis::Monomial);
    half_m2.set({2}, Rational(1, 2));
    const SymPoly pairing = hall_with_schur_x(f, {1, 1, 1});
    const Verdict v = oracle_is_lorentzian(expand(f, 4, 3), ExecPolicy::Parallel);
    if (pairing != half_m2) return {false, "pairing gave " + show(pairing)};
    if (!v.lorentzian) return {false, "oracle rejects f on 4 + 3 variables"};
    return {true, "<f, s111(x)> = (1/2) m2(y); f Lorentzian on 4 x and 3 y variables"};
}

Outcome m_concavity_gap() {
    Tally t;
    const std::vector<Rational> q{ratio(1, 256), ratio(1, 16), ratio(3, 8), ratio(1, 2), 1};
    const SymPoly f = mt(4, q);
    t.expect(degree4(q[0], q[1], q[2], q[3], q[4], Mode::function()).member, "closed form rejects the quartic");
    t.expect(is_lorentzian(f, Mode::function()).lorentzian, "tester rejects the quartic");
    const ConcavityCheck c = is_nu_m_concave(f, 4);
    t.expect(!c.holds, "nu_f reported M-concave");
    const bool witness = c.witness && c.witness->x == Exponent{2, 2, 0, 0} && c.witness->y == Exponent{1, 1, 1, 1} &&
                         c.witness->i == 0;
    t.expect(witness, "unexpected witness");
    std::mt19937_64 rng(99);
    int cubics = 0;
    for (int k = 0; k < 600; ++k) {
        auto v = random_coefficients(rng, 3, static_cast<Mix>(k % 3));
        for (auto& x : v)
            if (x == 0) x = 1;
        const SymPoly g = mt(3, v);
        if (!is_lorentzian(g, Mode::function()).lorentzian) continue;
        ++cubics;
        for (int n = 3; n <= 5; ++n) t.expect(is_nu_m_concave(g, n).holds, "cubic " + show(g));
    }
    return t.done("quartic Lorentzian, nu_f fails at alpha=(2,2,0,0), beta=(1,1,1,1), i=1; " + std::to_string(cubics) +
                  " Lorentzian cubics all M-concave for n = 3..5");
}

Outcome constant_ops() {
    Tally t;
    std::mt19937_64 rng(5);
    std::string counts;
    for (int d = 3; d <= 6; ++d) {
        std::vector<SymPoly> inputs{mconvex_generating({d})};
        for (int k = 0; k < 6; ++k) inputs.push_back(mt(d, random_coefficients(rng, d, static_cast<Mix>(k % 3))));
        for (const auto& f : inputs) {
            const auto c10 = is_lorentzian(f, Mode::polynomial(10)).op_count;
            for (int n : {100, 1000})
                t.expect(is_lorentzian(f, Mode::polynomial(n)).op_count == c10, "d=" + std::to_string(d) + " n=" + std::to_string(n));
        }
        counts += (counts.empty() ? "" : ", ") + std::string("d=") + std::to_string(d) + ": " +
                  std::to_string(is_lorentzian(inputs.front(), Mode::polynomial(10)).op_count);
    }
    return t.done("identical for n in {10, 100, 1000} (" + counts + ")");
}

Outcome dual_cauchy() {
    Tally t;
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m) t.expect(dual_cauchy_check(n, m), std::to_string(n) + "x" + std::to_string(m));
    return t.done("exact for all 1 <= n, m <= 3");
}

Outcome region_nesting() {
    Tally t;
    const int grid = 140;
    long points = 0, in2 = 0, in5 = 0, infn = 0;
    for (int i = 0; i <= grid; ++i)
        for (int j = 0; i + j <= grid; ++j) {
            const Rational a = ratio(i, grid), b = ratio(j, grid), c = ratio(grid - i - j, grid);
            const bool m2 = degree3(a, b, c, Mode::polynomial(3)).member;
            const bool m5 = degree3(a, b, c, Mode::polynomial(6)).member;
            const bool mf = degree3(a, b, c, Mode::function()).member;
            ++points;
            in2 += m2, in5 += m5, infn += mf;
            t.expect((!mf || m5) && (!m5 || m2), to_string(a) + "," + to_string(b) + "," + to_string(c));
        }
    t.expect(points >= 10000, "grid too small");
    t.expect(in2 > in5 && in5 > infn && infn > 0, "containments are not strict");
    return t.done(std::to_string(points) + " points; |fn| = " + std::to_string(infn) + " <= |n=5| = " +
                  std::to_string(in5) + " <= |n=2| = " + std::to_string(in2));
}

Outcome chromatic() {
    Tally t;
    int abelian = 0;
    for (int n = 1; n <= 6; ++n)
        for (const DyckPath& d : DyckPath::all(n)) {
            const Graph g = indifference_graph(d);
            if (!is_abelian(g)) continue;
            ++abelian;
            const ChromaticResult xg = chromatic_symmetric(g, n, ExecPolicy::Parallel);
            const RookExtraction r = extract_r_numbers(xg.m);
            t.expect(r.support_in_two_one, d.steps() + " support");
            t.expect(r.integral_nonnegative && !r.r.empty() && r.r.front() == 1, d.steps() + " r numbers");
            t.expect(is_lorentzian(convert_basis(xg.m, Basis::NormalizedMonomial), Mode::function()).lorentzian,
                     d.steps() + " not Lorentzian");
        }
    return t.done(std::to_string(abelian) + " abelian Dyck paths with at most 6 vertices");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"oracle equivalence", oracle_equivalence},
        {"closed-form agreement", closed_form_agreement},
        {"quartic threshold", quartic_threshold},
        {"normalized Schur suite", normalized_schur_suite},
        {"Kostka monotonicity", kostka_monotonicity},
        {"two-column", two_column},
        {"omega counterexample", omega_counterexample},
        {"Hall counterexample", hall_counterexample},
        {"M-concavity gap", m_concavity_gap},
        {"constant ops", constant_ops},
        {"dual Cauchy", dual_cauchy},
        {"region nesting", region_nesting},
        {"chromatic", chromatic},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !o.pass;
        std::printf("[%s] %2zu. %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
