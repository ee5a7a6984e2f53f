#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "lsf/dense_poly.hpp"
#include "lsf/exactlinalg.hpp"
#include "lsf/partition.hpp"
#include "lsf/rational.hpp"
#include "lsf/symfunc.hpp"

namespace lsf::fixtures {

// Small non-negative rational p/q with p in [0, max_num], q in [1, max_den].
// mpq_class(p, q) keeps p/q as given; equality needs lowest terms.
inline Rational ratio(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

inline Rational random_rational(std::mt19937_64& rng, int max_num = 9, int max_den = 4) {
    std::uniform_int_distribution<int> num(0, max_num), den(1, max_den);
    return ratio(num(rng), den(rng));
}

// Sample mixes shared by the agreement suites.
enum class Mix { Chain, Random, LogConcaveChain };

// Coefficients against generate_partitions(d):
//  Chain: sorted so c_mu >= c_lambda whenever mu comes later, a few zeros at the top.
//  Random: independent entries, some zero.
//  LogConcaveChain: a chain with geometric-ish growth, usually close to the region.
inline std::vector<Rational> random_coefficients(std::mt19937_64& rng, int d, Mix mix) {
    const std::size_t n = generate_partitions(d).size();
    std::vector<Rational> v(n);
    std::uniform_int_distribution<int> coin(0, 3);
    switch (mix) {
        case Mix::Random:
            for (auto& x : v) x = coin(rng) == 0 ? Rational(0) : random_rational(rng);
            break;
        case Mix::Chain: {
            for (auto& x : v) x = random_rational(rng, 12, 3);
            std::sort(v.begin(), v.end());
            std::uniform_int_distribution<std::size_t> zeros(0, n / 2);
            const std::size_t z = coin(rng) == 0 ? zeros(rng) : 0;
            for (std::size_t i = 0; i < z && i + 1 < n; ++i) v[i] = 0;
            break;
        }
        case Mix::LogConcaveChain: {
            std::uniform_int_distribution<int> step(1, 4);
            Rational cur(1, step(rng));
            for (auto& x : v) {
                x = cur;
                cur = cur * ratio(step(rng) + 2, step(rng) + 1);
                if (cur < x) cur = x;
            }
            break;
        }
    }
    if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; })) v.back() = 1;
    return v;
}

// Characteristic polynomial det(tI - A) by Faddeev-LeVerrier; coefficients
// from t^n down to t^0.
inline std::vector<Rational> characteristic_polynomial(const SymMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<Rational> coeffs{Rational(1)};
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));  // M_0 = 0
    std::vector<std::vector<Rational>> am(n, std::vector<Rational>(n));
    Rational c = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{k-1} I
        std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rational s = 0;
                for (std::size_t l = 0; l < n; ++l) s += a(i, l) * m[l][j];
                next[i][j] = s + (i == j ? c : Rational(0));
            }
        m = next;
        Rational trace = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) trace += a(i, l) * m[l][i];
        c = -trace / Rational(static_cast<long>(k));
        coeffs.push_back(c);
    }
    return coeffs;
}

// Positive eigenvalue count of a symmetric matrix: its characteristic
// polynomial is real-rooted, so Descartes' rule is exact.
inline int positive_eigenvalues(const SymMatrix& a) {
    const auto p = characteristic_polynomial(a);
    int changes = 0, last = 0;
    for (const auto& c : p) {
        const int s = sgn(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

// Brute-force cover relation.
inline std::vector<Partition> brute_covers(const Partition& lambda) {
    const auto all = generate_partitions(lambda.weight());
    std::vector<Partition> below;
    for (const auto& mu : all)
        if (mu != lambda && dominance_leq(mu, lambda)) below.push_back(mu);
    std::vector<Partition> out;
    for (const auto& mu : below) {
        bool immediate = true;
        for (const auto& nu : below)
            if (nu != mu && dominance_leq(mu, nu)) immediate = false;
        if (immediate) out.push_back(mu);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

// A Lorentzian bisymmetric quintic (m basis in x and y) whose pairing with
// s_111(x) is (1/2) m_2(y).
inline BiSymPoly hall_example() {
    BiSymPoly f;
    f.add({2, 1, 1}, {1}, Rational(1, 2));
    f.add({1, 1, 1, 1}, {1}, 1);
    f.add({2, 1}, {1, 1}, Rational(1, 2));
    f.add({1, 1, 1}, {2}, Rational(1, 2));
    f.add({1, 1, 1}, {1, 1}, 1);
    f.add({1, 1}, {2, 1}, Rational(1, 2));
    f.add({1, 1}, {1, 1, 1}, 1);
    return f;
}

}  // namespace lsf::fixtures
