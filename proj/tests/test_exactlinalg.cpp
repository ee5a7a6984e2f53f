#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "lsf/exactlinalg.hpp"
#include "support.hpp"

using namespace lsf;

namespace {

SymMatrix ones(std::size_t n) {
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m.set(i, j, 1);
    return m;
}

SymMatrix random_nonneg(std::mt19937_64& rng, std::size_t n, int max_entry) {
    std::uniform_int_distribution<int> e(0, max_entry);
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m.set(i, j, e(rng));
    return m;
}

}  // namespace

TEST(SymMatrix, SymmetryEnforced) {
    EXPECT_THROW(SymMatrix({{1, 2}, {3, 1}}), std::invalid_argument);
    EXPECT_THROW(SymMatrix({{1, 2}}), std::invalid_argument);
    SymMatrix m(2);
    m.set(0, 1, 5);
    EXPECT_EQ(m(1, 0), 5);
}

TEST(PrincipalMinor, Examples) {
    SymMatrix id(3);
    for (std::size_t i = 0; i < 3; ++i) id.set(i, i, 1);
    const IndexSet s{0, 1};
    EXPECT_EQ(principal_minor(id, s), 1);
    EXPECT_EQ(principal_minor(ones(3), s), 0);
    EXPECT_EQ(principal_minor(SymMatrix{{1, 2}, {2, 1}}, s), -3);
    EXPECT_THROW(principal_minor(id, IndexSet{}), std::invalid_argument);
    EXPECT_THROW(principal_minor(id, IndexSet{0, 3}), std::invalid_argument);
    EXPECT_THROW(principal_minor(id, IndexSet{1, 0}), std::invalid_argument);
}

TEST(PrincipalMinor, EliminationMatchesExpansion) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> e(-5, 5), den(1, 3);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
        SymMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) m.set(i, j, fixtures::ratio(e(rng), den(rng)));
        IndexSet all(n);
        std::iota(all.begin(), all.end(), 0);
        EXPECT_EQ(principal_minor(m, all, MinorMethod::Elimination), principal_minor(m, all, MinorMethod::Expansion));
        // The constant term of det(tI - A) is (-1)^n det A.
        const auto cp = fixtures::characteristic_polynomial(m);
        EXPECT_EQ(cp.back(), (n % 2 ? -1 : 1) * principal_minor(m, all));
    }
}

TEST(PrincipalMinor, ExpansionCountDependsOnlyOnSize) {
    std::mt19937_64 rng(5);
    for (std::size_t n = 1; n <= 5; ++n) {
        std::uint64_t expected = 0;
        for (int trial = 0; trial < 10; ++trial) {
            const SymMatrix m = random_nonneg(rng, n, trial % 2 ? 0 : 7);
            IndexSet all(n);
            std::iota(all.begin(), all.end(), 0);
            OpCounter ops;
            principal_minor(m, all, MinorMethod::Expansion, &ops);
            if (trial == 0) expected = ops.count;
            EXPECT_EQ(ops.count, expected);
        }
    }
}

TEST(Signature, Examples) {
    const auto a = at_most_one_positive_eigenvalue(SymMatrix{{1, 2}, {2, 1}});
    EXPECT_TRUE(a.holds);
    EXPECT_FALSE(a.witness.has_value());

    const auto b = at_most_one_positive_eigenvalue(SymMatrix{{2, 1}, {1, 2}});
    EXPECT_FALSE(b.holds);
    ASSERT_TRUE(b.witness.has_value());
    EXPECT_EQ(*b.witness, (IndexSet{0, 1}));

    for (std::size_t n = 1; n <= 5; ++n) EXPECT_TRUE(at_most_one_positive_eigenvalue(ones(n)).holds);
    EXPECT_THROW(at_most_one_positive_eigenvalue(SymMatrix{{1, -1}, {-1, 1}}), std::invalid_argument);
}

TEST(Signature, WitnessIsSmallestThenLexicographic) {
    // Identity: every pair {i, j} violates; {0, 1} is first.
    SymMatrix id(4);
    for (std::size_t i = 0; i < 4; ++i) id.set(i, i, 1);
    const auto r = at_most_one_positive_eigenvalue(id);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(*r.witness, (IndexSet{0, 1}));

    // Only the pair {1, 3} is a positive-definite 2x2 block.
    SymMatrix m{{0, 1, 1, 1}, {1, 1, 1, 0}, {1, 1, 1, 1}, {1, 0, 1, 1}};
    const auto w = at_most_one_positive_eigenvalue(m);
    ASSERT_TRUE(w.witness);
    EXPECT_EQ(*w.witness, (IndexSet{1, 3}));
}

TEST(Signature, AgreesWithCharacteristicPolynomialOracle) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
        SymMatrix m = random_nonneg(rng, n, 4);
        // Bias towards the boundary: rank-one plus a small perturbation.
        if (trial % 3 == 0) {
            std::uniform_int_distribution<int> e(0, 3);
            std::vector<int> v(n);
            for (auto& x : v) x = e(rng);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) m.set(i, j, v[i] * v[j] + (i == j ? 0 : trial % 2));
        }
        const bool expected = fixtures::positive_eigenvalues(m) <= 1;
        for (auto method : {MinorMethod::Elimination, MinorMethod::Expansion})
            EXPECT_EQ(at_most_one_positive_eigenvalue(m, ExecPolicy::Serial, method).holds, expected) << trial;
    }
}

TEST(Signature, CongruenceAndPermutationInvariance) {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> s(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 4);
        const SymMatrix m = random_nonneg(rng, n, 3);
        const bool base = at_most_one_positive_eigenvalue(m).holds;
        std::vector<Rational> d(n);
        for (auto& x : d) x = fixtures::ratio(s(rng), s(rng));
        EXPECT_EQ(at_most_one_positive_eigenvalue(m.congruence_diagonal(d)).holds, base);
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        EXPECT_EQ(at_most_one_positive_eigenvalue(m.permuted(perm)).holds, base);
    }
}

TEST(Signature, ParallelMatchesSerial) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 3 + static_cast<std::size_t>(trial % 6);
        const SymMatrix m = random_nonneg(rng, n, 5);
        OpCounter a, b;
        const auto serial = at_most_one_positive_eigenvalue(m, ExecPolicy::Serial, MinorMethod::Elimination, &a);
        const auto parallel = at_most_one_positive_eigenvalue(m, ExecPolicy::Parallel, MinorMethod::Elimination, &b);
        EXPECT_EQ(serial.holds, parallel.holds);
        EXPECT_EQ(serial.witness, parallel.witness);
        EXPECT_EQ(a.count, b.count);
    }
}
