#include "lsf/exactlinalg.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace lsf {

SymMatrix::SymMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}

SymMatrix::SymMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    std::vector<std::vector<Rational>> r;
    for (const auto& row : rows) r.emplace_back(row);
    *this = from_rows(r);
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    SymMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix is not square");
        for (std::size_t j = 0; j < rows.size(); ++j) m.a_[i * m.dim_ + j] = rows[i][j];
    }
    for (std::size_t i = 0; i < m.dim_; ++i)
        for (std::size_t j = i + 1; j < m.dim_; ++j)
            if (m(i, j) != m(j, i)) throw std::invalid_argument("matrix is not symmetric");
    return m;
}

void SymMatrix::set(std::size_t i, std::size_t j, const Rational& v) {
    a_[i * dim_ + j] = v;
    a_[j * dim_ + i] = v;
}

SymMatrix SymMatrix::congruence_diagonal(std::span<const Rational> scale) const {
    if (scale.size() != dim_) throw std::invalid_argument("scale length mismatch");
    SymMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j) out.set(i, j, Rational(scale[i] * (*this)(i, j) * scale[j]));
    return out;
}

SymMatrix SymMatrix::permuted(std::span<const std::size_t> perm) const {
    if (perm.size() != dim_) throw std::invalid_argument("permutation length mismatch");
    SymMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j) out.set(i, j, (*this)(perm[i], perm[j]));
    return out;
}

namespace {

void validate_index_set(const SymMatrix& a, std::span<const std::size_t> s) {
    if (s.empty()) throw std::invalid_argument("empty index set");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] >= a.dim()) throw std::invalid_argument("index out of range");
        if (i && s[i] <= s[i - 1]) throw std::invalid_argument("index set must be strictly increasing");
    }
}

// Bareiss on the integer matrix obtained by clearing denominators.
Rational det_elimination(const SymMatrix& a, std::span<const std::size_t> s, OpCounter* ops) {
    const std::size_t k = s.size();
    Integer lcm = 1;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a(s[i], s[j]).get_den_mpz_t());
    std::vector<Integer> m(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const Rational& v = a(s[i], s[j]);
            m[i * k + j] = v.get_num() * (lcm / v.get_den());
        }
    std::uint64_t count = 0;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t p = 0; p + 1 < k; ++p) {
        if (m[p * k + p] == 0) {
            std::size_t r = p + 1;
            while (r < k && m[r * k + p] == 0) ++r;
            if (r == k) {
                if (ops) ops->tick(count);
                return 0;
            }
            for (std::size_t j = 0; j < k; ++j) std::swap(m[p * k + j], m[r * k + j]);
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < k; ++i) {
            for (std::size_t j = p + 1; j < k; ++j) {
                m[i * k + j] = (m[i * k + j] * m[p * k + p] - m[i * k + p] * m[p * k + j]) / prev;
                count += 4;
            }
        }
        prev = m[p * k + p];
    }
    Integer det = m[k * k - 1] * sign;
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), lcm.get_mpz_t(), static_cast<unsigned long>(k));
    if (ops) ops->tick(count + 1);
    Rational out(det, scale);
    out.canonicalize();
    return out;
}

// Expansion along successive rows; memo[cols] = det of the rows
// s[k - |cols|..k) against the columns in `cols`.
Rational det_expansion(const SymMatrix& a, std::span<const std::size_t> s, OpCounter* ops) {
    const std::size_t k = s.size();
    if (k >= 24) throw std::invalid_argument("expansion determinant limited to small matrices");
    const std::uint32_t full = (1u << k) - 1u;
    std::vector<Rational> memo(std::size_t{1} << k);
    memo[0] = 1;
    std::uint64_t count = 0;
    // Visit masks by popcount so every sub-mask is ready.
    for (std::size_t size = 1; size <= k; ++size) {
        const std::size_t row = k - size;
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            if (static_cast<std::size_t>(std::popcount(mask)) != size) continue;
            Rational acc = 0;
            int pos = 0;
            for (std::size_t c = 0; c < k; ++c) {
                if (!(mask & (1u << c))) continue;
                const Rational term = a(s[row], s[c]) * memo[mask & ~(1u << c)];
                if (pos % 2 == 0) acc += term; else acc -= term;
                count += 2;
                ++pos;
            }
            memo[mask] = acc;
        }
    }
    if (ops) ops->tick(count);
    return memo[full];
}

Rational minor_of(const SymMatrix& a, std::span<const std::size_t> s, MinorMethod method, OpCounter* ops) {
    return method == MinorMethod::Elimination ? det_elimination(a, s, ops) : det_expansion(a, s, ops);
}

}  // namespace

Rational principal_minor(const SymMatrix& a, std::span<const std::size_t> s, MinorMethod method, OpCounter* ops) {
    validate_index_set(a, s);
    return minor_of(a, s, method, ops);
}

SignatureCheck at_most_one_positive_eigenvalue(const SymMatrix& a, ExecPolicy policy, MinorMethod method,
                                               OpCounter* ops) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(a(i, j)) < 0) throw std::invalid_argument("minor criterion requires nonnegative matrix");
    if (n == 0) return {};
    if (n >= 63) throw std::invalid_argument("matrix too large for exhaustive minor enumeration");

    const std::int64_t subsets = (std::int64_t{1} << n) - 1;
    std::vector<char> violates(static_cast<std::size_t>(subsets), 0);
    std::vector<std::uint64_t> task_ops(static_cast<std::size_t>(subsets), 0);

    auto evaluate = [&](std::int64_t idx) {
        const std::uint64_t mask = static_cast<std::uint64_t>(idx) + 1;
        IndexSet s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) s.push_back(i);
        OpCounter local;
        const Rational det = minor_of(a, s, method, &local);
        local.tick();  // sign comparison
        const int sign = sgn(det);
        const bool odd = (s.size() % 2) == 1;
        // (-1)^{|S|-1} det >= 0
        violates[static_cast<std::size_t>(idx)] = odd ? (sign < 0) : (sign > 0);
        task_ops[static_cast<std::size_t>(idx)] = local.count;
    };

    if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t idx = 0; idx < subsets; ++idx) evaluate(idx);
    } else {
        for (std::int64_t idx = 0; idx < subsets; ++idx) evaluate(idx);
    }

    if (ops)
        for (std::uint64_t c : task_ops) ops->tick(c);

    SignatureCheck out;
    for (std::int64_t idx = 0; idx < subsets; ++idx) {
        if (!violates[static_cast<std::size_t>(idx)]) continue;
        IndexSet s;
        const std::uint64_t mask = static_cast<std::uint64_t>(idx) + 1;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) s.push_back(i);
        if (!out.witness || s.size() < out.witness->size() ||
            (s.size() == out.witness->size() && s < *out.witness)) {
            out.witness = std::move(s);
        }
    }
    out.holds = !out.witness.has_value();
    return out;
}

}  // namespace lsf
