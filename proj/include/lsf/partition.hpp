#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lsf/rational.hpp"

namespace lsf {

/// A weakly decreasing sequence of positive integers. Trailing zeros are never
/// stored; ambient zero padding is always supplied by context.
///
/// Ordering (operator<=>) is lexicographic on the parts, so for partitions of
/// the same weight the descending order is the reverse-lexicographic order
/// (d), (d-1,1), ... used as the deterministic iteration order everywhere.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts a weak composition and drops zeros. Negative entries throw.
    static Partition from_composition(std::span<const int> composition);
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// 0-based; positions past the end read as 0.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    /// Zero-padded to `n` entries; throws if n < length().
    std::vector<int> padded(int n) const;

    std::string to_string() const;

    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Block structure induced by the equal-part runs of a partition. Indices are
/// 0-based: block t occupies positions starts[t] .. starts[t] + sizes[t] - 1.
struct BlockStructure {
    int length = 0;                  // k = l(mu)
    int distinct = 0;                // number of blocks
    std::vector<int> starts;         // first index of every block
    std::vector<int> sizes;          // block sizes, summing to k
    std::optional<int> trailing;     // n - k, when an ambient n is given
};

/// All partitions of d, largest first (reverse-lexicographic).
std::vector<Partition> generate_partitions(int d);

/// mu <= lambda in dominance order. Throws "incomparable weights" when the
/// weights differ.
bool dominance_leq(const Partition& mu, const Partition& lambda);

/// Every mu covered by lambda (mu < lambda with nothing strictly between),
/// in reverse-lexicographic order.
std::vector<Partition> dominance_covers(const Partition& lambda);

Partition conjugate(const Partition& lambda);

BlockStructure block_structure(const Partition& mu, std::optional<int> n = std::nullopt);

/// Integer point membership in the permutohedron of lambda (Rado).
bool permutohedron_contains(std::span<const int> t, const Partition& lambda);

/// lambda! = product of the factorials of the parts.
Integer part_factorial(const Partition& lambda);

}  // namespace lsf
