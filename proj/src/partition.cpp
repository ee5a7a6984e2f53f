#include "lsf/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace lsf {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_composition(std::span<const int> composition) {
    std::vector<int> parts;
    parts.reserve(composition.size());
    for (int v : composition) {
        if (v < 0) throw std::invalid_argument("composition entries must be non-negative");
        if (v > 0) parts.push_back(v);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("partition must be written as [p1,p2,...]: " + std::string(text));
    std::string_view body = trim(text.substr(1, text.size() - 2));
    std::vector<int> parts;
    while (!body.empty()) {
        std::size_t comma = body.find(',');
        std::string_view item = trim(body.substr(0, comma));
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw std::invalid_argument("malformed partition: " + std::string(text));
        parts.push_back(std::stoi(std::string(item)));
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
        if (trim(body).empty()) throw std::invalid_argument("malformed partition: " + std::string(text));
    }
    return Partition(std::move(parts));
}

std::vector<int> Partition::padded(int n) const {
    if (n < length()) throw std::invalid_argument("padding length shorter than partition");
    std::vector<int> out(parts_);
    out.resize(static_cast<std::size_t>(n), 0);
    return out;
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

namespace {

void generate_into(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        generate_into(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> generate_partitions(int d) {
    if (d < 0) throw std::invalid_argument("negative degree");
    std::vector<Partition> out;
    std::vector<int> prefix;
    generate_into(d, d, prefix, out);
    return out;
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.weight() != lambda.weight()) throw std::invalid_argument("incomparable weights");
    int sm = 0, sl = 0;
    const int len = std::max(mu.length(), lambda.length());
    for (int i = 0; i < len; ++i) {
        sm += mu[static_cast<std::size_t>(i)];
        sl += lambda[static_cast<std::size_t>(i)];
        if (sm > sl) return false;
    }
    return true;
}

// mu is covered by lambda iff lambda = mu + e_i - e_k with i < k and either
// k = i + 1 or mu_i = mu_k. Read from lambda's side: move one unit from row i
// down to row k and keep the pairs that satisfy one of the two cases.
std::vector<Partition> dominance_covers(const Partition& lambda) {
    std::vector<Partition> out;
    const int len = lambda.length();
    for (int i = 0; i < len; ++i) {
        for (int k = i + 1; k <= len; ++k) {
            std::vector<int> mu = lambda.padded(len + 1);
            mu[static_cast<std::size_t>(i)] -= 1;
            mu[static_cast<std::size_t>(k)] += 1;
            if (!std::is_sorted(mu.begin(), mu.end(), std::greater<>())) continue;
            if (k != i + 1 && mu[static_cast<std::size_t>(i)] != mu[static_cast<std::size_t>(k)]) continue;
            out.push_back(Partition::from_composition(mu));
        }
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> out(static_cast<std::size_t>(lambda.empty() ? 0 : lambda[0]), 0);
    for (int part : lambda.parts())
        for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

BlockStructure block_structure(const Partition& mu, std::optional<int> n) {
    BlockStructure b;
    b.length = mu.length();
    if (n && *n < b.length) throw std::invalid_argument("ambient variable count smaller than partition length");
    for (int i = 0; i < b.length; ++i) {
        if (i == 0 || mu[static_cast<std::size_t>(i)] != mu[static_cast<std::size_t>(i - 1)]) {
            b.starts.push_back(i);
            b.sizes.push_back(0);
        }
        ++b.sizes.back();
    }
    b.distinct = static_cast<int>(b.starts.size());
    if (n) b.trailing = *n - b.length;
    return b;
}

bool permutohedron_contains(std::span<const int> t, const Partition& lambda) {
    if (static_cast<int>(t.size()) < lambda.length())
        throw std::invalid_argument("point has fewer coordinates than the partition has parts");
    if (std::any_of(t.begin(), t.end(), [](int v) { return v < 0; }))
        throw std::invalid_argument("point coordinates must be non-negative");
    std::vector<int> sorted(t.begin(), t.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    // The subset-sum bound for |I| = k is tightest on the k largest coordinates.
    int st = 0, sl = 0;
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        st += sorted[k];
        sl += lambda[k];
        if (st > sl) return false;
    }
    return st == lambda.weight();
}

Integer part_factorial(const Partition& lambda) {
    Integer r = 1;
    for (int p : lambda.parts()) r *= factorial(p);
    return r;
}

}  // namespace lsf
