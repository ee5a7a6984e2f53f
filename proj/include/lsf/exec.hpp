#pragma once

#include <cstdint>

namespace lsf {

// Every kernel with a data-parallel loop takes one of these. Serial is the
// reference path; Parallel runs the same loop body under OpenMP and selects
// results in the same deterministic order.
enum class ExecPolicy { Serial, Parallel };

// Number of exact arithmetic operations (+, -, *, / and comparisons on
// rationals) spent by a tester. Parallel tasks keep private counters that are
// summed afterwards.
struct OpCounter {
    std::uint64_t count = 0;
    void tick(std::uint64_t n = 1) { count += n; }
};

}  // namespace lsf
