#pragma once

#include <map>
#include <optional>
#include <string>

#include "lsf/lorentz.hpp"
#include "lsf/partition.hpp"
#include "lsf/rational.hpp"
#include "lsf/symfunc.hpp"

namespace lsf {

// Explicit semialgebraic descriptions of the Lorentzian region in low degree.
// Coefficients are in the m~ basis, listed from the top of the dominance order
// down. In polynomial mode `nvars` is the number of variables.

struct RegionVerdict {
    bool member = false;
    std::optional<std::string> failed;  // the first inequality that fails

    static RegionVerdict yes() { return {true, std::nullopt}; }
    static RegionVerdict no(std::string tag) { return {false, std::move(tag)}; }
};

/// a m~2 + b m~11. Needs nvars >= 2.
RegionVerdict degree2(const Rational& a, const Rational& b, const Mode& mode);

/// a m~3 + b m~21 + c m~111. Needs nvars >= 3.
RegionVerdict degree3(const Rational& a, const Rational& b, const Rational& c, const Mode& mode);

/// a Ns3 + b Ns21 + c Ns111 on nvars >= 3 variables.
RegionVerdict degree3_nschur(const Rational& a, const Rational& b, const Rational& c, int nvars);
/// The same family as a symmetric function.
RegionVerdict degree3_nschur(const Rational& a, const Rational& b, const Rational& c);

/// a m~4 + b m~31 + c m~22 + d m~211 + e m~1111. Needs nvars >= 4.
RegionVerdict degree4(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                      const Rational& e, const Mode& mode);

/// The seven coefficients of degree five, as a symmetric function.
RegionVerdict degree5_fn(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                         const Rational& e, const Rational& f, const Rational& g);

/// Degree six as a symmetric function; missing partitions read as 0.
RegionVerdict degree6_fn(const std::map<Partition, Rational>& c);

/// Picks the closed form for f's degree and mode. Falls back to the general
/// tester where no closed form exists (degree 5 and 6 in polynomial mode,
/// degree >= 7, or too few variables), tagging failures by condition.
RegionVerdict closed_form_membership(const SymPoly& f, const Mode& mode);

}  // namespace lsf
