#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace polytc {

using RationalMatrix = std::vector<std::vector<mpq_class>>;

/// A point x >= 0 with A x >= b, found by an exact phase-one simplex with
/// Bland's rule, or nullopt when the system is infeasible.
std::optional<std::vector<mpq_class>> feasible_point(const RationalMatrix& a,
                                                     const std::vector<mpq_class>& b);

}  // namespace polytc
