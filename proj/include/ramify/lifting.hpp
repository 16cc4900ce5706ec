#pragma once

// Local lifting criterion for branched disk coverings, the divisibility
// obstruction for continuous extensions, and passport-level lift feasibility.

#include <optional>
#include <string>
#include <vector>

#include "ramify/passport.hpp"

namespace ramify::lift {

struct LocalLiftProblem {
    int beta_f = 0; // branch order of the covering being lifted through
    int beta_F = 0; // branch order of the map being lifted
};

struct LiftResult {
    int k = 1;         // degree of the local lift
    int beta_lift = 0; // branch order of the lifted map, k - 1
};

/// A continuous local lift through a sheet of order 1+beta_f exists iff
/// (1+beta_f) | (1+beta_F); then the lift has degree k = (1+beta_F)/(1+beta_f).
std::optional<LiftResult> local_lift(const LocalLiftProblem& p);

/// true iff divisor | (1 + beta) for every listed branch order.
bool c0_extension_divisibility(const std::vector<int>& branch_orders, int divisor);

struct EndLift {
    int entry = 0;                  // passport entry index (the value y)
    int beta_F = 0;                 // branch order of the end being lifted
    std::vector<int> liftable_sheets; // indices into the entry's local-degree list
};

struct FeasibilityReport {
    bool feasible = false; // every end admits at least one sheet
    std::vector<EndLift> ends;
};

/// Per-(end, preimage) necessary condition: an end of order beta_F over entry
/// y can lift through a preimage of local degree d iff d | (1 + beta_F).
/// Which sheet an end actually uses is global monodromy data, not decided here.
FeasibilityReport passport_lift_feasibility(
    const PassportShape& h, const std::vector<std::pair<int, std::vector<int>>>& ends_over);

} // namespace ramify::lift
