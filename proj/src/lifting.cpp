#include "ramify/lifting.hpp"

namespace ramify::lift {

std::optional<LiftResult> local_lift(const LocalLiftProblem& p) {
    if (p.beta_f < 0 || p.beta_F < 0) throw Error("branch orders must be nonnegative");
    int a = 1 + p.beta_f;
    int b = 1 + p.beta_F;
    if (b % a != 0) return std::nullopt;
    LiftResult r;
    r.k = b / a;
    r.beta_lift = r.k - 1;
    return r;
}

bool c0_extension_divisibility(const std::vector<int>& branch_orders, int divisor) {
    if (divisor < 2) throw PreconditionViolated("divisor must be at least 2");
    for (int b : branch_orders)
        if ((1 + b) % divisor != 0) return false;
    return true;
}

FeasibilityReport passport_lift_feasibility(
    const PassportShape& h, const std::vector<std::pair<int, std::vector<int>>>& ends_over) {
    h.validate();
    FeasibilityReport rep;
    rep.feasible = true;
    for (const auto& [entry, betas] : ends_over) {
        if (entry < 0 || entry >= static_cast<int>(h.entries.size()))
            throw UnknownValue("end refers to a value outside the passport");
        const auto& degs = h.entries[static_cast<size_t>(entry)];
        for (int beta_F : betas) {
            EndLift e;
            e.entry = entry;
            e.beta_F = beta_F;
            for (size_t s = 0; s < degs.size(); ++s)
                if ((1 + beta_F) % degs[s] == 0) e.liftable_sheets.push_back(static_cast<int>(s));
            if (e.liftable_sheets.empty()) rep.feasible = false;
            rep.ends.push_back(std::move(e));
        }
    }
    return rep;
}

} // namespace ramify::lift
