#pragma once

// Integer bookkeeping for finite-geometric-type surfaces: the Riemann-Hurwitz
// and total-curvature identities, the missed-fiber count, the three-missed-
// values bound with its rigidity consequences, the covering classification,
// the bend operation, a brute-force enumerator of admissible records, and the
// obstruction pipelines that rule out three (or, after adding a value, two)
// missed points.
//
// Degree convention: the Gauss map of a minimal surface is orientation
// reversing, so its degree is negative; records store n = |deg G| and every
// identity below is written for positive n.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ramify/errors.hpp"

namespace ramify::fgt {

struct EndRecord {
    int index = 1; // geometric index I(w) >= 1; 1 means the end is embedded
    int beta = 0;  // branch order beta(w) >= 0
    std::optional<std::string> missed_id; // class: a missed value id, or regular
};

struct FgtRecord {
    int genus = 0;
    int degree = 1;               // n = |deg G|
    std::vector<EndRecord> ends;  // nonempty
    int interior_beta = 0;        // total branch order over non-end points
    std::vector<std::string> missed; // Y, opaque value ids

    int euler() const { return 2 - 2 * genus; }
    int missed_count() const { return static_cast<int>(missed.size()); }
    int end_count() const { return static_cast<int>(ends.size()); }
    int ends_over_missed() const;        // #E_inf
    int beta_over_missed() const;        // beta(E_inf)
    int beta_ends_total() const;
    int index_total() const;
    int regular_end_count() const;       // #E_0

    /// Structural validation: fields well typed and every missed id labels an
    /// end. The obstruction pipelines build hypothetical records that skip this.
    void validate() const;
};

struct CheckLine {
    std::string name;
    long long lhs = 0, rhs = 0;
    bool holds = false;
};

struct CheckReport {
    std::vector<CheckLine> lines;
    bool verdict = false; // conjunction of the lines

    void push(std::string name, long long lhs, long long rhs) {
        lines.push_back({std::move(name), lhs, rhs, lhs == rhs});
    }
    void finish() {
        verdict = true;
        for (auto& l : lines) verdict = verdict && l.holds;
    }
};

/// RH: 2n = chi(Mbar) + beta(Mbar).
CheckReport check_rh(const FgtRecord& r);
/// TC: 2n = -chi(Mbar) + #E + sum of geometric indices.
CheckReport check_tc(const FgtRecord& r);
/// l n = #E_inf + beta(E_inf), plus the per-value fiber sums.
CheckReport check_missed_fiber(const FgtRecord& r);

struct ConsequenceReport {
    CheckReport base;          // 4n identity and the (4 - l) n identity
    bool positivity = false;   // (4 - l) n > 0
    bool l_at_most_three = false;
    bool chi_nonpositive_when_l3 = true; // evaluated only when l = 3
    // rigidity when l = 3 and chi = 0
    bool rigidity_applicable = false;
    bool no_regular_ends = true;
    bool interior_unbranched = true;
    bool end_beta_is_2n = true;
    bool n_equals_ends_equals_index = true;
    bool all_indices_one = true;
    bool verdict = false;
};

ConsequenceReport ledger_consequences(const FgtRecord& r);

/// The identities for an arbitrary branched covering F with continuous
/// extension: TC, RH, and the combined (4 - #Y) deg F > 0 bound.
struct GeneralFReport {
    CheckReport identities;
    long long combined_lhs = 0, combined_rhs = 0;
    bool positivity_holds = false; // combined_lhs == combined_rhs > 0
    bool missed_bound_ok = false;  // #Y <= 3
};

GeneralFReport check_general_F(const FgtRecord& r);

enum class CoveringClass {
    SphereMinusPoint,
    CoveringOfTwicePuncturedSphere,
    NoExample,
    Unconstrained,
    Infeasible,
};

struct Classification {
    CoveringClass kind = CoveringClass::Unconstrained;
    std::string detail;
    long long lhs = 0, rhs = 0; // the two sides of chi = #E + n (2 - l)
};

/// Classification when the map restricted to the open surface is a regular
/// covering: no interior branching and every end over a missed value.
Classification classify_covering(const FgtRecord& r);

/// Move every end classed `from` to the class `to`; all discrete invariants
/// are preserved. `from` may be "regular", which leaves the record unchanged
/// (regular-value classes carry no id).
FgtRecord bend(const FgtRecord& r, const std::string& from, const std::string& to);

struct EnumBounds {
    int g_max = 0;
    int n_max = 1;
    int m_max = 1;
    int b_max = 0;
    std::uint64_t node_budget = 10'000'000;
};

/// Exhaustive deterministic enumeration of records satisfying RH, TC, and the
/// missed-fiber identity, in lexicographic order. Missed ids are "1", "2", ...
void enumerate_admissible(const EnumBounds& bounds,
                          const std::function<void(const FgtRecord&)>& emit);

std::vector<FgtRecord> enumerate_admissible(const EnumBounds& bounds);

/// The catenoid ledger record: genus 0, two embedded unbranched ends over two
/// missed values, degree 1.
FgtRecord catenoid_record();

enum class ObstructionExit {
    ContradictionSixMissed, // lift exists; 6 missed values violate the bound
    NoC0Extension,          // the divisibility criterion fails at some end
};

struct ObstructionReport {
    ObstructionExit exit = ObstructionExit::NoC0Extension;
    // ends over missed values whose 1 + beta is not divisible by 3
    std::vector<int> offending_ends;
    bool lift_locally_feasible = false; // every end admits some sheet (weak condition)
    int lifted_missed_count = 0;
    long long combined_lhs = 0, combined_rhs = 0; // the (4 - #Y) deg F sides
    bool contradiction = true; // the record is rejected either way
    std::string detail;
};

/// The three-missed-values pipeline: normalize the missed set to {0, 1, inf},
/// pull in the degree-4 covering, test the lift, and report the resulting
/// contradiction.
ObstructionReport obstruct_three_missed(const FgtRecord& r);

/// The two-missed-values variant: adjoin a fresh auxiliary value and show no
/// continuous extension of the lifted map can exist.
ObstructionReport no_extension_two_missed(const FgtRecord& r, const std::string& w_choice);

} // namespace ramify::fgt
