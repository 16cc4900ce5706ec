#include "ramify/fgt.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ramify/lifting.hpp"
#include "ramify/picard.hpp"

namespace ramify::fgt {

int FgtRecord::ends_over_missed() const {
    int c = 0;
    for (auto& e : ends) c += e.missed_id.has_value();
    return c;
}
int FgtRecord::beta_over_missed() const {
    int c = 0;
    for (auto& e : ends)
        if (e.missed_id) c += e.beta;
    return c;
}
int FgtRecord::beta_ends_total() const {
    int c = 0;
    for (auto& e : ends) c += e.beta;
    return c;
}
int FgtRecord::index_total() const {
    int c = 0;
    for (auto& e : ends) c += e.index;
    return c;
}
int FgtRecord::regular_end_count() const { return end_count() - ends_over_missed(); }

void FgtRecord::validate() const {
    if (genus < 0) throw Error("genus must be nonnegative");
    if (degree < 1) throw Error("degree must be positive");
    if (ends.empty()) throw Error("a record needs at least one end");
    if (interior_beta < 0) throw Error("interior branching must be nonnegative");
    std::set<std::string> ids(missed.begin(), missed.end());
    if (ids.size() != missed.size()) throw Error("missed ids must be distinct");
    for (auto& e : ends) {
        if (e.index < 1) throw Error("geometric index must be at least 1");
        if (e.beta < 0) throw Error("branch order must be nonnegative");
        if (e.missed_id && !ids.count(*e.missed_id))
            throw UnknownValueClass("end classed to an id absent from the missed set");
    }
    for (auto& id : missed) {
        bool has_end = false;
        for (auto& e : ends) has_end = has_end || (e.missed_id && *e.missed_id == id);
        if (!has_end) throw Error("missed id '" + id + "' labels no end");
    }
}

CheckReport check_rh(const FgtRecord& r) {
    CheckReport rep;
    rep.push("riemann_hurwitz", 2LL * r.degree,
             static_cast<long long>(r.euler()) + r.interior_beta + r.beta_ends_total());
    rep.finish();
    return rep;
}

CheckReport check_tc(const FgtRecord& r) {
    CheckReport rep;
    rep.push("total_curvature", 2LL * r.degree,
             -static_cast<long long>(r.euler()) + r.end_count() + r.index_total());
    rep.finish();
    return rep;
}

CheckReport check_missed_fiber(const FgtRecord& r) {
    CheckReport rep;
    rep.push("missed_fiber_total", static_cast<long long>(r.missed_count()) * r.degree,
             static_cast<long long>(r.ends_over_missed()) + r.beta_over_missed());
    for (auto& id : r.missed) {
        long long count = 0, beta = 0;
        for (auto& e : r.ends)
            if (e.missed_id && *e.missed_id == id) {
                ++count;
                beta += e.beta;
            }
        rep.push("fiber_over_" + id, r.degree, count + beta);
    }
    rep.finish();
    return rep;
}

ConsequenceReport ledger_consequences(const FgtRecord& r) {
    if (!check_rh(r).verdict || !check_tc(r).verdict || !check_missed_fiber(r).verdict)
        throw PreconditionViolated("record fails a base identity");
    ConsequenceReport rep;
    const int l = r.missed_count();
    const long long beta_closed = r.interior_beta + r.beta_ends_total();
    rep.base.push("four_n", 4LL * r.degree,
                  static_cast<long long>(r.end_count()) + beta_closed + r.index_total());
    const long long beta_m_e0 = r.interior_beta + (r.beta_ends_total() - r.beta_over_missed());
    const long long rhs = r.regular_end_count() + beta_m_e0 + r.index_total();
    rep.base.push("four_minus_l_n", (4LL - l) * r.degree, rhs);
    rep.base.finish();
    rep.positivity = rhs > 0;
    rep.l_at_most_three = l <= 3;
    if (l == 3) {
        rep.chi_nonpositive_when_l3 = r.euler() <= 0;
        if (r.euler() == 0) {
            rep.rigidity_applicable = true;
            rep.no_regular_ends = r.regular_end_count() == 0;
            rep.interior_unbranched = r.interior_beta == 0;
            rep.end_beta_is_2n = r.beta_ends_total() == 2 * r.degree;
            rep.n_equals_ends_equals_index =
                r.degree == r.end_count() && r.degree == r.index_total();
            rep.all_indices_one = true;
            for (auto& e : r.ends) rep.all_indices_one = rep.all_indices_one && e.index == 1;
        }
    }
    rep.verdict = rep.base.verdict && rep.positivity && rep.l_at_most_three &&
                  rep.chi_nonpositive_when_l3 &&
                  (!rep.rigidity_applicable ||
                   (rep.no_regular_ends && rep.interior_unbranched && rep.end_beta_is_2n &&
                    rep.n_equals_ends_equals_index && rep.all_indices_one));
    return rep;
}

GeneralFReport check_general_F(const FgtRecord& r) {
    GeneralFReport rep;
    rep.identities.push("tc_for_F", 2LL * r.degree,
                        -static_cast<long long>(r.euler()) + r.end_count() + r.index_total());
    rep.identities.push("rh_for_F", 2LL * r.degree,
                        static_cast<long long>(r.euler()) + r.interior_beta + r.beta_ends_total());
    rep.identities.finish();
    const int y = r.missed_count();
    rep.combined_lhs = (4LL - y) * r.degree;
    rep.combined_rhs = r.regular_end_count() +
                       (r.interior_beta + r.beta_ends_total() - r.beta_over_missed()) +
                       r.index_total();
    rep.positivity_holds = (rep.combined_lhs == rep.combined_rhs) && rep.combined_rhs > 0;
    rep.missed_bound_ok = y <= 3;
    return rep;
}

Classification classify_covering(const FgtRecord& r) {
    if (r.interior_beta != 0)
        throw PreconditionViolated("interior branching present; the map is not a covering on M");
    if (r.regular_end_count() != 0)
        throw PreconditionViolated(
            "an end over an attained value breaks the covering property on M");
    Classification c;
    const int l = r.missed_count();
    c.lhs = r.euler();
    c.rhs = static_cast<long long>(r.end_count()) + static_cast<long long>(r.degree) * (2 - l);
    bool euler_balances = c.lhs == c.rhs;
    if (l == 1) {
        if (euler_balances && r.end_count() + r.degree == 2) {
            c.kind = CoveringClass::SphereMinusPoint;
            c.detail = "plane: one embedded end, degree 1";
        } else {
            c.kind = CoveringClass::Infeasible;
            c.detail = "one missed value forces #E + n = 2";
        }
    } else if (l == 2) {
        if (euler_balances && r.genus == 0 && r.end_count() == 2) {
            c.kind = CoveringClass::CoveringOfTwicePuncturedSphere;
            c.detail = "covering of the twice-punctured sphere, two ends, genus 0";
        } else {
            c.kind = CoveringClass::Infeasible;
            c.detail = "two missed values force chi = #E, so genus 0 and two ends";
        }
    } else if (l == 3) {
        c.kind = CoveringClass::NoExample;
        c.detail = "three missed values are ruled out by the obstruction pipeline";
    } else {
        c.kind = CoveringClass::Unconstrained;
        c.detail = "no classification for this missed count";
    }
    return c;
}

FgtRecord bend(const FgtRecord& r, const std::string& from, const std::string& to) {
    if (from == "regular") {
        // regular-value classes carry no id; moving the attained value leaves
        // the ledger record unchanged
        bool any = false;
        for (auto& e : r.ends) any = any || !e.missed_id.has_value();
        if (!any) throw UnknownValueClass("no regular-classed end to bend");
        return r;
    }
    bool any = false;
    for (auto& e : r.ends) any = any || (e.missed_id && *e.missed_id == from);
    if (!any) throw UnknownValueClass("no end classed '" + from + "'");
    FgtRecord out = r;
    for (auto& e : out.ends)
        if (e.missed_id && *e.missed_id == from) e.missed_id = to;
    for (auto& id : out.missed)
        if (id == from) id = to;
    return out;
}

FgtRecord catenoid_record() {
    FgtRecord r;
    r.genus = 0;
    r.degree = 1;
    r.interior_beta = 0;
    r.missed = {"1", "2"};
    r.ends = {{1, 0, std::string("1")}, {1, 0, std::string("2")}};
    return r;
}

// ---- enumerator ----

namespace {

struct EndTuple {
    int beta;
    int index;
    bool operator<(const EndTuple& o) const {
        return beta != o.beta ? beta < o.beta : index < o.index;
    }
    bool operator==(const EndTuple& o) const { return beta == o.beta && index == o.index; }
};

struct EnumState {
    const EnumBounds& bounds;
    const std::function<void(const FgtRecord&)>& emit;
    std::uint64_t nodes = 0;

    int genus = 0, n = 0, l = 0;
    std::vector<std::vector<EndTuple>> groups; // missed groups, then one regular group
    int weight_left = 0; // remaining sum of (index + 1) toward 2n + chi
    int ends_used = 0;

    void tick() {
        if (++nodes > bounds.node_budget)
            throw BoundsTooLarge("enumeration exceeded the node budget");
    }

    void finish_record() {
        // RH fixes the interior branching; it must be nonnegative
        int chi = 2 - 2 * genus;
        int beta_ends = 0;
        for (auto& g : groups)
            for (auto& e : g) beta_ends += e.beta;
        int interior = 2 * n - chi - beta_ends;
        if (interior < 0) return;
        FgtRecord r;
        r.genus = genus;
        r.degree = n;
        r.interior_beta = interior;
        for (int y = 0; y < l; ++y) {
            r.missed.push_back(std::to_string(y + 1));
            for (auto& e : groups[static_cast<size_t>(y)])
                r.ends.push_back({e.index, e.beta, std::to_string(y + 1)});
        }
        for (auto& e : groups.back()) r.ends.push_back({e.index, e.beta, std::nullopt});
        if (r.ends.empty()) return;
        emit(r);
    }

    // enumerate the regular-end multiset; every end consumes (index+1) weight
    void regular_ends(EndTuple min_tuple) {
        tick();
        if (weight_left == 0) {
            finish_record();
            return;
        }
        if (ends_used >= bounds.m_max || weight_left < 2) return;
        for (int beta = min_tuple.beta; beta <= bounds.b_max; ++beta) {
            int idx0 = (beta == min_tuple.beta) ? min_tuple.index : 1;
            for (int index = idx0; index + 1 <= weight_left; ++index) {
                groups.back().push_back({beta, index});
                weight_left -= index + 1;
                ++ends_used;
                regular_ends({beta, index});
                --ends_used;
                weight_left += index + 1;
                groups.back().pop_back();
            }
        }
    }

    // enumerate one missed group: local degrees 1 + beta summing to n
    void missed_group(int y, int deg_left, EndTuple min_tuple) {
        tick();
        if (deg_left == 0) {
            // canonical order: groups non-decreasing lexicographically
            if (y > 0 && groups[static_cast<size_t>(y)] < groups[static_cast<size_t>(y - 1)])
                return;
            next_group(y + 1);
            return;
        }
        if (ends_used >= bounds.m_max) return;
        for (int beta = min_tuple.beta; beta <= std::min(bounds.b_max, deg_left - 1); ++beta) {
            int idx0 = (beta == min_tuple.beta) ? min_tuple.index : 1;
            for (int index = idx0; index + 1 <= weight_left; ++index) {
                groups[static_cast<size_t>(y)].push_back({beta, index});
                weight_left -= index + 1;
                ++ends_used;
                missed_group(y, deg_left - (1 + beta), {beta, index});
                --ends_used;
                weight_left += index + 1;
                groups[static_cast<size_t>(y)].pop_back();
            }
        }
    }

    void next_group(int y) {
        if (y < l) {
            missed_group(y, n, {0, 1});
            return;
        }
        regular_ends({0, 1});
    }

    void run() {
        for (genus = 0; genus <= bounds.g_max; ++genus) {
            int chi = 2 - 2 * genus;
            for (n = 1; n <= bounds.n_max; ++n) {
                int weight = 2 * n + chi; // TC: sum of (index + 1) over all ends
                if (weight < 2) continue;
                for (l = 0; l <= bounds.m_max; ++l) {
                    if (l > 0 && l * 1 > bounds.m_max) break; // each missed value needs an end
                    groups.assign(static_cast<size_t>(l) + 1, {});
                    weight_left = weight;
                    ends_used = 0;
                    next_group(0);
                }
            }
        }
    }
};

} // namespace

void enumerate_admissible(const EnumBounds& bounds,
                          const std::function<void(const FgtRecord&)>& emit) {
    if (bounds.g_max < 0 || bounds.n_max < 1 || bounds.m_max < 1 || bounds.b_max < 0)
        throw Error("enumeration bounds below their minimal values");
    EnumState st{bounds, emit};
    st.run();
}

std::vector<FgtRecord> enumerate_admissible(const EnumBounds& bounds) {
    std::vector<FgtRecord> out;
    enumerate_admissible(bounds, [&](const FgtRecord& r) { out.push_back(r); });
    return out;
}

// ---- obstruction pipelines ----

namespace {

// Shared tail: the divisibility test over a set of ends, then either exit.
ObstructionReport run_pipeline(const FgtRecord& r, const std::vector<int>& relevant_ends,
                               int lifted_missed) {
    ObstructionReport rep;
    rep.lifted_missed_count = lifted_missed;

    // the degree-4 covering has passport {3,1} over each normalized value
    PassportShape cover;
    cover.degree = 4;
    cover.entries = {{3, 1}, {3, 1}, {3, 1}};

    std::vector<std::pair<int, std::vector<int>>> ends_over;
    std::map<std::string, int> id_to_entry;
    {
        int next = 0;
        for (int ei : relevant_ends) {
            const auto& e = r.ends[static_cast<size_t>(ei)];
            std::string id = e.missed_id ? *e.missed_id : std::string("regular");
            if (!id_to_entry.count(id)) id_to_entry[id] = next++ % 3;
            ends_over.push_back({id_to_entry[id], {e.beta}});
        }
    }
    rep.lift_locally_feasible = lift::passport_lift_feasibility(cover, ends_over).feasible;

    for (int ei : relevant_ends)
        if ((1 + r.ends[static_cast<size_t>(ei)].beta) % 3 != 0) rep.offending_ends.push_back(ei);

    if (!rep.offending_ends.empty()) {
        rep.exit = ObstructionExit::NoC0Extension;
        rep.contradiction = true;
        rep.detail = "the lift has no continuous extension: 3 does not divide 1 + beta at " +
                     std::to_string(rep.offending_ends.size()) + " end(s)";
        return rep;
    }

    rep.exit = ObstructionExit::ContradictionSixMissed;
    // hypothetical lifted record: same surface, each end re-classed to its
    // sheet over the normalized targets, missed set the full preimage set
    FgtRecord lifted = r;
    lifted.degree = 4 * r.degree;
    lifted.missed.clear();
    for (int i = 0; i < lifted_missed; ++i) lifted.missed.push_back("X" + std::to_string(i + 1));
    int sheet = 0;
    for (int ei : relevant_ends) {
        auto& e = lifted.ends[static_cast<size_t>(ei)];
        e.beta = (1 + e.beta) / 3 - 1; // lift through the ramified sheet
        e.missed_id = lifted.missed[static_cast<size_t>(sheet % lifted_missed)];
        ++sheet;
    }
    auto gen = check_general_F(lifted);
    rep.combined_lhs = gen.combined_lhs;
    rep.combined_rhs = gen.combined_rhs;
    rep.contradiction = !gen.missed_bound_ok; // #Y > 3, impossible for an extendable covering
    rep.detail = "the lifted map misses " + std::to_string(lifted_missed) +
                 " values; (4 - #Y) deg F = " + std::to_string(rep.combined_lhs) +
                 " cannot equal the positive right side " + std::to_string(rep.combined_rhs);
    return rep;
}

} // namespace

ObstructionReport obstruct_three_missed(const FgtRecord& r) {
    r.validate();
    if (r.missed_count() != 3) throw PreconditionViolated("pipeline requires exactly 3 missed values");
    if (!check_rh(r).verdict || !check_tc(r).verdict || !check_missed_fiber(r).verdict)
        throw PreconditionViolated("record fails a base identity");
    std::vector<int> relevant;
    for (int i = 0; i < r.end_count(); ++i)
        if (r.ends[static_cast<size_t>(i)].missed_id) relevant.push_back(i);
    return run_pipeline(r, relevant, 6);
}

ObstructionReport no_extension_two_missed(const FgtRecord& r, const std::string& w_choice) {
    r.validate();
    if (r.missed_count() != 2) throw PreconditionViolated("pipeline requires exactly 2 missed values");
    for (auto& id : r.missed)
        if (id == w_choice) throw PreconditionViolated("auxiliary value must be fresh");
    std::vector<int> relevant;
    for (int i = 0; i < r.end_count(); ++i)
        if (r.ends[static_cast<size_t>(i)].missed_id) relevant.push_back(i);
    // Y = missed u {w}: the fiber over w is attained, so the two preimage
    // points over its normalized image stay in the lifted image; 6 - 2 = 4
    // values remain missed, still above the bound.
    return run_pipeline(r, relevant, 4);
}

} // namespace ramify::fgt
