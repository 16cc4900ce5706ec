#pragma once

// JSON serialization for every report the command line emits. Exact scalars
// serialize as "p/q" strings so nothing is lost in transit; approximate ones
// as plain doubles. ordered_json keeps output byte-deterministic.

#include <json.hpp>

#include "ramify/fgt.hpp"
#include "ramify/lifting.hpp"
#include "ramify/monodromy.hpp"
#include "ramify/picard.hpp"
#include "ramify/rational_map.hpp"

namespace ramify::jsonio {

using json = nlohmann::ordered_json;

inline json scalar_to_json(const Exact& v) {
    return json{{"re", rational_to_string(v.re)}, {"im", rational_to_string(v.im)}};
}
inline json scalar_to_json(const Approx& v) {
    return json{{"re", v.real()}, {"im", v.imag()}};
}

template <class K>
json point_to_json(const SpherePoint<K>& p) {
    if (p.is_infinity()) return json{{"inf", true}};
    return scalar_to_json(p.value());
}

inline Exact scalar_from_json_exact(const json& j) {
    return {rational_from_string(j.at("re").get<std::string>()),
            rational_from_string(j.at("im").get<std::string>())};
}
inline Approx scalar_from_json_approx(const json& j) {
    return {j.at("re").get<double>(), j.at("im").get<double>()};
}

template <class K>
SpherePoint<K> point_from_json(const json& j) {
    if (j.contains("inf") && j.at("inf").get<bool>()) return SpherePoint<K>::infinity();
    if constexpr (scalar_traits<K>::is_exact)
        return SpherePoint<K>(scalar_from_json_exact(j));
    else
        return SpherePoint<K>(scalar_from_json_approx(j));
}

template <class K>
json poly_to_json(const Polynomial<K>& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(scalar_to_json(c));
    return a;
}

template <class K>
json map_to_json(const RationalMap<K>& f) {
    return json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

template <class K>
json passport_to_json(const Passport<K>& p) {
    json entries = json::array();
    for (const auto& e : p.entries)
        entries.push_back(json{{"value", point_to_json(e.value)},
                               {"local_degrees", e.local_degrees}});
    return json{{"degree", p.map_degree}, {"entries", entries}};
}

inline json shape_to_json(const PassportShape& p) {
    json entries = json::array();
    for (const auto& e : p.entries) entries.push_back(json{{"local_degrees", e}});
    return json{{"degree", p.degree}, {"entries", entries}};
}

inline PassportShape shape_from_json(const json& j) {
    PassportShape p;
    p.degree = j.at("degree").get<int>();
    for (const auto& e : j.at("entries"))
        p.entries.push_back(e.at("local_degrees").get<std::vector<int>>());
    p.validate();
    return p;
}

// ---- fgt records ----

inline json record_to_json(const fgt::FgtRecord& r) {
    json ends = json::array();
    for (const auto& e : r.ends)
        ends.push_back(json{{"index", e.index},
                            {"beta", e.beta},
                            {"class", e.missed_id ? "missed:" + *e.missed_id : "regular"}});
    return json{{"genus", r.genus},
                {"degree", r.degree},
                {"ends", ends},
                {"interior_beta", r.interior_beta},
                {"missed", r.missed}};
}

inline fgt::FgtRecord record_from_json(const json& j) {
    fgt::FgtRecord r;
    try {
        r.genus = j.at("genus").get<int>();
        r.degree = j.at("degree").get<int>();
        r.interior_beta = j.at("interior_beta").get<int>();
        r.missed = j.at("missed").get<std::vector<std::string>>();
        for (const auto& e : j.at("ends")) {
            fgt::EndRecord end;
            end.index = e.at("index").get<int>();
            end.beta = e.at("beta").get<int>();
            std::string cls = e.at("class").get<std::string>();
            if (cls == "regular")
                end.missed_id.reset();
            else if (cls.rfind("missed:", 0) == 0)
                end.missed_id = cls.substr(7);
            else
                throw UnknownValueClass("end class must be 'regular' or 'missed:<id>'");
            r.ends.push_back(std::move(end));
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed record: ") + e.what());
    }
    r.validate();
    return r;
}

// ---- reports ----

inline json check_to_json(const fgt::CheckReport& rep) {
    json lines = json::array();
    for (const auto& l : rep.lines)
        lines.push_back(json{{"name", l.name}, {"lhs", l.lhs}, {"rhs", l.rhs}, {"holds", l.holds}});
    return json{{"lines", lines}, {"verdict", rep.verdict}};
}

inline json consequences_to_json(const fgt::ConsequenceReport& rep) {
    return json{{"base", check_to_json(rep.base)},
                {"positivity", rep.positivity},
                {"l_at_most_three", rep.l_at_most_three},
                {"chi_nonpositive_when_l3", rep.chi_nonpositive_when_l3},
                {"rigidity_applicable", rep.rigidity_applicable},
                {"no_regular_ends", rep.no_regular_ends},
                {"interior_unbranched", rep.interior_unbranched},
                {"end_beta_is_2n", rep.end_beta_is_2n},
                {"n_equals_ends_equals_index", rep.n_equals_ends_equals_index},
                {"all_indices_one", rep.all_indices_one},
                {"verdict", rep.verdict}};
}

inline const char* covering_class_name(fgt::CoveringClass c) {
    switch (c) {
        case fgt::CoveringClass::SphereMinusPoint: return "sphere_minus_point";
        case fgt::CoveringClass::CoveringOfTwicePuncturedSphere:
            return "covering_of_twice_punctured_sphere";
        case fgt::CoveringClass::NoExample: return "no_example";
        case fgt::CoveringClass::Unconstrained: return "unconstrained";
        case fgt::CoveringClass::Infeasible: return "infeasible";
    }
    return "unconstrained";
}

inline json classification_to_json(const fgt::Classification& c) {
    return json{{"class", covering_class_name(c.kind)},
                {"detail", c.detail},
                {"euler_lhs", c.lhs},
                {"euler_rhs", c.rhs}};
}

inline json obstruction_to_json(const fgt::ObstructionReport& rep) {
    return json{{"exit", rep.exit == fgt::ObstructionExit::NoC0Extension
                             ? "no_c0_extension"
                             : "contradiction_six_missed"},
                {"offending_ends", rep.offending_ends},
                {"lift_locally_feasible", rep.lift_locally_feasible},
                {"lifted_missed_count", rep.lifted_missed_count},
                {"combined_lhs", rep.combined_lhs},
                {"combined_rhs", rep.combined_rhs},
                {"contradiction", rep.contradiction},
                {"detail", rep.detail}};
}

inline json feasibility_to_json(const lift::FeasibilityReport& rep) {
    json ends = json::array();
    for (const auto& e : rep.ends)
        ends.push_back(json{{"entry", e.entry},
                            {"beta_F", e.beta_F},
                            {"liftable_sheets", e.liftable_sheets}});
    return json{{"feasible", rep.feasible}, {"ends", ends}};
}

inline json converse_to_json(const picard::ConverseReport& rep) {
    return json{{"m", rep.m},
                {"degree", rep.degree},
                {"num_branch_points", rep.num_branch_points},
                {"branch_order_total", rep.branch_order_total},
                {"preimage_count", rep.preimage_count},
                {"all_branch_orders_two", rep.all_branch_orders_two},
                {"degree_is_four", rep.degree_is_four},
                {"three_branch_points", rep.three_branch_points},
                {"preimage_count_matches", rep.preimage_count_matches},
                {"derived_identity",
                 json{{"lhs", rep.derived_lhs}, {"rhs", rep.derived_rhs},
                      {"holds", rep.derived_identity_holds}}},
                {"printed_identity",
                 json{{"lhs", rep.printed_lhs}, {"rhs", rep.printed_rhs},
                      {"holds", rep.printed_identity_holds}}},
                {"extra_unramified_preimages", rep.extra_unramified_preimages},
                {"premise_branch_in_y1", rep.premise_branch_in_y1},
                {"premise_missing_unramified", rep.premise_missing_unramified},
                {"verdict", rep.consistent ? "CONSISTENT" : "INCONSISTENT"}};
}

template <class K>
json picard_config_to_json(const picard::PicardConfig<K>& cfg) {
    json targets = json::array(), preimages = json::array();
    for (const auto& p : cfg.targets) targets.push_back(point_to_json(p));
    for (const auto& p : cfg.preimages) preimages.push_back(point_to_json(p));
    return json{{"w", point_to_json(cfg.w)},
                {"x1", point_to_json(cfg.x1)},
                {"x2", point_to_json(cfg.x2)},
                {"y1", point_to_json(cfg.y1)},
                {"y2", point_to_json(cfg.y2)},
                {"targets", targets},
                {"preimages", preimages},
                {"map", map_to_json(cfg.map)},
                {"passport", passport_to_json(cfg.passport)}};
}

template <class K>
json mobius_to_json(const MobiusTransform<K>& t) {
    return json{{"a", scalar_to_json(t.a)},
                {"b", scalar_to_json(t.b)},
                {"c", scalar_to_json(t.c)},
                {"d", scalar_to_json(t.d)}};
}

inline json permutation_to_json(const mono::Permutation& s) {
    json cycles = json::array();
    for (const auto& c : s.cycles()) {
        json cyc = json::array();
        for (int i : c) cyc.push_back(i + 1); // 1-based cycle notation
        cycles.push_back(cyc);
    }
    return json{{"images", s.images}, {"cycles", cycles}, {"cycle_type", s.cycle_type()}};
}

inline json monodromy_to_json(const mono::MonodromyRep& rep) {
    json fiber = json::array(), punctures = json::array(), perms = json::array();
    for (const auto& p : rep.base_fiber) fiber.push_back(point_to_json(p));
    for (const auto& p : rep.punctures) punctures.push_back(point_to_json(p));
    for (const auto& s : rep.perms) perms.push_back(permutation_to_json(s));
    return json{{"base", point_to_json(rep.base)},
                {"base_fiber", fiber},
                {"punctures", punctures},
                {"permutations", perms},
                {"ordered_product", permutation_to_json(rep.ordered_product)},
                {"product_is_identity", rep.product_is_identity},
                {"transitive", rep.transitive}};
}

inline json probe_to_json(const mono::ProbeReport& rep) {
    return json{{"trials", rep.trials},
                {"min_fiber", rep.min_fiber},
                {"max_fiber", rep.max_fiber},
                {"all_regular", rep.all_regular}};
}

} // namespace ramify::jsonio
