// Python bindings. Structured results cross the boundary as JSON strings and
// the pure-Python package decodes them, so both languages see exactly the
// payloads the command line emits.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ramify/jsonio.hpp"
#include "ramify/parse.hpp"

namespace py = pybind11;
using namespace ramify;
using jsonio::json;

namespace {

std::string dump(const json& j) { return j.dump(); }

template <class K>
json analyze_impl(const std::string& map_str, const std::string& over) {
    RationalMap<K> f = parse::parse_map<K>(map_str);
    auto pp = passport_over(f, parse::parse_points<K>(over));
    json crit = json::array();
    int total = 0;
    for (auto& [p, beta] : critical_points(f)) {
        total += beta;
        crit.push_back(json{{"point", jsonio::point_to_json(p)}, {"beta", beta}});
    }
    return json{{"degree", f.degree()},
                {"passport", jsonio::passport_to_json(pp)},
                {"critical_points", crit},
                {"total_branching", total}};
}

std::string analyze_map(const std::string& map_str, const std::string& over, bool exact) {
    if (exact) {
        try {
            return dump(analyze_impl<Exact>(map_str, over));
        } catch (const ExactRootsUnavailable&) {
        }
    }
    return dump(analyze_impl<Approx>(map_str, over));
}

std::string evaluate(const std::string& map_str, const std::string& point, bool exact) {
    if (exact) {
        auto f = parse::parse_map<Exact>(map_str);
        return dump(jsonio::point_to_json(f.evaluate(parse::parse_point<Exact>(point))));
    }
    auto f = parse::parse_map<Approx>(map_str);
    return dump(jsonio::point_to_json(f.evaluate(parse::parse_point<Approx>(point))));
}

int local_degree_of(const std::string& map_str, const std::string& point) {
    auto f = parse::parse_map<Approx>(map_str);
    return local_degree(f, parse::parse_point<Approx>(point));
}

std::string fiber_of(const std::string& map_str, const std::string& point, bool exact) {
    json out = json::array();
    if (exact) {
        try {
            auto f = parse::parse_map<Exact>(map_str);
            for (auto& [p, m] : fiber(f, parse::parse_point<Exact>(point)))
                out.push_back(json{{"point", jsonio::point_to_json(p)}, {"local_degree", m}});
            return dump(out);
        } catch (const ExactRootsUnavailable&) {
            out = json::array();
        }
    }
    auto f = parse::parse_map<Approx>(map_str);
    for (auto& [p, m] : fiber(f, parse::parse_point<Approx>(point)))
        out.push_back(json{{"point", jsonio::point_to_json(p)}, {"local_degree", m}});
    return dump(out);
}

std::string construct_picard(const std::string& w, bool exact) {
    if (exact) {
        auto p = parse::parse_point<Exact>(w);
        if (p.is_infinity()) throw DegenerateW("w must be finite");
        try {
            return dump(json{{"backend", "exact"},
                             {"config", jsonio::picard_config_to_json(picard::construct(p.value()))}});
        } catch (const ExactRootsUnavailable&) {
        }
    }
    auto p = parse::parse_point<Approx>(w);
    if (p.is_infinity()) throw DegenerateW("w must be finite");
    return dump(json{{"backend", "approx"},
                     {"config", jsonio::picard_config_to_json(picard::construct(p.value()))}});
}

std::string construct_for_targets(const std::string& targets) {
    auto pts = parse::parse_points<Approx>(targets);
    if (pts.size() != 3) throw ParseError("need exactly three target points");
    auto res = picard::construct_for_targets({pts[0], pts[1], pts[2]});
    return dump(json{{"config", jsonio::picard_config_to_json(res.config)},
                     {"psi", jsonio::mobius_to_json(res.psi)},
                     {"composite", jsonio::map_to_json(res.composite)}});
}

std::string check_converse(const std::string& passport_json, const std::vector<int>& y0,
                           const std::vector<int>& y1) {
    auto shape = jsonio::shape_from_json(json::parse(passport_json));
    return dump(jsonio::converse_to_json(picard::check_converse(shape, y0, y1)));
}

std::string monodromy(const std::string& map_str, const std::string& punctures,
                      const std::string& base) {
    auto f = parse::parse_map<Approx>(map_str);
    auto punct = parse::parse_points<Approx>(punctures);
    auto b = base.empty() ? mono::default_base(f, punct) : parse::parse_point<Approx>(base);
    return dump(jsonio::monodromy_to_json(mono::monodromy_rep(f, punct, b)));
}

std::string regularity_probe(const std::string& map_str, const std::string& excluded, int trials,
                             std::uint64_t seed) {
    auto f = parse::parse_map<Approx>(map_str);
    auto ex = parse::parse_points<Approx>(excluded);
    return dump(jsonio::probe_to_json(mono::regularity_probe(f, ex, trials, seed)));
}

std::string local_lift(int beta_f, int beta_F) {
    auto r = lift::local_lift({beta_f, beta_F});
    json out{{"lift_exists", r.has_value()}};
    if (r) {
        out["k"] = r->k;
        out["beta_lift"] = r->beta_lift;
    }
    return dump(out);
}

std::string passport_lift_feasibility(const std::string& passport_json,
                                      const std::vector<std::pair<int, std::vector<int>>>& ends) {
    auto shape = jsonio::shape_from_json(json::parse(passport_json));
    return dump(jsonio::feasibility_to_json(lift::passport_lift_feasibility(shape, ends)));
}

fgt::FgtRecord rec(const std::string& record_json) {
    return jsonio::record_from_json(json::parse(record_json));
}

std::string fgt_check(const std::string& record_json) {
    auto r = rec(record_json);
    return dump(json{{"riemann_hurwitz", jsonio::check_to_json(fgt::check_rh(r))},
                     {"total_curvature", jsonio::check_to_json(fgt::check_tc(r))},
                     {"missed_fiber", jsonio::check_to_json(fgt::check_missed_fiber(r))}});
}

std::string fgt_consequences(const std::string& record_json) {
    return dump(jsonio::consequences_to_json(fgt::ledger_consequences(rec(record_json))));
}

std::string fgt_general_F(const std::string& record_json) {
    auto rep = fgt::check_general_F(rec(record_json));
    return dump(json{{"identities", jsonio::check_to_json(rep.identities)},
                     {"combined_lhs", rep.combined_lhs},
                     {"combined_rhs", rep.combined_rhs},
                     {"positivity_holds", rep.positivity_holds},
                     {"missed_bound_ok", rep.missed_bound_ok}});
}

std::string fgt_classify(const std::string& record_json) {
    return dump(jsonio::classification_to_json(fgt::classify_covering(rec(record_json))));
}

std::string fgt_bend(const std::string& record_json, const std::string& from,
                     const std::string& to) {
    return dump(jsonio::record_to_json(fgt::bend(rec(record_json), from, to)));
}

std::vector<std::string> fgt_enumerate(int g_max, int n_max, int m_max, int b_max,
                                       std::uint64_t node_budget) {
    fgt::EnumBounds b{g_max, n_max, m_max, b_max, node_budget};
    std::vector<std::string> out;
    fgt::enumerate_admissible(b, [&](const fgt::FgtRecord& r) {
        out.push_back(dump(jsonio::record_to_json(r)));
    });
    return out;
}

std::string fgt_obstruct(const std::string& record_json) {
    return dump(jsonio::obstruction_to_json(fgt::obstruct_three_missed(rec(record_json))));
}

std::string fgt_no_extension(const std::string& record_json, const std::string& w_choice) {
    return dump(jsonio::obstruction_to_json(fgt::no_extension_two_missed(rec(record_json), w_choice)));
}

} // namespace

PYBIND11_MODULE(_ramify, m) {
    m.doc() = "branched-covering analysis on the Riemann sphere (JSON-string API)";

    py::register_exception<Error>(m, "RamifyError");

    m.def("analyze_map", &analyze_map, py::arg("map"), py::arg("over"), py::arg("exact") = false);
    m.def("evaluate", &evaluate, py::arg("map"), py::arg("point"), py::arg("exact") = false);
    m.def("local_degree", &local_degree_of, py::arg("map"), py::arg("point"));
    m.def("fiber", &fiber_of, py::arg("map"), py::arg("point"), py::arg("exact") = false);

    m.def("construct_picard", &construct_picard, py::arg("w"), py::arg("exact") = false);
    m.def("construct_for_targets", &construct_for_targets, py::arg("targets"));
    m.def("check_converse", &check_converse, py::arg("passport"), py::arg("y0"), py::arg("y1"));

    m.def("monodromy", &monodromy, py::arg("map"), py::arg("punctures"), py::arg("base") = "");
    m.def("regularity_probe", &regularity_probe, py::arg("map"), py::arg("excluded"),
          py::arg("trials"), py::arg("seed") = 0);

    m.def("local_lift", &local_lift, py::arg("beta_f"), py::arg("beta_F"));
    m.def("c0_extension_divisibility", &lift::c0_extension_divisibility,
          py::arg("branch_orders"), py::arg("divisor"));
    m.def("passport_lift_feasibility", &passport_lift_feasibility, py::arg("passport"),
          py::arg("ends"));

    m.def("fgt_check", &fgt_check, py::arg("record"));
    m.def("fgt_consequences", &fgt_consequences, py::arg("record"));
    m.def("fgt_general_F", &fgt_general_F, py::arg("record"));
    m.def("fgt_classify", &fgt_classify, py::arg("record"));
    m.def("fgt_bend", &fgt_bend, py::arg("record"), py::arg("from_id"), py::arg("to_id"));
    m.def("fgt_enumerate", &fgt_enumerate, py::arg("g_max"), py::arg("n_max"), py::arg("m_max"),
          py::arg("b_max"), py::arg("node_budget") = 10'000'000ULL);
    m.def("fgt_obstruct", &fgt_obstruct, py::arg("record"));
    m.def("fgt_no_extension", &fgt_no_extension, py::arg("record"), py::arg("w_choice") = "w");
    m.def("catenoid_record",
          [] { return dump(jsonio::record_to_json(fgt::catenoid_record())); });
}
