// ramify: branched-covering bookkeeping for rational maps on the sphere and
// integer ledgers of finite-geometric-type surfaces.
//
// Exit codes: 0 verdict holds / construction verifies, 1 reported violation,
// 2 usage or input error. RAMIFY_BACKEND (exact | approx) picks the scalar
// backend; exact falls back to approx when a fiber has irrational points.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "ramify/jsonio.hpp"
#include "ramify/parse.hpp"

using namespace ramify;
using jsonio::json;

namespace {

enum class Backend { exact, approx };

Backend backend_from_env() {
    const char* e = std::getenv("RAMIFY_BACKEND");
    if (!e || std::string(e).empty() || std::string(e) == "approx") return Backend::approx;
    if (std::string(e) == "exact") return Backend::exact;
    throw ParseError("RAMIFY_BACKEND must be 'exact' or 'approx'");
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---- analyze-map ----

template <class K>
int run_analyze(const std::string& map_str, const std::string& over_str, std::string backend) {
    RationalMap<K> f = parse::parse_map<K>(map_str);
    auto targets = parse::parse_points<K>(over_str);
    Passport<K> pp = passport_over(f, targets);
    auto crit = critical_points(f);
    int total_beta = 0;
    json crit_json = json::array();
    for (auto& [p, beta] : crit) {
        total_beta += beta;
        crit_json.push_back(json{{"point", jsonio::point_to_json(p)}, {"beta", beta}});
    }
    int d = f.degree();
    bool rh = total_beta == 2 * d - 2;
    emit(json{{"backend", std::move(backend)},
              {"degree", d},
              {"passport", jsonio::passport_to_json(pp)},
              {"critical_points", crit_json},
              {"riemann_hurwitz",
               json{{"lhs", 2 * d - 2}, {"rhs", total_beta}, {"holds", rh}}}});
    return rh ? 0 : 1;
}

int cmd_analyze(const std::string& map_str, const std::string& over_str) {
    if (backend_from_env() == Backend::exact) {
        try {
            return run_analyze<Exact>(map_str, over_str, "exact");
        } catch (const ExactRootsUnavailable&) {
            return run_analyze<Approx>(map_str, over_str, "approx (exact fiber unavailable)");
        }
    }
    return run_analyze<Approx>(map_str, over_str, "approx");
}

// ---- construct-picard ----

int cmd_construct(const std::string& w_str, const std::string& targets_str) {
    if (!w_str.empty()) {
        if (backend_from_env() == Backend::exact) {
            SpherePoint<Exact> w = parse::parse_point<Exact>(w_str);
            if (w.is_infinity()) throw DegenerateW("w must be finite");
            try {
                auto cfg = picard::construct(w.value());
                emit(json{{"backend", "exact"},
                          {"config", jsonio::picard_config_to_json(cfg)},
                          {"verified", true}});
                return 0;
            } catch (const ExactRootsUnavailable&) {
                // fall through to the approximate construction
            }
        }
        SpherePoint<Approx> w = parse::parse_point<Approx>(w_str);
        if (w.is_infinity()) throw DegenerateW("w must be finite");
        auto cfg = picard::construct(w.value());
        emit(json{{"backend", "approx"},
                  {"config", jsonio::picard_config_to_json(cfg)},
                  {"verified", true}});
        return 0;
    }
    auto pts = parse::parse_points<Approx>(targets_str);
    if (pts.size() != 3) throw ParseError("--targets needs exactly three points");
    auto res = picard::construct_for_targets({pts[0], pts[1], pts[2]});
    Passport<Approx> composite_pp = passport_over(res.composite, pts);
    emit(json{{"backend", "approx"},
              {"config", jsonio::picard_config_to_json(res.config)},
              {"psi", jsonio::mobius_to_json(res.psi)},
              {"composite", jsonio::map_to_json(res.composite)},
              {"composite_passport", jsonio::passport_to_json(composite_pp)},
              {"verified", true}});
    return 0;
}

// ---- monodromy ----

int cmd_monodromy(const std::string& map_str, const std::string& punct_str,
                  const std::string& base_str, int probe_trials, std::uint64_t seed) {
    RationalMap<Approx> f = parse::parse_map<Approx>(map_str);
    auto punctures = parse::parse_points<Approx>(punct_str);
    SpherePoint<Approx> base = base_str.empty() ? mono::default_base(f, punctures)
                                                : parse::parse_point<Approx>(base_str);
    mono::MonodromyRep rep = mono::monodromy_rep(f, punctures, base);
    json out = jsonio::monodromy_to_json(rep);
    out["surjectivity_criterion"] =
        mono::surjectivity_criterion(passport_over(f, punctures).shape());
    if (probe_trials > 0)
        out["regularity_probe"] =
            jsonio::probe_to_json(mono::regularity_probe(f, punctures, probe_trials, seed));
    emit(out);
    return (rep.product_is_identity && rep.transitive) ? 0 : 1;
}

// ---- check-lift ----

int cmd_check_lift(std::optional<int> beta_f, std::optional<int> beta_F,
                   const std::string& passport_path, const std::string& ends_path) {
    if (beta_f && beta_F) {
        auto res = lift::local_lift({*beta_f, *beta_F});
        json out{{"beta_f", *beta_f}, {"beta_F", *beta_F}, {"lift_exists", res.has_value()}};
        if (res) {
            out["k"] = res->k;
            out["beta_lift"] = res->beta_lift;
        }
        emit(out);
        return res ? 0 : 1;
    }
    if (passport_path.empty() || ends_path.empty())
        throw ParseError("need either --beta-f/--beta-F or --passport/--ends");
    PassportShape h = jsonio::shape_from_json(load_json_file(passport_path));
    json ej = load_json_file(ends_path);
    std::vector<std::pair<int, std::vector<int>>> ends;
    try {
        for (const auto& e : ej.at("ends"))
            ends.push_back({e.at("entry").get<int>(), e.at("betas").get<std::vector<int>>()});
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed ends file: ") + e.what());
    }
    auto rep = lift::passport_lift_feasibility(h, ends);
    emit(jsonio::feasibility_to_json(rep));
    return rep.feasible ? 0 : 1;
}

// ---- fgt subcommands ----

int cmd_fgt_check(const std::string& path) {
    auto r = jsonio::record_from_json(load_json_file(path));
    auto rh = fgt::check_rh(r), tc = fgt::check_tc(r), mf = fgt::check_missed_fiber(r);
    bool ok = rh.verdict && tc.verdict && mf.verdict;
    json out{{"record", jsonio::record_to_json(r)},
             {"riemann_hurwitz", jsonio::check_to_json(rh)},
             {"total_curvature", jsonio::check_to_json(tc)},
             {"missed_fiber", jsonio::check_to_json(mf)}};
    if (ok) out["consequences"] = jsonio::consequences_to_json(fgt::ledger_consequences(r));
    out["verdict"] = ok;
    emit(out);
    return ok ? 0 : 1;
}

int cmd_fgt_enumerate(const fgt::EnumBounds& bounds, const std::string& filter) {
    std::optional<int> want_l;
    if (!filter.empty()) {
        if (filter.rfind("l=", 0) != 0) throw ParseError("filter must look like l=<count>");
        want_l = std::stoi(filter.substr(2));
    }
    long long count = 0;
    fgt::enumerate_admissible(bounds, [&](const fgt::FgtRecord& r) {
        if (want_l && r.missed_count() != *want_l) return;
        std::cout << jsonio::record_to_json(r).dump() << "\n";
        ++count;
    });
    std::cerr << count << " record(s)\n";
    return 0;
}

int cmd_fgt_classify(const std::string& path) {
    auto r = jsonio::record_from_json(load_json_file(path));
    auto c = fgt::classify_covering(r);
    emit(jsonio::classification_to_json(c));
    bool realizable = c.kind == fgt::CoveringClass::SphereMinusPoint ||
                      c.kind == fgt::CoveringClass::CoveringOfTwicePuncturedSphere ||
                      c.kind == fgt::CoveringClass::Unconstrained;
    return realizable ? 0 : 1;
}

int cmd_fgt_obstruct(const std::string& path) {
    auto r = jsonio::record_from_json(load_json_file(path));
    auto rep = fgt::obstruct_three_missed(r);
    emit(jsonio::obstruction_to_json(rep));
    return rep.contradiction ? 0 : 1;
}

int cmd_fgt_bend(const std::string& path, const std::string& from, const std::string& to) {
    auto r = jsonio::record_from_json(load_json_file(path));
    emit(jsonio::record_to_json(fgt::bend(r, from, to)));
    return 0;
}

int cmd_fgt_no_extension(const std::string& path, const std::string& w_choice) {
    auto r = jsonio::record_from_json(load_json_file(path));
    auto rep = fgt::no_extension_two_missed(r, w_choice);
    emit(jsonio::obstruction_to_json(rep));
    return rep.contradiction ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"branched-covering analysis on the Riemann sphere"};
    app.require_subcommand(1);
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for all random sampling");
    app.fallthrough();

    std::string map_str, over_str, base_str, punct_str, w_str, targets_str;
    std::string passport_path, ends_path;
    int probe_trials = 0;

    auto* analyze = app.add_subcommand("analyze-map", "passport and branching of a rational map");
    analyze->add_option("--map", map_str, "rational expression in z")->required();
    analyze->add_option("--over", over_str, "semicolon-separated target points")->required();

    auto* construct = app.add_subcommand("construct-picard", "degree-4 covering missing 3 values");
    auto* wopt = construct->add_option("--w", w_str, "the finite nonzero missed value");
    construct->add_option("--targets", targets_str, "three points 'p1;p2;p3'")->excludes(wopt);

    auto* mono_cmd = app.add_subcommand("monodromy", "permutation monodromy about punctures");
    mono_cmd->add_option("--map", map_str, "rational expression in z")->required();
    mono_cmd->add_option("--punctures", punct_str, "semicolon-separated punctures")->required();
    mono_cmd->add_option("--base", base_str, "base point (default: automatic)");
    mono_cmd->add_option("--probe-trials", probe_trials, "extra random regularity probes");

    auto* check_lift = app.add_subcommand("check-lift", "lifting criterion");
    std::optional<int> beta_f, beta_F;
    check_lift->add_option("--beta-f", beta_f, "branch order of the covering");
    check_lift->add_option("--beta-F", beta_F, "branch order of the lifted map");
    check_lift->add_option("--passport", passport_path, "passport JSON file");
    check_lift->add_option("--ends", ends_path, "ends JSON file");

    auto* fgt_cmd = app.add_subcommand("fgt", "integer ledger of surface records");
    fgt_cmd->require_subcommand(1);
    std::string record_path, filter, bend_from, bend_to, w_choice = "w";
    fgt::EnumBounds bounds;

    auto* f_check = fgt_cmd->add_subcommand("check", "verify all identities of a record");
    f_check->add_option("file", record_path)->required();

    auto* f_enum = fgt_cmd->add_subcommand("enumerate", "all admissible records within bounds");
    f_enum->add_option("--g-max", bounds.g_max)->required();
    f_enum->add_option("--n-max", bounds.n_max)->required();
    f_enum->add_option("--m-max", bounds.m_max)->required();
    f_enum->add_option("--b-max", bounds.b_max)->required();
    f_enum->add_option("--node-budget", bounds.node_budget);
    f_enum->add_option("--filter", filter, "e.g. l=3");

    auto* f_classify = fgt_cmd->add_subcommand("classify", "covering classification");
    f_classify->add_option("file", record_path)->required();

    auto* f_obstruct = fgt_cmd->add_subcommand("obstruct", "three-missed-values pipeline");
    f_obstruct->add_option("file", record_path)->required();

    auto* f_bend = fgt_cmd->add_subcommand("bend", "move a missed value, invariants intact");
    f_bend->add_option("file", record_path)->required();
    f_bend->add_option("--from", bend_from)->required();
    f_bend->add_option("--to", bend_to)->required();

    auto* f_noext = fgt_cmd->add_subcommand("no-extension", "two-missed-values pipeline");
    f_noext->add_option("file", record_path)->required();
    f_noext->add_option("--w", w_choice, "fresh auxiliary value id");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze) return cmd_analyze(map_str, over_str);
        if (*construct) {
            if (w_str.empty() && targets_str.empty())
                throw ParseError("construct-picard needs --w or --targets");
            return cmd_construct(w_str, targets_str);
        }
        if (*mono_cmd) return cmd_monodromy(map_str, punct_str, base_str, probe_trials, seed);
        if (*check_lift) return cmd_check_lift(beta_f, beta_F, passport_path, ends_path);
        if (*f_check) return cmd_fgt_check(record_path);
        if (*f_enum) return cmd_fgt_enumerate(bounds, filter);
        if (*f_classify) return cmd_fgt_classify(record_path);
        if (*f_obstruct) return cmd_fgt_obstruct(record_path);
        if (*f_bend) return cmd_fgt_bend(record_path, bend_from, bend_to);
        if (*f_noext) return cmd_fgt_no_extension(record_path, w_choice);
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
