// Command-line surface: classification, lookups, dismantling traces, the
// homology oracle, Cech transforms, and the random-evolution experiments,
// all batch-oriented and reproducible from --seed.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclic_rips/cech.hpp"
#include "cyclic_rips/classify.hpp"
#include "cyclic_rips/cyclic_graph.hpp"
#include "cyclic_rips/errors.hpp"
#include "cyclic_rips/evolution.hpp"
#include "cyclic_rips/homology.hpp"
#include "cyclic_rips/io.hpp"

namespace cr = cyclic_rips;
using nlohmann::json;

namespace {

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

cr::Rational parse_scale(const std::string& text) {
    auto value = cr::parse_rational(text);
    if (!value) throw CliError("not a rational: " + text);
    if (*value <= 0 || 2 * *value >= 1) throw CliError("scale must satisfy 0 < r < 1/2");
    return *value;
}

struct GraphInput {
    std::vector<int> cnk;
    std::string points_path;
    std::string r_text;
    bool strict = false;

    void attach(CLI::App* cmd, bool needs_scale = true) {
        auto* cnk_opt = cmd->add_option("--cnk", cnk, "core parameters n k")->expected(2);
        auto* points_opt =
            cmd->add_option("--points", points_path, "points file (one rational per line)");
        cnk_opt->excludes(points_opt);
        points_opt->excludes(cnk_opt);
        if (needs_scale) {
            cmd->add_option("--r", r_text, "scale, exact rational or decimal");
            cmd->add_flag("--strict", strict, "use the strict (<) graph");
            auto set_leq = [this](std::int64_t) { strict = false; };
            cmd->add_flag_function("--leq", set_leq, "use the non-strict (<=) graph (default)");
        }
    }

    cr::CyclicGraph build() const {
        if (!cnk.empty()) {
            if (cnk.size() != 2) throw CliError("--cnk needs two integers");
            return cr::make_cnk(cnk[0], cnk[1]);
        }
        if (points_path.empty()) throw CliError("provide --cnk or --points");
        if (r_text.empty()) throw CliError("--points needs --r");
        auto points = cr::read_points_file(points_path);
        return cr::make_vr_digraph(points, parse_scale(r_text), strict);
    }
};

json rational_json(const cr::Rational& x) { return cr::format_rational(x); }

json type_json(const cr::HomotopyType& t) {
    json j;
    j["type"] = t.to_string();
    switch (t.kind) {
        case cr::HomotopyType::Kind::Point:
            j["kind"] = "point";
            break;
        case cr::HomotopyType::Kind::OddSphere:
            j["kind"] = "odd_sphere";
            j["dimension"] = 2 * t.l + 1;
            break;
        case cr::HomotopyType::Kind::EvenWedge:
            j["kind"] = "even_wedge";
            j["dimension"] = 2 * t.l;
            if (t.continuum) {
                j["count"] = "continuum";
            } else {
                j["count"] = t.count;
            }
            break;
    }
    return j;
}

json betti_json(const cr::BettiProfile& profile) {
    json betti = json::object();
    for (const auto& [dim, rank] : profile.betti) betti[std::to_string(dim)] = rank;
    json torsion = json::object();
    for (const auto& [dim, orders] : profile.torsion) {
        json list = json::array();
        for (const auto& order : orders) list.push_back(order.str());
        torsion[std::to_string(dim)] = list;
    }
    json j;
    j["betti"] = betti;
    if (!profile.torsion.empty()) j["torsion"] = torsion;
    return j;
}

json interval_json(const cr::PersistenceInterval& interval) {
    json j;
    j["dimension"] = interval.dimension;
    j["birth"] = rational_json(interval.birth);
    j["death"] = rational_json(interval.death);
    j["birth_included"] = interval.birth_included;
    j["death_included"] = interval.death_included;
    return j;
}

void emit(const json& j, const std::string& out_path) {
    std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        cr::atomic_write_file(out_path, text);
    }
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("CYCLIC_RIPS_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 0;
}

std::vector<std::string> labels_of(const cr::CyclicGraph& g, const std::vector<int>& ids) {
    std::vector<std::string> out;
    out.reserve(ids.size());
    for (int id : ids) {
        if (g.labels()) {
            out.push_back(cr::format_rational((*g.labels())[static_cast<std::size_t>(id)].value()));
        } else {
            out.push_back(std::to_string(id));
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"winding fractions, dismantling, and circle complexes"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "write the report here instead of stdout")->capture_default_str();

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "winding fraction, core, homotopy type");
    GraphInput classify_input;
    classify_input.attach(classify_cmd);

    // lookup
    auto* lookup_cmd = app.add_subcommand("lookup", "closed-form types of the full circle at r");
    std::string lookup_r;
    lookup_cmd->add_option("--r", lookup_r, "scale in (0, 1/2)")->required();

    // dismantle
    auto* dismantle_cmd = app.add_subcommand("dismantle", "dismantling trace and core");
    GraphInput dismantle_input;
    dismantle_input.attach(dismantle_cmd);

    // wf
    auto* wf_cmd = app.add_subcommand("wf", "winding fraction only");
    GraphInput wf_input;
    wf_input.attach(wf_cmd);

    // homology
    auto* homology_cmd = app.add_subcommand("homology", "oracle Betti profile of the clique complex");
    GraphInput homology_input;
    homology_input.attach(homology_cmd);
    int homology_cap = cr::kDefaultOracleCap;
    homology_cmd->add_option("--cap", homology_cap, "vertex cap for the oracle");

    // cech
    auto* cech_cmd = app.add_subcommand("cech", "transform and projection verification");
    std::string cech_points, cech_r;
    cech_cmd->add_option("--points", cech_points, "points file")->required();
    cech_cmd->add_option("--r", cech_r, "scale in (0, 1/2)")->required();
    int cech_cap = cr::kDefaultOracleCap;
    cech_cmd->add_option("--cap", cech_cap, "vertex cap for the oracle");

    // evolve
    auto* evolve_cmd = app.add_subcommand("evolve", "random evolution time series (CSV)");
    std::string evolve_r;
    int evolve_trials = 1, evolve_max_n = 1000;
    std::uint64_t evolve_seed = default_seed();
    bool evolve_strict = false;
    std::string evolve_out = "evolution.csv";
    std::string evolve_summary_out;
    evolve_cmd->add_option("--r", evolve_r, "scale in (0, 1/2), non-critical")->required();
    evolve_cmd->add_option("--trials", evolve_trials, "independent trials");
    evolve_cmd->add_option("--max-n", evolve_max_n, "samples per trial");
    evolve_cmd->add_option("--seed", evolve_seed, "base seed (default env CYCLIC_RIPS_SEED)");
    evolve_cmd->add_flag("--strict", evolve_strict, "use the strict (<) graph");
    evolve_cmd->add_option("--series-out", evolve_out, "time-series CSV path");
    evolve_cmd->add_option("--summary-out", evolve_summary_out, "summary CSV path");

    // bins
    auto* bins_cmd = app.add_subcommand("bins", "balls-into-bins waiting times");
    int bins_m = 2, bins_k = 365, bins_trials = 1000;
    std::uint64_t bins_seed = default_seed(), bins_reps = 0;
    bins_cmd->add_option("--m", bins_m, "balls per bin / colors");
    bins_cmd->add_option("--K", bins_k, "number of bins");
    bins_cmd->add_option("--trials", bins_trials, "coupled trials");
    bins_cmd->add_option("--seed", bins_seed, "base seed");
    bins_cmd->add_option("--outcome-reps", bins_reps, "independent good-outcome repetitions");

    // regular-coupling
    auto* coupling_cmd = app.add_subcommand("regular-coupling",
                                            "circle process coupled with the bins process");
    int coupling_m = 3, coupling_k = 40, coupling_trials = 100;
    std::uint64_t coupling_seed = default_seed();
    coupling_cmd->add_option("--m", coupling_m, "gon size / colors");
    coupling_cmd->add_option("--K", coupling_k, "number of bins");
    coupling_cmd->add_option("--trials", coupling_trials, "coupled trials");
    coupling_cmd->add_option("--seed", coupling_seed, "base seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (classify_cmd->parsed()) {
            auto graph = classify_input.build();
            auto wf = cr::winding_fraction(graph);
            auto type = cr::classify_core(wf.core_n, wf.core_k);
            json j;
            j["wf"] = rational_json(wf.value);
            j["core"] = {wf.core_n, wf.core_k};
            j.update(type_json(type));
            j.update(betti_json(cr::betti_of(type)));
            emit(j, out_path);
        } else if (lookup_cmd->parsed()) {
            auto r = parse_scale(lookup_r);
            json j;
            j["r"] = rational_json(r);
            const std::pair<const char*, cr::ComplexKind> kinds[] = {
                {"vr_strict", cr::ComplexKind::VRStrict},
                {"vr_nonstrict", cr::ComplexKind::VRNonstrict},
                {"cech_strict", cr::ComplexKind::CechStrict},
                {"cech_nonstrict", cr::ComplexKind::CechNonstrict},
            };
            for (const auto& [name, kind] : kinds) {
                json entry = type_json(cr::circle_lookup(r, kind));
                entry["persistence_interval"] = interval_json(cr::persistence_interval(r, kind));
                j[name] = entry;
            }
            emit(j, out_path);
        } else if (dismantle_cmd->parsed()) {
            auto graph = dismantle_input.build();
            auto result = cr::dismantle(graph);
            json j;
            j["core"] = {result.core.n(), result.core.reach(0)};
            j["trace"] = labels_of(graph, result.removed);
            j["survivors"] = labels_of(graph, result.core_vertices);
            emit(j, out_path);
        } else if (wf_cmd->parsed()) {
            auto graph = wf_input.build();
            auto wf = cr::winding_fraction(graph);
            json j;
            j["wf"] = rational_json(wf.value);
            j["core"] = {wf.core_n, wf.core_k};
            emit(j, out_path);
        } else if (homology_cmd->parsed()) {
            auto graph = homology_input.build();
            auto profile = cr::homology(cr::clique_complex(graph, homology_cap));
            json j = betti_json(profile);
            emit(j, out_path);
        } else if (cech_cmd->parsed()) {
            auto points = cr::read_points_file(cech_points);
            auto r = parse_scale(cech_r);
            auto transformed = cr::transform_T(points, r);
            auto report = cr::verify_pi_simplicial(points, r, cech_cap);
            json j;
            j["r"] = rational_json(r);
            j["vr_scale"] = rational_json(2 * r / (1 + 2 * r));
            json tr = json::array();
            for (const auto& p : transformed) tr.push_back(cr::format_rational(p.value()));
            j["transform"] = tr;
            j["faces_map_ok"] = report.faces_map_ok;
            j["fibers_cone_ok"] = report.fibers_cone_ok;
            j["profiles_equal"] = report.profiles_equal;
            j["pass"] = report.pass();
            j["vr_profile"] = betti_json(report.vr_profile);
            j["cech_profile"] = betti_json(report.cech_profile);
            emit(j, out_path);
        } else if (evolve_cmd->parsed()) {
            auto r = parse_scale(evolve_r);
            if (evolve_trials < 1) throw CliError("need >= 1 trial");
            const int l = cr::infer_level(r);
            const cr::Rational delta = r - cr::Rational(l, 2 * l + 1);
            cr::EvolutionConfig config;
            config.r = r;
            config.strict = evolve_strict;
            config.max_n = evolve_max_n;
            config.seed = evolve_seed;
            config.coverage_eps = {delta, (2 * l + 1) * delta};
            config.regular_eps = {delta / 2};
            if (l >= 1) config.regular_eps.push_back(4 * l * delta);
            std::vector<std::pair<std::uint64_t, cr::EvolutionRecord>> runs;
            runs.reserve(static_cast<std::size_t>(evolve_trials));
            for (int t = 0; t < evolve_trials; ++t) {
                config.stream = static_cast<std::uint64_t>(t);
                runs.emplace_back(static_cast<std::uint64_t>(t), cr::run_evolution(config));
            }
            cr::atomic_write_file(evolve_out, cr::evolution_series_csv(runs));
            auto summary = cr::summarize_runs(runs, r, evolve_max_n);
            if (!evolve_summary_out.empty()) {
                cr::atomic_write_file(evolve_summary_out, cr::summary_csv(summary));
            }
            json j;
            j["series"] = evolve_out;
            j["r"] = rational_json(summary.r);
            j["delta"] = rational_json(summary.delta);
            j["l"] = summary.l;
            j["trials"] = summary.trials;
            j["mean_M"] = rational_json(summary.mean_m);
            j["mean_N"] = rational_json(summary.mean_n);
            j["mean_C_delta"] = rational_json(summary.mean_c_delta);
            j["mean_R"] = rational_json(summary.mean_r);
            emit(j, out_path);
        } else if (bins_cmd->parsed()) {
            auto result = cr::run_bins(bins_m, bins_k, bins_trials, bins_seed, bins_reps);
            json j;
            j["m"] = result.m;
            j["K"] = result.bins;
            j["trials"] = result.trials.size();
            j["mean_A"] = result.mean_a;
            j["mean_B"] = result.mean_b;
            j["mean_C"] = result.mean_c;
            j["pathwise_ok"] = true; // violations throw before reaching here
            if (result.outcome_repetitions > 0) {
                j["good_outcomes"] = result.good_outcomes;
                j["outcome_repetitions"] = result.outcome_repetitions;
                j["good_frequency"] = static_cast<double>(result.good_outcomes) /
                                      static_cast<double>(result.outcome_repetitions);
            }
            emit(j, out_path);
        } else if (coupling_cmd->parsed()) {
            auto report = cr::run_regular_coupling(coupling_m, coupling_k, coupling_trials,
                                                   coupling_seed);
            json j;
            j["m"] = report.m;
            j["K"] = report.bins;
            j["trials"] = report.trials.size();
            j["mean_R"] = report.mean_r;
            j["mean_C"] = report.mean_c;
            j["pathwise_ok"] = true;
            emit(j, out_path);
        }
    } catch (const cr::invariant_violation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
