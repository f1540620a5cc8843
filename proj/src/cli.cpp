#include "forel/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "forel/analysis.hpp"
#include "forel/demos.hpp"
#include "forel/dynamics.hpp"
#include "forel/eigen.hpp"
#include "forel/errors.hpp"
#include "forel/game_io.hpp"
#include "forel/graph.hpp"
#include "forel/sweep.hpp"
#include "forel/systems.hpp"

namespace forel {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitHypothesis = 1;
constexpr int kExitInput = 2;
constexpr int kExitRuntime = 3;

struct GameSource {
    std::string spec_path;
    std::string demo_name;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--spec", spec_path, "game spec JSON file");
        cmd->add_option("--demo", demo_name, "built-in demo name (see demo-list)");
    }

    // Loaded game plus regularizers; nn demos carry no binary game.
    struct Resolved {
        std::string label;
        std::optional<BinaryGame> game;
        std::vector<Regularizer> regs;
        std::optional<NearestNeighborGame> nn;
    };

    Resolved resolve() const {
        if (spec_path.empty() == demo_name.empty())
            throw ParseError("exactly one of --spec or --demo is required");
        Resolved r;
        if (!spec_path.empty()) {
            GameSpec spec = load_game_file(spec_path);
            r.label = spec_path;
            r.game = std::move(spec.game);
            r.regs = std::move(spec.regularizers);
            return r;
        }
        Demo demo = make_demo(demo_name);
        r.label = demo.name;
        r.nn = demo.nn_game;
        r.game = demo.game;
        if (r.game) r.regs = entropy_regularizers(r.game->n_players);
        return r;
    }

    BinaryGame require_game(const Resolved& r) const {
        if (!r.game)
            throw ParseError(r.label + " is a nearest-neighbor demo (simulate only)");
        return *r.game;
    }
};

struct SimOptions {
    std::string x0_text, z0_text;
    bool random_interior = false;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string coord = "auto"; // auto | x | z
    std::string method = "rk45";
    double t_end = 100.0;
    double dt = 1e-2;
    int stride = 1;
    ClassifierParams classifier;

    void add_classifier_options(CLI::App* cmd) {
        cmd->add_option("--transient-fraction", classifier.transient_fraction,
                        "fraction of the run discarded before classification");
        cmd->add_option("--corner-eps", classifier.corner_eps,
                        "corner-ball radius for visit detection");
        cmd->add_option("--equilibrium-tol", classifier.equilibrium_tol,
                        "sup field norm below which the tail is stationary");
        cmd->add_option("--drift-tol", classifier.drift_tol,
                        "max tail drift for the equilibrium verdict");
    }

    void add_options(CLI::App* cmd) {
        cmd->add_option("--x0", x0_text, "initial strategy profile, comma separated");
        cmd->add_option("--z0", z0_text, "initial score differences, comma separated");
        cmd->add_flag("--random-interior", random_interior,
                      "draw the initial profile from [0.05,0.95]^N (requires --seed)");
        cmd->add_option("--seed", seed, "seed for --random-interior")
            ->each([this](const std::string&) { seed_given = true; });
        cmd->add_option("--coord", coord, "integration coordinate: auto|x|z")
            ->check(CLI::IsMember({"auto", "x", "z"}));
        cmd->add_option("--method", method, "integrator: rk45|rk4")
            ->check(CLI::IsMember({"rk45", "rk4"}));
        cmd->add_option("--t-end", t_end, "integration horizon");
        cmd->add_option("--dt", dt, "fixed step for rk4");
        cmd->add_option("--stride", stride, "record every n-th accepted step");
    }

    IntegratorConfig integrator() const {
        IntegratorConfig cfg;
        cfg.method = method == "rk4" ? Method::Rk4 : Method::Rk45;
        cfg.dt = dt;
        cfg.t_end = t_end;
        cfg.sample_stride = stride;
        return cfg;
    }
};

std::vector<double> parse_vector(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw ParseError("cannot parse number: " + item);
        }
    }
    if (out.empty()) throw ParseError("empty vector");
    return out;
}

struct PreparedRun {
    OdeSystem sys;
    std::vector<double> state0;
    StateCoord coord;
};

// Choose the coordinate and system, and map the initial condition into it.
PreparedRun prepare_run(const GameSource::Resolved& r, const SimOptions& opt) {
    PreparedRun run;
    const int ic_sources = (!opt.x0_text.empty() ? 1 : 0) + (!opt.z0_text.empty() ? 1 : 0) +
                           (opt.random_interior ? 1 : 0);
    if (ic_sources != 1)
        throw ParseError("exactly one of --x0, --z0, --random-interior is required");
    if (opt.random_interior && !opt.seed_given)
        throw ParseError("--random-interior requires --seed");

    if (r.nn) {
        if (opt.coord == "z") throw ParseError("nearest-neighbor demos integrate in x");
        run.sys = make_nn_system(*r.nn);
        run.coord = StateCoord::X;
        if (!opt.z0_text.empty()) throw ParseError("nearest-neighbor demos take --x0");
        run.state0 = opt.random_interior
                         ? sweep_initial_profile(r.nn->n_players, opt.seed)
                         : parse_vector(opt.x0_text);
        if (static_cast<int>(run.state0.size()) != r.nn->n_players)
            throw ParseError("initial condition size mismatch");
        return run;
    }

    const BinaryGame& game = *r.game;
    bool entropy_only = true;
    for (const auto& reg : r.regs) entropy_only = entropy_only && reg.has_logistic_choice();
    std::string coord = opt.coord;
    if (coord == "auto") coord = entropy_only ? "x" : "z";
    if (coord == "x" && !entropy_only)
        throw ParseError("x-coordinate integration requires entropy regularizers");

    std::vector<double> x0;
    std::optional<std::vector<double>> z0;
    if (opt.random_interior)
        x0 = sweep_initial_profile(game.n_players, opt.seed);
    else if (!opt.x0_text.empty())
        x0 = parse_vector(opt.x0_text);
    else
        z0 = parse_vector(opt.z0_text);
    const std::size_t dim = z0 ? z0->size() : x0.size();
    if (static_cast<int>(dim) != game.n_players)
        throw ParseError("initial condition size mismatch");

    if (coord == "x") {
        run.sys = make_replicator_x_system(game);
        run.coord = StateCoord::X;
        run.state0 = z0 ? z_to_x(r.regs, *z0) : x0;
    } else {
        run.sys = make_forel_system(game, r.regs);
        run.coord = StateCoord::Z;
        run.state0 = z0 ? *z0 : x_to_z(r.regs, x0);
    }
    return run;
}

void emit(const json& j, bool as_json, const std::string& human) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << human;
}

void write_svg_plots(const std::string& out_dir, const BinaryGame* game,
                     const Trajectory& traj) {
    const std::size_t n = traj.xs.empty() ? 0 : traj.xs.front().size();
    std::vector<double> series_t = traj.times;
    for (std::size_t i = 0; i + 1 < n; i += 2) {
        PlotSeries s;
        s.label = "x_" + std::to_string(i) + " vs x_" + std::to_string(i + 1);
        for (const auto& x : traj.xs) {
            s.x.push_back(x[i]);
            s.y.push_back(x[i + 1]);
        }
        atomic_write_file(out_dir + "/phase_x" + std::to_string(i) + "_x" +
                              std::to_string(i + 1) + ".svg",
                          svg_line_plot("phase projection", {s}));
    }
    if (game) {
        const RunningAverages ra = running_average_series(*game, traj);
        std::vector<PlotSeries> series;
        for (std::size_t k = 0; k < ra.per_player.size(); ++k)
            series.push_back({"avg u_" + std::to_string(k), ra.times, ra.per_player[k]});
        series.push_back({"avg sw", ra.times, ra.welfare});
        atomic_write_file(out_dir + "/running_average.svg",
                          svg_line_plot("time-average payoffs", series));
    }
}

int cmd_validate(const GameSource& src, bool as_json) {
    const auto r = src.resolve();
    const BinaryGame game = src.require_game(r);
    const ConditionReport report = certify_pb(game);
    json j;
    j["game"] = r.label;
    j["conditions"] = to_json(report);
    if (report.one_predecessor && report.connected)
        j["decomposition"] = to_json(root_decomposition(game_graph(game)));
    else
        j["decomposition"] = nullptr;
    std::ostringstream human;
    human << (report.pb_certified ? "certified" : "not certified") << ": " << r.label << "\n";
    for (const auto& f : report.failures) human << "  - " << f << "\n";
    emit(j, as_json, human.str());
    return report.pb_certified ? kExitOk : kExitHypothesis;
}

int cmd_conditions(const GameSource& src, bool as_json) {
    const auto r = src.resolve();
    json j;
    j["game"] = r.label;
    if (r.nn) {
        json verdicts = json::array();
        for (int k = 0; k < r.nn->n_players; ++k) {
            const NnCooperation c = nearest_neighbor_cooperation(r.nn->tensors[k]);
            json jc;
            jc["player"] = k;
            jc["values"] = c.values;
            jc["holds"] = c.holds;
            jc["all"] = c.all();
            verdicts.push_back(jc);
        }
        j["nearest_neighbor_cooperation"] = verdicts;
        emit(j, as_json, "nearest-neighbor cooperation report for " + r.label + "\n");
        return kExitOk;
    }
    const BinaryGame game = src.require_game(r);
    j["conditions"] = to_json(certify_pb(game));
    std::ostringstream human;
    human << "conditions for " << r.label << ": "
          << (j["conditions"]["pb_certified"].get<bool>() ? "certified" : "not certified")
          << "\n";
    emit(j, as_json, human.str());
    return kExitOk;
}

json nash_report(const BinaryGame& game) {
    json j;
    try {
        const auto nash = interior_nash(game);
        if (!nash) {
            j["exists"] = false;
            j["reason"] = "an edge admits a dominant strategy";
            json dom = json::array();
            for (const Edge& e : game.edges) {
                json d;
                d["from"] = e.from;
                d["to"] = e.to;
                d["dominance"] = to_string(dominant_strategy(e.payoff));
                dom.push_back(d);
            }
            j["dominance"] = dom;
            return j;
        }
        j["exists"] = true;
        j["x"] = *nash;
        j["payoffs"] = all_expected_payoffs(game, *nash);
        double residual = 0.0;
        for (const Edge& e : game.edges) {
            // successor's payoff gap between its two pure strategies
            const double xp = (*nash)[e.from];
            const double gap = xp * (e.payoff(0, 0) - e.payoff(0, 1)) +
                               (1.0 - xp) * (e.payoff(1, 0) - e.payoff(1, 1));
            residual = std::max(residual, std::abs(gap));
        }
        j["indifference_residual"] = residual;
        json mm = json::array();
        for (const Edge& e : game.edges) {
            json m;
            m["player"] = e.to;
            m["minimax"] = minimax_value(e.payoff);
            m["zero_sum_interior"] = zero_sum_interior(e.payoff);
            mm.push_back(m);
        }
        j["minimax"] = mm;
        j["welfare_bound"] = welfare_bound(game);
    } catch (const NotCyclicError& ex) {
        j["exists"] = false;
        j["reason"] = ex.what();
    } catch (const DisconnectedError& ex) {
        j["exists"] = false;
        j["reason"] = ex.what();
    } catch (const OnePredecessorViolation& ex) {
        j["exists"] = false;
        j["reason"] = ex.what();
    } catch (const NonGenericError& ex) {
        j["exists"] = false;
        j["reason"] = ex.what();
    }
    return j;
}

int cmd_nash(const GameSource& src, bool as_json) {
    const auto r = src.resolve();
    const BinaryGame game = src.require_game(r);
    json j;
    j["game"] = r.label;
    j["nash"] = nash_report(game);
    std::ostringstream human;
    if (j["nash"]["exists"].get<bool>()) {
        human << "interior Nash:";
        for (double xi : j["nash"]["x"].get<std::vector<double>>()) human << " " << xi;
        human << "\nwelfare bound: " << j["nash"]["welfare_bound"].get<double>() << "\n";
    } else {
        human << "no interior Nash: " << j["nash"]["reason"].get<std::string>() << "\n";
    }
    emit(j, as_json, human.str());
    return kExitOk;
}

int cmd_simulate(const GameSource& src, const SimOptions& opt, const std::string& out_dir,
                 bool svg, bool as_json) {
    const auto r = src.resolve();
    const PreparedRun run = prepare_run(r, opt);
    const Trajectory traj = integrate(run.sys, run.state0, opt.integrator());

    const std::string csv =
        r.game ? trajectory_csv(*r.game, traj) : trajectory_csv(traj);
    if (!out_dir.empty()) {
        atomic_write_file(out_dir + "/trajectory.csv", csv);
        if (svg) write_svg_plots(out_dir, r.game ? &*r.game : nullptr, traj);
    } else if (!as_json) {
        std::cout << csv;
    }

    json j;
    j["game"] = r.label;
    j["coord"] = run.coord == StateCoord::X ? "x" : "z";
    j["termination"] = to_string(traj.termination);
    if (traj.overflow_player >= 0) j["overflow_player"] = traj.overflow_player;
    j["samples"] = traj.size();
    j["t_final"] = traj.times.empty() ? 0.0 : traj.times.back();
    if (r.game) j["time_average"] = to_json(time_average_payoffs(*r.game, traj));
    if (as_json) std::cout << j.dump(2) << "\n";
    return traj.termination == Termination::StepFailure ? kExitRuntime : kExitOk;
}

int cmd_analyze(const GameSource& src, const SimOptions& opt, double welfare_tol,
                bool kl_diag, const std::string& out_dir, bool svg, bool as_json) {
    const auto r = src.resolve();
    const BinaryGame game = src.require_game(r);
    json j;
    j["game"] = r.label;
    const ConditionReport conditions = certify_pb(game);
    j["conditions"] = to_json(conditions);
    try {
        j["decomposition"] = to_json(root_decomposition(game_graph(game)));
    } catch (const Error& ex) {
        j["decomposition"] = nullptr;
        j["decomposition_error"] = ex.what();
    }
    j["nash"] = nash_report(game);

    std::optional<MixedProfile> nash;
    if (j["nash"]["exists"].get<bool>()) nash = j["nash"]["x"].get<std::vector<double>>();

    // Spectrum at the interior equilibrium (replicator x-field for entropy,
    // FoReL z-field otherwise).
    if (nash) {
        bool entropy_only = true;
        for (const auto& reg : r.regs)
            entropy_only = entropy_only && reg.has_logistic_choice();
        const OdeSystem sys = entropy_only ? make_replicator_x_system(game)
                                           : make_forel_system(game, r.regs);
        const std::vector<double> at =
            entropy_only ? *nash : x_to_z(r.regs, *nash);
        const Matrix jac = jacobian(sys.field, at);
        const auto eigs = eigenvalues(jac);
        json spec_json;
        spec_json["eigenvalues"] = json::array();
        for (const auto& e : eigs)
            spec_json["eigenvalues"].push_back({{"re", e.real()}, {"im", e.imag()}});
        const StabilityCounts counts = stability_classify(eigs);
        spec_json["stability"] = {{"stable", counts.stable},
                                  {"unstable", counts.unstable},
                                  {"center", counts.center}};
        j["spectrum"] = spec_json;
    } else {
        j["spectrum"] = nullptr;
    }

    const PreparedRun run = prepare_run(r, opt);
    const Trajectory traj = integrate(run.sys, run.state0, opt.integrator());
    json sim;
    sim["coord"] = run.coord == StateCoord::X ? "x" : "z";
    sim["t_end"] = opt.t_end;
    sim["termination"] = to_string(traj.termination);
    sim["samples"] = traj.size();
    j["simulation"] = sim;

    j["limit_set"] = to_json(classify_limit_set(traj, run.sys, opt.classifier));

    json diagnostics;
    try {
        j["welfare"] = to_json(check_welfare_theorem(game, traj, welfare_tol));
    } catch (const Error& ex) {
        j["welfare"] = nullptr;
        diagnostics["welfare_error"] = ex.what();
    }

    const RunningAverages ra = running_average_series(game, traj);
    diagnostics["running_sw_final"] = ra.welfare.back();
    if (nash) {
        // time-average of the state vs the Nash point (report only)
        std::vector<double> mean(game.n_players, 0.0);
        const double span = traj.times.back() - traj.times.front();
        for (std::size_t s = 1; s < traj.size(); ++s) {
            const double w = 0.5 * (traj.times[s] - traj.times[s - 1]);
            for (int i = 0; i < game.n_players; ++i)
                mean[i] += w * (traj.xs[s][i] + traj.xs[s - 1][i]);
        }
        double dist = 0.0;
        for (int i = 0; i < game.n_players; ++i) {
            if (span > 0.0) mean[i] /= span;
            dist = std::max(dist, std::abs(mean[i] - (*nash)[i]));
        }
        diagnostics["state_average"] = mean;
        diagnostics["state_average_nash_distance"] = dist;
    }
    // Quoted boundary-cycle average for the asym family, reported not asserted.
    if (r.label.rfind("asym", 0) == 0) {
        int n = 3;
        double p = 8.0;
        if (r.label != "asym") std::sscanf(r.label.c_str(), "asym(%d,%lf)", &n, &p);
        const double quoted = (p + 1.0) * (n - 1) / 2.0;
        diagnostics["boundary_cycle_quote"] = {
            {"expected", quoted},
            {"measured", ra.welfare.back()},
            {"within_15pct", std::abs(ra.welfare.back() - quoted) <= 0.15 * std::abs(quoted)}};
    }
    if (kl_diag && nash) {
        try {
            const KlDiagnostic kd = kl_derivative_diagnostic(game, traj, *nash);
            double max_residual = 0.0;
            for (double res : kd.residual) max_residual = std::max(max_residual, std::abs(res));
            diagnostics["kl_diagnostic"] = {{"samples", kd.times.size()},
                                            {"max_abs_residual", max_residual}};
            if (!out_dir.empty()) {
                std::ostringstream csv;
                csv << "t,dkl_dt,sw_diff,residual\n";
                for (std::size_t s = 0; s < kd.times.size(); ++s)
                    csv << fmt_double(kd.times[s]) << "," << fmt_double(kd.dkl_dt[s]) << ","
                        << fmt_double(kd.sw_diff[s]) << "," << fmt_double(kd.residual[s])
                        << "\n";
                atomic_write_file(out_dir + "/kl_diagnostic.csv", csv.str());
            }
        } catch (const Error& ex) {
            diagnostics["kl_diagnostic_error"] = ex.what();
        }
    }
    j["diagnostics"] = diagnostics;

    if (!out_dir.empty()) {
        atomic_write_file(out_dir + "/report.json", j.dump(2) + "\n");
        atomic_write_file(out_dir + "/trajectory.csv", trajectory_csv(game, traj));
        if (svg) write_svg_plots(out_dir, &game, traj);
    }
    std::ostringstream human;
    human << "analysis of " << r.label << ": verdict "
          << j["limit_set"]["kind"].get<std::string>() << "\n";
    emit(j, as_json, human.str());
    return conditions.pb_certified ? kExitOk : kExitHypothesis;
}

int cmd_sweep(const GameSource& src, const SimOptions& opt, int runs, int threads,
              double welfare_tol, const std::string& out_dir, bool as_json) {
    if (runs <= 0) throw ParseError("sweep requires at least one run");
    const auto r = src.resolve();
    const BinaryGame game = src.require_game(r);
    SweepConfig cfg;
    cfg.n_runs = runs;
    cfg.seed_base = opt.seed_given ? opt.seed : 1;
    cfg.integrator = opt.integrator();
    cfg.classifier = opt.classifier;
    cfg.welfare_tol = welfare_tol;
    cfg.threads = threads;
    const std::vector<SweepRow> rows = run_sweep(game, r.regs, cfg);

    json j;
    j["game"] = r.label;
    j["n_runs"] = runs;
    j["seed_base"] = cfg.seed_base;
    j["rows"] = json::array();
    std::map<std::string, int> verdict_counts;
    int ok_count = 0, welfare_passes = 0;
    std::ostringstream csv;
    csv << "seed,ok,verdict,sw_average,slack,welfare_pass,termination,error\n";
    for (const SweepRow& row : rows) {
        json jr;
        jr["seed"] = row.seed;
        jr["x0"] = row.x0;
        jr["ok"] = row.ok;
        if (!row.ok) jr["error"] = row.error;
        jr["verdict"] = to_string(row.verdict);
        jr["sw_average"] = row.sw_average;
        jr["slack"] = row.slack;
        jr["welfare_pass"] = row.welfare_pass;
        jr["termination"] = to_string(row.termination);
        j["rows"].push_back(jr);
        csv << row.seed << "," << (row.ok ? 1 : 0) << "," << to_string(row.verdict) << ","
            << fmt_double(row.sw_average) << "," << fmt_double(row.slack) << ","
            << (row.welfare_pass ? 1 : 0) << "," << to_string(row.termination) << ","
            << row.error << "\n";
        if (row.ok) {
            ++ok_count;
            ++verdict_counts[to_string(row.verdict)];
            if (row.welfare_pass) ++welfare_passes;
        }
    }
    json summary;
    summary["ok"] = ok_count;
    summary["welfare_passes"] = welfare_passes;
    summary["verdicts"] = verdict_counts;
    j["summary"] = summary;

    if (!out_dir.empty()) {
        atomic_write_file(out_dir + "/sweep.json", j.dump(2) + "\n");
        atomic_write_file(out_dir + "/sweep.csv", csv.str());
    }
    std::ostringstream human;
    human << "sweep of " << r.label << ": " << ok_count << "/" << runs << " runs ok, "
          << welfare_passes << " welfare passes\n";
    for (const auto& [verdict, count] : verdict_counts)
        human << "  " << verdict << ": " << count << "\n";
    emit(j, as_json, human.str());
    return ok_count > 0 ? kExitOk : kExitRuntime;
}

int cmd_demo_list(bool as_json) {
    json j = json::array();
    std::ostringstream human;
    for (const auto& [name, description] : demo_list()) {
        j.push_back({{"name", name}, {"description", description}});
        human << name << "  -  " << description << "\n";
    }
    emit(j, as_json, human.str());
    return kExitOk;
}

} // namespace

int run_cli(std::vector<std::string> args) {
    CLI::App app{"FoReL dynamics toolkit for binary one-predecessor polymatrix games"};
    app.require_subcommand(1);
    app.fallthrough(true);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON to stdout");

    GameSource src_validate, src_conditions, src_nash, src_simulate, src_analyze, src_sweep;
    SimOptions sim_simulate, sim_analyze, sim_sweep;
    std::string out_simulate, out_analyze, out_sweep;
    bool svg_simulate = false, svg_analyze = false;
    double welfare_tol_analyze = 0.05, welfare_tol_sweep = 0.05;
    bool kl_diag = false;
    int sweep_runs = 20, sweep_threads = 0;

    auto* validate = app.add_subcommand("validate", "graph + certification report");
    src_validate.add_options(validate);

    auto* conditions = app.add_subcommand("conditions", "payoff-matrix condition report");
    src_conditions.add_options(conditions);

    auto* nash = app.add_subcommand("nash", "interior Nash / minimax report");
    src_nash.add_options(nash);

    auto* simulate = app.add_subcommand("simulate", "integrate one trajectory to CSV");
    src_simulate.add_options(simulate);
    sim_simulate.add_options(simulate);
    simulate->add_option("--out-dir", out_simulate, "output directory");
    simulate->add_flag("--svg", svg_simulate, "also write SVG plots");

    auto* analyze = app.add_subcommand("analyze", "full analysis report");
    src_analyze.add_options(analyze);
    sim_analyze.add_options(analyze);
    sim_analyze.add_classifier_options(analyze);
    analyze->add_option("--out-dir", out_analyze, "output directory");
    analyze->add_flag("--svg", svg_analyze, "also write SVG plots");
    analyze->add_option("--welfare-tol", welfare_tol_analyze, "welfare bound tolerance");
    analyze->add_flag("--kl-diag", kl_diag, "emit the KL-derivative diagnostic");

    auto* sweep = app.add_subcommand("sweep", "many seeded runs, aggregated");
    src_sweep.add_options(sweep);
    sim_sweep.add_options(sweep);
    sim_sweep.add_classifier_options(sweep);
    sweep->add_option("--runs", sweep_runs, "number of seeded runs");
    sweep->add_option("--threads", sweep_threads, "worker threads (1 = serial)");
    sweep->add_option("--welfare-tol", welfare_tol_sweep, "welfare bound tolerance");
    sweep->add_option("--out-dir", out_sweep, "output directory");

    auto* demos = app.add_subcommand("demo-list", "list built-in demo games");
    (void)demos;

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& ex) {
        if (ex.get_exit_code() == 0) return app.exit(ex); // --help
        app.exit(ex);
        return kExitInput;
    }

    try {
        if (validate->parsed()) return cmd_validate(src_validate, as_json);
        if (conditions->parsed()) return cmd_conditions(src_conditions, as_json);
        if (nash->parsed()) return cmd_nash(src_nash, as_json);
        if (simulate->parsed())
            return cmd_simulate(src_simulate, sim_simulate, out_simulate, svg_simulate,
                                as_json);
        if (analyze->parsed())
            return cmd_analyze(src_analyze, sim_analyze, welfare_tol_analyze, kl_diag,
                               out_analyze, svg_analyze, as_json);
        if (sweep->parsed())
            return cmd_sweep(src_sweep, sim_sweep, sweep_runs, sweep_threads,
                             welfare_tol_sweep, out_sweep, as_json);
        if (demos->parsed()) return cmd_demo_list(as_json);
    } catch (const ParseError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInput;
    } catch (const InvalidGameError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInput;
    } catch (const InvalidConfigError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInput;
    } catch (const BoundaryError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInput;
    } catch (const OnePredecessorViolation& ex) {
        std::cerr << "hypothesis failure: " << ex.what() << "\n";
        return kExitHypothesis;
    } catch (const DisconnectedError& ex) {
        std::cerr << "hypothesis failure: " << ex.what() << "\n";
        return kExitHypothesis;
    } catch (const NotCyclicError& ex) {
        std::cerr << "hypothesis failure: " << ex.what() << "\n";
        return kExitHypothesis;
    } catch (const NonGenericError& ex) {
        std::cerr << "hypothesis failure: " << ex.what() << "\n";
        return kExitHypothesis;
    } catch (const Error& ex) {
        std::cerr << "runtime failure: " << ex.what() << "\n";
        return kExitRuntime;
    }
    return kExitInput;
}

} // namespace forel
