#include "forel/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "forel/dynamics.hpp"
#include "forel/errors.hpp"
#include "forel/rng.hpp"
#include "forel/systems.hpp"

namespace forel {

std::vector<double> sweep_initial_profile(int n_players, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> x(n_players);
    for (double& xi : x) xi = rng.uniform(0.05, 0.95);
    return x;
}

namespace {

bool all_entropy(const std::vector<Regularizer>& regs) {
    for (const auto& r : regs)
        if (!r.has_logistic_choice()) return false;
    return true;
}

} // namespace

SweepRow sweep_run(const BinaryGame& game, const std::vector<Regularizer>& regs,
                   std::uint64_t seed, const SweepConfig& cfg) {
    SweepRow row;
    row.seed = seed;
    row.x0 = sweep_initial_profile(game.n_players, seed);
    try {
        // Entropy dynamics run in x coordinates where the boundary is part of
        // the phase space; other regularizers integrate the scores.
        Trajectory traj;
        OdeSystem sys;
        if (all_entropy(regs)) {
            sys = make_replicator_x_system(game);
            traj = integrate(sys, row.x0, cfg.integrator);
        } else {
            sys = make_forel_system(game, regs);
            traj = integrate(sys, x_to_z(regs, row.x0), cfg.integrator);
        }
        row.termination = traj.termination;
        row.verdict = classify_limit_set(traj, sys, cfg.classifier).kind;
        const WelfareVerdict wv = check_welfare_theorem(game, traj, cfg.welfare_tol);
        row.sw_average = wv.average_sw;
        row.slack = wv.slack;
        row.welfare_pass = wv.pass;
        row.ok = true;
    } catch (const Error& ex) {
        row.error = ex.what();
    }
    return row;
}

std::vector<SweepRow> run_sweep_serial(const BinaryGame& game,
                                       const std::vector<Regularizer>& regs,
                                       const SweepConfig& cfg) {
    std::vector<SweepRow> rows(cfg.n_runs);
    for (int i = 0; i < cfg.n_runs; ++i)
        rows[i] = sweep_run(game, regs, cfg.seed_base + static_cast<std::uint64_t>(i), cfg);
    return rows;
}

std::vector<SweepRow> run_sweep(const BinaryGame& game, const std::vector<Regularizer>& regs,
                                const SweepConfig& cfg) {
    if (cfg.threads == 1 || cfg.n_runs <= 1) return run_sweep_serial(game, regs, cfg);
#ifdef _OPENMP
    std::vector<SweepRow> rows(cfg.n_runs);
#pragma omp parallel for schedule(dynamic) \
    num_threads(cfg.threads > 0 ? cfg.threads : omp_get_max_threads())
    for (int i = 0; i < cfg.n_runs; ++i)
        rows[i] = sweep_run(game, regs, cfg.seed_base + static_cast<std::uint64_t>(i), cfg);
    return rows;
#else
    return run_sweep_serial(game, regs, cfg);
#endif
}

} // namespace forel
