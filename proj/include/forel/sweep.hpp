#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "forel/analysis.hpp"
#include "forel/game.hpp"
#include "forel/regularizer.hpp"
#include "forel/solver.hpp"

namespace forel {

// A sweep integrates the same game from many seeded random interior starts
// and classifies each run. Runs are independent, so the parallel path is a
// plain parallel-for over the serial per-run kernel; both orderings produce
// identical rows.
struct SweepConfig {
    int n_runs = 20;
    std::uint64_t seed_base = 1; // run i uses seed seed_base + i
    IntegratorConfig integrator;
    ClassifierParams classifier;
    double welfare_tol = 0.05;
    int threads = 0; // 0 = library default, 1 = serial reference
};

struct SweepRow {
    std::uint64_t seed = 0;
    std::vector<double> x0;
    bool ok = false;
    std::string error;
    LimitSetKind verdict = LimitSetKind::Undetermined;
    double sw_average = 0.0;
    double slack = 0.0;
    bool welfare_pass = false;
    Termination termination = Termination::Completed;
};

// Draw the run's initial profile: uniform in [0.05, 0.95]^N.
std::vector<double> sweep_initial_profile(int n_players, std::uint64_t seed);

// One run of the sweep kernel (the serial reference unit).
SweepRow sweep_run(const BinaryGame& game, const std::vector<Regularizer>& regs,
                   std::uint64_t seed, const SweepConfig& cfg);

std::vector<SweepRow> run_sweep(const BinaryGame& game,
                                const std::vector<Regularizer>& regs,
                                const SweepConfig& cfg);

// Serial loop over sweep_run, kept as the reference implementation.
std::vector<SweepRow> run_sweep_serial(const BinaryGame& game,
                                       const std::vector<Regularizer>& regs,
                                       const SweepConfig& cfg);

} // namespace forel
