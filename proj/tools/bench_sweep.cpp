// Benchmark: serial reference sweep vs the OpenMP-parallel path on the
// built-in demo games. Both produce identical rows; this only times them.

#include <chrono>
#include <cstdio>

#include "forel/demos.hpp"
#include "forel/dynamics.hpp"
#include "forel/sweep.hpp"

using namespace forel;

namespace {

double run_ms(const BinaryGame& game, const SweepConfig& cfg) {
    const auto regs = entropy_regularizers(game.n_players);
    const auto start = std::chrono::steady_clock::now();
    const auto rows = run_sweep(game, regs, cfg);
    const auto stop = std::chrono::steady_clock::now();
    double sink = 0.0;
    for (const auto& row : rows) sink += row.sw_average;
    if (sink == 12345.6789) std::puts(""); // keep the result live
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

} // namespace

int main(int argc, char** argv) {
    int runs = 24;
    if (argc > 1) runs = std::atoi(argv[1]);

    struct Case {
        const char* name;
        BinaryGame game;
        double t_end;
    };
    const Case cases[] = {
        {"mmp4", mmp4_game(), 500.0},
        {"asym(3,8)", asym_pennies_game(3, 8.0), 300.0},
        {"asym(5,3)", asym_pennies_game(5, 3.0), 300.0},
    };

    std::printf("%-10s %6s %12s %12s %8s\n", "game", "runs", "serial[ms]", "openmp[ms]",
                "speedup");
    for (const Case& c : cases) {
        SweepConfig cfg;
        cfg.n_runs = runs;
        cfg.integrator.t_end = c.t_end;
        cfg.threads = 1;
        const double serial = run_ms(c.game, cfg);
        cfg.threads = 0; // library default: all cores
        const double parallel = run_ms(c.game, cfg);
        std::printf("%-10s %6d %12.1f %12.1f %7.2fx\n", c.name, runs, serial, parallel,
                    serial / parallel);
    }
    return 0;
}
