#include <doctest.h>

#include <cmath>
#include <limits>

#include "forel/demos.hpp"
#include "forel/dynamics.hpp"
#include "forel/errors.hpp"
#include "forel/rng.hpp"
#include "forel/solver.hpp"
#include "forel/sweep.hpp"
#include "forel/systems.hpp"

using namespace forel;

namespace {

// two-player chain with constant score drifts on the root
BinaryGame drift_game(double c) {
    BinaryGame g;
    g.n_players = 1;
    g.drift = {c};
    return g;
}

BinaryGame ones_game(int n) {
    BinaryGame g;
    g.n_players = n;
    const PayoffMatrix ones{1.0, 1.0, 1.0, 1.0};
    for (int i = 0; i < n; ++i) g.edges.push_back({(i + n - 1) % n, i, ones});
    return g;
}

double sup_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::fmax(d, std::abs(a[i] - b[i]));
    return d;
}

} // namespace

TEST_CASE("constant fields integrate exactly") {
    const BinaryGame game = drift_game(0.375);
    const OdeSystem sys = make_forel_system(game, entropy_regularizers(1));
    for (Method method : {Method::Rk4, Method::Rk45}) {
        IntegratorConfig cfg;
        cfg.method = method;
        cfg.dt = 0.1;
        cfg.t_end = 10.0;
        const Trajectory traj = integrate(sys, {1.5}, cfg);
        CHECK(traj.termination == Termination::Completed);
        CHECK(traj.times.back() == doctest::Approx(10.0).epsilon(1e-14));
        CHECK(std::abs(traj.states.back()[0] - (1.5 + 10.0 * 0.375)) < 1e-12);
    }
}

TEST_CASE("mmp4 plane invariance") {
    const OdeSystem sys = make_replicator_x_system(mmp4_game());
    IntegratorConfig cfg;
    cfg.t_end = 100.0;
    const Trajectory traj = integrate(sys, {0.3, 0.6, 0.3, 0.6}, cfg);
    REQUIRE(traj.termination == Termination::Completed);
    double worst = 0.0;
    for (const auto& x : traj.xs) {
        worst = std::fmax(worst, std::abs(x[0] - x[2]));
        worst = std::fmax(worst, std::abs(x[1] - x[3]));
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("classic RK4 shows fourth-order convergence") {
    const OdeSystem sys = make_replicator_x_system(mmp4_game());
    const std::vector<double> x0{0.3, 0.6, 0.3, 0.6};
    const auto final_state = [&](double dt) {
        IntegratorConfig cfg;
        cfg.method = Method::Rk4;
        cfg.dt = dt;
        cfg.t_end = 10.0;
        cfg.sample_stride = 1 << 20; // endpoints only
        return integrate(sys, x0, cfg).states.back();
    };
    const auto reference = final_state(0.04 / 64.0);
    const double err_coarse = sup_diff(final_state(0.04), reference);
    const double err_fine = sup_diff(final_state(0.02), reference);
    const double ratio = err_coarse / err_fine;
    CHECK(ratio > 12.0);
    CHECK(ratio < 20.0);
}

TEST_CASE("adaptive and fixed-step integrators agree") {
    for (const BinaryGame& game : {mmp4_game(), asym_pennies_game(5, 3.0)}) {
        const OdeSystem sys = make_replicator_x_system(game);
        std::vector<double> x0(game.n_players);
        for (int i = 0; i < game.n_players; ++i) x0[i] = 0.35 + 0.05 * i;
        IntegratorConfig fine;
        fine.method = Method::Rk4;
        fine.dt = 1e-3;
        fine.t_end = 10.0;
        IntegratorConfig adaptive;
        adaptive.t_end = 10.0;
        const auto a = integrate(sys, x0, fine).states.back();
        const auto b = integrate(sys, x0, adaptive).states.back();
        CHECK(sup_diff(a, b) < 1e-5);
    }
}

TEST_CASE("z overflow terminates as boundary convergence") {
    const BinaryGame game = drift_game(100.0);
    const OdeSystem sys = make_forel_system(game, entropy_regularizers(1));
    IntegratorConfig cfg;
    cfg.t_end = 100.0;
    const Trajectory traj = integrate(sys, {0.0}, cfg);
    CHECK(traj.termination == Termination::ZOverflow);
    CHECK(traj.overflow_player == 0);
    CHECK(std::abs(traj.states.back()[0]) > 700.0);
    // the saturated strategy sits against the boundary
    const double x = traj.xs.back()[0];
    CHECK(std::fmin(1.0 - x, x) < 1e-300);
    CHECK(traj.times.back() < 100.0);
}

TEST_CASE("x-coordinate clamp tolerance") {
    // a field pushing straight through the boundary must fail loudly
    OdeSystem sys;
    sys.dim = 1;
    sys.coord = StateCoord::X;
    sys.field = [](const std::vector<double>& x) {
        return std::vector<double>{-1.0 + 0.0 * x[0]};
    };
    IntegratorConfig cfg;
    cfg.method = Method::Rk4;
    cfg.dt = 0.125;
    cfg.t_end = 10.0;
    const Trajectory traj = integrate(sys, {0.5}, cfg);
    CHECK(traj.termination == Termination::StepFailure);
    CHECK(traj.times.back() < 1.0);

    // replicator fields only graze the boundary and clamp within tolerance
    const OdeSystem repl = make_replicator_x_system(mmp4_game());
    IntegratorConfig long_run;
    long_run.t_end = 50.0;
    const Trajectory ok = integrate(repl, {0.1, 0.2, 0.8, 0.9}, long_run);
    CHECK(ok.termination == Termination::Completed);
    for (const auto& x : ok.xs)
        for (double xi : x) {
            CHECK(xi >= 0.0);
            CHECK(xi <= 1.0);
        }
}

TEST_CASE("initial state validation") {
    const OdeSystem sys = make_replicator_x_system(mmp4_game());
    IntegratorConfig cfg;
    CHECK_THROWS_AS(integrate(sys, {0.5, 0.5, 0.5}, cfg), IndexError);
    CHECK_THROWS_AS(
        integrate(sys, {0.5, 0.5, 0.5, std::numeric_limits<double>::quiet_NaN()}, cfg),
        NonFiniteError);
    CHECK_THROWS_AS(integrate(sys, {0.5, 0.5, 0.5, 1.5}, cfg), InvalidGameError);
}

TEST_CASE("time_average_payoffs") {
    SUBCASE("stationary at the asymmetric equalizer") {
        const double p = 3.0;
        const BinaryGame game = asym_pennies_game(3, p);
        const OdeSystem sys = make_replicator_x_system(game);
        IntegratorConfig cfg;
        cfg.t_end = 5.0;
        const Trajectory traj = integrate(sys, std::vector<double>(3, p / (p + 1.0)), cfg);
        const AverageReport avg = time_average_payoffs(game, traj);
        for (double u : avg.per_player) CHECK(std::abs(u - 0.75) < 1e-12);
        CHECK(std::abs(avg.social_welfare - 2.25) < 1e-12);
    }
    SUBCASE("stationary at the mmp4 mixed equilibrium") {
        const BinaryGame game = mmp4_game();
        const OdeSystem sys = make_replicator_x_system(game);
        IntegratorConfig cfg;
        cfg.t_end = 5.0;
        const Trajectory traj = integrate(sys, std::vector<double>(4, 0.5), cfg);
        const AverageReport avg = time_average_payoffs(game, traj);
        for (double u : avg.per_player) CHECK(std::abs(u) < 1e-12);
    }
    SUBCASE("constant payoffs average to the constant") {
        const BinaryGame game = ones_game(3);
        const OdeSystem sys = make_replicator_x_system(game);
        IntegratorConfig cfg;
        cfg.t_end = 20.0;
        const Trajectory traj = integrate(sys, {0.2, 0.9, 0.4}, cfg);
        const AverageReport avg = time_average_payoffs(game, traj);
        for (double u : avg.per_player) CHECK(std::abs(u - 1.0) < 1e-12);
    }
    SUBCASE("empty trajectory is an error") {
        CHECK_THROWS_AS(time_average_payoffs(mmp4_game(), Trajectory{}), IndexError);
    }
}

TEST_CASE("running averages") {
    const BinaryGame game = mmp4_game();
    const OdeSystem sys = make_replicator_x_system(game);
    IntegratorConfig cfg;
    cfg.t_end = 50.0;
    Rng rng(13);
    std::vector<double> x0(4);
    for (double& xi : x0) xi = rng.uniform(0.05, 0.95);
    const Trajectory traj = integrate(sys, x0, cfg);
    const RunningAverages ra = running_average_series(game, traj);
    const AverageReport avg = time_average_payoffs(game, traj);

    CHECK(ra.welfare.back() == doctest::Approx(avg.social_welfare).epsilon(1e-12));
    for (int k = 0; k < 4; ++k)
        CHECK(ra.per_player[k].back() == doctest::Approx(avg.per_player[k]).epsilon(1e-12));

    // prefix averages stay inside the range of the instantaneous welfare
    double lo = 1e300, hi = -1e300;
    for (std::size_t j = 0; j < traj.size(); ++j) {
        lo = std::fmin(lo, traj.welfare[j]);
        hi = std::fmax(hi, traj.welfare[j]);
    }
    for (double w : ra.welfare) {
        CHECK(w >= lo - 1e-9);
        CHECK(w <= hi + 1e-9);
    }
}

TEST_CASE("running welfare of a generic mmp4 orbit settles near the maximum") {
    const BinaryGame game = mmp4_game();
    const OdeSystem sys = make_replicator_x_system(game);
    IntegratorConfig cfg;
    cfg.t_end = 1000.0;
    const Trajectory traj = integrate(sys, sweep_initial_profile(4, 21), cfg);
    const RunningAverages ra = running_average_series(game, traj);
    // once the running average enters [3.8, 4.05] it stays there
    std::size_t entry = ra.welfare.size();
    for (std::size_t j = 0; j < ra.welfare.size(); ++j)
        if (ra.welfare[j] >= 3.8 && ra.welfare[j] <= 4.05) {
            entry = j;
            break;
        }
    REQUIRE(entry < ra.welfare.size());
    for (std::size_t j = entry; j < ra.welfare.size(); ++j) {
        CHECK(ra.welfare[j] >= 3.8);
        CHECK(ra.welfare[j] <= 4.05);
    }
}

TEST_CASE("near-return on the mmp4 center plane") {
    const OdeSystem sys = make_replicator_x_system(mmp4_game());
    IntegratorConfig cfg;
    cfg.t_end = 100.0;
    const Trajectory traj = integrate(sys, {0.3, 0.6, 0.3, 0.6}, cfg);
    // pick the sample at half time and find the closest later sample
    std::size_t ref = 0;
    while (traj.times[ref] < 50.0) ++ref;
    double best = 1e300;
    for (std::size_t j = ref + 1; j < traj.size(); ++j) {
        if (traj.times[j] - traj.times[ref] < 1.0) continue;
        double d = 0.0;
        for (int i = 0; i < 4; ++i)
            d += (traj.xs[j][i] - traj.xs[ref][i]) * (traj.xs[j][i] - traj.xs[ref][i]);
        best = std::fmin(best, std::sqrt(d));
    }
    // sampled distance already comes close; the classifier refines further
    CHECK(best < 2e-2);
}
