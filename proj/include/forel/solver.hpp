#pragma once

#include <functional>
#include <string>
#include <vector>

#include "forel/game.hpp"

namespace forel {

enum class Method { Rk4, Rk45 };
enum class StateCoord { Z, X };
enum class Termination { Completed, ZOverflow, StepFailure };

std::string to_string(Method m);
std::string to_string(Termination t);

struct IntegratorConfig {
    Method method = Method::Rk45;
    double dt = 1e-2;        // fixed step for Rk4
    double abs_tol = 1e-9;   // Rk45 error control
    double rel_tol = 1e-9;
    double t_end = 100.0;
    int sample_stride = 1;   // record every n-th accepted step
    double z_cap = 700.0;    // |z| beyond this counts as boundary convergence
    double dt_max = 1.0;
    double dt_min = 1e-12;
    double clamp_tol = 1e-12; // max per-step clamp for x-coordinate drift
};

// An autonomous ODE with enough context to derive strategy profiles and
// payoffs along the way. `to_x` may be empty for x-coordinate systems, and
// `payoffs` may be empty when no game is attached.
struct OdeSystem {
    int dim = 0;
    StateCoord coord = StateCoord::X;
    std::function<std::vector<double>(const std::vector<double>&)> field;
    std::function<std::vector<double>(const std::vector<double>&)> to_x;
    std::function<std::vector<double>(const std::vector<double>&)> payoffs;
};

struct Trajectory {
    StateCoord coord = StateCoord::X;
    std::vector<double> times;
    std::vector<std::vector<double>> states; // integration coordinate
    std::vector<std::vector<double>> xs;     // derived strategy profiles
    std::vector<std::vector<double>> payoffs;
    std::vector<double> welfare;
    Termination termination = Termination::Completed;
    int overflow_player = -1;

    std::size_t size() const { return times.size(); }
    bool empty() const { return times.empty(); }
};

// Explicit Runge-Kutta integration (classic RK4 or Dormand-Prince 4(5)).
// Throws NonFiniteError for a bad initial state; runtime problems terminate
// the trajectory with a non-Completed reason instead of throwing.
Trajectory integrate(const OdeSystem& sys, const std::vector<double>& state0,
                     const IntegratorConfig& cfg);

struct AverageReport {
    std::vector<double> per_player;
    double social_welfare = 0.0;
};

// Trapezoidal time averages of the per-player payoffs over the sampled span.
AverageReport time_average_payoffs(const BinaryGame& game, const Trajectory& traj);

struct RunningAverages {
    std::vector<double> times;
    std::vector<std::vector<double>> per_player; // one series per player
    std::vector<double> welfare;
};

RunningAverages running_average_series(const BinaryGame& game, const Trajectory& traj);

} // namespace forel
