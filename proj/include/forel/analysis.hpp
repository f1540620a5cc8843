#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "forel/conditions.hpp"
#include "forel/game.hpp"
#include "forel/linalg.hpp"
#include "forel/solver.hpp"

namespace forel {

// Predecessor mix making the successor indifferent between its strategies:
// (A(1,1) - A(1,0)) / D. Returns nullopt when the solution is not interior
// (equivalently, the successor has a dominant strategy or a tie). Throws
// NonGenericError when D == 0.
std::optional<double> equalizing_strategy(const PayoffMatrix& A);

// True iff the zero-sum subgame (predecessor minimizes the successor's
// payoff) has a fully mixed equilibrium; under this condition the equalizing
// payoff coincides with the successor's game-theoretic minimax value.
bool zero_sum_interior(const PayoffMatrix& A);

// Successor payoff at the equalizing predecessor mix.
double minimax_value(const PayoffMatrix& A);

// Profile of equalizing strategies for a single-cycle game; each player's
// coordinate equalizes its successor. Nullopt when some edge admits a
// dominant strategy. Throws NotCyclicError when the graph is not one cycle.
std::optional<MixedProfile> interior_nash(const BinaryGame& game);

// Sum of per-edge minimax values (players without a predecessor contribute
// their constant payoff 0).
double welfare_bound(const BinaryGame& game);

using FieldFn = std::function<std::vector<double>(const std::vector<double>&)>;

// Central finite-difference Jacobian with per-coordinate step h*max(1,|x_j|).
Matrix jacobian(const FieldFn& field, const std::vector<double>& state, double h = 1e-6);

// Closed-form Jacobian of replicator_field_x for one-predecessor games;
// kept as an independent check on the finite-difference path.
Matrix replicator_x_jacobian_analytic(const BinaryGame& game, const MixedProfile& x);

struct StabilityCounts {
    int stable = 0;
    int unstable = 0;
    int center = 0;
};

StabilityCounts stability_classify(const std::vector<std::complex<double>>& eigs,
                                   double tol = 1e-6);

enum class LimitSetKind { Equilibrium, Periodic, HeteroclinicCycle, BoundaryFixed, Undetermined };

std::string to_string(LimitSetKind k);

struct CornerVisit {
    std::vector<int> corner;
    double t_enter = 0.0;
    double dwell = 0.0;
    bool open = false; // still inside the corner ball at the end of the run
};

struct LimitSetVerdict {
    LimitSetKind kind = LimitSetKind::Undetermined;
    std::vector<double> point;               // Equilibrium / BoundaryFixed location (x coords)
    double period = 0.0;                     // Periodic
    std::vector<std::vector<int>> corner_sequence; // HeteroclinicCycle, one lap
    // diagnostics
    double field_sup = 0.0;
    double drift = 0.0;
    double min_return_distance = 0.0;
    std::vector<CornerVisit> visits;
};

struct ClassifierParams {
    double transient_fraction = 0.5;
    double equilibrium_tol = 1e-8;
    double drift_tol = 1e-8;
    double boundary_x_tol = 1e-6;
    double return_tol = 1e-4;
    double min_period = 0.5;
    double period_agreement = 0.01; // relative spread between window estimates
    double corner_eps = 1e-2;
    // Minimum dwell growth when only two corner visits are observable before
    // the run saturates at a corner (strong heteroclinic attraction exhausts
    // double precision after very few laps).
    double dwell_growth_min = 1.5;
    // Corner-ball crossings shorter than this are grazes, not visits.
    double dwell_graze = 0.25;
};

// Classifies the tail of a trajectory into the Poincare-Bendixson taxonomy.
// Undetermined is the fallback, never an error.
LimitSetVerdict classify_limit_set(const Trajectory& traj, const OdeSystem& sys,
                                   const ClassifierParams& prm = {});

struct WelfareVerdict {
    double average_sw = 0.0;
    double bound = 0.0;
    double slack = 0.0;
    bool pass = false;
};

// Time-average social welfare against the sum-of-minimax bound.
WelfareVerdict check_welfare_theorem(const BinaryGame& game, const Trajectory& traj,
                                     double tol);

struct KlDiagnostic {
    std::vector<double> times;
    std::vector<double> dkl_dt;   // finite-difference d/dt KL(p || x(t))
    std::vector<double> sw_diff;  // SW(x(t)) - SW(p)
    std::vector<double> residual; // dkl_dt - sw_diff
};

// Report-only diagnostic for the draft KL identity; asserts nothing.
KlDiagnostic kl_derivative_diagnostic(const BinaryGame& game, const Trajectory& traj,
                                      const MixedProfile& p);

} // namespace forel
