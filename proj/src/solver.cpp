#include "forel/solver.hpp"

#include <algorithm>
#include <cmath>

#include "forel/errors.hpp"

namespace forel {

std::string to_string(Method m) {
    return m == Method::Rk4 ? "rk4" : "rk45";
}

std::string to_string(Termination t) {
    switch (t) {
        case Termination::Completed: return "completed";
        case Termination::ZOverflow: return "z_overflow";
        case Termination::StepFailure: return "step_failure";
    }
    return "completed";
}

namespace {

using Vec = std::vector<double>;

bool finite(const Vec& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

void record_sample(Trajectory& traj, const OdeSystem& sys, double t, const Vec& y) {
    traj.times.push_back(t);
    traj.states.push_back(y);
    const Vec x = sys.to_x ? sys.to_x(y) : y;
    traj.xs.push_back(x);
    if (sys.payoffs) {
        Vec u = sys.payoffs(x);
        double sw = 0.0;
        for (double ui : u) sw += ui;
        traj.payoffs.push_back(std::move(u));
        traj.welfare.push_back(sw);
    }
}

// Returns the index of the first coordinate beyond the cap, or -1.
int z_overflow_index(const Vec& y, double cap) {
    for (std::size_t i = 0; i < y.size(); ++i)
        if (std::abs(y[i]) > cap) return static_cast<int>(i);
    return -1;
}

// Clamp x into [0,1]; returns false when the excursion exceeds the allowance.
bool clamp_x(Vec& y, double tol) {
    for (double& v : y) {
        if (v < 0.0) {
            if (v < -tol) return false;
            v = 0.0;
        } else if (v > 1.0) {
            if (v > 1.0 + tol) return false;
            v = 1.0;
        }
    }
    return true;
}

struct Stepper {
    const OdeSystem& sys;

    Vec rk4_step(const Vec& y, double dt) const {
        const std::size_t n = y.size();
        const Vec k1 = sys.field(y);
        Vec tmp(n);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * dt * k1[i];
        const Vec k2 = sys.field(tmp);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * dt * k2[i];
        const Vec k3 = sys.field(tmp);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + dt * k3[i];
        const Vec k4 = sys.field(tmp);
        Vec out(n);
        for (std::size_t i = 0; i < n; ++i)
            out[i] = y[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        return out;
    }

    // Dormand-Prince 4(5): fills y_new and the embedded error estimate.
    void dopri_step(const Vec& y, double dt, Vec& y_new, Vec& err) const {
        static constexpr double a21 = 1.0 / 5;
        static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
        static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
        static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                                a53 = 64448.0 / 6561, a54 = -212.0 / 729;
        static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                                a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                                a65 = -5103.0 / 18656;
        static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                                b5 = -2187.0 / 6784, b6 = 11.0 / 84;
        static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600,
                                e3 = 500.0 / 1113 - 7571.0 / 16695,
                                e4 = 125.0 / 192 - 393.0 / 640,
                                e5 = -2187.0 / 6784 + 92097.0 / 339200,
                                e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

        const std::size_t n = y.size();
        Vec tmp(n);
        const Vec k1 = sys.field(y);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + dt * a21 * k1[i];
        const Vec k2 = sys.field(tmp);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + dt * (a31 * k1[i] + a32 * k2[i]);
        const Vec k3 = sys.field(tmp);
        for (std::size_t i = 0; i < n; ++i)
            tmp[i] = y[i] + dt * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        const Vec k4 = sys.field(tmp);
        for (std::size_t i = 0; i < n; ++i)
            tmp[i] = y[i] + dt * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        const Vec k5 = sys.field(tmp);
        for (std::size_t i = 0; i < n; ++i)
            tmp[i] = y[i] +
                     dt * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        const Vec k6 = sys.field(tmp);
        y_new.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            y_new[i] = y[i] + dt * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                                    b6 * k6[i]);
        const Vec k7 = sys.field(y_new);
        err.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            err[i] = dt * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                           e7 * k7[i]);
    }
};

} // namespace

Trajectory integrate(const OdeSystem& sys, const Vec& state0, const IntegratorConfig& cfg) {
    if (!(cfg.t_end > 0.0) || !(cfg.dt > 0.0) || !(cfg.z_cap > 0.0) ||
        cfg.sample_stride < 1)
        throw InvalidConfigError("integrator config requires positive t_end, dt, z_cap");
    if (static_cast<int>(state0.size()) != sys.dim) throw IndexError("state size mismatch");
    if (!finite(state0)) throw NonFiniteError("non-finite initial state");
    if (sys.coord == StateCoord::X)
        for (double v : state0)
            if (!(v >= 0.0 && v <= 1.0))
                throw InvalidGameError("x-coordinate initial state outside [0,1]");

    Trajectory traj;
    traj.coord = sys.coord;
    const Stepper stepper{sys};

    Vec y = state0;
    double t = 0.0;
    record_sample(traj, sys, t, y);

    long steps_since_sample = 0;
    const auto accept = [&](double t_new, Vec&& y_new) -> bool {
        // Returns false when integration must stop.
        if (sys.coord == StateCoord::X && !clamp_x(y_new, cfg.clamp_tol)) {
            traj.termination = Termination::StepFailure;
            return false;
        }
        y = std::move(y_new);
        t = t_new;
        if (sys.coord == StateCoord::Z) {
            if (const int k = z_overflow_index(y, cfg.z_cap); k >= 0) {
                record_sample(traj, sys, t, y);
                traj.termination = Termination::ZOverflow;
                traj.overflow_player = k;
                return false;
            }
        }
        if (++steps_since_sample >= cfg.sample_stride) {
            record_sample(traj, sys, t, y);
            steps_since_sample = 0;
        }
        return true;
    };
    const auto record_final = [&] {
        if (traj.times.back() != t) record_sample(traj, sys, t, y);
    };

    if (cfg.method == Method::Rk4) {
        const double dt = cfg.dt;
        while (t < cfg.t_end) {
            const double step = std::min(dt, cfg.t_end - t);
            Vec y_new = stepper.rk4_step(y, step);
            if (!finite(y_new)) {
                traj.termination = Termination::StepFailure;
                break;
            }
            if (!accept(t + step, std::move(y_new))) break;
        }
        record_final();
        return traj;
    }

    // Dormand-Prince with standard proportional step control.
    double dt = std::min(cfg.dt_max, 1e-3);
    Vec y_new, err;
    while (t < cfg.t_end) {
        dt = std::min(dt, cfg.t_end - t);
        stepper.dopri_step(y, dt, y_new, err);
        double err_norm = 0.0;
        bool ok = finite(y_new) && finite(err);
        if (ok) {
            for (std::size_t i = 0; i < y.size(); ++i) {
                const double sc =
                    cfg.abs_tol + cfg.rel_tol * std::max(std::abs(y[i]), std::abs(y_new[i]));
                const double q = err[i] / sc;
                err_norm += q * q;
            }
            err_norm = std::sqrt(err_norm / static_cast<double>(y.size()));
        }
        if (ok && err_norm <= 1.0) {
            if (!accept(t + dt, std::move(y_new))) break;
            const double factor =
                err_norm == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err_norm, -0.2), 0.2, 5.0);
            dt = std::min(dt * factor, cfg.dt_max);
        } else {
            const double factor =
                ok ? std::clamp(0.9 * std::pow(err_norm, -0.2), 0.1, 0.9) : 0.1;
            dt *= factor;
        }
        if (dt < cfg.dt_min) {
            traj.termination = Termination::StepFailure;
            break;
        }
    }
    record_final();
    return traj;
}

AverageReport time_average_payoffs(const BinaryGame& game, const Trajectory& traj) {
    if (traj.empty()) throw IndexError("empty trajectory");
    const int n = game.n_players;
    AverageReport rep;
    rep.per_player.assign(n, 0.0);
    const double span = traj.times.back() - traj.times.front();
    if (span <= 0.0) {
        rep.per_player = all_expected_payoffs(game, traj.xs.front());
        for (double u : rep.per_player) rep.social_welfare += u;
        return rep;
    }
    std::vector<double> prev = all_expected_payoffs(game, traj.xs.front());
    for (std::size_t j = 1; j < traj.size(); ++j) {
        const std::vector<double> cur = all_expected_payoffs(game, traj.xs[j]);
        const double w = 0.5 * (traj.times[j] - traj.times[j - 1]);
        for (int k = 0; k < n; ++k) rep.per_player[k] += w * (prev[k] + cur[k]);
        prev = cur;
    }
    for (int k = 0; k < n; ++k) {
        rep.per_player[k] /= span;
        rep.social_welfare += rep.per_player[k];
    }
    return rep;
}

RunningAverages running_average_series(const BinaryGame& game, const Trajectory& traj) {
    if (traj.empty()) throw IndexError("empty trajectory");
    const int n = game.n_players;
    RunningAverages ra;
    ra.times = traj.times;
    ra.per_player.assign(n, std::vector<double>(traj.size(), 0.0));
    ra.welfare.assign(traj.size(), 0.0);

    std::vector<double> integral(n, 0.0);
    std::vector<double> prev = all_expected_payoffs(game, traj.xs.front());
    for (int k = 0; k < n; ++k) {
        ra.per_player[k][0] = prev[k];
        ra.welfare[0] += prev[k];
    }
    for (std::size_t j = 1; j < traj.size(); ++j) {
        const std::vector<double> cur = all_expected_payoffs(game, traj.xs[j]);
        const double w = 0.5 * (traj.times[j] - traj.times[j - 1]);
        const double span = traj.times[j] - traj.times.front();
        for (int k = 0; k < n; ++k) {
            integral[k] += w * (prev[k] + cur[k]);
            ra.per_player[k][j] = span > 0.0 ? integral[k] / span : cur[k];
            ra.welfare[j] += ra.per_player[k][j];
        }
        prev = cur;
    }
    return ra;
}

} // namespace forel
