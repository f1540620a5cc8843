#include "forel/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "forel/dynamics.hpp"
#include "forel/errors.hpp"
#include "forel/graph.hpp"

namespace forel {

std::optional<double> equalizing_strategy(const PayoffMatrix& A) {
    const double d = mixed_difference(A);
    if (d == 0.0) throw NonGenericError("mixed difference vanishes");
    const double x_hat = (A(1, 1) - A(1, 0)) / d;
    if (x_hat > 0.0 && x_hat < 1.0) return x_hat;
    return std::nullopt;
}

bool zero_sum_interior(const PayoffMatrix& A) {
    const double d0 = A(0, 0) - A(0, 1);
    const double d1 = A(1, 0) - A(1, 1);
    const double m0 = A(0, 0) - A(1, 0);
    const double m1 = A(0, 1) - A(1, 1);
    return d0 * d1 < 0.0 && m0 * m1 < 0.0;
}

double minimax_value(const PayoffMatrix& A) {
    const auto x_hat = equalizing_strategy(A);
    if (!x_hat) throw DominantStrategyError("no interior equalizing strategy");
    return *x_hat * A(0, 0) + (1.0 - *x_hat) * A(1, 0);
}

std::optional<MixedProfile> interior_nash(const BinaryGame& game) {
    const GraphDecomposition dec = root_decomposition(game_graph(game));
    if (dec.kind != RootKind::Cycle ||
        static_cast<int>(dec.cycle.size()) != game.n_players)
        throw NotCyclicError("interior_nash requires a single-cycle game");
    MixedProfile x(game.n_players, 0.0);
    for (const Edge& e : game.edges) {
        const auto x_hat = equalizing_strategy(e.payoff);
        if (!x_hat) return std::nullopt;
        x[e.from] = *x_hat; // e.from equalizes its successor e.to
    }
    return x;
}

double welfare_bound(const BinaryGame& game) {
    double bound = 0.0;
    for (const Edge& e : game.edges) bound += minimax_value(e.payoff);
    return bound;
}

Matrix jacobian(const FieldFn& field, const std::vector<double>& state, double h) {
    const int n = static_cast<int>(state.size());
    Matrix j(n, n);
    std::vector<double> plus = state, minus = state;
    for (int col = 0; col < n; ++col) {
        const double step = h * std::fmax(1.0, std::abs(state[col]));
        plus[col] = state[col] + step;
        minus[col] = state[col] - step;
        const std::vector<double> fp = field(plus);
        const std::vector<double> fm = field(minus);
        for (int row = 0; row < n; ++row) {
            j(row, col) = (fp[row] - fm[row]) / (2.0 * step);
            if (!std::isfinite(j(row, col)))
                throw NonFiniteError("non-finite Jacobian entry");
        }
        plus[col] = state[col];
        minus[col] = state[col];
    }
    return j;
}

Matrix replicator_x_jacobian_analytic(const BinaryGame& game, const MixedProfile& x) {
    const PredecessorTable t = predecessor_table(game);
    const int n = game.n_players;
    Matrix j(n, n);
    for (int i = 0; i < n; ++i) {
        j(i, i) = (1.0 - 2.0 * x[i]) * score_difference(game, t, x, i);
        if (t.pred[i] >= 0)
            j(i, t.pred[i]) = x[i] * (1.0 - x[i]) * mixed_difference(t.payoff[i]);
    }
    return j;
}

StabilityCounts stability_classify(const std::vector<std::complex<double>>& eigs,
                                   double tol) {
    StabilityCounts c;
    for (const auto& e : eigs) {
        if (std::abs(e.real()) <= tol)
            ++c.center;
        else if (e.real() < 0.0)
            ++c.stable;
        else
            ++c.unstable;
    }
    return c;
}

std::string to_string(LimitSetKind k) {
    switch (k) {
        case LimitSetKind::Equilibrium: return "equilibrium";
        case LimitSetKind::Periodic: return "periodic";
        case LimitSetKind::HeteroclinicCycle: return "heteroclinic_cycle";
        case LimitSetKind::BoundaryFixed: return "boundary_fixed";
        case LimitSetKind::Undetermined: return "undetermined";
    }
    return "undetermined";
}

namespace {

using Vec = std::vector<double>;

double dist_inf(const Vec& a, const Vec& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::fmax(d, std::abs(a[i] - b[i]));
    return d;
}

double dist_2(const Vec& a, const Vec& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(d);
}

std::vector<int> nearest_corner(const Vec& x) {
    std::vector<int> c(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) c[i] = x[i] >= 0.5 ? 1 : 0;
    return c;
}

double corner_dist(const Vec& x, const std::vector<int>& c) {
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        d = std::fmax(d, std::abs(x[i] - static_cast<double>(c[i])));
    return d;
}

// Minimum of ||x(t) - ref|| between two samples, found by re-integrating the
// bracket with a fine fixed step. Returns {distance, time of the minimum}.
std::pair<double, double> refine_return(const OdeSystem& sys, const Trajectory& traj,
                                        std::size_t j, const Vec& x_ref) {
    const std::size_t lo = j > 0 ? j - 1 : j;
    const std::size_t hi = std::min(j + 1, traj.size() - 1);
    double best_d = dist_2(traj.xs[j], x_ref);
    double best_t = traj.times[j];
    if (hi <= lo) return {best_d, best_t};

    Vec y = traj.states[lo];
    double t = traj.times[lo];
    const int substeps = 2000;
    const double dt = (traj.times[hi] - traj.times[lo]) / substeps;
    if (dt <= 0.0) return {best_d, best_t};
    for (int s = 0; s < substeps; ++s) {
        // one classic RK4 step
        const Vec k1 = sys.field(y);
        Vec tmp(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + 0.5 * dt * k1[i];
        const Vec k2 = sys.field(tmp);
        for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + 0.5 * dt * k2[i];
        const Vec k3 = sys.field(tmp);
        for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + dt * k3[i];
        const Vec k4 = sys.field(tmp);
        for (std::size_t i = 0; i < y.size(); ++i)
            y[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        t += dt;
        const Vec x = sys.to_x ? sys.to_x(y) : y;
        const double d = dist_2(x, x_ref);
        if (d < best_d) {
            best_d = d;
            best_t = t;
        }
    }
    return {best_d, best_t};
}

// First near-return of the tail to the reference sample: local minima of the
// sampled distance are refined in time order until one passes the tolerance,
// so the estimate picks up the fundamental period rather than a multiple.
// Returns {refined distance, period}; when no local minimum passes, the pair
// carries the best sampled distance and period 0.
std::optional<std::pair<double, double>> return_estimate(const OdeSystem& sys,
                                                         const Trajectory& traj,
                                                         std::size_t ref,
                                                         std::size_t tail_end,
                                                         double min_period,
                                                         double return_tol) {
    const Vec& x_ref = traj.xs[ref];
    const double t_ref = traj.times[ref];
    if (ref + 2 >= tail_end) return std::nullopt;
    std::vector<double> d(tail_end - ref);
    for (std::size_t j = ref; j < tail_end; ++j) d[j - ref] = dist_2(traj.xs[j], x_ref);

    double best_seen = -1.0;
    int refinements = 0;
    for (std::size_t j = ref + 1; j + 1 < tail_end && refinements < 16; ++j) {
        if (traj.times[j] - t_ref < min_period) continue;
        const double here = d[j - ref];
        if (here > d[j - ref - 1] || here > d[j - ref + 1]) continue; // not a local min
        ++refinements;
        const auto [dist, t_min] = refine_return(sys, traj, j, x_ref);
        if (best_seen < 0.0 || dist < best_seen) best_seen = dist;
        if (dist < return_tol && t_min - t_ref >= min_period)
            return std::make_pair(dist, t_min - t_ref);
    }
    if (best_seen < 0.0) return std::nullopt;
    return std::make_pair(best_seen, 0.0);
}

std::vector<CornerVisit> corner_visits(const Trajectory& traj, std::size_t tail_begin,
                                       double eps) {
    std::vector<CornerVisit> visits;
    bool inside = false;
    for (std::size_t j = tail_begin; j < traj.size(); ++j) {
        const auto corner = nearest_corner(traj.xs[j]);
        const bool now_inside = corner_dist(traj.xs[j], corner) < eps;
        if (now_inside && inside && corner == visits.back().corner) {
            visits.back().dwell = traj.times[j] - visits.back().t_enter;
            continue;
        }
        if (now_inside) {
            visits.push_back({corner, traj.times[j], 0.0, false});
            inside = true;
        } else {
            inside = false;
        }
    }
    if (!visits.empty() && inside) visits.back().open = true;
    return visits;
}

// Every coordinate flows back into the corner under the field.
bool corner_attracting(const OdeSystem& sys, const std::vector<int>& corner) {
    Vec x(corner.size());
    for (std::size_t i = 0; i < corner.size(); ++i)
        x[i] = corner[i] == 1 ? 1.0 - 1e-6 : 1e-6;
    const Vec f = sys.field(x);
    for (std::size_t i = 0; i < corner.size(); ++i) {
        const bool escaping = corner[i] == 1 ? f[i] < 0.0 : f[i] > 0.0;
        if (escaping) return false;
    }
    return true;
}

// Repeating multi-corner visits with growing dwell times. Strong attraction
// saturates double precision after a couple of laps (the orbit then sits
// frozen at a saddle corner), so two visits with sharply growing dwell and a
// frozen open tail count as the same signature.
// Drop grazing transits through corner balls and merge the resulting
// consecutive same-corner visits into one dwell.
std::vector<CornerVisit> significant_visits(const std::vector<CornerVisit>& raw,
                                            const ClassifierParams& prm) {
    std::vector<CornerVisit> visits;
    for (const CornerVisit& visit : raw) {
        if (!visit.open && visit.dwell < prm.dwell_graze) continue;
        if (!visits.empty() && visits.back().corner == visit.corner) {
            visits.back().dwell = visit.t_enter + visit.dwell - visits.back().t_enter;
            visits.back().open = visit.open;
            continue;
        }
        visits.push_back(visit);
    }
    return visits;
}

// Saddle dwell rates alternate around the cycle, so dwell growth shows up
// between visits to the same corner one lap apart, not between consecutive
// visits. When attraction is so strong that the run freezes before one full
// lap repeats, the signature is a final open visit dwarfing every earlier
// dwell while sitting at a non-attracting corner.
bool heteroclinic_signature(const std::vector<CornerVisit>& visits, const Trajectory& traj,
                            const OdeSystem& sys, const ClassifierParams& prm) {
    std::set<std::vector<int>> distinct;
    for (const auto& visit : visits) distinct.insert(visit.corner);
    const std::size_t m = visits.size();
    if (m < 2 || distinct.size() < 2) return false;
    for (std::size_t i = 1; i < m; ++i)
        if (visits[i].corner == visits[i - 1].corner) return false;

    const std::size_t k = distinct.size();
    // visit sequence must repeat with the lap length
    for (std::size_t i = 0; i + k < m; ++i)
        if (visits[i].corner != visits[i + k].corner) return false;

    const auto dwell = [&](std::size_t i) {
        return visits[i].open ? traj.times.back() - visits[i].t_enter : visits[i].dwell;
    };
    const std::size_t n_closed = visits.back().open ? m - 1 : m;
    if (n_closed > k) {
        // lap-over-lap growth on the last few same-corner pairs
        std::size_t checked = 0;
        for (std::size_t j = n_closed; j-- > k && checked < 3; ++checked)
            if (visits[j].dwell <= visits[j - k].dwell) return false;
        return true;
    }
    // truncated before one full repeated lap: frozen-heteroclinic case
    if (!visits.back().open) return false;
    double longest_before = 0.0;
    for (std::size_t i = 0; i + 1 < m; ++i)
        longest_before = std::fmax(longest_before, dwell(i));
    if (dwell(m - 1) < prm.dwell_growth_min * longest_before) return false;
    return traj.coord == StateCoord::Z || !corner_attracting(sys, visits.back().corner);
}

} // namespace

LimitSetVerdict classify_limit_set(const Trajectory& traj, const OdeSystem& sys,
                                   const ClassifierParams& prm) {
    LimitSetVerdict v;
    if (traj.empty()) return v;

    // The corner-visit history spans the whole run: dwell growth is the
    // heteroclinic signature and largely happens before the tail.
    v.visits = significant_visits(corner_visits(traj, 0, prm.corner_eps), prm);
    const bool heteroclinic = heteroclinic_signature(v.visits, traj, sys, prm);
    const auto hetero_verdict = [&] {
        v.kind = LimitSetKind::HeteroclinicCycle;
        std::set<std::vector<int>> distinct;
        for (const auto& visit : v.visits) distinct.insert(visit.corner);
        const std::size_t lap = std::min(distinct.size(), v.visits.size());
        for (std::size_t i = 0; i < lap; ++i) v.corner_sequence.push_back(v.visits[i].corner);
        return v;
    };

    if (traj.termination == Termination::ZOverflow) {
        if (heteroclinic) return hetero_verdict();
        v.kind = LimitSetKind::BoundaryFixed;
        const auto corner = nearest_corner(traj.xs.back());
        v.point.assign(corner.begin(), corner.end());
        return v;
    }

    const double t0 = traj.times.front();
    const double t_cut = t0 + prm.transient_fraction * (traj.times.back() - t0);
    std::size_t tail_begin = 0;
    while (tail_begin + 1 < traj.size() && traj.times[tail_begin] < t_cut) ++tail_begin;
    const std::size_t m = traj.size();
    if (m - tail_begin < 3) return v;

    for (std::size_t j = tail_begin; j < m; ++j) {
        const Vec f = sys.field(traj.states[j]);
        double norm = 0.0;
        for (double fi : f) norm = std::fmax(norm, std::abs(fi));
        v.field_sup = std::fmax(v.field_sup, norm);
        v.drift = std::fmax(v.drift, dist_inf(traj.states[j], traj.states.back()));
    }

    // Fixed boundary point: the entire tail sits at one corner. A frozen
    // multi-corner history still reads as a heteroclinic approach.
    {
        const auto corner = nearest_corner(traj.xs.back());
        bool at_corner = v.field_sup < prm.equilibrium_tol;
        for (std::size_t j = tail_begin; at_corner && j < m; ++j)
            at_corner = corner_dist(traj.xs[j], corner) < prm.boundary_x_tol;
        if (at_corner) {
            if (heteroclinic) return hetero_verdict();
            v.kind = LimitSetKind::BoundaryFixed;
            v.point.assign(corner.begin(), corner.end());
            return v;
        }
    }

    if (v.field_sup < prm.equilibrium_tol && v.drift < prm.drift_tol) {
        v.kind = LimitSetKind::Equilibrium;
        v.point = traj.xs.back();
        return v;
    }

    // Periodic: near-return of the tail with a period estimate that is stable
    // across two reference points.
    {
        const auto est1 =
            return_estimate(sys, traj, tail_begin, m, prm.min_period, prm.return_tol);
        if (est1) {
            v.min_return_distance = est1->first;
            if (est1->first < prm.return_tol && est1->second > 0.0) {
                std::size_t ref2 = tail_begin;
                const double t_mid = traj.times[tail_begin] +
                                     0.5 * (traj.times.back() - traj.times[tail_begin]);
                while (ref2 + 1 < m && traj.times[ref2] < t_mid) ++ref2;
                const auto est2 =
                    return_estimate(sys, traj, ref2, m, prm.min_period, prm.return_tol);
                if (est2 && est2->first < prm.return_tol && est2->second > 0.0 &&
                    std::abs(est1->second - est2->second) <=
                        prm.period_agreement * est1->second) {
                    v.kind = LimitSetKind::Periodic;
                    v.period = est1->second;
                    v.point = traj.xs[tail_begin];
                    return v;
                }
            }
        }
    }

    if (heteroclinic) return hetero_verdict();

    return v;
}

WelfareVerdict check_welfare_theorem(const BinaryGame& game, const Trajectory& traj,
                                     double tol) {
    WelfareVerdict v;
    v.average_sw = time_average_payoffs(game, traj).social_welfare;
    v.bound = welfare_bound(game);
    v.slack = v.average_sw - v.bound;
    v.pass = v.average_sw >= v.bound - tol;
    return v;
}

KlDiagnostic kl_derivative_diagnostic(const BinaryGame& game, const Trajectory& traj,
                                      const MixedProfile& p) {
    if (traj.size() < 3) throw IndexError("trajectory too short for the KL diagnostic");
    const double sw_p = social_welfare(game, p);
    std::vector<double> kl(traj.size());
    for (std::size_t j = 0; j < traj.size(); ++j) kl[j] = kl_divergence(p, traj.xs[j]);
    KlDiagnostic d;
    for (std::size_t j = 1; j + 1 < traj.size(); ++j) {
        const double dt = traj.times[j + 1] - traj.times[j - 1];
        if (dt <= 0.0) continue;
        d.times.push_back(traj.times[j]);
        d.dkl_dt.push_back((kl[j + 1] - kl[j - 1]) / dt);
        d.sw_diff.push_back(social_welfare(game, traj.xs[j]) - sw_p);
        d.residual.push_back(d.dkl_dt.back() - d.sw_diff.back());
    }
    return d;
}

} // namespace forel
