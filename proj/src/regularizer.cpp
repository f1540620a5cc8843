#include "forel/regularizer.hpp"

#include <cmath>

#include "forel/errors.hpp"

namespace forel {

double logistic(double z) {
    if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
    const double e = std::exp(z);
    return e / (1.0 + e);
}

Regularizer Regularizer::entropy() {
    return Regularizer(
        "entropy",
        [](double x) { return x * std::log(x) + (1.0 - x) * std::log(1.0 - x); },
        [](double x) { return std::log(x) - std::log(1.0 - x); },
        [](double x) { return 1.0 / (x * (1.0 - x)); }, true);
}

Regularizer Regularizer::log_barrier() {
    return Regularizer(
        "log_barrier", [](double x) { return -std::log(x) - std::log(1.0 - x); },
        [](double x) { return 1.0 / (1.0 - x) - 1.0 / x; },
        [](double x) { return 1.0 / (x * x) + 1.0 / ((1.0 - x) * (1.0 - x)); }, false);
}

Regularizer Regularizer::custom(std::string name, Fn h, Fn dh, Fn d2h) {
    return Regularizer(std::move(name), std::move(h), std::move(dh), std::move(d2h), false);
}

Regularizer Regularizer::by_name(const std::string& name) {
    if (name == "entropy") return entropy();
    if (name == "log_barrier") return log_barrier();
    throw ParseError("unknown regularizer: " + name);
}

void check_regularizer(const Regularizer& r) {
    const double lo = 1e-12, hi = 1.0 - 1e-12;
    if (!(r.dh(lo) < 0.0) || !(r.dh(hi) > 0.0))
        throw SolverFailureError("regularizer " + r.name() + " fails the steepness probe");
    for (double x = 0.05; x < 1.0; x += 0.05)
        if (!(r.d2h(x) > 0.0))
            throw SolverFailureError("regularizer " + r.name() + " is not strictly convex");
}

double choice_map_bracketed(const Regularizer& r, double z) {
    if (!std::isfinite(z)) throw NonFiniteError("choice_map requires finite z");
    // Expand the bracket towards the boundary until h' straddles z. Running
    // out of representable room means h' is bounded, i.e. h is not steep.
    double lo = 0.25, hi = 0.75;
    for (int i = 0; r.dh(lo) > z; ++i) {
        lo *= 0.5;
        if (lo == 0.0 || i > 1200)
            throw SolverFailureError("bracket exhausted near 0: " + r.name());
    }
    for (int i = 0; r.dh(hi) < z; ++i) {
        hi = 0.5 * (hi + 1.0);
        if (hi == 1.0 || i > 200)
            throw SolverFailureError("bracket exhausted near 1: " + r.name());
    }
    // Bisect, then polish with Newton guarded inside the bracket.
    for (int i = 0; i < 64; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (r.dh(mid) < z)
            lo = mid;
        else
            hi = mid;
    }
    double x = 0.5 * (lo + hi);
    const double tol = 1e-12 * std::fmax(1.0, std::abs(z));
    for (int i = 0; i < 8; ++i) {
        const double res = r.dh(x) - z;
        if (std::abs(res) <= tol) break;
        const double step = res / r.d2h(x);
        double next = x - step;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (next == x) break;
        x = next;
    }
    return x;
}

double choice_map(const Regularizer& r, double z) {
    if (!std::isfinite(z)) throw NonFiniteError("choice_map requires finite z");
    if (r.has_logistic_choice()) return logistic(z);
    return choice_map_bracketed(r, z);
}

double choice_map_derivative(const Regularizer& r, double z) {
    return 1.0 / r.d2h(choice_map(r, z));
}

double inverse_choice(const Regularizer& r, double x) {
    if (!(x > 0.0 && x < 1.0)) throw BoundaryError("inverse_choice requires x in (0,1)");
    return r.dh(x);
}

} // namespace forel
