#pragma once

#include <functional>
#include <string>
#include <vector>

namespace forel {

// Steep strictly convex regularizer on (0,1), given through h, h' and h''.
// The induced choice map sends a score difference z to the unique x in (0,1)
// with h'(x) = z.
class Regularizer {
public:
    using Fn = std::function<double(double)>;

    static Regularizer entropy();
    static Regularizer log_barrier();
    static Regularizer custom(std::string name, Fn h, Fn dh, Fn d2h);

    // Parses "entropy" | "log_barrier"; throws ParseError otherwise.
    static Regularizer by_name(const std::string& name);

    const std::string& name() const { return name_; }
    double h(double x) const { return h_(x); }
    double dh(double x) const { return dh_(x); }
    double d2h(double x) const { return d2h_(x); }

    // The entropy regularizer has the logistic choice map in closed form.
    bool has_logistic_choice() const { return logistic_; }

private:
    Regularizer(std::string name, Fn h, Fn dh, Fn d2h, bool logistic)
        : name_(std::move(name)), h_(std::move(h)), dh_(std::move(dh)), d2h_(std::move(d2h)),
          logistic_(logistic) {}

    std::string name_;
    Fn h_, dh_, d2h_;
    bool logistic_ = false;
};

// Numeric sanity check of the steepness and convexity hypotheses, probed at
// x in {1e-12, 1-1e-12} and an interior grid. Throws SolverFailureError.
void check_regularizer(const Regularizer& r);

// Unique solution of h'(x) = z. Throws NonFiniteError for non-finite z and
// SolverFailureError when the bracket cannot be established (non-steep h).
double choice_map(const Regularizer& r, double z);

// The generic bracketed-bisection/Newton path, bypassing closed forms.
double choice_map_bracketed(const Regularizer& r, double z);

// dx/dz = 1 / h''(choice_map(z)) > 0.
double choice_map_derivative(const Regularizer& r, double z);

// h'(x) for interior x; throws BoundaryError otherwise.
double inverse_choice(const Regularizer& r, double x);

// Overflow-safe logistic e^z / (1 + e^z).
double logistic(double z);

} // namespace forel
