#include "forel/conditions.hpp"

#include <cmath>

#include "forel/errors.hpp"
#include "forel/graph.hpp"

namespace forel {

double mixed_difference(const PayoffMatrix& A) {
    return A(0, 0) - A(0, 1) - A(1, 0) + A(1, 1);
}

bool is_generic(const PayoffMatrix& A, double tol) {
    return std::abs(mixed_difference(A)) > tol;
}

int feedback_sign(const PayoffMatrix& A) {
    const double d = mixed_difference(A);
    if (d == 0.0) throw NonGenericError("mixed difference vanishes");
    return d > 0.0 ? 1 : -1;
}

Dominance dominant_strategy(const PayoffMatrix& A) {
    const double d0 = A(0, 0) - A(0, 1); // strategy-0 advantage when predecessor plays 0
    const double d1 = A(1, 0) - A(1, 1); // ... when predecessor plays 1
    if (d0 == 0.0 || d1 == 0.0) return Dominance::Degenerate;
    if (d0 > 0.0 && d1 > 0.0) return Dominance::Strategy0;
    if (d0 < 0.0 && d1 < 0.0) return Dominance::Strategy1;
    return Dominance::None;
}

std::string to_string(Dominance d) {
    switch (d) {
        case Dominance::None: return "none";
        case Dominance::Strategy0: return "strategy0";
        case Dominance::Strategy1: return "strategy1";
        case Dominance::Degenerate: return "degenerate";
    }
    return "none";
}

bool prev_neighbor_cooperation(const PayoffMatrix& A) {
    return mixed_difference(A) > 0.0;
}

NnCooperation nearest_neighbor_cooperation(const PayoffTensor& T) {
    NnCooperation c;
    // d/dprev d/dself at fixed next:
    c.values[0] = T(0, 0, 0) - T(0, 1, 0) - T(1, 0, 0) + T(1, 1, 0);
    c.values[1] = T(0, 0, 1) - T(0, 1, 1) - T(1, 0, 1) + T(1, 1, 1);
    // d/dnext d/dself at fixed prev:
    c.values[2] = T(0, 0, 0) - T(0, 1, 0) - T(0, 0, 1) + T(0, 1, 1);
    c.values[3] = T(1, 0, 0) - T(1, 0, 1) - T(1, 1, 0) + T(1, 1, 1);
    for (int i = 0; i < 4; ++i) c.holds[i] = c.values[i] > 0.0;
    return c;
}

ConditionReport certify_pb(const BinaryGame& game, double tol) {
    ConditionReport report;
    const GameGraph g = game_graph(game);
    report.one_predecessor = validate_one_predecessor(g).empty();
    report.connected = weakly_connected(g);
    if (!report.one_predecessor)
        report.failures.push_back("a vertex has more than one predecessor");
    if (!report.connected) report.failures.push_back("interaction graph is disconnected");

    for (const Edge& e : game.edges) {
        EdgeCondition ec;
        ec.from = e.from;
        ec.to = e.to;
        ec.mixed_diff = mixed_difference(e.payoff);
        ec.generic = is_generic(e.payoff, tol);
        if (ec.generic) ec.feedback = feedback_sign(e.payoff);
        ec.dominance = dominant_strategy(e.payoff);
        if (!ec.generic)
            report.failures.push_back("non-generic edge " + std::to_string(e.from) + "->" +
                                      std::to_string(e.to));
        report.edges.push_back(ec);
    }
    report.pb_certified = report.failures.empty();
    return report;
}

} // namespace forel
