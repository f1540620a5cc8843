#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "forel/game.hpp"

namespace forel {

// D = A(0,0) - A(0,1) - A(1,0) + A(1,1), the mixed second difference of the
// edge payoff. Its sign is the feedback sign of the induced score dynamics.
double mixed_difference(const PayoffMatrix& A);

bool is_generic(const PayoffMatrix& A, double tol = 1e-9);

// Throws NonGenericError when D == 0.
int feedback_sign(const PayoffMatrix& A);

enum class Dominance { None, Strategy0, Strategy1, Degenerate };

// Strict dominant strategy of the successor, if any. Ties in either row are
// reported as Degenerate rather than silently mapped to None.
Dominance dominant_strategy(const PayoffMatrix& A);

std::string to_string(Dominance d);

// D > 0: aligning with the previous neighbor pays.
bool prev_neighbor_cooperation(const PayoffMatrix& A);

// 2x2x2 payoff tensor indexed [prev][self][next].
struct PayoffTensor {
    std::array<double, 8> t{};
    double operator()(int prev, int self, int next) const {
        return t[prev * 4 + self * 2 + next];
    }
    double& at(int prev, int self, int next) { return t[prev * 4 + self * 2 + next]; }
};

struct NnCooperation {
    // Mixed partial in the previous neighbor, grouped on next = 0 / next = 1,
    // then mixed partial in the next neighbor, grouped on prev = 0 / prev = 1.
    std::array<double, 4> values{};
    std::array<bool, 4> holds{};
    bool all() const { return holds[0] && holds[1] && holds[2] && holds[3]; }
};

NnCooperation nearest_neighbor_cooperation(const PayoffTensor& T);

struct EdgeCondition {
    int from = 0;
    int to = 0;
    double mixed_diff = 0.0;
    bool generic = false;
    std::optional<int> feedback; // present iff generic
    Dominance dominance = Dominance::None;
};

struct ConditionReport {
    std::vector<EdgeCondition> edges;
    bool one_predecessor = false;
    bool connected = false;
    bool pb_certified = false;
    std::vector<std::string> failures;
};

// Checks every hypothesis of the Poincare-Bendixson theorems: one-predecessor
// graph, weak connectivity, genericity of every edge matrix. Failures are
// report content, not errors.
ConditionReport certify_pb(const BinaryGame& game, double tol = 1e-9);

} // namespace forel
