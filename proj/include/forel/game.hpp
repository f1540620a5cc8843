#pragma once

#include <array>
#include <optional>
#include <vector>

namespace forel {

// 2x2 payoff matrix of the successor on an edge. Rows index the predecessor's
// strategy, columns the successor's own strategy (strategies 0 and 1).
struct PayoffMatrix {
    std::array<std::array<double, 2>, 2> m{{{0.0, 0.0}, {0.0, 0.0}}};

    PayoffMatrix() = default;
    PayoffMatrix(double a00, double a01, double a10, double a11)
        : m{{{a00, a01}, {a10, a11}}} {}

    double operator()(int pred, int self) const { return m[pred][self]; }
    double& operator()(int pred, int self) { return m[pred][self]; }

    PayoffMatrix scaled(double factor) const {
        return {m[0][0] * factor, m[0][1] * factor, m[1][0] * factor, m[1][1] * factor};
    }
};

struct Edge {
    int from = 0;
    int to = 0;
    PayoffMatrix payoff;
};

// Binary graphical polymatrix game. Construction enforces the simple-graph
// invariants (ids in range, no self edges, no duplicate edges) but not the
// one-predecessor property; the graph module reports that separately.
struct BinaryGame {
    int n_players = 0;
    std::vector<Edge> edges;
    // Optional constant score drift for players without a predecessor
    // (score advantage of strategy 0). Empty means all zero.
    std::vector<double> drift;

    double drift_of(int player) const {
        return drift.empty() ? 0.0 : drift[player];
    }
};

// probability of strategy 0 per player
using MixedProfile = std::vector<double>;
// strategy index in {0,1} per player
using PureProfile = std::vector<int>;

// Throws InvalidGameError if the basic invariants are violated.
void validate_game(const BinaryGame& game);

void validate_profile(const BinaryGame& game, const MixedProfile& x);
void validate_profile(const BinaryGame& game, const PureProfile& s);

// Expected payoff of player k under mixed profile x (multilinear extension).
// Players with no incoming edge have constant payoff 0.
double expected_payoff(const BinaryGame& game, const MixedProfile& x, int k);

// Payoff of player k under a pure strategy profile.
double pure_payoff(const BinaryGame& game, const PureProfile& s, int k);

// Sum of all players' expected payoffs.
double social_welfare(const BinaryGame& game, const MixedProfile& x);

std::vector<double> all_expected_payoffs(const BinaryGame& game, const MixedProfile& x);

// KL divergence between product distributions given by profiles p and x,
// with the 0*log(0) := 0 convention. x must be strictly interior.
double kl_divergence(const MixedProfile& p, const MixedProfile& x);

} // namespace forel
