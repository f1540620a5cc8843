#include "forel/demos.hpp"

#include <cmath>
#include <cstdio>

#include "forel/errors.hpp"

namespace forel {

namespace {

const PayoffMatrix kMismatch{-1.0, 1.0, 1.0, -1.0};
const PayoffMatrix kMatch{1.0, -1.0, -1.0, 1.0};

} // namespace

BinaryGame mmp4_game() {
    BinaryGame g;
    g.n_players = 4;
    // players 0 and 2 mismatch their predecessor, players 1 and 3 match
    g.edges = {{3, 0, kMismatch}, {0, 1, kMatch}, {1, 2, kMismatch}, {2, 3, kMatch}};
    validate_game(g);
    return g;
}

BinaryGame asym_pennies_game(int n_players, double p) {
    if (n_players < 2) throw InvalidGameError("asym needs at least 2 players");
    BinaryGame g;
    g.n_players = n_players;
    const PayoffMatrix A{0.0, 1.0, p, 0.0};
    for (int i = 0; i < n_players; ++i)
        g.edges.push_back({(i + n_players - 1) % n_players, i, A});
    validate_game(g);
    return g;
}

BinaryGame chain_dominant_game() {
    BinaryGame g;
    g.n_players = 3;
    const PayoffMatrix dominant{2.0, 0.0, 1.0, 0.0}; // strategy 0 strictly dominant
    g.edges = {{0, 1, dominant}, {1, 2, dominant}};
    validate_game(g);
    return g;
}

BinaryGame torus_game() {
    BinaryGame g;
    g.n_players = 4;
    const double s = std::sqrt(2.0);
    g.edges = {{1, 0, kMismatch},
               {0, 1, kMatch},
               {3, 2, kMismatch.scaled(s)},
               {2, 3, kMatch.scaled(s)}};
    validate_game(g);
    return g;
}

NearestNeighborGame nn_coop_game(int n_players) {
    NearestNeighborGame g;
    g.n_players = n_players;
    PayoffTensor T;
    T.at(0, 0, 0) = 2.0;
    T.at(1, 1, 1) = 2.0;
    g.tensors.assign(n_players, T);
    validate_game(g);
    return g;
}

Demo make_demo(const std::string& name) {
    if (name == "mmp4")
        return {name, "matched-mismatched pennies on a 4-cycle", mmp4_game(), {}};
    if (name == "chain-dominant")
        return {name, "root-vertex chain with dominant strategies", chain_dominant_game(), {}};
    if (name == "torus")
        return {name, "two disconnected pennies pairs (quasi-periodic)", torus_game(), {}};
    if (name == "nn-coop")
        return {name, "nearest-neighbor coordination ring (5 players)", {}, nn_coop_game()};
    if (name.rfind("asym", 0) == 0) {
        int n = 3;
        double p = 8.0;
        if (name != "asym") {
            if (std::sscanf(name.c_str(), "asym(%d,%lf)", &n, &p) != 2)
                throw ParseError("expected asym(N,p): " + name);
        }
        return {name, "asymmetric cyclic pennies", asym_pennies_game(n, p), {}};
    }
    throw ParseError("unknown demo: " + name);
}

std::vector<std::pair<std::string, std::string>> demo_list() {
    return {
        {"mmp4", "matched-mismatched pennies on a 4-cycle"},
        {"asym(N,p)", "asymmetric cyclic pennies, e.g. asym(3,8); plain \"asym\" = asym(3,8)"},
        {"chain-dominant", "root-vertex chain with dominant strategies"},
        {"torus", "two disconnected pennies pairs (quasi-periodic, fails certification)"},
        {"nn-coop", "nearest-neighbor coordination ring (5 players, simulate only)"},
    };
}

} // namespace forel
