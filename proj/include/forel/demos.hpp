#pragma once

#include <optional>
#include <string>
#include <vector>

#include "forel/dynamics.hpp"
#include "forel/game.hpp"

namespace forel {

// Built-in example games. "asym(N,p)" parses its parameters from the name.
struct Demo {
    std::string name;
    std::string description;
    std::optional<BinaryGame> game;
    std::optional<NearestNeighborGame> nn_game;
};

// Throws ParseError for unknown names.
Demo make_demo(const std::string& name);

std::vector<std::pair<std::string, std::string>> demo_list();

// The 4-player matched-mismatched pennies cycle.
BinaryGame mmp4_game();

// N-player cyclic asymmetric pennies with payoff parameter p.
BinaryGame asym_pennies_game(int n_players, double p);

// Root-vertex chain where every edge has a dominant strategy.
BinaryGame chain_dominant_game();

// Two disconnected pennies pairs with incommensurate payoff scales.
BinaryGame torus_game();

// Nearest-neighbor coordination demo satisfying the cooperation conditions.
NearestNeighborGame nn_coop_game(int n_players = 5);

} // namespace forel
