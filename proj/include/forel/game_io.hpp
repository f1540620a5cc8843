#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "forel/analysis.hpp"
#include "forel/conditions.hpp"
#include "forel/game.hpp"
#include "forel/graph.hpp"
#include "forel/regularizer.hpp"
#include "forel/solver.hpp"

namespace forel {

using json = nlohmann::ordered_json;

// A game spec file bundles the game with optional per-player regularizers.
struct GameSpec {
    BinaryGame game;
    std::vector<Regularizer> regularizers;
};

json game_to_json(const BinaryGame& game);
GameSpec game_from_json(const json& j);
GameSpec load_game_file(const std::string& path);

// CSV with header t, x_0.., u_0.., sw and, for z-coordinate runs, z_0...
std::string trajectory_csv(const BinaryGame& game, const Trajectory& traj);
std::string trajectory_csv(const Trajectory& traj); // no payoff columns

json to_json(const ConditionReport& report);
json to_json(const GraphDecomposition& dec);
json to_json(const LimitSetVerdict& verdict);
json to_json(const WelfareVerdict& verdict);
json to_json(const AverageReport& averages);

// Writes via a temp file + rename so partially written outputs never appear.
void atomic_write_file(const std::string& path, const std::string& content);

// Fixed-format double for CSV output (17 significant digits).
std::string fmt_double(double v);

// Minimal line-plot SVG: one polyline per series over a framed viewport.
struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};
std::string svg_line_plot(const std::string& title, const std::vector<PlotSeries>& series);

} // namespace forel
