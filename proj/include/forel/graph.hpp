#pragma once

#include <optional>
#include <vector>

#include "forel/game.hpp"

namespace forel {

// Directed interaction graph of a game; simple (no self loops or duplicates).
struct GameGraph {
    int n_vertices = 0;
    std::vector<std::pair<int, int>> edges; // (from, to)
};

GameGraph game_graph(const BinaryGame& game);
void validate_graph(const GameGraph& g);

enum class RootKind { Vertex, Cycle };

// The unique source structure of a connected one-predecessor graph: either a
// single root vertex or a root cycle, plus a processing order in which every
// non-root vertex follows its predecessor (nondecreasing path distance from
// the root set, ties broken by ascending id; cycle members first, in cycle
// order rotated so the smallest id leads).
struct GraphDecomposition {
    RootKind kind = RootKind::Vertex;
    int root_vertex = -1;             // valid when kind == Vertex
    std::vector<int> cycle;           // valid when kind == Cycle
    std::vector<int> order;
    std::vector<int> distance;        // path distance from root set, per vertex
};

std::vector<int> indegrees(const GameGraph& g);

// Empty result means the one-predecessor property holds; otherwise the list
// of vertices with indegree > 1.
std::vector<int> validate_one_predecessor(const GameGraph& g);

bool weakly_connected(const GameGraph& g);

// Throws OnePredecessorViolation or DisconnectedError when the preconditions
// fail.
GraphDecomposition root_decomposition(const GameGraph& g);

} // namespace forel
