#include "forel/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "forel/errors.hpp"

namespace forel {

GameGraph game_graph(const BinaryGame& game) {
    GameGraph g;
    g.n_vertices = game.n_players;
    g.edges.reserve(game.edges.size());
    for (const Edge& e : game.edges) g.edges.emplace_back(e.from, e.to);
    return g;
}

void validate_graph(const GameGraph& g) {
    if (g.n_vertices <= 0) throw InvalidGameError("graph must have at least one vertex");
    std::set<std::pair<int, int>> seen;
    for (auto [from, to] : g.edges) {
        if (from < 0 || from >= g.n_vertices || to < 0 || to >= g.n_vertices)
            throw InvalidGameError("edge endpoint out of range");
        if (from == to) throw InvalidGameError("self loop");
        if (!seen.insert({from, to}).second) throw InvalidGameError("duplicate edge");
    }
}

std::vector<int> indegrees(const GameGraph& g) {
    std::vector<int> deg(g.n_vertices, 0);
    for (auto [from, to] : g.edges) {
        (void)from;
        ++deg[to];
    }
    return deg;
}

std::vector<int> validate_one_predecessor(const GameGraph& g) {
    std::vector<int> violations;
    const auto deg = indegrees(g);
    for (int v = 0; v < g.n_vertices; ++v)
        if (deg[v] > 1) violations.push_back(v);
    return violations;
}

bool weakly_connected(const GameGraph& g) {
    if (g.n_vertices == 0) return true;
    std::vector<std::vector<int>> adj(g.n_vertices);
    for (auto [from, to] : g.edges) {
        adj[from].push_back(to);
        adj[to].push_back(from);
    }
    std::vector<char> seen(g.n_vertices, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                q.push(w);
            }
    }
    return count == g.n_vertices;
}

GraphDecomposition root_decomposition(const GameGraph& g) {
    validate_graph(g);
    if (const auto bad = validate_one_predecessor(g); !bad.empty())
        throw OnePredecessorViolation("vertex " + std::to_string(bad.front()) +
                                      " has more than one predecessor");
    if (!weakly_connected(g)) throw DisconnectedError("interaction graph is not connected");

    std::vector<int> pred(g.n_vertices, -1);
    std::vector<std::vector<int>> succ(g.n_vertices);
    for (auto [from, to] : g.edges) {
        pred[to] = from;
        succ[from].push_back(to);
    }

    // Walk the predecessor chain from vertex 0: it either terminates at the
    // unique root vertex or enters the unique cycle.
    GraphDecomposition dec;
    {
        std::vector<int> visit_step(g.n_vertices, -1);
        int v = 0;
        int step = 0;
        while (pred[v] != -1 && visit_step[v] == -1) {
            visit_step[v] = step++;
            v = pred[v];
        }
        if (pred[v] == -1) {
            dec.kind = RootKind::Vertex;
            dec.root_vertex = v;
        } else {
            dec.kind = RootKind::Cycle;
            // v was revisited; collect the cycle by following predecessors.
            std::vector<int> cyc;
            int w = v;
            do {
                cyc.push_back(w);
                w = pred[w];
            } while (w != v);
            // Walking pred links yields reverse edge order; flip to follow edges.
            std::reverse(cyc.begin(), cyc.end());
            // Canonical rotation: smallest id first.
            const auto smallest = std::min_element(cyc.begin(), cyc.end());
            std::rotate(cyc.begin(), smallest, cyc.end());
            dec.cycle = std::move(cyc);
        }
    }

    // BFS over directed edges from the root set gives path distances.
    dec.distance.assign(g.n_vertices, -1);
    std::queue<int> q;
    if (dec.kind == RootKind::Vertex) {
        dec.distance[dec.root_vertex] = 0;
        q.push(dec.root_vertex);
    } else {
        for (int v : dec.cycle) {
            dec.distance[v] = 0;
            q.push(v);
        }
    }
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int w : succ[v])
            if (dec.distance[w] == -1) {
                dec.distance[w] = dec.distance[v] + 1;
                q.push(w);
            }
    }
    for (int v = 0; v < g.n_vertices; ++v)
        if (dec.distance[v] == -1)
            throw DisconnectedError("vertex " + std::to_string(v) +
                                    " unreachable from the root set");

    // Root set first (cycle order / the root vertex), then by (distance, id).
    if (dec.kind == RootKind::Vertex)
        dec.order.push_back(dec.root_vertex);
    else
        dec.order = dec.cycle;
    std::vector<int> rest;
    for (int v = 0; v < g.n_vertices; ++v)
        if (dec.distance[v] > 0) rest.push_back(v);
    std::sort(rest.begin(), rest.end(), [&](int a, int b) {
        return std::pair(dec.distance[a], a) < std::pair(dec.distance[b], b);
    });
    dec.order.insert(dec.order.end(), rest.begin(), rest.end());
    return dec;
}

} // namespace forel
