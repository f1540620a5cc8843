#include "forel/dynamics.hpp"

#include <cmath>
#include <string>

#include "forel/errors.hpp"
#include "forel/graph.hpp"

namespace forel {

PredecessorTable predecessor_table(const BinaryGame& game) {
    // Only the one-predecessor property is needed for the fields to be well
    // defined; connectivity is a theorem hypothesis checked by certify_pb.
    const GameGraph g = game_graph(game);
    if (const auto bad = validate_one_predecessor(g); !bad.empty())
        throw OnePredecessorViolation("vertex " + std::to_string(bad.front()) +
                                      " has more than one predecessor");
    PredecessorTable t;
    t.pred.assign(game.n_players, -1);
    t.payoff.assign(game.n_players, PayoffMatrix{});
    for (const Edge& e : game.edges) {
        t.pred[e.to] = e.from;
        t.payoff[e.to] = e.payoff;
    }
    return t;
}

double score_difference(const BinaryGame& game, const PredecessorTable& t,
                        const MixedProfile& x, int k) {
    if (t.pred[k] < 0) return game.drift_of(k);
    const PayoffMatrix& A = t.payoff[k];
    const double xp = x[t.pred[k]];
    return xp * (A(0, 0) - A(0, 1)) + (1.0 - xp) * (A(1, 0) - A(1, 1));
}

ZState forel_field(const BinaryGame& game, const std::vector<Regularizer>& regs,
                   const ZState& z) {
    if (static_cast<int>(z.size()) != game.n_players ||
        static_cast<int>(regs.size()) != game.n_players)
        throw IndexError("state/regularizer size mismatch");
    const PredecessorTable t = predecessor_table(game);
    MixedProfile x(game.n_players);
    for (int i = 0; i < game.n_players; ++i) x[i] = choice_map(regs[i], z[i]);
    ZState dz(game.n_players);
    for (int i = 0; i < game.n_players; ++i) dz[i] = score_difference(game, t, x, i);
    return dz;
}

ZState replicator_field_z(const BinaryGame& game, const ZState& z) {
    if (static_cast<int>(z.size()) != game.n_players)
        throw IndexError("state size mismatch");
    const PredecessorTable t = predecessor_table(game);
    ZState dz(game.n_players);
    for (int i = 0; i < game.n_players; ++i) {
        if (t.pred[i] < 0) {
            dz[i] = game.drift_of(i);
            continue;
        }
        const PayoffMatrix& A = t.payoff[i];
        dz[i] = mixed_difference(A) * logistic(z[t.pred[i]]) + (A(1, 0) - A(1, 1));
    }
    return dz;
}

MixedProfile replicator_field_x(const BinaryGame& game, const MixedProfile& x) {
    if (static_cast<int>(x.size()) != game.n_players)
        throw IndexError("state size mismatch");
    const PredecessorTable t = predecessor_table(game);
    MixedProfile dx(game.n_players);
    for (int i = 0; i < game.n_players; ++i)
        dx[i] = x[i] * (1.0 - x[i]) * score_difference(game, t, x, i);
    return dx;
}

void validate_game(const NearestNeighborGame& game) {
    if (game.n_players < 3)
        throw InvalidGameError("nearest-neighbor game needs at least 3 players");
    if (static_cast<int>(game.tensors.size()) != game.n_players)
        throw InvalidGameError("one payoff tensor per player required");
    for (const PayoffTensor& T : game.tensors)
        for (double v : T.t)
            if (!std::isfinite(v)) throw InvalidGameError("non-finite tensor entry");
}

MixedProfile nn_replicator_field_x(const NearestNeighborGame& game, const MixedProfile& x) {
    const int n = game.n_players;
    if (static_cast<int>(x.size()) != n) throw IndexError("state size mismatch");
    MixedProfile dx(n);
    for (int k = 0; k < n; ++k) {
        const PayoffTensor& T = game.tensors[k];
        const double xp = x[(k + n - 1) % n];
        const double xn = x[(k + 1) % n];
        double fit[2];
        for (int s = 0; s < 2; ++s) {
            fit[s] = xp * xn * T(0, s, 0) + xp * (1.0 - xn) * T(0, s, 1) +
                     (1.0 - xp) * xn * T(1, s, 0) + (1.0 - xp) * (1.0 - xn) * T(1, s, 1);
        }
        dx[k] = x[k] * (1.0 - x[k]) * (fit[0] - fit[1]);
    }
    return dx;
}

MixedProfile nn_replicator_field_x_via_g(const NearestNeighborGame& game,
                                         const MixedProfile& x) {
    const int n = game.n_players;
    if (static_cast<int>(x.size()) != n) throw IndexError("state size mismatch");
    const auto g = [](const PayoffTensor& T, double xp, double xs, double xn) {
        double total = 0.0;
        for (int a = 0; a < 2; ++a)
            for (int s = 0; s < 2; ++s)
                for (int b = 0; b < 2; ++b)
                    total += T(a, s, b) * (a == 0 ? xp : 1.0 - xp) * (s == 0 ? xs : 1.0 - xs) *
                             (b == 0 ? xn : 1.0 - xn);
        return total;
    };
    MixedProfile dx(n);
    for (int k = 0; k < n; ++k) {
        const PayoffTensor& T = game.tensors[k];
        const double xp = x[(k + n - 1) % n];
        const double xn = x[(k + 1) % n];
        dx[k] = x[k] * (g(T, xp, 1.0, xn) - g(T, xp, x[k], xn));
    }
    return dx;
}

MixedProfile z_to_x(const std::vector<Regularizer>& regs, const ZState& z) {
    if (regs.size() != z.size()) throw IndexError("state/regularizer size mismatch");
    MixedProfile x(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) x[i] = choice_map(regs[i], z[i]);
    return x;
}

ZState x_to_z(const std::vector<Regularizer>& regs, const MixedProfile& x) {
    if (regs.size() != x.size()) throw IndexError("state/regularizer size mismatch");
    ZState z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = inverse_choice(regs[i], x[i]);
    return z;
}

std::vector<Regularizer> entropy_regularizers(int n_players) {
    std::vector<Regularizer> regs;
    regs.reserve(n_players);
    for (int i = 0; i < n_players; ++i) regs.push_back(Regularizer::entropy());
    return regs;
}

} // namespace forel
