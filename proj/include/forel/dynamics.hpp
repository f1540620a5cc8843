#pragma once

#include <vector>

#include "forel/conditions.hpp"
#include "forel/game.hpp"
#include "forel/regularizer.hpp"

namespace forel {

// score-difference coordinates, one per player (strategy 0 minus strategy 1)
using ZState = std::vector<double>;

// Per-player predecessor lookup for one-predecessor games. Throws
// OnePredecessorViolation / DisconnectedError if the structure is invalid.
struct PredecessorTable {
    std::vector<int> pred;            // -1 when the player has no incoming edge
    std::vector<PayoffMatrix> payoff; // valid where pred != -1
};
PredecessorTable predecessor_table(const BinaryGame& game);

// Score advantage of strategy 0 for player k given the opponents' profile x:
// v_{k,0}(x) - v_{k,1}(x), plus the constant drift for predecessor-free
// players.
double score_difference(const BinaryGame& game, const PredecessorTable& t,
                        const MixedProfile& x, int k);

// FoReL score dynamics: zdot_i = v_{i,0}(Q(z)) - v_{i,1}(Q(z)).
ZState forel_field(const BinaryGame& game, const std::vector<Regularizer>& regs,
                   const ZState& z);

// Closed-form replicator score field (entropy regularizer), written directly
// as an affine function of the predecessor's logistic. Kept independent of
// forel_field as a cross-check.
ZState replicator_field_z(const BinaryGame& game, const ZState& z);

// Replicator dynamics in strategy space: xdot_i = x_i (1-x_i) (v_{i,0}-v_{i,1}).
// Faces of [0,1]^N are invariant.
MixedProfile replicator_field_x(const BinaryGame& game, const MixedProfile& x);

// Cyclic game where each player's payoff depends on both neighbors.
struct NearestNeighborGame {
    int n_players = 0;
    std::vector<PayoffTensor> tensors; // one per player, indexed [prev][self][next]
};
void validate_game(const NearestNeighborGame& game);

MixedProfile nn_replicator_field_x(const NearestNeighborGame& game, const MixedProfile& x);

// Same field written through the expected-payoff form
// x_k (g(x_prev, 1, x_next) - g(x_prev, x_k, x_next)); used as a cross-check.
MixedProfile nn_replicator_field_x_via_g(const NearestNeighborGame& game,
                                         const MixedProfile& x);

MixedProfile z_to_x(const std::vector<Regularizer>& regs, const ZState& z);
ZState x_to_z(const std::vector<Regularizer>& regs, const MixedProfile& x);

std::vector<Regularizer> entropy_regularizers(int n_players);

} // namespace forel
