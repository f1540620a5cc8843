#pragma once

#include "forel/dynamics.hpp"
#include "forel/solver.hpp"

namespace forel {

// Builders that compile a game into an OdeSystem for the integrator. The
// structural preconditions (one predecessor, connected) are checked once here
// so the per-step field closures stay cheap.

// FoReL score dynamics in z coordinates with per-player regularizers.
OdeSystem make_forel_system(const BinaryGame& game, std::vector<Regularizer> regs);

// Closed-form replicator score dynamics (entropy) in z coordinates.
OdeSystem make_replicator_z_system(const BinaryGame& game);

// Replicator dynamics in x coordinates.
OdeSystem make_replicator_x_system(const BinaryGame& game);

// Nearest-neighbor replicator dynamics in x coordinates.
OdeSystem make_nn_system(const NearestNeighborGame& game);

} // namespace forel
