#include "forel/systems.hpp"

namespace forel {

namespace {

// Per-player coefficients of the score difference: c0 + slope * x_pred,
// or the constant drift where there is no predecessor.
struct Compiled {
    std::vector<int> pred;
    std::vector<double> c0;
    std::vector<double> slope;

    static Compiled from(const BinaryGame& game) {
        const PredecessorTable t = predecessor_table(game);
        Compiled c;
        c.pred = t.pred;
        c.c0.assign(game.n_players, 0.0);
        c.slope.assign(game.n_players, 0.0);
        for (int i = 0; i < game.n_players; ++i) {
            if (t.pred[i] < 0) {
                c.c0[i] = game.drift_of(i);
                continue;
            }
            const PayoffMatrix& A = t.payoff[i];
            c.c0[i] = A(1, 0) - A(1, 1);
            c.slope[i] = mixed_difference(A);
        }
        return c;
    }

    double score_diff(const std::vector<double>& x, int i) const {
        return pred[i] < 0 ? c0[i] : c0[i] + slope[i] * x[pred[i]];
    }
};

std::function<std::vector<double>(const std::vector<double>&)>
payoff_fn(const BinaryGame& game) {
    return [game](const std::vector<double>& x) { return all_expected_payoffs(game, x); };
}

} // namespace

OdeSystem make_forel_system(const BinaryGame& game, std::vector<Regularizer> regs) {
    const Compiled c = Compiled::from(game);
    OdeSystem sys;
    sys.dim = game.n_players;
    sys.coord = StateCoord::Z;
    sys.field = [c, regs](const std::vector<double>& z) {
        std::vector<double> x(z.size());
        for (std::size_t i = 0; i < z.size(); ++i) x[i] = choice_map(regs[i], z[i]);
        std::vector<double> dz(z.size());
        for (std::size_t i = 0; i < z.size(); ++i)
            dz[i] = c.score_diff(x, static_cast<int>(i));
        return dz;
    };
    sys.to_x = [regs](const std::vector<double>& z) { return z_to_x(regs, z); };
    sys.payoffs = payoff_fn(game);
    return sys;
}

OdeSystem make_replicator_z_system(const BinaryGame& game) {
    const Compiled c = Compiled::from(game);
    OdeSystem sys;
    sys.dim = game.n_players;
    sys.coord = StateCoord::Z;
    sys.field = [c](const std::vector<double>& z) {
        std::vector<double> dz(z.size());
        for (std::size_t i = 0; i < z.size(); ++i) {
            const int p = c.pred[i];
            dz[i] = p < 0 ? c.c0[i] : c.c0[i] + c.slope[i] * logistic(z[p]);
        }
        return dz;
    };
    sys.to_x = [](const std::vector<double>& z) {
        std::vector<double> x(z.size());
        for (std::size_t i = 0; i < z.size(); ++i) x[i] = logistic(z[i]);
        return x;
    };
    sys.payoffs = payoff_fn(game);
    return sys;
}

OdeSystem make_replicator_x_system(const BinaryGame& game) {
    const Compiled c = Compiled::from(game);
    OdeSystem sys;
    sys.dim = game.n_players;
    sys.coord = StateCoord::X;
    sys.field = [c](const std::vector<double>& x) {
        std::vector<double> dx(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            dx[i] = x[i] * (1.0 - x[i]) * c.score_diff(x, static_cast<int>(i));
        return dx;
    };
    sys.payoffs = payoff_fn(game);
    return sys;
}

OdeSystem make_nn_system(const NearestNeighborGame& game) {
    validate_game(game);
    OdeSystem sys;
    sys.dim = game.n_players;
    sys.coord = StateCoord::X;
    sys.field = [game](const std::vector<double>& x) {
        return nn_replicator_field_x(game, x);
    };
    sys.payoffs = [game](const std::vector<double>& x) {
        const int n = game.n_players;
        std::vector<double> u(n, 0.0);
        for (int k = 0; k < n; ++k) {
            const PayoffTensor& T = game.tensors[k];
            const double xp = x[(k + n - 1) % n];
            const double xn = x[(k + 1) % n];
            for (int a = 0; a < 2; ++a)
                for (int s = 0; s < 2; ++s)
                    for (int b = 0; b < 2; ++b)
                        u[k] += T(a, s, b) * (a == 0 ? xp : 1.0 - xp) *
                                (s == 0 ? x[k] : 1.0 - x[k]) * (b == 0 ? xn : 1.0 - xn);
        }
        return u;
    };
    return sys;
}

} // namespace forel
