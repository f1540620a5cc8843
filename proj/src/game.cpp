#include "forel/game.hpp"

#include <cmath>
#include <set>
#include <string>

#include "forel/errors.hpp"

namespace forel {

void validate_game(const BinaryGame& game) {
    if (game.n_players <= 0)
        throw InvalidGameError("game must have at least one player");
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : game.edges) {
        if (e.from < 0 || e.from >= game.n_players || e.to < 0 || e.to >= game.n_players)
            throw InvalidGameError("edge endpoint out of range: " + std::to_string(e.from) +
                                   "->" + std::to_string(e.to));
        if (e.from == e.to)
            throw InvalidGameError("self edge at vertex " + std::to_string(e.from));
        if (!seen.insert({e.from, e.to}).second)
            throw InvalidGameError("duplicate edge " + std::to_string(e.from) + "->" +
                                   std::to_string(e.to));
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                if (!std::isfinite(e.payoff(a, b)))
                    throw InvalidGameError("non-finite payoff entry");
    }
    if (!game.drift.empty() && static_cast<int>(game.drift.size()) != game.n_players)
        throw InvalidGameError("drift vector size must match player count");
}

void validate_profile(const BinaryGame& game, const MixedProfile& x) {
    if (static_cast<int>(x.size()) != game.n_players)
        throw IndexError("mixed profile size mismatch");
    for (double xi : x)
        if (!(xi >= 0.0 && xi <= 1.0))
            throw InvalidGameError("mixed strategy outside [0,1]");
}

void validate_profile(const BinaryGame& game, const PureProfile& s) {
    if (static_cast<int>(s.size()) != game.n_players)
        throw IndexError("pure profile size mismatch");
    for (int si : s)
        if (si != 0 && si != 1)
            throw InvalidGameError("pure strategy must be 0 or 1");
}

double expected_payoff(const BinaryGame& game, const MixedProfile& x, int k) {
    if (k < 0 || k >= game.n_players) throw IndexError("player id out of range");
    if (static_cast<int>(x.size()) != game.n_players)
        throw IndexError("mixed profile size mismatch");
    double u = 0.0;
    for (const Edge& e : game.edges) {
        if (e.to != k) continue;
        const double xp = x[e.from];
        const double xk = x[k];
        u += xp * xk * e.payoff(0, 0) + xp * (1.0 - xk) * e.payoff(0, 1) +
             (1.0 - xp) * xk * e.payoff(1, 0) + (1.0 - xp) * (1.0 - xk) * e.payoff(1, 1);
    }
    return u;
}

double pure_payoff(const BinaryGame& game, const PureProfile& s, int k) {
    if (k < 0 || k >= game.n_players) throw IndexError("player id out of range");
    if (static_cast<int>(s.size()) != game.n_players)
        throw IndexError("pure profile size mismatch");
    double u = 0.0;
    for (const Edge& e : game.edges)
        if (e.to == k) u += e.payoff(s[e.from], s[k]);
    return u;
}

double social_welfare(const BinaryGame& game, const MixedProfile& x) {
    double sw = 0.0;
    for (int k = 0; k < game.n_players; ++k) sw += expected_payoff(game, x, k);
    return sw;
}

std::vector<double> all_expected_payoffs(const BinaryGame& game, const MixedProfile& x) {
    std::vector<double> u(game.n_players);
    for (int k = 0; k < game.n_players; ++k) u[k] = expected_payoff(game, x, k);
    return u;
}

double kl_divergence(const MixedProfile& p, const MixedProfile& x) {
    if (p.size() != x.size()) throw IndexError("profile size mismatch");
    double kl = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!(x[i] > 0.0 && x[i] < 1.0))
            throw BoundaryError("kl_divergence requires interior second argument");
        if (!(p[i] >= 0.0 && p[i] <= 1.0))
            throw InvalidGameError("kl_divergence first argument outside [0,1]");
        if (p[i] > 0.0) kl += p[i] * std::log(p[i] / x[i]);
        if (p[i] < 1.0) kl += (1.0 - p[i]) * std::log((1.0 - p[i]) / (1.0 - x[i]));
    }
    return kl;
}

} // namespace forel
