#include "forel/game_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "forel/dynamics.hpp"
#include "forel/errors.hpp"

namespace forel {

json game_to_json(const BinaryGame& game) {
    json j;
    j["n_players"] = game.n_players;
    j["edges"] = json::array();
    for (const Edge& e : game.edges) {
        json je;
        je["from"] = e.from;
        je["to"] = e.to;
        je["payoff"] = {{e.payoff(0, 0), e.payoff(0, 1)}, {e.payoff(1, 0), e.payoff(1, 1)}};
        j["edges"].push_back(je);
    }
    if (!game.drift.empty()) j["drift"] = game.drift;
    return j;
}

GameSpec game_from_json(const json& j) {
    GameSpec spec;
    try {
        spec.game.n_players = j.at("n_players").get<int>();
        for (const auto& je : j.at("edges")) {
            Edge e;
            e.from = je.at("from").get<int>();
            e.to = je.at("to").get<int>();
            const auto& p = je.at("payoff");
            if (p.size() != 2 || p[0].size() != 2 || p[1].size() != 2)
                throw ParseError("payoff must be a 2x2 matrix");
            e.payoff = PayoffMatrix(p[0][0].get<double>(), p[0][1].get<double>(),
                                    p[1][0].get<double>(), p[1][1].get<double>());
            spec.game.edges.push_back(e);
        }
        if (j.contains("drift")) spec.game.drift = j.at("drift").get<std::vector<double>>();
        if (j.contains("regularizers")) {
            for (const auto& name : j.at("regularizers"))
                spec.regularizers.push_back(Regularizer::by_name(name.get<std::string>()));
        }
    } catch (const json::exception& ex) {
        throw ParseError(std::string("bad game spec: ") + ex.what());
    }
    validate_game(spec.game);
    if (spec.regularizers.empty())
        spec.regularizers = entropy_regularizers(spec.game.n_players);
    else if (static_cast<int>(spec.regularizers.size()) != spec.game.n_players)
        throw ParseError("one regularizer per player required");
    return spec;
}

GameSpec load_game_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open game spec: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& ex) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + ex.what());
    }
    return game_from_json(j);
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string csv_impl(const Trajectory& traj, const std::vector<std::vector<double>>* payoffs,
                     const std::vector<double>* welfare) {
    std::ostringstream out;
    const std::size_t n = traj.xs.empty() ? 0 : traj.xs.front().size();
    out << "t";
    for (std::size_t i = 0; i < n; ++i) out << ",x_" << i;
    if (payoffs) {
        for (std::size_t i = 0; i < n; ++i) out << ",u_" << i;
        out << ",sw";
    }
    if (traj.coord == StateCoord::Z)
        for (std::size_t i = 0; i < n; ++i) out << ",z_" << i;
    out << "\n";
    for (std::size_t j = 0; j < traj.size(); ++j) {
        out << fmt_double(traj.times[j]);
        for (double x : traj.xs[j]) out << "," << fmt_double(x);
        if (payoffs) {
            for (double u : (*payoffs)[j]) out << "," << fmt_double(u);
            out << "," << fmt_double((*welfare)[j]);
        }
        if (traj.coord == StateCoord::Z)
            for (double z : traj.states[j]) out << "," << fmt_double(z);
        out << "\n";
    }
    return out.str();
}

} // namespace

std::string trajectory_csv(const BinaryGame& game, const Trajectory& traj) {
    if (!traj.payoffs.empty()) return csv_impl(traj, &traj.payoffs, &traj.welfare);
    // derive payoffs when the trajectory was produced without a payoff hook
    std::vector<std::vector<double>> payoffs(traj.size());
    std::vector<double> welfare(traj.size(), 0.0);
    for (std::size_t j = 0; j < traj.size(); ++j) {
        payoffs[j] = all_expected_payoffs(game, traj.xs[j]);
        for (double u : payoffs[j]) welfare[j] += u;
    }
    return csv_impl(traj, &payoffs, &welfare);
}

std::string trajectory_csv(const Trajectory& traj) {
    if (!traj.payoffs.empty()) return csv_impl(traj, &traj.payoffs, &traj.welfare);
    return csv_impl(traj, nullptr, nullptr);
}

json to_json(const ConditionReport& report) {
    json j;
    j["pb_certified"] = report.pb_certified;
    j["one_predecessor"] = report.one_predecessor;
    j["connected"] = report.connected;
    j["failures"] = report.failures;
    j["edges"] = json::array();
    for (const EdgeCondition& e : report.edges) {
        json je;
        je["from"] = e.from;
        je["to"] = e.to;
        je["mixed_difference"] = e.mixed_diff;
        je["generic"] = e.generic;
        if (e.feedback)
            je["feedback_sign"] = *e.feedback;
        else
            je["feedback_sign"] = nullptr;
        je["dominance"] = to_string(e.dominance);
        je["prev_neighbor_cooperation"] = e.mixed_diff > 0.0;
        j["edges"].push_back(je);
    }
    return j;
}

json to_json(const GraphDecomposition& dec) {
    json j;
    j["kind"] = dec.kind == RootKind::Vertex ? "root_vertex" : "root_cycle";
    if (dec.kind == RootKind::Vertex)
        j["root_vertex"] = dec.root_vertex;
    else
        j["root_cycle"] = dec.cycle;
    j["order"] = dec.order;
    j["distance"] = dec.distance;
    return j;
}

json to_json(const LimitSetVerdict& verdict) {
    json j;
    j["kind"] = to_string(verdict.kind);
    switch (verdict.kind) {
        case LimitSetKind::Equilibrium:
        case LimitSetKind::BoundaryFixed: j["point"] = verdict.point; break;
        case LimitSetKind::Periodic:
            j["period"] = verdict.period;
            j["representative"] = verdict.point;
            break;
        case LimitSetKind::HeteroclinicCycle: {
            j["corners"] = json::array();
            for (const auto& c : verdict.corner_sequence) j["corners"].push_back(c);
            json dwells = json::array();
            for (const auto& visit : verdict.visits) dwells.push_back(visit.dwell);
            j["dwell_times"] = dwells;
            break;
        }
        case LimitSetKind::Undetermined: break;
    }
    json diag;
    diag["field_sup"] = verdict.field_sup;
    diag["drift"] = verdict.drift;
    diag["min_return_distance"] = verdict.min_return_distance;
    j["diagnostics"] = diag;
    return j;
}

json to_json(const WelfareVerdict& verdict) {
    json j;
    j["average_sw"] = verdict.average_sw;
    j["bound"] = verdict.bound;
    j["slack"] = verdict.slack;
    j["pass"] = verdict.pass;
    return j;
}

json to_json(const AverageReport& averages) {
    json j;
    j["per_player"] = averages.per_player;
    j["social_welfare"] = averages.social_welfare;
    return j;
}

void atomic_write_file(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp.string());
        out << content;
    }
    fs::rename(tmp, target);
}

std::string svg_line_plot(const std::string& title, const std::vector<PlotSeries>& series) {
    const int width = 800, height = 560;
    const int ml = 60, mr = 20, mt = 40, mb = 40;
    double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
    bool first = true;
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (first) {
                xmin = xmax = s.x[i];
                ymin = ymax = s.y[i];
                first = false;
            }
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, s.y[i]);
            ymax = std::max(ymax, s.y[i]);
        }
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) ymax = ymin + 1.0;
    const auto px = [&](double x) {
        return ml + (x - xmin) / (xmax - xmin) * (width - ml - mr);
    };
    const auto py = [&](double y) {
        return height - mb - (y - ymin) / (ymax - ymin) * (height - mt - mb);
    };
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << width - ml - mr
        << "\" height=\"" << height - mt - mb
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4g / %.4g", xmin, xmax);
    out << "<text x=\"" << ml << "\" y=\"" << height - 10
        << "\" font-family=\"sans-serif\" font-size=\"11\">x: " << buf << "</text>\n";
    std::snprintf(buf, sizeof buf, "%.4g / %.4g", ymin, ymax);
    out << "<text x=\"6\" y=\"" << mt - 6
        << "\" font-family=\"sans-serif\" font-size=\"11\">y: " << buf << "</text>\n";
    int ci = 0;
    for (const auto& s : series) {
        out << "<polyline fill=\"none\" stroke=\"" << colors[ci % 8]
            << "\" stroke-width=\"1\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px(s.x[i]), py(s.y[i]));
            out << buf;
        }
        out << "\"/>\n";
        out << "<text x=\"" << width - mr - 150 << "\" y=\"" << mt + 16 + 14 * ci
            << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" << colors[ci % 8]
            << "\">" << s.label << "</text>\n";
        ++ci;
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace forel
