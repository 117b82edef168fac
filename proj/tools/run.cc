// Copyright 2026 The tlsphot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "run.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

namespace tlsphot::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

const double kNan = std::nan("");

OperatingPoint operating_point(const RunConfig &c) {
    OperatingPointOptions o;
    o.kind = c.kind;
    o.sigma = c.sigma;
    o.branch = c.branch;
    o.grid = c.grid;
    return make_operating_point(c.tls(), o);
}

FewPhotonState number_superposition(const OperatingPoint &op, const std::array<double, 3> &amps) {
    FewPhotonState s = FewPhotonState::vacuum(op.grid, {{"s"}});
    s.set_vacuum_amp(amps[0]);
    s.add_single(0, op.mode, amps[1]);
    s.add_two_photons(0, op.mode, amps[2]);
    return s;
}

template <size_t N>
std::array<double, N> normalized(std::array<double, N> a) {
    double n = 0;
    for (double x : a) {
        n += x * x;
    }
    for (double &x : a) {
        x /= std::sqrt(n);
    }
    return a;
}

void add_quantity(Table &t, const std::string &name, double value, double closed_form = kNan) {
    t.add_row({name, value, closed_form, std::isnan(closed_form) ? kNan : std::abs(value - closed_form)});
}

Table quantity_table(const std::string &name) {
    return Table{name, {"quantity", "value", "closed_form", "abs_diff"}};
}

SweepOutput sorter_demo(const RunConfig &c) {
    OperatingPoint op = operating_point(c);
    double e1 = op.epsilon1;
    double eb = op.epsilon_b;
    double a2 = c.demo.one_photon_weight;
    FewPhotonState in = number_superposition(op, {0.0, std::sqrt(a2), std::sqrt(1 - a2)});
    SorterResult r = photon_sorter(in, 0, op, c.circuit);
    int anc = r.ancilla;
    int n = r.state.num_rails();

    CircuitOptions wise = c.circuit;
    wise.sfg_model = SfgModel::kPhotonWise;
    SorterResult pair = photon_sorter(number_superposition(op, {0.0, 0.0, 1.0}), 0, op, wise);

    double one = project_detection(r.state, make_pattern(n, {anc}));
    double two = project_detection(r.state, make_pattern(n, {0, 0}));
    Table t = quantity_table("sorter_demo");
    add_quantity(t, "sigma_over_gamma", op.pulse.sigma);
    add_quantity(t, "ancilla_one_photon", one, a2 * e1);
    add_quantity(t, "signal_two_photon", two, (1 - a2) * (eb - e1 * e1));
    add_quantity(t, "ancilla_two_photon", project_detection(r.state, make_pattern(n, {anc, anc})));
    add_quantity(t, "signal_one_photon", project_detection(r.state, make_pattern(n, {0})));
    add_quantity(t, "vacuum", std::norm(r.state.vacuum_amp()));
    add_quantity(t, "lost_mass", r.state.lost_mass());
    add_quantity(t, "total_probability", r.state.total_probability(), 1.0);
    add_quantity(t, "matching_residual", r.matching_residual);
    add_quantity(t, "photon_wise_pair_leakage", pair.pair_leakage_fraction);
    return {{t}, {{"ancilla_one_photon", one}, {"signal_two_photon", two}}};
}

SweepOutput bell_demo(const RunConfig &c) {
    OperatingPoint op = operating_point(c);
    double e1sq = op.epsilon1 * op.epsilon1;
    Table summary{"bell_demo",
                  {"state", "identified", "success_prob", "closed_form", "off_target", "below_two", "total_probability"}};
    Table patterns{"bell_patterns", {"state", "detector_a", "detector_b", "probability"}};
    SweepOutput out;
    double avg = 0;
    for (BellState b : kBellStates) {
        BellReport rep = bell_analyzer(make_bell_state(b, op.mode), op, c.circuit);
        bool psi = b == BellState::kPsiPlus || b == BellState::kPsiMinus;
        std::string name(to_string(b));
        summary.add_row({name, rep.identified ? std::string(to_string(*rep.identified)) : std::string("none"),
                         rep.success_prob, psi ? e1sq : op.epsilon_b - e1sq, rep.off_target, rep.below_two,
                         rep.metrics.at("total_probability")});
        for (const auto &[pair, prob] : rep.detector_pairs) {
            patterns.add_row({name, std::int64_t{pair.first}, std::int64_t{pair.second}, prob});
        }
        out.headlines.push_back({"success[" + name + "]", rep.success_prob});
        avg += rep.success_prob / 4;
    }
    out.headlines.push_back({"success_average", avg});

    Table network{"bell_network", {"step", "kind", "rail_a", "rail_b", "theta", "phi"}};
    std::int64_t step = 0;
    for (const auto &e : bell_network()) {
        network.add_row({step++, e.kind, e.rail_a, e.rail_b, e.theta, e.phi});
    }
    Table detectors{"bell_detectors", {"detector", "rail"}};
    for (const auto &[d, rail] : bell_detectors()) {
        detectors.add_row({std::int64_t{d}, rail});
    }
    out.tables = {summary, patterns, network, detectors};
    return out;
}

SweepOutput ns_demo(const RunConfig &c) {
    OperatingPoint op = operating_point(c);
    auto a = normalized(c.demo.ns_amplitudes);
    FewPhotonState in = number_superposition(op, a);
    FewPhotonState out = ns_gate(in, 0, op, c.circuit);
    FewPhotonState target = number_superposition(op, {a[0], a[1], -a[2]});
    cplx c1 = out.singles().count(0) ? inner1(op.mode, out.singles().at(0)) : 0.0;
    cplx c2 = out.doubles().count(0) ? inner2(product_state(op.mode), out.doubles().at(0)) : 0.0;
    double e1 = op.epsilon1;
    double fid = fidelity(out, target);
    Table t = quantity_table("ns_demo");
    add_quantity(t, "sigma_over_gamma", op.pulse.sigma);
    add_quantity(t, "fidelity", fid);
    add_quantity(t, "vacuum_re", out.vacuum_amp().real(), a[0]);
    add_quantity(t, "vacuum_im", out.vacuum_amp().imag(), 0.0);
    add_quantity(t, "one_photon_re", c1.real(), a[1] * e1);
    add_quantity(t, "one_photon_im", c1.imag(), 0.0);
    add_quantity(t, "two_photon_re", c2.real(), -a[2] * e1 * e1);
    add_quantity(t, "two_photon_im", c2.imag(), 0.0);
    add_quantity(t, "lost_mass", out.lost_mass());
    add_quantity(t, "total_probability", out.total_probability(), 1.0);
    add_quantity(t, "eta2", c.circuit.eta2_override.value_or(op.eta2));
    return {{t}, {{"fidelity", fid}, {"one_photon_re", c1.real()}, {"two_photon_re", c2.real()}}};
}

SweepOutput cz_demo(const RunConfig &c) {
    OperatingPoint op = operating_point(c);
    const char *names[4] = {"u1u2", "u1l2", "l1u2", "l1l2"};
    std::vector<std::string> cols{"input"};
    for (const char *n : names) {
        cols.push_back(std::string("out_") + n + "_re");
        cols.push_back(std::string("out_") + n + "_im");
    }
    cols.push_back("non_dual_rail");
    Table truth{"cz_truth_table", cols};
    SweepOutput out;
    for (int k = 0; k < 4; k++) {
        std::array<cplx, 4> in{};
        in[k] = 1;
        CircuitReport rep = cz_gate(make_logical_state(in, op.mode), op, c.circuit);
        auto amps = logical_amplitudes(rep.output_state, op.mode);
        std::vector<Cell> row{std::string(names[k])};
        for (cplx z : amps) {
            row.push_back(z.real());
            row.push_back(z.imag());
        }
        row.push_back(rep.metrics.at("non_dual_rail"));
        truth.add_row(row);
        out.headlines.push_back({std::string("diagonal[") + names[k] + "]", amps[k].real()});
    }
    auto a = normalized(c.demo.cz_amplitudes);
    CircuitReport rep = cz_gate(make_logical_state({a[0], a[1], a[2], a[3]}, op.mode), op, c.circuit);
    double e1sq = op.epsilon1 * op.epsilon1;
    Table t = quantity_table("cz_demo");
    add_quantity(t, "sigma_over_gamma", op.pulse.sigma);
    add_quantity(t, "success_prob", rep.success_prob, e1sq * e1sq);
    add_quantity(t, "fidelity", rep.fidelity_to_target);
    add_quantity(t, "lost_mass", rep.lost_mass);
    for (const char *m : {"total_probability", "non_dual_rail", "outer_transmission", "eta2", "skew"}) {
        add_quantity(t, m, rep.metrics.at(m));
    }
    out.tables = {truth, t};
    out.headlines.push_back({"success_prob", rep.success_prob});
    out.headlines.push_back({"fidelity", rep.fidelity_to_target});
    return out;
}

SweepSpec sweep_spec(const RunConfig &c) {
    SweepSpec s = c.sweep;
    s.kind = c.kind;
    s.grid = c.grid;
    return s;
}

// x column, y columns, grouping column, log-scale x.
struct PlotSpec {
    std::string x;
    std::vector<std::string> y;
    std::string group;
    bool logx = false;
};

std::optional<PlotSpec> plot_spec(const std::string &table) {
    if (table == "fig1b") {
        return PlotSpec{"sigma_over_gamma", {"eta", "half_eps1_sq"}, "beta", true};
    }
    if (table == "loss_curves") {
        return PlotSpec{"beta", {"loss_two_photon", "loss_single_pair"}, "branch", false};
    }
    if (table == "fig3") {
        return PlotSpec{"beta", {"bell_success", "cz_success"}, "", false};
    }
    if (table == "matching_points") {
        return PlotSpec{"beta", {"sigma_over_gamma"}, "branch", false};
    }
    return std::nullopt;
}

std::string py_list(const std::vector<std::string> &v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); i++) {
        s += (i ? ", " : "") + ("\"" + v[i] + "\"");
    }
    return s + "]";
}

std::string plot_script(const std::string &table, const PlotSpec &p) {
    std::ostringstream o;
    o << "# Regenerates a figure from " << table << ".csv. Needs matplotlib.\n"
      << "import csv\n"
      << "import sys\n"
      << "from collections import defaultdict\n\n"
      << "import matplotlib.pyplot as plt\n\n"
      << "CSV = \"" << table << ".csv\"\n"
      << "X = \"" << p.x << "\"\n"
      << "Y = " << py_list(p.y) << "\n"
      << "GROUP = " << (p.group.empty() ? "None" : "\"" + p.group + "\"") << "\n"
      << "LOGX = " << (p.logx ? "True" : "False") << "\n\n"
      << "series = defaultdict(lambda: defaultdict(list))\n"
      << "with open(CSV, newline=\"\") as f:\n"
      << "    for row in csv.DictReader(f):\n"
      << "        key = row[GROUP] if GROUP else \"\"\n"
      << "        for y in Y:\n"
      << "            series[(key, y)][\"x\"].append(float(row[X]))\n"
      << "            series[(key, y)][\"y\"].append(float(row[y]))\n\n"
      << "fig, ax = plt.subplots()\n"
      << "for (key, y), xy in series.items():\n"
      << "    label = f\"{y} {GROUP}={key}\" if GROUP else y\n"
      << "    ax.plot(xy[\"x\"], xy[\"y\"], label=label)\n"
      << "if LOGX:\n"
      << "    ax.set_xscale(\"log\")\n"
      << "ax.set_xlabel(X)\n"
      << "ax.legend()\n"
      << "out = sys.argv[1] if len(sys.argv) > 1 else \"" << table << ".png\"\n"
      << "fig.savefig(out, dpi=150)\n";
    return o.str();
}

void write_file(const fs::path &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write '" + path.string() + "'");
    }
    out << content;
    out.close();
    if (!out) {
        throw IoError("failed while writing '" + path.string() + "'");
    }
}

json grid_json(const GridConfig &g) {
    json j;
    j["n_points"] = g.n_points;
    j["delta_max"] = g.delta_max ? json(*g.delta_max) : json();
    j["auto_resolve"] = g.auto_resolve;
    return j;
}

bool is_demo(const std::string &e) {
    return e.size() > 5 && e.substr(e.size() - 5) == "-demo";
}

}  // namespace

SweepOutput compute(const RunConfig &c) {
    const std::string &e = c.experiment;
    if (e == "fig1b") {
        return fig1b_data(sweep_spec(c));
    }
    if (e == "loss-curves") {
        return loss_curves(sweep_spec(c));
    }
    if (e == "fig3") {
        return fig3_data(sweep_spec(c));
    }
    if (e == "matching-points") {
        return matching_points(sweep_spec(c));
    }
    if (e == "sorter-demo") {
        return sorter_demo(c);
    }
    if (e == "bell-demo") {
        return bell_demo(c);
    }
    if (e == "ns-demo") {
        return ns_demo(c);
    }
    if (e == "cz-demo") {
        return cz_demo(c);
    }
    throw std::invalid_argument("unknown experiment '" + e + "'");
}

int run(const RunConfig &c, std::ostream &log, std::ostream &err) {
    SweepOutput base;
    Table conv{"convergence", {"quantity", "value_1x", "value_2x", "abs_diff", "tolerance", "pass"}};
    bool converged = true;
    RunConfig fine = c;
    fine.grid = c.grid.refined();
    try {
        base = compute(c);
        if (c.convergence) {
            SweepOutput refined = compute(fine);
            for (const Headline &h : base.headlines) {
                double v2 = kNan;
                for (const Headline &r : refined.headlines) {
                    if (r.name == h.name) {
                        v2 = r.value;
                    }
                }
                double diff = std::abs(h.value - v2);
                bool ok = diff <= c.convergence_tolerance || (std::isnan(h.value) && std::isnan(v2));
                converged = converged && ok;
                conv.add_row({h.name, h.value, v2, diff, c.convergence_tolerance, std::int64_t{ok}});
            }
        }
    } catch (const std::exception &e) {
        err << "tlsphot: " << c.experiment << ": " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        fs::path dir(c.out_dir);
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec || !fs::is_directory(dir)) {
            throw IoError("cannot create output directory '" + c.out_dir + "'");
        }
        std::vector<std::string> files;
        for (const Table &t : base.tables) {
            std::string name = t.name + ".csv";
            write_file(dir / name, to_csv(t));
            files.push_back(name);
            if (auto p = plot_spec(t.name); p && c.plots) {
                std::string script = "plot_" + t.name + ".py";
                write_file(dir / script, plot_script(t.name, *p));
                files.push_back(script);
            }
        }
        if (c.convergence) {
            write_file(dir / "convergence.csv", to_csv(conv));
            files.push_back("convergence.csv");
        }

        json m;
        m["tool"] = "tlsphot";
        m["version"] = std::string(kVersion);
        m["experiment"] = c.experiment;
        m["config"] = to_json(c);
        m["grid"]["base"] = grid_json(c.grid);
        m["grid"]["refined"] = grid_json(fine.grid);
        m["grid"]["window_rule"] = "delta_max = max(25 sigma + |center|, 25 gamma_total) * (n_points - 1) / 4000";
        if (is_demo(c.experiment)) {
            OperatingPoint op = operating_point(c);
            m["operating_point"]["sigma"] = op.pulse.sigma;
            m["operating_point"]["epsilon1"] = op.epsilon1;
            m["operating_point"]["epsilon_b"] = op.epsilon_b;
            m["operating_point"]["eta"] = op.eta;
            m["operating_point"]["eta2"] = op.eta2;
            m["operating_point"]["grid"] = {{"delta_min", op.grid->delta_min()},
                                            {"delta_max", op.grid->delta_max()},
                                            {"n_points", op.grid->size()},
                                            {"spacing", op.grid->spacing()}};
        }
        m["tolerances"] = {{"convergence_abs", c.convergence_tolerance},
                           {"matching_sigma_closed_form", 1e-13},
                           {"matching_sigma_quadrature", 1e-10},
                           {"exchange_symmetry", 1e-9},
                           {"sfg_reverse_stray_weight", 1e-6},
                           {"matching_residual_warning", c.circuit.matching_tolerance}};
        json heads = json::object();
        for (const Headline &h : base.headlines) {
            heads[h.name] = h.value;
        }
        m["headlines"] = heads;
        m["convergence"] = {{"enabled", c.convergence}, {"passed", converged}};
        files.push_back("manifest.json");
        m["files"] = files;
        write_file(dir / "manifest.json", m.dump(2) + "\n");
        for (const std::string &f : files) {
            log << (dir / f).string() << "\n";
        }
    } catch (const IoError &e) {
        err << "tlsphot: " << e.what() << "\n";
        return kExitIo;
    }
    if (!converged) {
        err << "tlsphot: " << c.experiment << ": headline values moved by more than " << c.convergence_tolerance
            << " under grid refinement; see convergence.csv\n";
        return kExitConvergence;
    }
    return kExitOk;
}

}  // namespace tlsphot::cli
