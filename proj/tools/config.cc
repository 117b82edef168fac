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

#include "config.h"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace tlsphot::cli {

std::string Diagnostic::format(const std::string &source) const {
    std::ostringstream out;
    out << source;
    if (line > 0) {
        out << ":" << line << ":" << column;
    }
    out << ": " << (severity == Severity::kError ? "error" : "warning") << ": " << message;
    return out.str();
}

bool has_errors(const std::vector<Diagnostic> &diags) {
    return std::any_of(diags.begin(), diags.end(),
                       [](const Diagnostic &d) { return d.severity == Diagnostic::Severity::kError; });
}

namespace {

using Severity = Diagnostic::Severity;

Position at(const YAML::Mark &m) {
    if (m.is_null()) {
        return {};
    }
    return {m.line + 1, m.column + 1};
}

const std::map<std::string, std::set<std::string>> kSections = {
    {"grid", {"n_points", "delta_max", "auto_resolve"}},
    {"tls", {"beta", "gamma_wg"}},
    {"pulse", {"kind", "sigma", "branch"}},
    {"sweep", {"betas", "sigma_min", "sigma_max", "sigma_count", "spot_betas", "check_sigmas"}},
    {"circuit", {"sfg_model", "efficiency", "compensate", "eta2", "outer_transmission"}},
    {"demo", {"one_photon_weight", "ns_amplitudes", "cz_amplitudes"}},
    {"output", {"dir", "plots"}},
    {"convergence", {"enabled", "tolerance"}},
};

class Reader {
   public:
    explicit Reader(LoadResult &r) : r_(r) {
    }

    void error(Position p, std::string msg) {
        r_.diagnostics.push_back({Severity::kError, p.line, p.column, std::move(msg)});
    }

    template <typename T>
    bool read(const YAML::Node &node, const std::string &field, T &out, const char *what) {
        r_.positions[field] = at(node.Mark());
        try {
            if (!node.IsScalar()) {
                throw YAML::BadConversion(node.Mark());
            }
            out = node.as<T>();
            return true;
        } catch (const YAML::Exception &) {
            error(at(node.Mark()), field + ": expected " + what);
            return false;
        }
    }

    bool number(const YAML::Node &n, const std::string &field, double &out) {
        return read(n, field, out, "a number");
    }

    bool integer(const YAML::Node &n, const std::string &field, int &out) {
        return read(n, field, out, "an integer");
    }

    bool flag(const YAML::Node &n, const std::string &field, bool &out) {
        return read(n, field, out, "true or false");
    }

    bool text(const YAML::Node &n, const std::string &field, std::string &out) {
        return read(n, field, out, "a string");
    }

    bool numbers(const YAML::Node &n, const std::string &field, std::vector<double> &out) {
        r_.positions[field] = at(n.Mark());
        if (!n.IsSequence()) {
            error(at(n.Mark()), field + ": expected a list of numbers");
            return false;
        }
        std::vector<double> v;
        for (size_t i = 0; i < n.size(); i++) {
            double x;
            if (!read(n[i], field, x, "a number")) {
                return false;
            }
            v.push_back(x);
        }
        r_.positions[field] = at(n.Mark());
        out = std::move(v);
        return true;
    }

    template <size_t N>
    void fixed(const YAML::Node &n, const std::string &field, std::array<double, N> &out) {
        std::vector<double> v;
        if (!numbers(n, field, v)) {
            return;
        }
        if (v.size() != N) {
            error(at(n.Mark()), field + ": expected exactly " + std::to_string(N) + " numbers");
            return;
        }
        std::copy(v.begin(), v.end(), out.begin());
    }

    template <typename Fn>
    void choice(const YAML::Node &n, const std::string &field, Fn parse) {
        std::string s;
        if (!text(n, field, s)) {
            return;
        }
        try {
            parse(s);
        } catch (const std::invalid_argument &e) {
            error(at(n.Mark()), field + ": " + e.what());
        }
    }

   private:
    LoadResult &r_;
};

void read_section(Reader &rd, const std::string &section, const std::string &key, const YAML::Node &v,
                  RunConfig &c) {
    std::string f = section + "." + key;
    double x = 0;
    if (section == "grid") {
        if (key == "n_points") {
            rd.integer(v, f, c.grid.n_points);
        } else if (key == "delta_max" && rd.number(v, f, x)) {
            c.grid.delta_max = x;
        } else if (key == "auto_resolve") {
            rd.flag(v, f, c.grid.auto_resolve);
        }
    } else if (section == "tls") {
        if (key == "beta") {
            rd.number(v, f, c.beta);
        } else {
            rd.number(v, f, c.gamma_wg);
        }
    } else if (section == "pulse") {
        if (key == "kind") {
            rd.choice(v, f, [&](const std::string &s) { c.kind = c.sweep.kind = parse_pulse_kind(s); });
        } else if (key == "sigma" && rd.number(v, f, x)) {
            c.sigma = x;
        } else if (key == "branch") {
            rd.choice(v, f, [&](const std::string &s) {
                if (s == "lower") {
                    c.branch = Branch::kLower;
                } else if (s == "upper") {
                    c.branch = Branch::kUpper;
                } else {
                    throw std::invalid_argument("unknown branch '" + s + "' (expected lower or upper)");
                }
            });
        }
    } else if (section == "sweep") {
        if (key == "betas") {
            rd.numbers(v, f, c.sweep.betas);
        } else if (key == "spot_betas") {
            rd.numbers(v, f, c.sweep.spot_betas);
        } else if (key == "check_sigmas") {
            rd.numbers(v, f, c.sweep.check_sigmas);
        } else if (key == "sigma_min") {
            rd.number(v, f, c.sweep.sigma_min);
        } else if (key == "sigma_max") {
            rd.number(v, f, c.sweep.sigma_max);
        } else {
            rd.integer(v, f, c.sweep.sigma_count);
        }
    } else if (section == "circuit") {
        if (key == "sfg_model") {
            rd.choice(v, f, [&](const std::string &s) { c.circuit.sfg_model = parse_sfg_model(s); });
        } else if (key == "efficiency") {
            rd.number(v, f, c.circuit.efficiency);
        } else if (key == "compensate") {
            rd.flag(v, f, c.circuit.compensate);
        } else if (key == "eta2" && rd.number(v, f, x)) {
            c.circuit.eta2_override = x;
        } else if (key == "outer_transmission" && rd.number(v, f, x)) {
            c.circuit.outer_transmission = x;
        }
    } else if (section == "demo") {
        if (key == "one_photon_weight") {
            rd.number(v, f, c.demo.one_photon_weight);
        } else if (key == "ns_amplitudes") {
            rd.fixed(v, f, c.demo.ns_amplitudes);
        } else {
            rd.fixed(v, f, c.demo.cz_amplitudes);
        }
    } else if (section == "output") {
        if (key == "dir") {
            rd.text(v, f, c.out_dir);
        } else {
            rd.flag(v, f, c.plots);
        }
    } else if (section == "convergence") {
        if (key == "enabled") {
            rd.flag(v, f, c.convergence);
        } else {
            rd.number(v, f, c.convergence_tolerance);
        }
    }
}

}  // namespace

LoadResult parse_config(const std::string &text) {
    LoadResult r;
    Reader rd(r);
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::ParserException &e) {
        rd.error(at(e.mark), "parse error: " + e.msg);
        return r;
    }
    r.parsed = true;
    if (root.IsNull()) {
        return r;
    }
    if (!root.IsMap()) {
        rd.error(at(root.Mark()), "top level must be a mapping of sections");
        return r;
    }
    for (const auto &kv : root) {
        std::string name = kv.first.Scalar();
        if (name == "experiment") {
            rd.text(kv.second, "experiment", r.config.experiment);
            continue;
        }
        auto sec = kSections.find(name);
        if (sec == kSections.end()) {
            rd.error(at(kv.first.Mark()), "unknown key '" + name + "'");
            continue;
        }
        if (kv.second.IsNull()) {
            continue;
        }
        if (!kv.second.IsMap()) {
            rd.error(at(kv.second.Mark()), name + ": expected a mapping");
            continue;
        }
        for (const auto &item : kv.second) {
            std::string key = item.first.Scalar();
            if (!sec->second.count(key)) {
                rd.error(at(item.first.Mark()), "unknown key '" + key + "' in section '" + name + "'");
                continue;
            }
            read_section(rd, name, key, item.second, r.config);
        }
    }
    return r;
}

LoadResult load_config(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

namespace {

class Checker {
   public:
    Checker(const std::map<std::string, Position> &pos, std::vector<Diagnostic> &out) : pos_(pos), out_(out) {
    }

    void add(Severity s, const std::string &field, const std::string &msg) {
        Position p;
        if (auto it = pos_.find(field); it != pos_.end()) {
            p = it->second;
        }
        out_.push_back({s, p.line, p.column, msg});
    }

    void require(bool ok, const std::string &field, const std::string &what, double got) {
        if (!ok) {
            std::ostringstream m;
            m << field << ": " << what << " (got " << format_double(got) << ")";
            add(Severity::kError, field, m.str());
        }
    }

    void positive(const std::string &field, double x) {
        require(x > 0 && std::isfinite(x), field, "must be positive", x);
    }

    void unit(const std::string &field, double x) {
        require(x >= 0 && x <= 1, field, "must lie in [0, 1]", x);
    }

    void beta(const std::string &field, double x) {
        require(x > 0 && x <= 1, field, "beta_dir must lie in (0, 1]", x);
    }

   private:
    const std::map<std::string, Position> &pos_;
    std::vector<Diagnostic> &out_;
};

bool grid_settings_valid(const RunConfig &c) {
    return c.grid.n_points >= 3 && c.grid.n_points % 2 == 1 && (!c.grid.delta_max || *c.grid.delta_max > 0);
}

void check_width(Checker &ck, const RunConfig &c, const std::string &field, double sigma, bool primary) {
    TlsParams p = c.tls();
    GridPtr g = grid_for_pulse(c.grid, sigma, 0.0, p.gamma_wg, p.gamma_loss);
    ResolutionReport r = check_resolution({c.kind, sigma, 0.0}, *g);
    std::ostringstream where;
    where << field << " = " << sigma << ": ";
    if (primary && r.spacing > r.recommended_spacing * (1 + 1e-12)) {
        std::ostringstream m;
        m << where.str() << "resolution: grid spacing " << r.spacing << " exceeds sigma/10 = "
          << r.recommended_spacing << "; refine grid.n_points or use grid.auto_resolve";
        ck.add(Severity::kWarning, field, m.str());
    }
    if (!r.ok()) {
        ck.add(primary ? Severity::kError : Severity::kWarning, field, where.str() + r.describe());
    }
}

}  // namespace

std::vector<Diagnostic> check_config(const RunConfig &c, const std::map<std::string, Position> &positions) {
    std::vector<Diagnostic> out;
    Checker ck(positions, out);
    if (!c.experiment.empty() && std::find(kExperiments.begin(), kExperiments.end(), c.experiment) == kExperiments.end()) {
        ck.add(Severity::kError, "experiment", "experiment: unknown experiment '" + c.experiment + "'");
    }
    ck.require(c.grid.n_points >= 3 && c.grid.n_points % 2 == 1, "grid.n_points", "must be an odd integer >= 3",
               c.grid.n_points);
    ck.require(c.grid.n_points <= 1000001, "grid.n_points", "must not exceed 1000001", c.grid.n_points);
    if (c.grid.delta_max) {
        ck.positive("grid.delta_max", *c.grid.delta_max);
    }
    ck.beta("tls.beta", c.beta);
    ck.positive("tls.gamma_wg", c.gamma_wg);
    if (c.sigma) {
        ck.positive("pulse.sigma", *c.sigma);
    }
    for (double b : c.sweep.betas) {
        ck.beta("sweep.betas", b);
    }
    if (c.sweep.betas.empty()) {
        ck.add(Severity::kError, "sweep.betas", "sweep.betas: at least one value is required");
    }
    for (double b : c.sweep.spot_betas) {
        ck.beta("sweep.spot_betas", b);
    }
    ck.positive("sweep.sigma_min", c.sweep.sigma_min);
    ck.require(c.sweep.sigma_max > c.sweep.sigma_min && std::isfinite(c.sweep.sigma_max), "sweep.sigma_max",
               "must exceed sweep.sigma_min", c.sweep.sigma_max);
    ck.require(c.sweep.sigma_count >= 2 && c.sweep.sigma_count <= 100000, "sweep.sigma_count",
               "must lie in [2, 100000]", c.sweep.sigma_count);
    for (double s : c.sweep.check_sigmas) {
        ck.positive("sweep.check_sigmas", s);
    }
    ck.unit("circuit.efficiency", c.circuit.efficiency);
    if (c.circuit.eta2_override) {
        ck.unit("circuit.eta2", *c.circuit.eta2_override);
    }
    if (c.circuit.outer_transmission) {
        ck.unit("circuit.outer_transmission", *c.circuit.outer_transmission);
    }
    ck.unit("demo.one_photon_weight", c.demo.one_photon_weight);
    auto nonzero = [](const auto &a) { return std::any_of(a.begin(), a.end(), [](double x) { return x != 0; }); };
    if (!nonzero(c.demo.ns_amplitudes)) {
        ck.add(Severity::kError, "demo.ns_amplitudes", "demo.ns_amplitudes: at least one amplitude must be nonzero");
    }
    if (!nonzero(c.demo.cz_amplitudes)) {
        ck.add(Severity::kError, "demo.cz_amplitudes", "demo.cz_amplitudes: at least one amplitude must be nonzero");
    }
    if (c.out_dir.empty()) {
        ck.add(Severity::kError, "output.dir", "output.dir: must not be empty");
    }
    ck.positive("convergence.tolerance", c.convergence_tolerance);

    if (has_errors(out) || !grid_settings_valid(c)) {
        return out;
    }
    // Resolution of the operating width against the grid the demos will build.
    if (c.sigma) {
        check_width(ck, c, "pulse.sigma", *c.sigma, true);
    } else {
        MatchingOptions m;
        m.kind = c.kind;
        try {
            double s = matching_sigma(c.tls(), c.branch, m);
            check_width(ck, c, "pulse.sigma", s, true);
        } catch (const NoCrossingError &e) {
            ck.add(Severity::kWarning, "tls.beta",
                   std::string("tls.beta: no matching width exists, demos need pulse.sigma (") + e.what() + ")");
        }
    }
    if (c.experiment.empty() || c.experiment == "fig1b") {
        for (double s : c.sweep.check_sigmas) {
            check_width(ck, c, "sweep.check_sigmas", s, false);
        }
    }
    return out;
}

nlohmann::ordered_json to_json(const RunConfig &c) {
    nlohmann::ordered_json j;
    j["experiment"] = c.experiment;
    j["grid"]["n_points"] = c.grid.n_points;
    j["grid"]["delta_max"] = c.grid.delta_max ? nlohmann::ordered_json(*c.grid.delta_max) : nlohmann::ordered_json();
    j["grid"]["auto_resolve"] = c.grid.auto_resolve;
    j["tls"]["beta"] = c.beta;
    j["tls"]["gamma_wg"] = c.gamma_wg;
    j["pulse"]["kind"] = std::string(to_string(c.kind));
    j["pulse"]["sigma"] = c.sigma ? nlohmann::ordered_json(*c.sigma) : nlohmann::ordered_json();
    j["pulse"]["branch"] = std::string(to_string(c.branch));
    j["sweep"]["betas"] = c.sweep.betas;
    j["sweep"]["sigma_min"] = c.sweep.sigma_min;
    j["sweep"]["sigma_max"] = c.sweep.sigma_max;
    j["sweep"]["sigma_count"] = c.sweep.sigma_count;
    j["sweep"]["spot_betas"] = c.sweep.spot_betas;
    j["sweep"]["check_sigmas"] = c.sweep.check_sigmas;
    j["circuit"]["sfg_model"] = std::string(to_string(c.circuit.sfg_model));
    j["circuit"]["efficiency"] = c.circuit.efficiency;
    j["circuit"]["compensate"] = c.circuit.compensate;
    j["circuit"]["eta2"] =
        c.circuit.eta2_override ? nlohmann::ordered_json(*c.circuit.eta2_override) : nlohmann::ordered_json();
    j["circuit"]["outer_transmission"] = c.circuit.outer_transmission
                                             ? nlohmann::ordered_json(*c.circuit.outer_transmission)
                                             : nlohmann::ordered_json();
    j["demo"]["one_photon_weight"] = c.demo.one_photon_weight;
    j["demo"]["ns_amplitudes"] = c.demo.ns_amplitudes;
    j["demo"]["cz_amplitudes"] = c.demo.cz_amplitudes;
    j["output"]["dir"] = c.out_dir;
    j["output"]["plots"] = c.plots;
    j["convergence"]["enabled"] = c.convergence;
    j["convergence"]["tolerance"] = c.convergence_tolerance;
    return j;
}

}  // namespace tlsphot::cli
