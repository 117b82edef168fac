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

#include <iostream>

#include "CLI11.hpp"
#include "config.h"
#include "run.h"

using namespace tlsphot::cli;

namespace {

void print(const std::vector<Diagnostic> &diags, const std::string &source, std::ostream &out) {
    for (const Diagnostic &d : diags) {
        out << d.format(source) << "\n";
    }
}

// Loads the config file if one was given. Returns an exit code, or -1 to continue.
int load(const std::string &path, LoadResult &result, std::ostream &diag_out) {
    if (path.empty()) {
        return -1;
    }
    try {
        result = load_config(path);
    } catch (const IoError &e) {
        std::cerr << "tlsphot: " << e.what() << "\n";
        return kExitIo;
    }
    if (!result.parsed) {
        print(result.diagnostics, path, diag_out);
        return kExitUsage;
    }
    return -1;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Few-photon spectral-amplitude simulator for a two-level scatterer in a chiral waveguide"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(tlsphot::kVersion));

    auto *run_cmd = app.add_subcommand("run", "Run an experiment and write CSV tables, a manifest and plot scripts");
    std::string experiment;
    std::string config_path;
    std::optional<std::string> out_dir;
    std::optional<double> beta;
    std::optional<double> sigma;
    std::optional<int> grid_n;
    std::optional<double> grid_max;
    std::optional<std::string> sfg_model;
    bool no_convergence = false;
    run_cmd->add_option("experiment", experiment, "Experiment name")
        ->required()
        ->check(CLI::IsMember(kExperiments));
    run_cmd->add_option("--config", config_path, "YAML config file");
    run_cmd->add_option("--out", out_dir, "Output directory");
    run_cmd->add_option("--beta", beta, "Directional beta factor in (0, 1]; also replaces the sweep beta list");
    run_cmd->add_option("--sigma", sigma, "Pulse width in units of the waveguide decay rate");
    run_cmd->add_option("--grid-n", grid_n, "Number of grid points (odd)");
    run_cmd->add_option("--grid-max", grid_max, "Grid half-width in detuning");
    run_cmd->add_option("--sfg-model", sfg_model, "number-selective or photon-wise");
    run_cmd->add_flag("--no-convergence", no_convergence, "Skip the refined-grid convergence pass");

    auto *validate_cmd = app.add_subcommand("validate", "Check a config file and report problems");
    std::string validate_path;
    validate_cmd->add_option("--config", validate_path, "YAML config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    if (*validate_cmd) {
        LoadResult r;
        if (int code = load(validate_path, r, std::cout); code >= 0) {
            return code;
        }
        auto diags = r.diagnostics;
        auto more = check_config(r.config, r.positions);
        diags.insert(diags.end(), more.begin(), more.end());
        print(diags, validate_path, std::cout);
        return has_errors(diags) ? kExitUsage : kExitOk;
    }

    LoadResult r;
    if (int code = load(config_path, r, std::cerr); code >= 0) {
        return code;
    }
    RunConfig &c = r.config;
    c.experiment = experiment;
    if (out_dir) {
        c.out_dir = *out_dir;
    }
    if (beta) {
        c.beta = *beta;
        c.sweep.betas = {*beta};
        c.sweep.spot_betas = {*beta};
    }
    if (sigma) {
        c.sigma = *sigma;
    }
    if (grid_n) {
        c.grid.n_points = *grid_n;
    }
    if (grid_max) {
        c.grid.delta_max = *grid_max;
    }
    if (sfg_model) {
        try {
            c.circuit.sfg_model = tlsphot::parse_sfg_model(*sfg_model);
        } catch (const std::invalid_argument &e) {
            std::cerr << "tlsphot: --sfg-model: " << e.what() << "\n";
            return kExitUsage;
        }
    }
    if (no_convergence) {
        c.convergence = false;
    }
    auto diags = r.diagnostics;
    auto more = check_config(c, r.positions);
    diags.insert(diags.end(), more.begin(), more.end());
    print(diags, config_path.empty() ? "tlsphot" : config_path, std::cerr);
    if (has_errors(diags)) {
        return kExitUsage;
    }
    return run(c, std::cout, std::cerr);
}
