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

#ifndef TLSPHOT_TOOLS_CONFIG_H
#define TLSPHOT_TOOLS_CONFIG_H

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "tlsphot/tlsphot.h"

namespace tlsphot::cli {

inline const std::vector<std::string> kExperiments = {"fig1b",    "loss-curves", "fig3",   "sorter-demo",
                                                      "bell-demo", "ns-demo",    "cz-demo", "matching-points"};

struct DemoSettings {
    double one_photon_weight = 0.5;
    std::array<double, 3> ns_amplitudes{1.0, 1.0, 1.0};
    std::array<double, 4> cz_amplitudes{0.5, 0.5, 0.5, 0.5};
};

struct RunConfig {
    std::string experiment;
    GridConfig grid{};
    double beta = 1.0;
    double gamma_wg = 1.0;
    PulseKind kind = PulseKind::kLorentzian;
    std::optional<double> sigma;
    Branch branch = Branch::kUpper;
    SweepSpec sweep{};
    CircuitOptions circuit{};
    DemoSettings demo{};
    std::string out_dir = "tlsphot-out";
    bool plots = true;
    bool convergence = true;
    double convergence_tolerance = 1e-3;

    TlsParams tls() const {
        return TlsParams::from_beta(beta, gamma_wg);
    }
};

struct Diagnostic {
    enum class Severity { kError, kWarning };
    Severity severity = Severity::kError;
    int line = 0;  // 1-based; 0 when the problem has no source position
    int column = 0;
    std::string message;

    std::string format(const std::string &source) const;
};

bool has_errors(const std::vector<Diagnostic> &diags);

struct Position {
    int line = 0;
    int column = 0;
};

struct LoadResult {
    RunConfig config;
    std::vector<Diagnostic> diagnostics;
    std::map<std::string, Position> positions;  // dotted field name -> where its value was written
    bool parsed = false;

    bool ok() const {
        return !has_errors(diagnostics);
    }
};

class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Parses config text. Never throws on bad content; problems land in diagnostics.
LoadResult parse_config(const std::string &text);
/// Reads and parses a file; throws IoError when it cannot be read.
LoadResult load_config(const std::string &path);

/// Range and resolution checks on a fully assembled config (after flag overrides).
std::vector<Diagnostic> check_config(const RunConfig &config, const std::map<std::string, Position> &positions = {});

nlohmann::ordered_json to_json(const RunConfig &config);

}  // namespace tlsphot::cli

#endif
