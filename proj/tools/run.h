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

#ifndef TLSPHOT_TOOLS_RUN_H
#define TLSPHOT_TOOLS_RUN_H

#include <ostream>

#include "config.h"

namespace tlsphot::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitIo = 1,
    kExitUsage = 2,
    kExitConvergence = 3,
};

/// Evaluates the configured experiment on the configured grid. Throws on bad parameters.
SweepOutput compute(const RunConfig &config);

/// Computes, checks convergence and writes every artifact into config.out_dir.
int run(const RunConfig &config, std::ostream &log, std::ostream &err);

}  // namespace tlsphot::cli

#endif
