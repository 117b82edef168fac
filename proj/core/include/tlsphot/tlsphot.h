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

#ifndef TLSPHOT_TLSPHOT_H
#define TLSPHOT_TLSPHOT_H

#include "tlsphot/circuits.h"
#include "tlsphot/errors.h"
#include "tlsphot/mode_ops.h"
#include "tlsphot/numerics.h"
#include "tlsphot/photonic_state.h"
#include "tlsphot/pulse.h"
#include "tlsphot/spectral_grid.h"
#include "tlsphot/sweeps.h"
#include "tlsphot/table.h"
#include "tlsphot/tls.h"
#include "tlsphot/version.h"

#endif
