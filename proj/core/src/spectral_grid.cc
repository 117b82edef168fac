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

#include "tlsphot/spectral_grid.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tlsphot/errors.h"

namespace tlsphot {

SpectralGrid::SpectralGrid(double delta_max, int n_points) : SpectralGrid(-delta_max, delta_max, n_points) {
}

SpectralGrid::SpectralGrid(double delta_min, double delta_max, int n_points)
    : delta_min_(delta_min), delta_max_(delta_max), n_(n_points) {
    if (n_points < 3 || n_points % 2 == 0) {
        throw std::invalid_argument("grid needs an odd number of points >= 3, got " + std::to_string(n_points));
    }
    if (!(delta_max > delta_min) || !std::isfinite(delta_min) || !std::isfinite(delta_max)) {
        throw std::invalid_argument("grid bounds must be finite with delta_min < delta_max");
    }
    h_ = (delta_max - delta_min) / (n_points - 1);
    samples_.resize(n_);
    weights_.assign(n_, h_);
    for (int i = 0; i < n_; i++) {
        samples_[i] = delta_min_ + i * h_;
    }
    samples_[n_ - 1] = delta_max_;
    weights_[0] = h_ / 2;
    weights_[n_ - 1] = h_ / 2;
}

bool SpectralGrid::symmetric() const {
    return delta_min_ == -delta_max_;
}

int SpectralGrid::mirror(int i) const {
    if (!symmetric()) {
        throw std::invalid_argument("time reversal needs a grid symmetric about zero detuning");
    }
    return n_ - 1 - i;
}

bool SpectralGrid::operator==(const SpectralGrid &other) const {
    return n_ == other.n_ && delta_min_ == other.delta_min_ && delta_max_ == other.delta_max_;
}

GridPtr make_grid(double delta_max, int n_points) {
    return std::make_shared<const SpectralGrid>(delta_max, n_points);
}

bool same_grid(const GridPtr &a, const GridPtr &b) {
    if (a == b) {
        return true;
    }
    return a && b && *a == *b;
}

void require_same_grid(const GridPtr &a, const GridPtr &b) {
    if (!same_grid(a, b)) {
        throw GridMismatchError();
    }
}

GridConfig GridConfig::refined() const {
    GridConfig r = *this;
    r.n_points = 2 * n_points - 1;
    if (delta_max) {
        r.delta_max = 2 * *delta_max;
    }
    return r;
}

GridPtr grid_for_pulse(const GridConfig &config, double sigma, double center, double gamma_wg, double gamma_loss) {
    if (!(sigma > 0)) {
        throw DomainError("pulse width must be positive");
    }
    int n = config.n_points;
    double window;
    if (config.delta_max) {
        window = *config.delta_max;
    } else {
        double base = std::max(kWindowFactor * sigma + std::abs(center), kWindowFactor * gamma_wg);
        window = base * (n - 1) / (kDefaultGridPoints - 1);
    }
    if (config.auto_resolve) {
        double feature = std::min(sigma, (gamma_wg + gamma_loss) / 2);
        double h_target = feature / 10;
        double needed = std::ceil(2 * window / h_target) + 1;
        if (needed > n) {
            n = (int)needed;
            if (n % 2 == 0) {
                n++;
            }
        }
    }
    return make_grid(window, n);
}

}  // namespace tlsphot
