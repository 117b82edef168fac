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

#ifndef TLSPHOT_SPECTRAL_GRID_H
#define TLSPHOT_SPECTRAL_GRID_H

#include <memory>
#include <optional>
#include <vector>

namespace tlsphot {

inline constexpr int kDefaultGridPoints = 4001;
inline constexpr double kWindowFactor = 25.0;

/// Uniform detuning grid with trapezoid weights. Detunings are in units of the waveguide rate.
class SpectralGrid {
   public:
    /// Symmetric grid [-delta_max, delta_max].
    SpectralGrid(double delta_max, int n_points);
    SpectralGrid(double delta_min, double delta_max, int n_points);

    int size() const {
        return n_;
    }
    double delta_min() const {
        return delta_min_;
    }
    double delta_max() const {
        return delta_max_;
    }
    double spacing() const {
        return h_;
    }
    double detuning(int i) const {
        return delta_min_ + i * h_;
    }
    double weight(int i) const {
        return weights_[i];
    }
    const std::vector<double> &detunings() const {
        return samples_;
    }
    const std::vector<double> &weights() const {
        return weights_;
    }
    bool symmetric() const;
    /// Index of the sample at -detuning(i). Throws on asymmetric grids.
    int mirror(int i) const;

    /// The grid of pair sums p1 + p2 has 2n-1 samples starting at 2*delta_min.
    int sum_size() const {
        return 2 * n_ - 1;
    }
    double sum_detuning(int m) const {
        return 2 * delta_min_ + m * h_;
    }

    bool operator==(const SpectralGrid &other) const;

   private:
    double delta_min_;
    double delta_max_;
    int n_;
    double h_;
    std::vector<double> samples_;
    std::vector<double> weights_;
};

using GridPtr = std::shared_ptr<const SpectralGrid>;

GridPtr make_grid(double delta_max, int n_points);

/// True when both pointers refer to equal grids.
bool same_grid(const GridPtr &a, const GridPtr &b);
void require_same_grid(const GridPtr &a, const GridPtr &b);

/// How to lay out a grid for a given pulse.
///
/// Without an explicit window the half-width is max(25 sigma + |center|, 25 Gamma) scaled by
/// (n_points - 1) / 4000, so the spacing is independent of n_points and adding points widens
/// the window.
struct GridConfig {
    int n_points = kDefaultGridPoints;
    std::optional<double> delta_max;
    /// Raise n_points until the spacing is at most a tenth of the narrowest spectral feature.
    bool auto_resolve = false;

    /// Twice the window at the same spacing.
    GridConfig refined() const;
};

GridPtr grid_for_pulse(const GridConfig &config, double sigma, double center = 0.0, double gamma_wg = 1.0,
                       double gamma_loss = 0.0);

}  // namespace tlsphot

#endif
