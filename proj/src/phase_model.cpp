// SPDX-License-Identifier: Apache-2.0
//
// irscap -- ergodic capacity of IRS-assisted MIMO links from large-scale statistics
// Copyright (C) 2026 the irscap developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "irscap/phase_model.hpp"

#include <cmath>
#include <stdexcept>

namespace irscap {

PhaseShiftProfile::PhaseShiftProfile(double kappa_min_, double xi_, double vartheta_)
    : kappa_min(kappa_min_), xi(xi_), vartheta(vartheta_) {
    if (!(kappa_min >= 0.0 && kappa_min <= 1.0) || !std::isfinite(kappa_min))
        throw std::invalid_argument("PhaseShiftProfile: kappa_min must be in [0, 1]");
    if (!(xi >= 0.0) || !std::isfinite(xi))
        throw std::invalid_argument("PhaseShiftProfile: xi must be >= 0");
    if (!(vartheta >= 0.0) || !std::isfinite(vartheta))
        throw std::invalid_argument("PhaseShiftProfile: vartheta must be >= 0");
}

double wrap_phase(double phi) {
    // atan2-based wrap; maps +pi to -pi so the range is [-pi, pi).
    double w = std::atan2(std::sin(phi), std::cos(phi));
    if (w == M_PI) w = -M_PI;
    return w;
}

PhaseVector::PhaseVector(std::vector<double> raw) : phases(std::move(raw)) {
    for (auto& p : phases) {
        if (!std::isfinite(p)) throw std::invalid_argument("PhaseVector: non-finite phase");
        p = wrap_phase(p);
    }
}

double amplitude(double phi, const PhaseShiftProfile& profile) {
    if (profile.ideal()) return 1.0;
    double base = (std::sin(wrap_phase(phi) - profile.vartheta) + 1.0) / 2.0;
    double a = (1.0 - profile.kappa_min) * std::pow(base, profile.xi) + profile.kappa_min;
    if (a > 1.0) a = 1.0;  // guard roundoff at the peak
    return a;
}

double amplitude_derivative(double phi, const PhaseShiftProfile& profile) {
    if (profile.ideal()) return 0.0;
    double d = wrap_phase(phi) - profile.vartheta;
    double base = (std::sin(d) + 1.0) / 2.0;
    if (base == 0.0) {
        // trough: derivative is 0 for xi > 1, and defined as 0 (subgradient
        // convention) at the xi < 1 singularity
        return 0.0;
    }
    return 0.5 * (1.0 - profile.kappa_min) * profile.xi * std::cos(d) *
           std::pow(base, profile.xi - 1.0);
}

}  // namespace irscap
