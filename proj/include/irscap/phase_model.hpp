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

#ifndef IRSCAP_PHASE_MODEL_HPP
#define IRSCAP_PHASE_MODEL_HPP

#include <cstddef>
#include <vector>

namespace irscap {

/// Parameters of the phase-dependent reflection amplitude law
///   alpha(phi) = (1 - kappa_min) * ((sin(phi - vartheta) + 1) / 2)^xi + kappa_min.
/// kappa_min = 1 or xi = 0 collapses it to the ideal unit-amplitude model.
struct PhaseShiftProfile {
    double kappa_min = 0.8;
    double xi = 1.6;
    double vartheta = 0.0;  // radians

    PhaseShiftProfile() = default;
    PhaseShiftProfile(double kappa_min_, double xi_, double vartheta_);

    bool ideal() const { return kappa_min == 1.0 || xi == 0.0; }
    static PhaseShiftProfile ideal_profile() { return PhaseShiftProfile(1.0, 0.0, 0.0); }
};

/// Wrap an angle to the principal range [-pi, pi).
double wrap_phase(double phi);

/// Phase shifts of the reflecting elements, wrapped on construction.
struct PhaseVector {
    std::vector<double> phases;

    PhaseVector() = default;
    explicit PhaseVector(std::vector<double> raw);
    std::size_t size() const { return phases.size(); }
    double operator[](std::size_t i) const { return phases[i]; }
};

/// Reflection amplitude in [kappa_min, 1].
double amplitude(double phi, const PhaseShiftProfile& profile);

/// d alpha / d phi. Exactly 0 for the ideal profile, and 0 by convention at
/// the trough singularity that appears when xi < 1.
double amplitude_derivative(double phi, const PhaseShiftProfile& profile);

}  // namespace irscap

#endif  // IRSCAP_PHASE_MODEL_HPP
