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

#ifndef IRSCAP_CHANNEL_MODEL_HPP
#define IRSCAP_CHANNEL_MODEL_HPP

#include <Eigen/Dense>
#include <vector>

#include "irscap/phase_model.hpp"

namespace irscap {

/// Antenna/element counts of the link. N = N_H * N_V reflecting elements.
struct SystemDims {
    int tx = 4;   // M
    int rx = 4;   // K
    int irs_h = 4;
    int irs_v = 4;

    SystemDims() = default;
    SystemDims(int tx_, int rx_, int irs_h_, int irs_v_);
    int irs() const { return irs_h * irs_v; }
};

/// Which side of the cascade carries the residual correlation.
enum class ReductionCase {
    rx_uncorrelated,  // outer dimension = K, inner pair = (M, N)
    tx_uncorrelated,  // outer dimension = M, inner pair = (K, N)
};

/// Generic dimensions of the reduced random-matrix ensemble: the inner
/// Gaussian factor is inner_max x inner_min, the outer factor is
/// outer x inner_min, and streams = min(outer, inner_min) eigenvalues
/// are nonzero.
struct EnsembleDims {
    int outer = 1;      // a
    int inner_min = 1;  // q
    int inner_max = 1;  // p
    int streams = 1;    // s = min(outer, inner_min)

    EnsembleDims() = default;
    EnsembleDims(int outer_, int inner_min_, int inner_max_);
    static EnsembleDims from_system(const SystemDims& dims, ReductionCase which);
};

/// Correlation matrices of the two hops. R1 and T2 both describe the IRS
/// and are identical by construction.
struct CorrelationSet {
    Eigen::MatrixXd r1;  // N x N (IRS)
    Eigen::MatrixXd t1;  // M x M (transmitter)
    Eigen::MatrixXd r2;  // K x K (receiver)
    Eigen::MatrixXd t2;  // N x N (IRS, same as r1)
};

/// IRS spatial correlation on a uniform planar array: entry (m,n) is
/// sinc(2 ||u_m - u_n|| / wavelength) with u_k the element position on the
/// grid; sinc(x) = sin(pi x)/(pi x).
Eigen::MatrixXd irs_correlation(int n_h, int n_v, double d_h, double d_v, double wavelength);

/// Exponential correlation rho^|i-j| for a uniform linear array.
Eigen::MatrixXd ula_correlation(int n, double rho);

/// Linear path loss beta = 10^(-C_dB/10) * d^(-nu) with C the attenuation
/// at 1 m in dB.
double path_loss(double c_db, double nu, double d);

/// Eigenvalues of a Hermitian PSD matrix, sorted descending.
std::vector<double> eigen_spectrum(const Eigen::MatrixXd& m);

/// Composite per-stream gains. Entries are pairwise distinct unless the
/// whole vector is uniform, in which case `uniform` is set and the exact
/// equal-gain kernel applies downstream.
struct GainVector {
    std::vector<double> gammas;
    std::vector<double> amplitudes;  // alpha(phi_i), for the phase chain rule
    std::vector<double> phases;
    bool uniform = false;
    bool jitter_applied = false;

    std::size_t size() const { return gammas.size(); }
};

/// Controls how exactly-degenerate gain vectors are handled: density-only
/// consumers may keep a uniform vector (exact kernel); gradient consumers
/// need distinct entries.
enum class DegenerateGains { keep_uniform, force_jitter };

/// Relative pairwise gap below which the deterministic jitter kicks in,
/// and the per-entry jitter magnitude. Clusters tighter than this are
/// numerically indistinguishable to the alternating cofactor sums.
inline constexpr double kGainJitterEps = 1e-4;

/// gamma_i = beta * p_i * alpha^2(phi_i) * prod_j spectra[j][i], spectra
/// sorted descending and paired by index (dominant-mode pairing).
GainVector assemble_gains(const EnsembleDims& dims,
                          const std::vector<std::vector<double>>& spectra,
                          const PhaseShiftProfile& profile, const PhaseVector& phases,
                          const std::vector<double>& power, double beta_product,
                          DegenerateGains mode = DegenerateGains::keep_uniform);

}  // namespace irscap

#endif  // IRSCAP_CHANNEL_MODEL_HPP
