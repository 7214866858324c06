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

#ifndef IRSCAP_EIGEN_PDF_HPP
#define IRSCAP_EIGEN_PDF_HPP

#include <vector>

#include "irscap/channel_model.hpp"
#include "irscap/signed_log.hpp"
#include "irscap/specfun.hpp"

namespace irscap {

/// Closed-form marginal PDF of an unordered nonzero eigenvalue of the
/// cascaded ensemble: an inner inner_max x inner_min complex Gaussian with
/// per-column gains, its Gram spectrum forming the diagonal seen by an
/// outer outer x inner_min complex Gaussian.
///
/// Two kernels cover the gain configurations:
///  - distinct gains: Bessel-column determinant expanded over cofactors of
///    the gain Vandermonde matrix, divided by the Vandermonde determinant;
///  - uniform gains: the one-gain ensemble, expanded over cofactors of the
///    Gamma-entry matrix (exact, no jitter needed).
/// Everything is accumulated in signed-log form; each evaluation
/// exponentiates once.
class MarginalEigenPDF {
  public:
    /// Builds the density for a gain vector. Throws std::invalid_argument if
    /// gains are non-positive, or contain duplicates within 1e-9 relative
    /// without being flagged uniform (callers jitter via assemble_gains).
    MarginalEigenPDF(const EnsembleDims& dims, const GainVector& gains);

    const EnsembleDims& dims() const { return dims_; }
    const std::vector<double>& gains() const { return gains_; }
    bool uniform_kernel() const { return uniform_; }
    double max_gain() const { return max_gain_; }

    /// f(lambda) >= 0, lambda > 0.
    double density(double lambda) const;

    /// Analytic d f / d gamma_n, n in 1..inner_min. Distinct-gain kernel only.
    double density_dgamma(double lambda, int n) const;

    /// Chain rule d f / d phi_n = (d gamma_n / d phi_n) * (d f / d gamma_n)
    /// with gamma_n proportional to alpha^2(phi_n). Returns exactly 0 for
    /// the ideal profile.
    double density_dphi(double lambda, int n, const PhaseShiftProfile& profile,
                        const PhaseVector& phases) const;

  private:
    EnsembleDims dims_;
    std::vector<double> gains_;
    bool uniform_ = false;
    double max_gain_ = 0.0;

    // distinct kernel
    SignedLog log_vandermonde_;                // prod_{i<j} (g_j - g_i)
    specfun::CofactorTable vand_cof_;          // cofactors of [g_j^{m-1}]
    std::vector<SignedLog> vdm_minus_;         // vandermonde of gains \ {j}
    std::vector<std::vector<double>> esym_minus_;    // log e_m(gains \ {j})
    std::vector<std::vector<double>> esym_minus2_;   // log e_m(gains \ {j,n})
    std::vector<double> log_ak_;               // -lgamma(a-q+k) - lgamma(p-q+k)
    double gain_exp_ = 0.0;                    // q - 1 - (p+a)/2
    int bessel_order_ = 0;                     // |p - a|

    // uniform kernel
    double gbar_ = 1.0;
    specfun::CofactorTable gamma_cof_;
    double log_norm_const_ = 0.0;              // ln K of the Gamma-product constant

    double density_uniform(double x) const;    // x = lambda / gbar
};

/// Convenience wrapper (spec operation name).
MarginalEigenPDF build_marginal(const EnsembleDims& dims, const GainVector& gains);

/// GainVector from raw gammas, no flags set (duplicates will error in
/// build_marginal; use assemble_gains for the jitter/uniform policies).
GainVector make_gain_vector(std::vector<double> gammas);

/// Log joint density of the ordered inner Gram spectrum
/// 0 < c_1 < ... < c_q at the gain vector; inner_max = p.
/// Throws std::invalid_argument for unordered or non-positive c.
double joint_pdf_log(const std::vector<double>& c, const GainVector& gains, int p);

}  // namespace irscap

#endif  // IRSCAP_EIGEN_PDF_HPP
