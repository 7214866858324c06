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

#ifndef IRSCAP_SPECFUN_HPP
#define IRSCAP_SPECFUN_HPP

#include <vector>

#include "irscap/signed_log.hpp"

namespace irscap {
namespace specfun {

/// ln Gamma(x) for x > 0. Throws std::invalid_argument for non-positive
/// or non-finite x.
double log_gamma(double x);

/// ln K_nu(x), modified Bessel function of the second kind, integer order
/// nu >= 0, x > 0. Computed from exponentially scaled K_0, K_1 followed by
/// the upward three-term recurrence carried in the log domain, so large x
/// and large orders neither underflow nor overflow.
double log_bessel_k(int order, double x);

/// ln K_nu(x) for nu = 0..max_order in one upward sweep.
std::vector<double> log_bessel_k_ladder(int max_order, double x);

/// Signed cofactors of a q x q matrix, stored in log domain.
struct CofactorTable {
    int q = 0;
    std::vector<SignedLog> entries;  // row-major, entries[(l-1)*q + (k-1)]

    const SignedLog& at(int l, int k) const { return entries[(l - 1) * q + (k - 1)]; }
    SignedLog& at(int l, int k) { return entries[(l - 1) * q + (k - 1)]; }
};

/// Cofactors of the Gamma-entry matrix {G}_{m,n} = Gamma(p-q+m+n-1).
/// Requires p >= q >= 1. Minors are evaluated by LU on the matrix with the
/// Gamma row/column scales extracted first, so the table stays finite well
/// past the point where the raw entries overflow.
CofactorTable gamma_cofactors(int q, int p);

/// ln det of the Gamma-entry matrix above (always positive).
double log_det_gamma_matrix(int q, int p);

/// Signed log-determinant of a dense matrix given in signed-log form
/// (row-major q x q). LU with partial pivoting on a row-scaled copy.
SignedLog signed_log_det(const std::vector<SignedLog>& m, int q);

}  // namespace specfun
}  // namespace irscap

#endif  // IRSCAP_SPECFUN_HPP
