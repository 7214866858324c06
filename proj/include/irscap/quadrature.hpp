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

#ifndef IRSCAP_QUADRATURE_HPP
#define IRSCAP_QUADRATURE_HPP

#include <functional>
#include <stdexcept>

namespace irscap {

/// Raised when an adaptive integration exhausts its panel budget; carries
/// the partial estimate and its error bound.
class numerical_error : public std::runtime_error {
  public:
    numerical_error(const std::string& what, double partial, double err)
        : std::runtime_error(what), partial_value(partial), error_estimate(err) {}
    double partial_value;
    double error_estimate;
};

struct QuadResult {
    double value = 0.0;
    double abs_err = 0.0;   // error estimate actually achieved
    double upper = 0.0;     // integration endpoint used
};

/// Adaptive Gauss-Kronrod (G7/K15) on [a, b]. Splits the worst panel until
/// the summed error estimate drops below max(abs_tol, rel_tol * |I|).
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double abs_tol, double rel_tol, int max_panels = 4000);

}  // namespace irscap

#endif  // IRSCAP_QUADRATURE_HPP
