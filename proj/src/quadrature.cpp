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

#include "irscap/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace irscap {

namespace {

// G7/K15 nodes and weights (QUADPACK dqk15).
const double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
const double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
const double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    double value;
    double abs_value;  // integral of |f|, for the roundoff floor
    double err;
    bool operator<(const Panel& o) const { return err < o.err; }
};

Panel eval_panel(const std::function<double(double)>& f, double a, double b) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double fc = f(c);
    double res_g = fc * kWg[3];
    double res_k = fc * kWgk[7];
    double res_abs = std::fabs(fc) * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        double x = h * kXgk[j];
        double f1 = f(c - x), f2 = f(c + x);
        res_k += kWgk[j] * (f1 + f2);
        res_abs += kWgk[j] * (std::fabs(f1) + std::fabs(f2));
        if (j % 2 == 1) res_g += kWg[j / 2] * (f1 + f2);
    }
    res_g *= h;
    res_k *= h;
    res_abs *= h;
    double err = std::fabs(res_k - res_g);
    return {a, b, res_k, res_abs, err};
}

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double abs_tol, double rel_tol, int max_panels) {
    std::priority_queue<Panel> heap;
    Panel p0 = eval_panel(f, a, b);
    heap.push(p0);
    double total = p0.value, total_abs = p0.abs_value, total_err = p0.err;
    int panels = 1;
    auto target = [&]() {
        // relative accuracy at every scale, but never below the roundoff
        // floor of the accumulated |f| mass
        double t = std::min(abs_tol, rel_tol * std::fabs(total));
        return std::max(t, 100.0 * std::numeric_limits<double>::epsilon() * total_abs);
    };
    while (total_err > target()) {
        if (panels >= max_panels)
            throw numerical_error("integrate_adaptive: panel budget exhausted", total, total_err);
        Panel worst = heap.top();
        heap.pop();
        double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            total_err -= worst.err;  // interval at double resolution
            continue;
        }
        Panel l = eval_panel(f, worst.a, mid);
        Panel r = eval_panel(f, mid, worst.b);
        total += l.value + r.value - worst.value;
        total_abs += l.abs_value + r.abs_value - worst.abs_value;
        total_err += l.err + r.err - worst.err;
        heap.push(l);
        heap.push(r);
        ++panels;
    }
    return {total, total_err, b};
}

}  // namespace irscap
