// SPDX-License-Identifier: Apache-2.0
//
// zrelay: rate regions of the Gaussian Z-interference channel with a
// unidirectional digital relay link.
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

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "zrelay/core.hpp"
#include "zrelay/geometry.hpp"

namespace zrelay {

/// n uniform samples on [lo, hi], endpoints included.
inline std::vector<double> linspace(double lo, double hi, std::size_t n)
{
    if (n < 2)
        throw std::invalid_argument("linspace: need at least 2 points");
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i)
        xs[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    xs.back() = hi;
    return xs;
}

/// n power splits on [0, hi] spaced evenly in gamma(beta * snr), so the
/// private-rate term moves by equal steps. Falls back to linspace at snr 0.
inline std::vector<double> split_grid(double hi, double snr, std::size_t n)
{
    if (!(hi >= 0.0 && hi <= 1.0))
        throw std::invalid_argument("split_grid: upper end must lie in [0, 1]");
    if (!(snr > 0.0) || hi == 0.0)
        return linspace(0.0, hi, n);
    const double top = std::log1p(hi * snr);
    std::vector<double> xs = linspace(0.0, top, n);
    for (double& x : xs)
        x = std::min(hi, std::expm1(x) / snr);
    xs.front() = 0.0;
    xs.back() = hi;
    return xs;
}

/// Grid sizes for the parameter sweeps behind region computation.
struct SweepConfig
{
    std::size_t beta_points = 201;
    // Moderately strong Type II regime only.
    std::size_t alpha_points = 41;
    double alpha_halfwidth = 1.0;
    std::size_t hull_beta_points = 41;
    std::size_t ra_points = 17;

    void validate() const
    {
        if (beta_points < 2 || alpha_points < 2 || hull_beta_points < 2 || ra_points < 2)
            throw std::invalid_argument("SweepConfig: grids need at least 2 points");
        if (!(alpha_halfwidth >= 0.0))
            throw std::invalid_argument("SweepConfig: alpha half-width must be >= 0");
    }
};

/// A computed region with the regime that selected its formula.
struct RegionResult
{
    RateRegion region;
    Regime regime;
    /// Power split behind each vertex when it lies on a sampled corner curve, NaN otherwise.
    std::vector<double> vertex_beta;
    /// True where the region is the capacity region, false for achievable-only.
    bool capacity = false;
    std::string description;
    /// Relative area a convex hull added over the raw union (0 for closed forms).
    double hull_excess = 0.0;
};

struct TaggedPoint
{
    Point p;
    double beta = std::numeric_limits<double>::quiet_NaN();
};

/// Hull of the points with the tag of each surviving vertex carried over.
inline std::pair<RateRegion, std::vector<double>> region_from_tagged(const std::vector<TaggedPoint>& pts)
{
    std::vector<Point> raw;
    raw.reserve(pts.size());
    for (const auto& t : pts)
        raw.push_back(t.p);
    RateRegion region = region_from_points(std::move(raw));
    std::vector<double> tags;
    tags.reserve(region.vertices.size());
    for (const auto& v : region.vertices) {
        double tag = std::numeric_limits<double>::quiet_NaN();
        for (const auto& t : pts)
            if (t.p == v) {
                tag = t.beta;
                break;
            }
        tags.push_back(tag);
    }
    return {std::move(region), std::move(tags)};
}

inline RegionResult pentagon_result(const Pentagon& p, Regime regime, bool capacity, std::string description)
{
    RegionResult r;
    r.region = pentagon_to_region(p);
    r.regime = std::move(regime);
    r.vertex_beta.assign(r.region.vertices.size(), std::numeric_limits<double>::quiet_NaN());
    r.capacity = capacity;
    r.description = std::move(description);
    return r;
}

} // namespace zrelay
