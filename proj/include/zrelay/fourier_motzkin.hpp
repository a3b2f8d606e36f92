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
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zrelay/geometry.hpp"

namespace zrelay {

/// sum_i coeffs[i] * x_i <= rhs
struct Inequality
{
    std::vector<double> coeffs;
    double rhs = 0.0;
};

/// Small system of linear inequalities over named real variables.
class LinearSystem
{
public:
    LinearSystem() = default;
    explicit LinearSystem(std::vector<std::string> names)
    {
        for (auto& n : names)
            add_variable(std::move(n));
    }

    std::size_t add_variable(std::string name)
    {
        if (index_.contains(name))
            throw std::invalid_argument("LinearSystem: duplicate variable " + name);
        index_.emplace(name, names_.size());
        names_.push_back(std::move(name));
        for (auto& row : rows_)
            row.coeffs.push_back(0.0);
        return names_.size() - 1;
    }

    [[nodiscard]] std::size_t index_of(const std::string& name) const
    {
        auto it = index_.find(name);
        if (it == index_.end())
            throw std::invalid_argument("LinearSystem: undeclared variable " + name);
        return it->second;
    }

    /// sum terms <= rhs
    void add_le(const std::vector<std::pair<std::string, double>>& terms, double rhs)
    {
        Inequality row{std::vector<double>(names_.size(), 0.0), rhs};
        for (const auto& [name, coeff] : terms)
            row.coeffs[index_of(name)] += coeff;
        rows_.push_back(std::move(row));
    }

    /// sum terms >= rhs
    void add_ge(const std::vector<std::pair<std::string, double>>& terms, double rhs)
    {
        auto negated = terms;
        for (auto& t : negated)
            t.second = -t.second;
        add_le(negated, -rhs);
    }

    void add_eq(const std::vector<std::pair<std::string, double>>& terms, double rhs)
    {
        add_le(terms, rhs);
        add_ge(terms, rhs);
    }

    void add_nonnegative(const std::string& name) { add_ge({{name, 1.0}}, 0.0); }

    [[nodiscard]] const std::vector<std::string>& variables() const { return names_; }
    [[nodiscard]] const std::vector<Inequality>& rows() const { return rows_; }

    [[nodiscard]] bool satisfied(const std::vector<double>& x, double slack = kBitsTol) const
    {
        for (const auto& row : rows_) {
            double lhs = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i)
                lhs += row.coeffs[i] * x[i];
            if (lhs > row.rhs + slack)
                return false;
        }
        return true;
    }

private:
    std::vector<std::string> names_;
    std::map<std::string, std::size_t> index_;
    std::vector<Inequality> rows_;
};

namespace detail {

struct TrackedRow
{
    std::vector<double> coeffs;
    double rhs = 0.0;
    std::uint64_t history = 0; // original rows this one combines
};

inline bool normalize_row(TrackedRow& row)
{
    double m = 0.0;
    for (double c : row.coeffs)
        m = std::max(m, std::abs(c));
    if (m == 0.0)
        return false;
    for (double& c : row.coeffs)
        c /= m;
    row.rhs /= m;
    return true;
}

// Removes duplicate directions, keeping the tightest right-hand side.
inline void dedupe(std::vector<TrackedRow>& rows)
{
    std::vector<TrackedRow> out;
    for (auto& r : rows) {
        auto same = std::find_if(out.begin(), out.end(), [&](const TrackedRow& o) {
            for (std::size_t i = 0; i < r.coeffs.size(); ++i)
                if (std::abs(o.coeffs[i] - r.coeffs[i]) > 1e-12)
                    return false;
            return true;
        });
        if (same == out.end())
            out.push_back(std::move(r));
        else if (r.rhs < same->rhs)
            *same = std::move(r);
    }
    rows = std::move(out);
}

} // namespace detail

/// Projection of the feasible set of `sys` onto (keep.first, keep.second),
/// intersected with the non-negative quadrant. All other variables are
/// eliminated pairwise (Fourier-Motzkin); Chernikov's rule prunes rows built
/// from too many originals, and on the final 2-D system each row is dropped
/// when re-enumerating the vertices without it leaves the set unchanged.
/// Returns an empty region for an infeasible system; throws
/// UnboundedRegionError when the projection is unbounded.
inline RateRegion fourier_motzkin_project(const LinearSystem& sys,
                                          const std::pair<std::string, std::string>& keep)
{
    const std::size_t k1 = sys.index_of(keep.first);
    const std::size_t k2 = sys.index_of(keep.second);
    if (k1 == k2)
        throw std::invalid_argument("fourier_motzkin_project: kept variables must differ");
    if (sys.rows().size() > 64)
        throw std::invalid_argument("fourier_motzkin_project: at most 64 rows supported");

    std::vector<detail::TrackedRow> rows;
    for (std::size_t i = 0; i < sys.rows().size(); ++i) {
        detail::TrackedRow r{sys.rows()[i].coeffs, sys.rows()[i].rhs, std::uint64_t{1} << i};
        if (!detail::normalize_row(r)) {
            if (r.rhs < -kBitsTol)
                return {};
            continue;
        }
        rows.push_back(std::move(r));
    }
    detail::dedupe(rows);

    int eliminated = 0;
    for (std::size_t v = 0; v < sys.variables().size(); ++v) {
        if (v == k1 || v == k2)
            continue;
        std::vector<detail::TrackedRow> pos, neg, next;
        for (auto& r : rows) {
            if (r.coeffs[v] > 1e-15)
                pos.push_back(std::move(r));
            else if (r.coeffs[v] < -1e-15)
                neg.push_back(std::move(r));
            else {
                r.coeffs[v] = 0.0;
                next.push_back(std::move(r));
            }
        }
        ++eliminated;
        for (const auto& p : pos) {
            for (const auto& n : neg) {
                const std::uint64_t history = p.history | n.history;
                if (std::popcount(history) > eliminated + 1)
                    continue;
                detail::TrackedRow c;
                c.history = history;
                const double sp = 1.0 / p.coeffs[v];
                const double sn = -1.0 / n.coeffs[v];
                c.coeffs.resize(p.coeffs.size());
                for (std::size_t i = 0; i < c.coeffs.size(); ++i)
                    c.coeffs[i] = sp * p.coeffs[i] + sn * n.coeffs[i];
                c.coeffs[v] = 0.0;
                c.rhs = sp * p.rhs + sn * n.rhs;
                if (!detail::normalize_row(c)) {
                    if (c.rhs < -kBitsTol)
                        return {};
                    continue;
                }
                next.push_back(std::move(c));
            }
        }
        rows = std::move(next);
        detail::dedupe(rows);
    }

    std::vector<HalfPlane> planes;
    for (const auto& r : rows)
        planes.push_back(HalfPlane{r.coeffs[k1], r.coeffs[k2], r.rhs}.normalized());

    const RateRegion full = region_from_halfplanes(planes);
    if (full.empty())
        return full;
    for (std::size_t i = 0; i < planes.size();) {
        std::vector<HalfPlane> without = planes;
        without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
        bool redundant = false;
        try {
            redundant = hausdorff_distance(full, region_from_halfplanes(without)) <= kBitsTol;
        } catch (const UnboundedRegionError&) {
            redundant = false;
        }
        if (redundant)
            planes = std::move(without);
        else
            ++i;
    }
    RateRegion out = region_from_halfplanes(planes);
    out.halfplanes = planes;
    return out;
}

} // namespace zrelay
