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

#include <catch_amalgamated.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <random>
#include <vector>

#include "zrelay/fourier_motzkin.hpp"

using namespace zrelay;
using Catch::Approx;

namespace {

// Oracle: enumerate every vertex of the full-dimensional polytope by solving
// each n-subset of rows as equalities, keep the feasible ones, and take the
// hull of their (keep1, keep2) coordinates. Needs a bounded system.
RateRegion projection_by_vertex_enumeration(const LinearSystem& sys, std::size_t k1, std::size_t k2)
{
    const auto& rows = sys.rows();
    const std::size_t n = sys.variables().size();
    std::vector<Point> pts;
    std::vector<std::size_t> pick(n);
    std::vector<bool> mask(rows.size(), false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(n), true);
    do {
        std::size_t j = 0;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (mask[i])
                pick[j++] = i;
        Eigen::MatrixXd a(n, n);
        Eigen::VectorXd b(n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c)
                a(r, c) = rows[pick[r]].coeffs[c];
            b(r) = rows[pick[r]].rhs;
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
        if (!lu.isInvertible())
            continue;
        const Eigen::VectorXd x = lu.solve(b);
        std::vector<double> xv(x.data(), x.data() + n);
        if (sys.satisfied(xv, 1e-9))
            pts.push_back({xv[k1], xv[k2]});
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return region_from_points(pts);
}

} // namespace

TEST_CASE("linear system bookkeeping", "[fm]")
{
    LinearSystem sys({"x", "y"});
    CHECK_THROWS(sys.add_variable("x"));
    CHECK_THROWS(sys.add_le({{"z", 1.0}}, 1.0));
    sys.add_eq({{"x", 1.0}, {"y", -1.0}}, 0.0);
    CHECK(sys.rows().size() == 2);
    CHECK(sys.satisfied({1.0, 1.0}));
    CHECK_FALSE(sys.satisfied({1.0, 1.1}));
    sys.add_variable("z");
    CHECK(sys.rows()[0].coeffs.size() == 3);
}

TEST_CASE("two-user split toy system", "[fm]")
{
    // S1 <= 1, S2 + T2 <= 1.5, R1 = S1, R2 = S2 + T2, all non-negative.
    LinearSystem sys({"S1", "S2", "T2", "R1", "R2"});
    sys.add_le({{"S1", 1.0}}, 1.0);
    sys.add_le({{"S2", 1.0}, {"T2", 1.0}}, 1.5);
    for (const char* v : {"S1", "S2", "T2"})
        sys.add_nonnegative(v);
    sys.add_eq({{"R1", 1.0}, {"S1", -1.0}}, 0.0);
    sys.add_eq({{"R2", 1.0}, {"S2", -1.0}, {"T2", -1.0}}, 0.0);
    const auto r = fourier_motzkin_project(sys, {"R1", "R2"});
    const Pentagon p = region_to_pentagon(r);
    CHECK(p.r1_max == Approx(1.0));
    CHECK(p.r2_max == Approx(1.5));
    CHECK(p.sum_max == Approx(2.5));
    CHECK(r.halfplanes.size() == 2);

    SECTION("a sum constraint on the split variables becomes the pentagon diagonal")
    {
        sys.add_le({{"S1", 1.0}, {"T2", 1.0}}, 2.0);
        sys.add_le({{"S2", 1.0}}, 0.5);
        const Pentagon q = region_to_pentagon(fourier_motzkin_project(sys, {"R1", "R2"}));
        CHECK(q.r1_max == Approx(1.0));
        CHECK(q.r2_max == Approx(1.5));
        CHECK(q.sum_max == Approx(2.5));
        sys.add_le({{"S1", 1.0}, {"T2", 1.0}}, 1.2);
        const Pentagon s = region_to_pentagon(fourier_motzkin_project(sys, {"R1", "R2"}));
        CHECK(s.r2_max == Approx(1.5));
        CHECK(s.sum_max == Approx(1.7));
    }
}

TEST_CASE("infeasible and unbounded systems", "[fm]")
{
    LinearSystem sys({"x", "y", "z"});
    sys.add_le({{"x", 1.0}, {"z", 1.0}}, -1.0);
    sys.add_nonnegative("z");
    sys.add_le({{"y", 1.0}}, 1.0);
    CHECK(fourier_motzkin_project(sys, {"x", "y"}).empty());

    LinearSystem open({"x", "y", "z"});
    open.add_le({{"x", 1.0}, {"z", -1.0}}, 1.0);
    open.add_le({{"y", 1.0}}, 1.0);
    CHECK_THROWS_AS(fourier_motzkin_project(open, {"x", "y"}), UnboundedRegionError);
    CHECK_THROWS(fourier_motzkin_project(open, {"x", "x"}));
}

TEST_CASE("projection matches vertex enumeration", "[fm][property]")
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0), rhs(0.5, 3.0);
    int checked = 0;
    for (int n = 0; n < 60; ++n) {
        LinearSystem sys({"a", "b", "c", "d"});
        for (const char* v : {"a", "b", "c", "d"}) {
            sys.add_nonnegative(v);
            sys.add_le({{v, 1.0}}, 4.0);
        }
        for (int k = 0; k < 4; ++k)
            sys.add_le({{"a", coeff(rng)}, {"b", coeff(rng)}, {"c", coeff(rng)}, {"d", coeff(rng)}}, rhs(rng));
        const auto fm = fourier_motzkin_project(sys, {"a", "b"});
        const auto oracle = projection_by_vertex_enumeration(sys, 0, 1);
        REQUIRE_FALSE(fm.empty());
        CHECK(hausdorff_distance(fm, oracle) <= 1e-9);
        for (const auto& h : fm.halfplanes) {
            CHECK(std::max(std::abs(h.a), std::abs(h.b)) == Approx(1.0));
        }
        ++checked;
    }
    CHECK(checked == 60);
}
