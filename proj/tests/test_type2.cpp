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

#include <cmath>
#include <random>

#include "zrelay/gaussian_oracle.hpp"
#include "zrelay/type2.hpp"

using namespace zrelay;
using Catch::Approx;

namespace {

ChannelParams random_params(std::mt19937_64& rng, double r0_lo = 0.0)
{
    std::uniform_real_distribution<double> db(-10.0, 40.0), r0(r0_lo, 4.0);
    return ChannelParams::db(db(rng), db(rng), db(rng), r0(rng));
}

ChannelParams random_in(std::mt19937_64& rng, RegimeLabel label)
{
    for (;;) {
        const auto p = random_params(rng, 0.05);
        if (classify_type2(p).label == label)
            return p;
    }
}

// Receiver-1 observation and its quantized version, unit noise, U2 + W2 of unit power.
GaussianSystem quantizer_model(const ChannelParams& p, const Type2Scheme& s, double sigma2)
{
    GaussianSystem g;
    g.add_source("U", s.beta);
    g.add_source("W", 1.0 - s.beta);
    g.add_source("N1", 1.0);
    g.add_source("N2", 1.0);
    g.add_source("Q", sigma2);
    g.add_observable("Y2", {{"U", std::sqrt(p.snr2)}, {"W", std::sqrt(p.snr2)}, {"N2", 1.0}});
    g.add_observable("V", {{"U", std::sqrt(p.inr2)}, {"W", (1.0 + s.alpha) * std::sqrt(p.inr2)}, {"N1", 1.0}});
    g.add_observable("Vq", {{"V", 1.0}, {"Q", 1.0}});
    return g;
}

} // namespace

TEST_CASE("quantizer statistics", "[type2]")
{
    const auto p = ChannelParams::linear(50.0, 200.0, 80.0, 1.0);
    const auto q = quantizer_stats(p, {-0.3, 0.4, 0.75, 0.25});
    CHECK(q.sigma2_over_n == Approx(1.6383600144649438).epsilon(1e-12));
    CHECK(q.zeta == Approx(0.10065232670186685).epsilon(1e-12));
    CHECK(q.eta == Approx(0.40630548567547588).epsilon(1e-12));

    const auto none = quantizer_stats(p, {-0.3, 0.4, 0.0, 1.0});
    CHECK(std::isinf(none.sigma2_over_n));
    CHECK(none.zeta == 0.0);
    CHECK(none.eta == 0.0);
    CHECK_THROWS_AS(quantizer_stats(p, {0.0, 0.5, -0.1, 0.0}), std::domain_error);
    CHECK_THROWS_AS(pentagon_type2(p, {0.0, 0.5, 0.8, 0.8}), std::invalid_argument);
    CHECK(Type2Scheme{0.7, 0.5, 0.0, 1.0}.canonical().alpha == 0.0);
}

TEST_CASE("quantizer statistics against the log-det oracle", "[type2][property]")
{
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int n = 0; n < 100; ++n) {
        const auto p = random_params(rng, 0.05);
        Type2Scheme s{-3.0 + 4.0 * u(rng), 0.02 + 0.96 * u(rng), (0.02 + 0.98 * u(rng)) * p.r0, 0.0};
        s.rb = p.r0 - s.ra;
        const auto q = quantizer_stats(p, s);
        const auto g = quantizer_model(p, s, q.sigma2_over_n);
        CHECK(g.mutual_information({"U"}, {"Vq"}, {"Y2", "W"}) == Approx(q.zeta).margin(1e-9));
        CHECK(g.mutual_information({"U", "W"}, {"Vq"}, {"Y2"}) == Approx(q.eta).margin(1e-9));
        CHECK(g.mutual_information({"Vq"}, {"V"}, {"Y2"}) == Approx(s.ra).margin(1e-9));
        // The same budget read off the conditional variance of the observation.
        const double v = double(g.conditional_variance("V", {"Y2"}));
        CHECK(gaussian_capacity(v / q.sigma2_over_n) == Approx(s.ra).margin(1e-9));
        CHECK(q.sigma2_over_n > 0.0);
        CHECK(q.zeta >= 0.0);
        CHECK(q.zeta <= q.eta + 1e-12);
    }
}

TEST_CASE("zeta grows with the quantizer budget", "[type2][property]")
{
    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int n = 0; n < 200; ++n) {
        const auto p = random_params(rng, 0.05);
        const double a = -3.0 + 4.0 * u(rng), b = u(rng);
        double prev = -1.0;
        for (double ra : linspace(0.0, p.r0, 25)) {
            const double z = quantizer_stats(p, {a, b, ra, 0.0}).zeta;
            CHECK(z >= prev - 1e-15);
            prev = z;
        }
    }
}

TEST_CASE("optimal combination coefficient", "[type2]")
{
    const auto p = ChannelParams::linear(10.0, 30.0, 5.0, 1.0);
    CHECK(alpha_star(p, 0.0) == -1.0);
    CHECK(alpha_star(p, 0.5) == Approx(-1.0 / 16.0));
    CHECK_THROWS(alpha_star(p, 1.2));

    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int n = 0; n < 100; ++n) {
        const auto q = random_params(rng, 0.05);
        const double b = u(rng);
        const double as = alpha_star(q, b);
        const double at = quantizer_stats(q, {as, b, q.r0, 0.0}).sigma2_over_n;
        CHECK(at == Approx(sigma2_over_n_at_alpha_star(q, b)).epsilon(1e-12));
        for (double d : {-1e-3, 1e-3, -0.5, 0.5})
            CHECK(quantizer_stats(q, {as + d, b, q.r0, 0.0}).sigma2_over_n >= at * (1.0 - 1e-14));
        CHECK(quantizer_stats(q, {as, b, q.r0, 0.0}).zeta == Approx(delta_weak(q, b)).margin(1e-9));
    }
}

TEST_CASE("weak-regime shift", "[type2]")
{
    const auto p = ChannelParams::db(20.0, 20.0, 15.0, 2.0);
    CHECK(delta_weak(p, 0.0) == 0.0);
    CHECK(delta_weak(p.with_r0(0.0), 0.7) == 0.0);
    CHECK(delta_weak(p, 1.0) == Approx(0.18250724738199661).epsilon(1e-12));
    CHECK(delta_weak(p, 1.0) <= 0.5);

    std::mt19937_64 rng(34);
    for (int n = 0; n < 200; ++n) {
        const auto q = random_params(rng);
        double prev = 0.0;
        for (double b : linspace(0.0, 1.0, 50)) {
            const double d = delta_weak(q, b);
            CHECK(d >= prev - 1e-15);
            CHECK(d <= delta_weak(q.with_r0(q.r0 + 0.25), b) + 1e-15);
            prev = d;
        }
    }
}

TEST_CASE("combined pentagon special cases", "[type2]")
{
    const auto p = ChannelParams::linear(40.0, 25.0, 60.0, 1.5);
    SECTION("all common, link used for the bin index only")
    {
        const Pentagon pent = pentagon_type2(p, {0.0, 0.0, 0.0, 1.5});
        CHECK(pent.r1_max == Approx(gaussian_capacity(40.0)));
        CHECK(pent.r2_max == Approx(std::min(gaussian_capacity(25.0) + 1.5, gaussian_capacity(60.0))));
        CHECK(pent.sum_max == Approx(gaussian_capacity(100.0)));
    }
    SECTION("all private, link used for quantization, large link")
    {
        const auto big = p.with_r0(40.0);
        const Pentagon pent = pentagon_type2(big, {alpha_star(big, 1.0), 1.0, 40.0, 0.0});
        const double expected = gaussian_capacity(25.0) + gaussian_capacity(40.0 / 61.0) + gaussian_capacity(60.0 / 26.0);
        CHECK(region_to_pentagon(pentagon_to_region(pent)).sum_max == Approx(expected).margin(1e-9));
    }
}

TEST_CASE("weak regime: pure quantization at alpha* is the best scheme", "[type2][property]")
{
    std::mt19937_64 rng(35);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int n = 0; n < 100; ++n) {
        const auto p = random_in(rng, RegimeLabel::Weak);
        const double b = u(rng);
        const Pentagon best = pentagon_type2(p, weak_scheme(p, b));
        const auto q = quantizer_stats(p, weak_scheme(p, b));
        // The bin-index branch of the R2 bound never binds.
        const double second = gaussian_capacity(b * p.snr2) + gaussian_capacity((1.0 - b) * p.inr2 / (1.0 + b * p.inr2)) + q.zeta;
        CHECK(gaussian_capacity(p.snr2) + q.eta >= second - 1e-12);
        const auto best_region = pentagon_to_region(best);
        for (double frac : {0.0, 0.25, 0.5, 0.75}) {
            const double ra = frac * p.r0;
            const auto other = pentagon_to_region(pentagon_type2(p, Type2Scheme{alpha_star(p, b), b, ra, p.r0 - ra}.canonical()));
            CHECK(region_contains(best_region, other, 1e-9));
        }
    }
}

TEST_CASE("regions in the two strong regimes", "[type2]")
{
    const auto base = ChannelParams::db(20.0, 20.0, 55.0, 0.0);
    const auto r0 = region_type2(base);
    const auto r2 = region_type2(base.with_r0(2.0));
    REQUIRE(r0.regime.label == RegimeLabel::VeryStrong);
    REQUIRE(r2.regime.label == RegimeLabel::VeryStrong);
    CHECK(r2.region.max_r1() == Approx(r0.region.max_r1()).margin(1e-12));
    CHECK(r2.region.max_r2() - r0.region.max_r2() == Approx(2.0).margin(1e-9));
    CHECK(r2.region.vertices.size() == 4);

    const auto r4 = region_type2(base.with_r0(4.0));
    REQUIRE(r4.regime.label == RegimeLabel::Strong);
    const Pentagon p4 = region_to_pentagon(r4.region);
    CHECK(p4.r1_max == Approx(3.3291057413758974).epsilon(1e-12));
    CHECK(p4.r2_max == Approx(3.3291057413758974 + 4.0).epsilon(1e-12));
    CHECK(p4.sum_max == Approx(9.1355326153718094).epsilon(1e-12));
    CHECK(r4.region.vertices.size() == 5);
    CHECK(r4.capacity);
}

TEST_CASE("strong-regime bound reduction", "[type2][property]")
{
    std::mt19937_64 rng(36);
    for (int n = 0; n < 500; ++n) {
        auto p = random_params(rng);
        for (double f : {1.0, 1.5, 10.0}) {
            p.inr2 = f * inr2_dagger(p);
            CHECK(gaussian_capacity(p.snr2) + p.r0 <= gaussian_capacity(p.inr2) + 1e-12);
        }
    }
}

TEST_CASE("weak-regime region", "[type2]")
{
    const auto p = ChannelParams::db(20.0, 20.0, 15.0, 2.0);
    const auto r = region_type2(p);
    REQUIRE(r.regime.label == RegimeLabel::Weak);
    CHECK_FALSE(r.capacity);
    const auto none = region_type2(p.with_r0(0.0));
    CHECK(r.region.max_sum_rate() - none.region.max_sum_rate() == Approx(delta_weak(p, 1.0)).margin(1e-12));
    CHECK(r.region.max_sum_rate() == Approx(sum_capacity_no_relay(p) + delta_weak(p, 1.0)).margin(1e-12));
    CHECK(r.region.max_r2() == Approx(gaussian_capacity(p.snr2) + delta_weak(p, 1.0)).margin(1e-12));
    CHECK(r.region.max_r1() == Approx(gaussian_capacity(p.snr1)).margin(1e-12));
}

TEST_CASE("weak closed form equals the hull of alpha* pentagons", "[type2][property]")
{
    std::mt19937_64 rng(37);
    for (int n = 0; n < 30; ++n) {
        const auto p = random_in(rng, RegimeLabel::Weak);
        SweepConfig cfg;
        cfg.beta_points = 401;
        const auto closed = region_type2(p, cfg);
        const auto same = region_type2_by_union(p, split_grid(1.0, p.snr2, 401));
        CHECK(hausdorff_distance(closed.region, same.hull) <= 1e-9);

        const double fine = region_type2_by_union(p, split_grid(1.0, p.snr2, 801)).hull_excess();
        CHECK(fine <= 0.55 * same.hull_excess() + 1e-15);

        CHECK(region_contains(closed.region, region_type2_by_union(p, 401).hull, 1e-4));
    }
}

TEST_CASE("moderately strong hull", "[type2]")
{
    const auto p = ChannelParams::db(20.0, 20.0, 22.0, 1.0);
    const auto r = region_type2(p);
    REQUIRE(r.regime.label == RegimeLabel::ModeratelyStrong);
    CHECK_FALSE(r.capacity);
    CHECK(r.description.find("achievable") != std::string::npos);
    CHECK(r.hull_excess >= 0.0);
    CHECK(r.hull_excess < 0.05);
    // Every grid pentagon lies inside the hull.
    SweepConfig cfg;
    for (double b : linspace(0.0, 1.0, cfg.hull_beta_points))
        for (double ra : linspace(0.0, p.r0, cfg.ra_points)) {
            const Type2Scheme s = Type2Scheme{alpha_star(p, b), b, ra, p.r0 - ra}.canonical();
            CHECK(region_contains(r.region, pentagon_to_region(pentagon_type2(p, s)), 1e-12));
        }
    // No better than the unlimited-link sum capacity.
    CHECK(r.region.max_sum_rate() <= sum_capacity_infinite_relay(p).c_inf + 1e-12);
}

TEST_CASE("region grows with the link rate", "[type2][property]")
{
    std::mt19937_64 rng(38);
    SweepConfig cfg;
    cfg.alpha_points = 9;
    cfg.hull_beta_points = 9;
    cfg.ra_points = 5;
    for (int n = 0; n < 60; ++n) {
        const auto p = random_params(rng);
        const auto lo = region_type2(p, cfg);
        const auto hi = region_type2(p.with_r0(p.r0 + 0.5), cfg);
        CHECK(region_contains(hi.region, lo.region, 1e-9));
    }
}

TEST_CASE("decoding constraints project onto the combined pentagon", "[type2][property]")
{
    std::mt19937_64 rng(39);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int n = 0; n < 100; ++n) {
        const auto p = random_params(rng);
        Type2Scheme s{-3.0 + 4.0 * u(rng), u(rng), u(rng) * p.r0, 0.0};
        s.rb = p.r0 - s.ra;
        const auto fm = fourier_motzkin_project(mac_constraint_system_type2(p, s), {"R1", "R2"});
        CHECK(hausdorff_distance(fm, pentagon_to_region(pentagon_type2(p, s))) <= 1e-9);
    }
}

TEST_CASE("unlimited-link sum capacity", "[type2]")
{
    SECTION("below SNR2")
    {
        const auto p = ChannelParams::linear(10.0, 20.0, 5.0, 0.0);
        const auto c = sum_capacity_infinite_relay(p);
        CHECK(c.c_inf == Approx(3.0577386087099680).epsilon(1e-13));
        CHECK(c.gain == Approx(gaussian_capacity(5.0 / 21.0)).epsilon(1e-12));
        CHECK(c.half_bit_regime);
    }
    SECTION("between SNR2 and SNR2(1+SNR1)")
    {
        const auto p = ChannelParams::linear(10.0, 20.0, 100.0, 0.0);
        const auto c = sum_capacity_infinite_relay(p);
        CHECK(c.gain == Approx(gaussian_capacity(20.0 / 101.0)).epsilon(1e-12));
        CHECK(c.gain <= 0.5);
    }
    SECTION("far above: unbounded")
    {
        const auto p = ChannelParams::linear(1e3, 1e3, 1e6 * 1e6, 0.0);
        const auto c = sum_capacity_infinite_relay(p);
        CHECK_FALSE(c.half_bit_regime);
        const double exact = 0.5 * std::log2((1.0 + 1e3 + 1e12) / (1001.0 * 1001.0)) + gaussian_capacity(1e3 / (1.0 + 1e12));
        CHECK(c.gain == Approx(exact).margin(1e-9));
        CHECK(c.gain > 0.5 * std::log2(1e12 / 1e6) - 2e-3);
    }
}

TEST_CASE("half-bit bound", "[type2][property]")
{
    std::mt19937_64 rng(40);
    std::uniform_real_distribution<double> db(-20.0, 60.0), frac(-8.0, 0.0);
    double worst = 0.0;
    for (int n = 0; n < 10000; ++n) {
        auto p = ChannelParams::db(db(rng), db(rng), 0.0, 0.0);
        p.inr2 = inr2_section(p) * std::pow(10.0, frac(rng));
        worst = std::max(worst, sum_capacity_infinite_relay(p).gain);
    }
    CHECK(worst <= 0.5 + 1e-12);
    CHECK(worst > 0.45);
}

TEST_CASE("large links approach the unlimited-link sum capacity", "[type2]")
{
    for (const auto& base : {ChannelParams::db(20.0, 20.0, 15.0, 0.0), ChannelParams::db(20.0, 20.0, 24.0, 0.0)}) {
        const double target = sum_capacity_infinite_relay(base).c_inf;
        double prev = -kInf;
        for (double r0 : {4.0, 8.0, 16.0, 32.0}) {
            const double s = region_type2(base.with_r0(r0)).region.max_sum_rate();
            CHECK(s <= target + 1e-9);
            CHECK(s >= prev - 1e-12);
            prev = s;
        }
        CHECK(prev == Approx(target).margin(1e-6));
    }
}
