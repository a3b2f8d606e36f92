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

// Self-check suites: every closed form against the Gaussian oracle, the
// Fourier-Motzkin projection, convexity, the half-bit bound, high-SNR
// behaviour and alpha* optimality. Deterministic for a given seed.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "zrelay/core.hpp"
#include "zrelay/fourier_motzkin.hpp"
#include "zrelay/gaussian_oracle.hpp"
#include "zrelay/geometry.hpp"
#include "zrelay/sweep.hpp"
#include "zrelay/type1.hpp"
#include "zrelay/type2.hpp"

namespace zrelay {

/// Linear-Gaussian model of the Type I compress-and-forward scheme with unit
/// noise: X2 has unit power, the gains carry SNR2 and INR2.
inline GaussianSystem type1_cf_system(const ChannelParams& p, double sigma2)
{
    GaussianSystem g;
    g.add_source("X1", p.snr1);
    g.add_source("X2", 1.0);
    g.add_source("Z1", 1.0);
    g.add_source("Z2", 1.0);
    g.add_source("e", sigma2);
    g.add_observable("Y1", {{"X1", 1.0}, {"X2", std::sqrt(p.inr2)}, {"Z1", 1.0}});
    g.add_observable("Y2", {{"X2", std::sqrt(p.snr2)}, {"Z2", 1.0}});
    g.add_observable("Yhat2", {{"Y2", 1.0}, {"e", 1.0}});
    return g;
}

/// Type II receiver-1 quantization model: U2 ~ beta, W2 ~ 1 - beta.
inline GaussianSystem type2_quantizer_system(const ChannelParams& p, const Type2Scheme& s, double sigma2)
{
    GaussianSystem g;
    g.add_source("U2", s.beta);
    g.add_source("W2", 1.0 - s.beta);
    g.add_source("Z1", 1.0);
    g.add_source("Z2", 1.0);
    g.add_source("e", sigma2);
    const double si = std::sqrt(p.inr2);
    g.add_observable("Y2", {{"U2", std::sqrt(p.snr2)}, {"W2", std::sqrt(p.snr2)}, {"Z2", 1.0}});
    g.add_observable("Ybar1", {{"U2", si}, {"W2", si * (1.0 + s.alpha)}, {"Z1", 1.0}});
    g.add_observable("Yhat1", {{"Ybar1", 1.0}, {"e", 1.0}});
    return g;
}

struct CheckResult
{
    std::string name;
    std::size_t count = 0;
    double worst = 0.0; // largest error or statistic seen
    double limit = 0.0;
    bool ok = true;
    std::string note;

    /// Error-style record: passes while err <= limit.
    void record(double err)
    {
        ++count;
        if (std::isnan(err))
            err = kInf;
        worst = std::max(worst, err);
        ok = ok && err <= limit;
    }
};

struct SuiteReport
{
    std::string name;
    std::uint64_t seed = 0;
    std::size_t draws = 0;
    std::vector<CheckResult> checks;
    std::string error; // exception text if the suite aborted

    [[nodiscard]] bool passed() const
    {
        return error.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.ok; });
    }
};

struct VerifyOptions
{
    std::uint64_t seed = 20240611;
    std::size_t draws = 100;
};

/// Random channel draws used by the suites. SNR/INR are log-uniform in dB.
class ParamSampler
{
public:
    explicit ParamSampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    ChannelParams any(double db_lo = -10.0, double db_hi = 40.0, double r0_lo = 0.05, double r0_hi = 4.0)
    {
        const double s1 = uniform(db_lo, db_hi), s2 = uniform(db_lo, db_hi), i = uniform(db_lo, db_hi);
        return ChannelParams::db(s1, s2, i, uniform(r0_lo, r0_hi));
    }

    ChannelParams weak_type1()
    {
        for (;;) {
            ChannelParams p = any(0.0, 40.0);
            if (classify_type1(p).label == RegimeLabel::Weak)
                return p;
        }
    }

    ChannelParams weak_type2()
    {
        for (;;) {
            ChannelParams p = any(0.0, 40.0);
            if (classify_type2(p).label == RegimeLabel::Weak)
                return p;
        }
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

namespace detail {

inline SuiteReport run_guarded(const std::string& name, const VerifyOptions& opt,
                               const std::function<void(SuiteReport&)>& body)
{
    SuiteReport rep;
    rep.name = name;
    rep.seed = opt.seed;
    rep.draws = opt.draws;
    try {
        body(rep);
    } catch (const std::exception& e) {
        rep.error = e.what();
    }
    return rep;
}

inline bool monotone_nonincreasing_abs(const std::vector<ScaledGap>& gaps, double slack = 1e-12)
{
    for (std::size_t k = 1; k < gaps.size(); ++k)
        if (std::abs(gaps[k].gap) > std::abs(gaps[k - 1].gap) + slack)
            return false;
    return true;
}

} // namespace detail

/// Closed forms against log-det evaluations of the underlying Gaussian models.
inline SuiteReport verify_oracle(const VerifyOptions& opt = {})
{
    return detail::run_guarded("oracle", opt, [&](SuiteReport& rep) {
        ParamSampler rs(opt.seed);
        CheckResult cf{"type1 compress-forward R1", 0, 0.0, 1e-9, true, ""};
        CheckResult wz1{"type1 quantizer uses exactly R0", 0, 0.0, 1e-9, true, ""};
        CheckResult zeta{"type2 zeta", 0, 0.0, 1e-9, true, ""};
        CheckResult eta{"type2 eta", 0, 0.0, 1e-9, true, ""};
        CheckResult wz2{"type2 quantizer uses exactly Ra", 0, 0.0, 1e-9, true, ""};
        for (std::size_t n = 0; n < opt.draws; ++n) {
            const ChannelParams p = rs.any();
            const CfRatePair pair = cf_rate_pair_type1(p);
            const GaussianSystem g1 = type1_cf_system(p, pair.wz.sigma2_over_n);
            cf.record(std::abs(g1.mutual_information({"X1"}, {"Y1", "Yhat2"}) - pair.r1));
            wz1.record(std::abs(g1.mutual_information({"Yhat2"}, {"Y2"}, {"Y1"}) - p.r0));

            Type2Scheme s;
            s.beta = rs.uniform(0.02, 0.98);
            s.alpha = rs.uniform(-3.0, 1.0);
            s.ra = rs.uniform(0.02, 1.0) * p.r0;
            s.rb = p.r0 - s.ra;
            const QuantizerStats q = quantizer_stats(p, s);
            const GaussianSystem g2 = type2_quantizer_system(p, s, q.sigma2_over_n);
            zeta.record(std::abs(g2.mutual_information({"U2"}, {"Yhat1"}, {"Y2", "W2"}) - q.zeta));
            eta.record(std::abs(g2.mutual_information({"U2", "W2"}, {"Yhat1"}, {"Y2"}) - q.eta));
            wz2.record(std::abs(g2.mutual_information({"Yhat1"}, {"Ybar1"}, {"Y2"}) - s.ra));
        }
        rep.checks = {cf, wz1, zeta, eta, wz2};
    });
}

/// Projection of the decoding constraints against the closed-form pentagons.
inline SuiteReport verify_fm(const VerifyOptions& opt = {})
{
    return detail::run_guarded("fm", opt, [&](SuiteReport& rep) {
        ParamSampler rs(opt.seed);
        CheckResult t1{"type1 projection vs pentagon (hausdorff)", 0, 0.0, 1e-9, true, ""};
        CheckResult t2{"type2 projection vs pentagon (hausdorff)", 0, 0.0, 1e-9, true, ""};
        for (std::size_t n = 0; n < opt.draws; ++n) {
            const ChannelParams p = rs.any();
            const PowerSplit split(rs.uniform(0.0, 1.0));
            const RateRegion fm1 = fourier_motzkin_project(mac_constraint_system_type1(p, split), {"R1", "R2"});
            t1.record(hausdorff_distance(fm1, pentagon_to_region(pentagon_weak(p, split))));

            Type2Scheme s;
            s.beta = rs.uniform(0.0, 1.0);
            s.alpha = rs.uniform(-3.0, 1.0);
            s.ra = rs.uniform(0.0, 1.0) * p.r0;
            s.rb = p.r0 - s.ra;
            const RateRegion fm2 = fourier_motzkin_project(mac_constraint_system_type2(p, s), {"R1", "R2"});
            t2.record(hausdorff_distance(fm2, pentagon_to_region(pentagon_type2(p, s))));
        }
        rep.checks = {t1, t2};
    });
}

/// Weak-regime corner curves are decreasing and concave in R1.
inline SuiteReport verify_convexity(const VerifyOptions& opt = {}, std::size_t beta_points = 200)
{
    return detail::run_guarded("convexity", opt, [&](SuiteReport& rep) {
        ParamSampler rs(opt.seed);
        const auto betas = linspace(0.0, 1.0, beta_points);
        CheckResult m1{"type1 curve monotone", 0, 0.0, 1e-9, true, ""};
        CheckResult c1{"type1 curve concave", 0, 0.0, 1e-9, true, ""};
        CheckResult m2{"type2 curve monotone", 0, 0.0, 1e-9, true, ""};
        CheckResult c2{"type2 curve concave", 0, 0.0, 1e-9, true, ""};
        for (std::size_t n = 0; n < opt.draws; ++n) {
            const ChannelParams p1 = rs.weak_type1();
            const auto r1 = check_boundary_concavity(curve_by_increasing_r1(corner_curve(p1, betas)));
            m1.record(r1.max_monotone_violation);
            c1.record(r1.max_concavity_violation);
            const ChannelParams p2 = rs.weak_type2();
            const auto r2 = check_boundary_concavity(curve_by_increasing_r1(corner_curve_type2(p2, betas)));
            m2.record(r2.max_monotone_violation);
            c2.record(r2.max_concavity_violation);
        }
        rep.checks = {m1, c1, m2, c2};
    });
}

/// Unlimited-link sum-capacity gain: at most half a bit below INR2 = SNR2(1+SNR1),
/// unbounded above it.
inline SuiteReport verify_halfbit(const VerifyOptions& opt = {})
{
    return detail::run_guarded("halfbit", opt, [&](SuiteReport& rep) {
        ParamSampler rs(opt.seed);
        CheckResult bound{"gain <= 1/2 bit below INR2_section", 0, 0.0, 0.5 + 1e-12, true, ""};
        for (std::size_t n = 0; n < opt.draws; ++n) {
            ChannelParams p = rs.any(-20.0, 60.0, 0.0, 0.0);
            const double top = inr2_section(p);
            p.inr2 = top * std::pow(10.0, rs.uniform(-8.0, 0.0));
            bound.record(sum_capacity_infinite_relay(p).gain);
        }
        const ChannelParams big = ChannelParams::linear(100.0, 100.0, 1e6 * 100.0 * 100.0, 0.0);
        const double g = sum_capacity_infinite_relay(big).gain;
        CheckResult unbounded{"gain at INR2 = 1e6 SNR1 SNR2 exceeds 2 bits", 1, g, 2.0, g > 2.0,
                              "worst is the observed gain"};
        rep.checks = {bound, unbounded};
    });
}

struct AsymptoticCase
{
    ChannelParams params;
    double fixed_beta;
};

/// Weak-regime channels whose scalings by 10^k, k = 0..7, stay weak.
inline std::vector<AsymptoticCase> asymptotic_cases()
{
    return {{ChannelParams::linear(10.0, 10.0, 3.0, 1.0), 0.1},
            {ChannelParams::linear(100.0, 30.0, 10.0, 0.5), 0.2},
            {ChannelParams::linear(5.0, 20.0, 2.0, 1.0), 0.05},
            {ChannelParams::linear(50.0, 50.0, 20.0, 0.0), 0.3}};
}

/// Gap to C_sum(0) + R0 shrinks monotonically as the noise vanishes.
inline SuiteReport verify_asymptotic(const VerifyOptions& opt = {}, std::size_t n_scalings = 8)
{
    return detail::run_guarded("asymptotic", opt, [&](SuiteReport& rep) {
        const std::pair<AsymptoticScheme, const char*> schemes[] = {
            {AsymptoticScheme::BetaStar, "beta*"},
            {AsymptoticScheme::FixedBeta, "fixed beta"},
            {AsymptoticScheme::CompressForward, "compress-forward"}};
        for (const auto& [scheme, label] : schemes) {
            CheckResult mono{std::string(label) + " |gap| nonincreasing", 0, 0.0, 0.0, true, ""};
            CheckResult last{std::string(label) + " final |gap|", 0, 0.0, 0.02, true, ""};
            for (const auto& c : asymptotic_cases()) {
                AsymptoticOptions ao;
                ao.scheme = scheme;
                ao.fixed_beta = c.fixed_beta;
                const auto gaps = asymptotic_sum_gain_type1(c.params, n_scalings, ao);
                mono.record(detail::monotone_nonincreasing_abs(gaps) ? 0.0 : 1.0);
                last.record(std::abs(gaps.back().gap));
            }
            rep.checks.push_back(mono);
            rep.checks.push_back(last);
        }
    });
}

/// alpha* minimizes the quantization noise and reproduces delta(beta, R0).
inline SuiteReport verify_alpha(const VerifyOptions& opt = {}, double grid_step = 1e-4)
{
    return detail::run_guarded("alpha", opt, [&](SuiteReport& rep) {
        ParamSampler rs(opt.seed);
        CheckResult argmin{"grid minimizer of sigma^2 vs alpha*", 0, 0.0, grid_step, true, ""};
        CheckResult delta{"zeta(alpha*, beta, R0) vs delta(beta, R0)", 0, 0.0, 1e-9, true, ""};
        CheckResult sigma{"sigma^2/N at alpha* closed form", 0, 0.0, 1e-9, true, ""};
        const auto steps = static_cast<std::size_t>(std::llround(4.0 / grid_step));
        for (std::size_t n = 0; n < opt.draws; ++n) {
            const ChannelParams p = rs.any();
            const double beta = rs.uniform(0.0, 1.0);
            double best_a = 0.0, best = kInf;
            for (std::size_t k = 0; k <= steps; ++k) {
                const double a = -3.0 + static_cast<double>(k) * grid_step;
                const double s2 = quantizer_stats(p, {a, beta, p.r0, 0.0}).sigma2_over_n;
                if (s2 < best) {
                    best = s2;
                    best_a = a;
                }
            }
            argmin.record(std::abs(best_a - alpha_star(p, beta)));
            const QuantizerStats q = quantizer_stats(p, {alpha_star(p, beta), beta, p.r0, 0.0});
            delta.record(std::abs(q.zeta - delta_weak(p, beta)));
            const double closed = sigma2_over_n_at_alpha_star(p, beta);
            sigma.record(std::abs(q.sigma2_over_n - closed) / closed);
        }
        rep.checks = {argmin, delta, sigma};
    });
}

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"oracle", "fm", "convexity", "halfbit", "asymptotic", "alpha"};
    return names;
}

inline SuiteReport run_suite(const std::string& name, const VerifyOptions& opt = {})
{
    if (name == "oracle")
        return verify_oracle(opt);
    if (name == "fm")
        return verify_fm(opt);
    if (name == "convexity")
        return verify_convexity(opt);
    if (name == "halfbit")
        return verify_halfbit(opt);
    if (name == "asymptotic")
        return verify_asymptotic(opt);
    if (name == "alpha")
        return verify_alpha(opt);
    throw std::invalid_argument("unknown suite: " + name);
}

} // namespace zrelay
