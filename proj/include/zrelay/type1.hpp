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

// Type I channel: the digital link of rate R0 runs from the interference-free
// receiver 2 to the interfered receiver 1. Transmitter 2 splits its power into
// a private part (fraction beta) and a common part (1 - beta); receiver 2
// decodes the common message and forwards a bin index of it so that receiver 1
// can strip the interference.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "zrelay/core.hpp"
#include "zrelay/fourier_motzkin.hpp"
#include "zrelay/geometry.hpp"
#include "zrelay/sweep.hpp"

namespace zrelay {

/// Private power fraction at transmitter 2; the common part carries 1 - beta.
struct PowerSplit
{
    double beta = 1.0;

    explicit PowerSplit(double b = 1.0) : beta(b)
    {
        if (!(b >= 0.0 && b <= 1.0))
            throw std::invalid_argument("PowerSplit: beta must lie in [0, 1]");
    }
    [[nodiscard]] double common() const { return 1.0 - beta; }
};

/// Per-split pentagon of the decode-and-forward scheme. Valid in every regime.
inline Pentagon pentagon_weak(const ChannelParams& p, PowerSplit split)
{
    const double b = split.beta, bb = split.common();
    const double denom = 1.0 + b * p.inr2;
    Pentagon pent;
    pent.r1_max = gaussian_capacity(p.snr1 / denom);
    pent.r2_max = std::min(gaussian_capacity(p.snr2), gaussian_capacity(b * p.snr2) + gaussian_capacity(bb * p.inr2 / denom) + p.r0);
    pent.sum_max = gaussian_capacity(b * p.snr2) + gaussian_capacity((p.snr1 + bb * p.inr2) / denom) + p.r0;
    return pent;
}

/// Multiple-access constraints of both decoding steps for a fixed split, over
/// (S1, S2, T2) plus the links R1 = S1 and R2 = S2 + T2. Projecting onto
/// (R1, R2) yields pentagon_weak.
inline LinearSystem mac_constraint_system_type1(const ChannelParams& p, PowerSplit split)
{
    const double b = split.beta, bb = split.common();
    const double denom = 1.0 + b * p.inr2;
    LinearSystem sys({"S1", "S2", "T2", "R1", "R2"});
    // Receiver 2 decodes (W2, U2).
    sys.add_le({{"T2", 1.0}}, gaussian_capacity(bb * p.snr2));
    sys.add_le({{"S2", 1.0}}, gaussian_capacity(b * p.snr2));
    sys.add_le({{"S2", 1.0}, {"T2", 1.0}}, gaussian_capacity(p.snr2));
    // Receiver 1 decodes (X1, W2) with U2 as noise and the relay's bin index.
    sys.add_le({{"S1", 1.0}}, gaussian_capacity(p.snr1 / denom));
    sys.add_le({{"T2", 1.0}}, gaussian_capacity(bb * p.inr2 / denom) + p.r0);
    sys.add_le({{"S1", 1.0}, {"T2", 1.0}}, gaussian_capacity((p.snr1 + bb * p.inr2) / denom) + p.r0);
    for (const char* v : {"S1", "S2", "T2"})
        sys.add_nonnegative(v);
    sys.add_eq({{"R1", 1.0}, {"S1", -1.0}}, 0.0);
    sys.add_eq({{"R2", 1.0}, {"S2", -1.0}, {"T2", -1.0}}, 0.0);
    return sys;
}

struct BetaStar
{
    double beta = 1.0;
    double unclamped = 1.0;
    bool clamped = false;
};

/// Split where the two branches of the R2 bound meet, clamped to [0, 1]
/// without any regime check.
inline BetaStar beta_star_clamped(const ChannelParams& p)
{
    p.validate();
    const double f = relay_factor(p.r0);
    const double num = (1.0 + p.snr1) * (1.0 + p.snr2) - f * (1.0 + p.snr1 + p.inr2);
    const double den = f * p.snr2 * (1.0 + p.snr1 + p.inr2) - p.inr2 * (1.0 + p.snr2);
    if (den == 0.0)
        throw std::domain_error("beta_star: degenerate denominator");
    BetaStar out;
    out.unclamped = num / den;
    out.beta = std::clamp(out.unclamped, 0.0, 1.0);
    out.clamped = out.beta != out.unclamped;
    return out;
}

/// Sum-rate optimal split in the weak regime. Inside that regime the value
/// always falls in (0, 1]; calling it elsewhere is an error.
inline BetaStar beta_star(const ChannelParams& p)
{
    if (classify_type1(p).label != RegimeLabel::Weak)
        throw std::domain_error("beta_star: channel is not in the Type I weak interference regime");
    return beta_star_clamped(p);
}

/// R2 along the lower-right pentagon corners for a given split.
inline double corner_r2_type1(const ChannelParams& p, double beta)
{
    return gaussian_capacity(beta * p.snr2) + gaussian_capacity((1.0 - beta) * p.inr2 / (1.0 + p.snr1 + beta * p.inr2)) + p.r0;
}

inline double corner_r1(const ChannelParams& p, double beta) { return gaussian_capacity(p.snr1 / (1.0 + beta * p.inr2)); }

struct CurvePoint
{
    double beta = 0.0;
    double r1 = 0.0;
    double r2 = 0.0;

    [[nodiscard]] Point point() const { return {r1, r2}; }
};

/// Lower-right corners of the per-split pentagons. In the weak regime this
/// curve, capped by R1 <= gamma(SNR1) and R2 <= gamma(SNR2), bounds the region.
inline std::vector<CurvePoint> corner_curve(const ChannelParams& p, std::span<const double> betas)
{
    p.validate();
    std::vector<CurvePoint> out;
    out.reserve(betas.size());
    for (double b : betas) {
        PowerSplit s(b);
        out.push_back({s.beta, corner_r1(p, s.beta), corner_r2_type1(p, s.beta)});
    }
    return out;
}

/// Curve samples ordered by increasing R1 (decreasing beta), as expected by
/// check_boundary_concavity.
inline std::vector<Point> curve_by_increasing_r1(const std::vector<CurvePoint>& curve)
{
    std::vector<Point> pts;
    for (const auto& c : curve)
        pts.push_back(c.point());
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.r1 < b.r1; });
    return pts;
}

inline RegionResult region_type1(const ChannelParams& p, const SweepConfig& cfg = {})
{
    cfg.validate();
    Regime regime = classify_type1(p);
    switch (regime.label) {
    case RegimeLabel::VeryStrong:
        return pentagon_result({gaussian_capacity(p.snr1), gaussian_capacity(p.snr2), kInf}, regime, true,
                               "very strong interference: rectangle gamma(SNR1) x gamma(SNR2)");
    case RegimeLabel::Strong:
        return pentagon_result({gaussian_capacity(p.snr1), gaussian_capacity(p.snr2), gaussian_capacity(p.snr1 + p.inr2) + p.r0}, regime, true,
                               "strong interference: pentagon with sum bound gamma(SNR1+INR2)+R0");
    default:
        break;
    }

    // Weak: the corner curve between beta = 0 and beta*, then the R2 cap.
    const double bstar = beta_star(p).beta;
    const double cap = gaussian_capacity(p.snr2);
    std::vector<TaggedPoint> pts{{{0.0, 0.0}}, {{gaussian_capacity(p.snr1), 0.0}}};
    for (double b : split_grid(bstar, p.snr2, cfg.beta_points))
        if (b < bstar)
            pts.push_back({{corner_r1(p, b), std::min(corner_r2_type1(p, b), cap)}, b});
    pts.push_back({{corner_r1(p, bstar), cap}, bstar});
    pts.push_back({{0.0, cap}});
    RegionResult r;
    std::tie(r.region, r.vertex_beta) = region_from_tagged(pts);
    r.regime = std::move(regime);
    r.capacity = false;
    r.description = "weak interference: union over beta of decode-and-forward pentagons (achievable)";
    return r;
}

/// Cross-check path for the weak regime: hull of the per-split pentagons.
inline SweepUnion region_type1_by_union(const ChannelParams& p, std::span<const double> betas)
{
    std::vector<RateRegion> regions;
    for (double b : betas)
        regions.push_back(pentagon_to_region(pentagon_weak(p, PowerSplit(b))));
    return union_over_sweep(regions);
}

inline SweepUnion region_type1_by_union(const ChannelParams& p, std::size_t beta_points = 201)
{
    return region_type1_by_union(p, linspace(0.0, 1.0, beta_points));
}

/// Sum capacity of the Z-interference channel without the relay link.
inline double sum_capacity_no_relay(const ChannelParams& p)
{
    p.validate();
    if (p.inr2 <= p.snr2)
        return gaussian_capacity(p.snr2) + gaussian_capacity(p.snr1 / (1.0 + p.inr2));
    if (p.inr2 <= inr2_section(p))
        return gaussian_capacity(p.snr1 + p.inr2);
    return gaussian_capacity(p.snr1) + gaussian_capacity(p.snr2);
}

/// Sum rate of the weak-regime decode-and-forward region, reached at beta*.
inline double df_max_sum_rate(const ChannelParams& p)
{
    return corner_r1(p, beta_star(p).beta) + gaussian_capacity(p.snr2);
}

/// Lower-right corner sum rate for a fixed split.
inline double df_sum_rate_fixed_beta(const ChannelParams& p, double beta)
{
    return corner_r1(p, beta) + corner_r2_type1(p, beta);
}

struct WynerZivParams
{
    double sigma2_over_n = kInf; // quantization noise power over N
    double delta0 = 0.0;          // bits lost to quantization
};

struct CfRatePair
{
    double r1 = 0.0;
    double r2 = 0.0;
    WynerZivParams wz;
};

/// Compress-and-forward alternative: receiver 2 Wyner-Ziv quantizes Y2 with
/// Gaussian noise and sends the index over the link; no power splitting.
inline CfRatePair cf_rate_pair_type1(const ChannelParams& p)
{
    p.validate();
    CfRatePair out;
    out.r2 = gaussian_capacity(p.snr2);
    const double base = gaussian_capacity(p.snr1 / (1.0 + p.inr2));
    if (p.r0 == 0.0) {
        out.r1 = base;
        return out;
    }
    const double f1 = relay_factor(p.r0) - 1.0;
    out.wz.sigma2_over_n = (1.0 + p.snr2 * (1.0 + p.snr1) / (1.0 + p.snr1 + p.inr2)) / f1;
    out.wz.delta0 = gaussian_capacity(f1 * (1.0 + p.snr2 + p.inr2) * (1.0 + p.snr1 + p.inr2) /
                          ((1.0 + p.inr2) * ((1.0 + p.snr1) * (1.0 + p.snr2) + p.inr2)));
    out.r1 = base + p.r0 - out.wz.delta0;
    return out;
}

enum class AsymptoticScheme { BetaStar, FixedBeta, CompressForward };

struct ScaledGap
{
    double scale = 1.0;
    double gap = 0.0; // achieved sum rate - (C_sum(0) + R0)
};

struct AsymptoticOptions
{
    AsymptoticScheme scheme = AsymptoticScheme::BetaStar;
    double fixed_beta = 0.0; // FixedBeta only; must stay in (0, beta*] at every scale
    double step = 10.0;      // SNR1, SNR2, INR2 multiply by step^k
};

/// Gap to C_sum(0) + R0 as all SNR/INR grow with fixed ratios (noise -> 0).
inline std::vector<ScaledGap> asymptotic_sum_gain_type1(const ChannelParams& p, std::size_t n_scalings,
                                                         const AsymptoticOptions& opt = {})
{
    if (!(opt.step > 1.0))
        throw std::invalid_argument("asymptotic_sum_gain_type1: step must exceed 1");
    std::vector<ScaledGap> out;
    double scale = 1.0;
    for (std::size_t k = 0; k < n_scalings; ++k, scale *= opt.step) {
        const ChannelParams q = p.scaled(scale);
        if (classify_type1(q).label != RegimeLabel::Weak)
            throw std::domain_error("asymptotic_sum_gain_type1: not in the weak regime at scale " +
                                    std::to_string(scale));
        const double bound = sum_capacity_no_relay(q) + q.r0;
        double achieved = 0.0;
        switch (opt.scheme) {
        case AsymptoticScheme::BetaStar:
            achieved = df_max_sum_rate(q);
            break;
        case AsymptoticScheme::FixedBeta:
            if (!(opt.fixed_beta > 0.0) || opt.fixed_beta > beta_star(q).beta)
                throw std::domain_error("asymptotic_sum_gain_type1: fixed beta outside (0, beta*] at scale " +
                                        std::to_string(scale));
            achieved = df_sum_rate_fixed_beta(q, opt.fixed_beta);
            break;
        case AsymptoticScheme::CompressForward: {
            const auto cf = cf_rate_pair_type1(q);
            achieved = cf.r1 + cf.r2;
            break;
        }
        }
        out.push_back({scale, achieved - bound});
    }
    return out;
}

/// Limit of beta* as the noise power vanishes with fixed SNR/INR ratios.
inline double beta_star_high_snr_limit(const ChannelParams& p)
{
    const double g = std::exp2(-2.0 * p.r0);
    return g / (1.0 + (1.0 - g) * p.inr2 / p.snr1);
}

} // namespace zrelay
