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

// Type II channel: the link runs from the interfered receiver 1 to receiver 2.
// Receiver 1 spends Ra bits on a Wyner-Ziv description of
//   Ybar1 = sqrt(INR2) (U2 + W2) + alpha sqrt(INR2) W2 + Z1
// and Rb bits on a bin index of the common message W2.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "zrelay/core.hpp"
#include "zrelay/fourier_motzkin.hpp"
#include "zrelay/geometry.hpp"
#include "zrelay/sweep.hpp"
#include "zrelay/type1.hpp"

namespace zrelay {

struct Type2Scheme
{
    double alpha = 0.0;
    double beta = 1.0; // private power fraction
    double ra = 0.0;   // bits for the quantized observation
    double rb = 0.0;   // bits for the common-message bin index

    void validate(const ChannelParams& p) const
    {
        if (!(beta >= 0.0 && beta <= 1.0))
            throw std::invalid_argument("Type2Scheme: beta must lie in [0, 1]");
        if (!(ra >= 0.0) || !(rb >= 0.0))
            throw std::domain_error("Type2Scheme: ra and rb must be non-negative");
        if (!std::isfinite(alpha))
            throw std::invalid_argument("Type2Scheme: alpha must be finite");
        if (ra + rb > p.r0 * (1.0 + 1e-12) + 1e-15)
            throw std::invalid_argument("Type2Scheme: ra + rb exceeds R0");
    }

    /// alpha has no effect without a quantized description.
    [[nodiscard]] Type2Scheme canonical() const
    {
        Type2Scheme s = *this;
        if (s.ra == 0.0)
            s.alpha = 0.0;
        return s;
    }
};

struct QuantizerStats
{
    double sigma2_over_n = kInf;
    double zeta = 0.0; // bits about U2 given Y2 and W2
    double eta = 0.0;  // bits about (U2, W2) given Y2
};

inline QuantizerStats quantizer_stats(const ChannelParams& p, const Type2Scheme& s)
{
    p.validate();
    if (!(s.ra >= 0.0))
        throw std::domain_error("quantizer_stats: ra must be non-negative");
    if (!(s.beta >= 0.0 && s.beta <= 1.0))
        throw std::invalid_argument("quantizer_stats: beta must lie in [0, 1]");
    QuantizerStats q;
    if (s.ra == 0.0)
        return q;
    const double b = s.beta, bb = 1.0 - b, a = s.alpha;
    const double mixed = (1.0 + 2.0 * a * bb + a * a * bb) * p.inr2 + b * bb * a * a * p.inr2 * p.snr2;
    q.sigma2_over_n = (1.0 + p.snr2 + mixed) / ((relay_factor(s.ra) - 1.0) * (1.0 + p.snr2));
    const double noise = 1.0 + q.sigma2_over_n;
    q.zeta = gaussian_capacity(b * p.inr2 / ((1.0 + b * p.snr2) * noise));
    q.eta = gaussian_capacity(mixed / ((1.0 + p.snr2) * noise));
    return q;
}

/// Combination coefficient minimizing the quantization noise.
inline double alpha_star(const ChannelParams& p, double beta)
{
    if (!(beta >= 0.0 && beta <= 1.0))
        throw std::invalid_argument("alpha_star: beta must lie in [0, 1]");
    return -1.0 / (1.0 + beta * p.snr2);
}

/// sigma^2 / N at alpha* with the whole link spent on quantization.
inline double sigma2_over_n_at_alpha_star(const ChannelParams& p, double beta)
{
    if (p.r0 == 0.0)
        return kInf;
    return (1.0 + beta * p.inr2 / (1.0 + beta * p.snr2)) / (relay_factor(p.r0) - 1.0);
}

/// Upward shift of the no-relay weak-regime corner for split beta.
inline double delta_weak(const ChannelParams& p, double beta)
{
    p.validate();
    if (!(beta >= 0.0 && beta <= 1.0))
        throw std::invalid_argument("delta_weak: beta must lie in [0, 1]");
    const double f = relay_factor(p.r0);
    return gaussian_capacity(beta * (f - 1.0) * p.inr2 / (f * (1.0 + beta * p.snr2) + beta * p.inr2));
}

inline Pentagon pentagon_type2(const ChannelParams& p, const Type2Scheme& s)
{
    s.validate(p);
    const QuantizerStats q = quantizer_stats(p, s);
    const double b = s.beta, bb = 1.0 - b;
    const double denom = 1.0 + b * p.inr2;
    Pentagon pent;
    pent.r1_max = gaussian_capacity(p.snr1 / denom);
    pent.r2_max = std::min(gaussian_capacity(p.snr2) + s.rb + q.eta, gaussian_capacity(b * p.snr2) + gaussian_capacity(bb * p.inr2 / denom) + q.zeta);
    pent.sum_max = gaussian_capacity(b * p.snr2) + gaussian_capacity((p.snr1 + bb * p.inr2) / denom) + q.zeta;
    return pent;
}

/// Decoding constraints behind pentagon_type2 over (S1, S2, T2) with
/// R1 = S1 and R2 = S2 + T2. Receiver 1 decodes (X1, W2) alone; receiver 2
/// decodes (U2, W2) with the quantized observation and the bin index.
inline LinearSystem mac_constraint_system_type2(const ChannelParams& p, const Type2Scheme& s)
{
    s.validate(p);
    const QuantizerStats q = quantizer_stats(p, s);
    const double b = s.beta, bb = 1.0 - b;
    const double denom = 1.0 + b * p.inr2;
    LinearSystem sys({"S1", "S2", "T2", "R1", "R2"});
    sys.add_le({{"S2", 1.0}}, gaussian_capacity(b * p.snr2) + q.zeta);
    sys.add_le({{"S2", 1.0}, {"T2", 1.0}}, gaussian_capacity(p.snr2) + q.eta + s.rb);
    sys.add_le({{"S1", 1.0}}, gaussian_capacity(p.snr1 / denom));
    sys.add_le({{"T2", 1.0}}, gaussian_capacity(bb * p.inr2 / denom));
    sys.add_le({{"S1", 1.0}, {"T2", 1.0}}, gaussian_capacity((p.snr1 + bb * p.inr2) / denom));
    for (const char* v : {"S1", "S2", "T2"})
        sys.add_nonnegative(v);
    sys.add_eq({{"R1", 1.0}, {"S1", -1.0}}, 0.0);
    sys.add_eq({{"R2", 1.0}, {"S2", -1.0}, {"T2", -1.0}}, 0.0);
    return sys;
}

/// Weak-regime corner point R2 for split beta, relay shift included.
inline double corner_r2_type2(const ChannelParams& p, double beta)
{
    return gaussian_capacity(beta * p.snr2) + gaussian_capacity((1.0 - beta) * p.inr2 / (1.0 + p.snr1 + beta * p.inr2)) +
           delta_weak(p, beta);
}

inline std::vector<CurvePoint> corner_curve_type2(const ChannelParams& p, std::span<const double> betas)
{
    p.validate();
    std::vector<CurvePoint> out;
    out.reserve(betas.size());
    for (double b : betas) {
        PowerSplit s(b);
        out.push_back({s.beta, corner_r1(p, s.beta), corner_r2_type2(p, s.beta)});
    }
    return out;
}

/// Pure-quantization scheme at alpha* used in the weak regime.
inline Type2Scheme weak_scheme(const ChannelParams& p, double beta)
{
    Type2Scheme s{alpha_star(p, beta), beta, p.r0, 0.0};
    return s.canonical();
}

namespace detail {

inline bool dominates(const Pentagon& a, const Pentagon& b)
{
    return a.r1_max >= b.r1_max && a.r2_max >= b.r2_max && a.sum_max >= b.sum_max;
}

// Drops pentagons contained in another one; the union is unchanged.
inline std::vector<Pentagon> pareto_pentagons(std::vector<Pentagon> pents)
{
    std::sort(pents.begin(), pents.end(), [](const Pentagon& a, const Pentagon& b) {
        return std::tie(a.r1_max, a.r2_max, a.sum_max) > std::tie(b.r1_max, b.r2_max, b.sum_max);
    });
    std::vector<Pentagon> kept;
    for (const auto& c : pents) {
        bool covered = false;
        for (const auto& k : kept)
            if (dominates(k, c)) {
                covered = true;
                break;
            }
        if (!covered)
            kept.push_back(c);
    }
    return kept;
}

} // namespace detail

/// Hull over an (alpha, beta, ra) grid of pentagon_type2 with rb = R0 - ra.
inline SweepUnion moderately_strong_hull(const ChannelParams& p, const SweepConfig& cfg = {})
{
    cfg.validate();
    std::vector<Pentagon> pents;
    const auto ras = p.r0 > 0.0 ? linspace(0.0, p.r0, cfg.ra_points) : std::vector<double>{0.0};
    for (double beta : linspace(0.0, 1.0, cfg.hull_beta_points)) {
        const double a0 = alpha_star(p, beta);
        const auto alphas = linspace(a0 - cfg.alpha_halfwidth, a0 + cfg.alpha_halfwidth, cfg.alpha_points);
        for (double ra : ras) {
            const double rb = std::max(0.0, p.r0 - ra);
            if (ra == 0.0) {
                pents.push_back(pentagon_type2(p, {0.0, beta, 0.0, rb}).tightened());
                continue;
            }
            for (double a : alphas)
                pents.push_back(pentagon_type2(p, {a, beta, ra, rb}).tightened());
        }
    }
    std::vector<RateRegion> regions;
    for (const auto& pent : detail::pareto_pentagons(std::move(pents)))
        regions.push_back(pentagon_to_region(pent));
    return union_over_sweep(regions);
}

/// Weak-regime cross-check path: hull of the alpha* pentagons over beta.
inline SweepUnion region_type2_by_union(const ChannelParams& p, std::span<const double> betas)
{
    std::vector<RateRegion> regions;
    for (double b : betas)
        regions.push_back(pentagon_to_region(pentagon_type2(p, weak_scheme(p, b))));
    return union_over_sweep(regions);
}

inline SweepUnion region_type2_by_union(const ChannelParams& p, std::size_t beta_points = 201)
{
    return region_type2_by_union(p, linspace(0.0, 1.0, beta_points));
}

inline RegionResult region_type2(const ChannelParams& p, const SweepConfig& cfg = {})
{
    cfg.validate();
    Regime regime = classify_type2(p);
    switch (regime.label) {
    case RegimeLabel::VeryStrong:
        return pentagon_result({gaussian_capacity(p.snr1), gaussian_capacity(p.snr2) + p.r0, kInf}, regime, true,
                               "very strong interference: rectangle gamma(SNR1) x (gamma(SNR2)+R0)");
    case RegimeLabel::Strong:
        return pentagon_result({gaussian_capacity(p.snr1), gaussian_capacity(p.snr2) + p.r0, gaussian_capacity(p.snr1 + p.inr2)}, regime, true,
                               "strong interference: pentagon with R2 bound gamma(SNR2)+R0 and sum bound "
                               "gamma(SNR1+INR2)");
    case RegimeLabel::ModeratelyStrong: {
        const SweepUnion u = moderately_strong_hull(p, cfg);
        RegionResult r;
        r.region = u.hull;
        r.vertex_beta.assign(r.region.vertices.size(), std::numeric_limits<double>::quiet_NaN());
        r.regime = std::move(regime);
        r.capacity = false;
        r.hull_excess = u.hull_excess();
        r.description = "moderately strong interference: convex hull of combined decode/compress-forward "
                        "pentagons over (alpha, beta, Ra) (achievable)";
        return r;
    }
    case RegimeLabel::Weak:
        break;
    }

    // Weak: corner curve over the full beta range; its beta = 1 end sets the top.
    std::vector<TaggedPoint> pts{{{0.0, 0.0}}, {{gaussian_capacity(p.snr1), 0.0}}};
    for (const auto& c : corner_curve_type2(p, split_grid(1.0, p.snr2, cfg.beta_points)))
        pts.push_back({c.point(), c.beta});
    pts.push_back({{0.0, corner_r2_type2(p, 1.0)}});
    RegionResult r;
    std::tie(r.region, r.vertex_beta) = region_from_tagged(pts);
    r.regime = std::move(regime);
    r.capacity = false;
    r.description = "weak interference: union over beta of pentagons shifted up by the quantized "
                    "observation (achievable)";
    return r;
}

struct InfiniteRelaySum
{
    double c_inf = 0.0;  // sum capacity with an unlimited link
    double c0 = 0.0;     // sum capacity without the link
    double gain = 0.0;
    bool half_bit_regime = false; // INR2 <= SNR2 (1 + SNR1): gain <= 1/2
};

inline InfiniteRelaySum sum_capacity_infinite_relay(const ChannelParams& p)
{
    p.validate();
    InfiniteRelaySum out;
    out.c_inf = gaussian_capacity(p.snr1 + p.inr2) + gaussian_capacity(p.snr2 / (1.0 + p.inr2));
    out.c0 = sum_capacity_no_relay(p);
    out.gain = out.c_inf - out.c0;
    out.half_bit_regime = p.inr2 <= inr2_section(p);
    return out;
}

} // namespace zrelay
