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
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zrelay {

// All rates in this library are in bits per *real* channel use: gaussian_capacity()
// carries the 1/2 factor. SNR/INR values are linear power ratios; dB only
// appears at I/O boundaries (see from_db / to_db).

/// Gaussian point-to-point capacity 1/2 log2(1 + x).
inline double gaussian_capacity(double x)
{
    if (!std::isfinite(x) || x < 0.0)
        throw std::domain_error("gamma: argument must be finite and non-negative, got " + std::to_string(x));
    return 0.5 * std::log2(1.0 + x);
}

inline double from_db(double db) { return std::pow(10.0, db / 10.0); }

inline double to_db(double linear)
{
    if (!(linear > 0.0))
        throw std::domain_error("to_db: argument must be positive");
    return 10.0 * std::log10(linear);
}

inline double positive_part(double x) { return std::max(x, 0.0); }

/// Relay gain factor 2^{2 R0}.
inline double relay_factor(double r0) { return std::exp2(2.0 * r0); }

struct ChannelParams
{
    double snr1 = 0.0;
    double snr2 = 0.0;
    double inr2 = 0.0;
    double r0 = 0.0; // bits per channel use

    void validate() const
    {
        auto check = [](double v, const char* name) {
            if (!std::isfinite(v) || v < 0.0)
                throw std::invalid_argument(std::string("ChannelParams: ") + name +
                                            " must be finite and non-negative");
        };
        check(snr1, "snr1");
        check(snr2, "snr2");
        check(inr2, "inr2");
        check(r0, "r0");
    }

    static ChannelParams linear(double snr1, double snr2, double inr2, double r0)
    {
        ChannelParams p{snr1, snr2, inr2, r0};
        p.validate();
        return p;
    }

    static ChannelParams db(double snr1_db, double snr2_db, double inr2_db, double r0)
    {
        return linear(from_db(snr1_db), from_db(snr2_db), from_db(inr2_db), r0);
    }

    /// From transmit powers, real channel gains and the common noise power N.
    static ChannelParams physical(double p1, double p2, double h11, double h22, double h21,
                                  double noise, double r0)
    {
        if (!(noise > 0.0) || p1 < 0.0 || p2 < 0.0)
            throw std::invalid_argument("ChannelParams: powers must be non-negative and noise positive");
        return linear(h11 * h11 * p1 / noise, h22 * h22 * p2 / noise, h21 * h21 * p2 / noise, r0);
    }

    /// Same channel with every SNR/INR multiplied by `factor` (noise power divided by it).
    [[nodiscard]] ChannelParams scaled(double factor) const
    {
        return linear(snr1 * factor, snr2 * factor, inr2 * factor, r0);
    }

    [[nodiscard]] ChannelParams with_r0(double r) const { return linear(snr1, snr2, inr2, r); }
    [[nodiscard]] ChannelParams with_inr2(double inr) const { return linear(snr1, snr2, inr, r0); }
};

enum class RegimeLabel { Weak, ModeratelyStrong, Strong, VeryStrong };

inline std::string_view to_string(RegimeLabel label)
{
    switch (label) {
    case RegimeLabel::Weak: return "Weak";
    case RegimeLabel::ModeratelyStrong: return "ModeratelyStrong";
    case RegimeLabel::Strong: return "Strong";
    case RegimeLabel::VeryStrong: return "VeryStrong";
    }
    return "?";
}

enum class ChannelType { TypeI = 1, TypeII = 2 };

struct Regime
{
    RegimeLabel label = RegimeLabel::Weak;
    ChannelType type = ChannelType::TypeI;
    double inr2 = 0.0;
    // Keys: "SNR2", "INR2_star" (type I); "SNR2", "INR2_dagger", "INR2_ddagger" (type II).
    // "INR2_section" is reported for both.
    std::map<std::string, double> thresholds;
};

/// Type I very-strong threshold ((1+SNR1)(2^{-2R0}(1+SNR2) - 1))^+.
inline double inr2_star(const ChannelParams& p)
{
    return positive_part((1.0 + p.snr1) * (std::exp2(-2.0 * p.r0) * (1.0 + p.snr2) - 1.0));
}

/// Type II strong threshold 2^{2R0}(1+SNR2) - 1.
inline double inr2_dagger(const ChannelParams& p) { return relay_factor(p.r0) * (1.0 + p.snr2) - 1.0; }

/// Type II very-strong threshold (1+SNR1) INR2_dagger.
inline double inr2_ddagger(const ChannelParams& p) { return (1.0 + p.snr1) * inr2_dagger(p); }

/// Classical very-strong boundary SNR2(1+SNR1); the half-bit bound on the
/// infinite-relay gain holds below it.
inline double inr2_section(const ChannelParams& p) { return p.snr2 * (1.0 + p.snr1); }

// Ties at a threshold resolve to the stronger regime. The region formulas on
// either side coincide there, so this only fixes the reported label.

inline Regime classify_type1(const ChannelParams& p)
{
    p.validate();
    Regime r;
    r.type = ChannelType::TypeI;
    r.inr2 = p.inr2;
    const double star = inr2_star(p);
    r.thresholds = {{"SNR2", p.snr2}, {"INR2_star", star}, {"INR2_section", inr2_section(p)}};
    if (p.inr2 >= star)
        r.label = RegimeLabel::VeryStrong;
    else if (p.inr2 < std::min(p.snr2, star))
        r.label = RegimeLabel::Weak;
    else
        r.label = RegimeLabel::Strong;
    return r;
}

inline Regime classify_type2(const ChannelParams& p)
{
    p.validate();
    Regime r;
    r.type = ChannelType::TypeII;
    r.inr2 = p.inr2;
    const double dagger = inr2_dagger(p);
    const double ddagger = inr2_ddagger(p);
    r.thresholds = {{"SNR2", p.snr2},
                    {"INR2_dagger", dagger},
                    {"INR2_ddagger", ddagger},
                    {"INR2_section", inr2_section(p)}};
    if (p.inr2 >= ddagger)
        r.label = RegimeLabel::VeryStrong;
    else if (p.inr2 >= dagger)
        r.label = RegimeLabel::Strong;
    else if (p.inr2 >= p.snr2)
        r.label = RegimeLabel::ModeratelyStrong;
    else
        r.label = RegimeLabel::Weak;
    return r;
}

inline Regime classify(ChannelType type, const ChannelParams& p)
{
    return type == ChannelType::TypeI ? classify_type1(p) : classify_type2(p);
}

} // namespace zrelay
