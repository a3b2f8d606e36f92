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

// zrelay command-line front end.
//
//   zrelay classify --type 1 --snr1 25dB --snr2 25dB --inr2 30dB --r0 2
//   zrelay region   --type 2 --snr1 20 --snr2 20 --inr2 15 --r0 2 --format csv -o fig.csv
//   zrelay verify   --suite halfbit --draws 10000 --seed 7
//
// Exit status: 0 success, 1 usage, 2 verification failure, 3 I/O.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "zrelay/core.hpp"
#include "zrelay/io.hpp"
#include "zrelay/type1.hpp"
#include "zrelay/type2.hpp"
#include "zrelay/verify.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitVerify = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct ChannelFlags
{
    int type = 1;
    std::string snr1, snr2, inr2;
    double r0 = 0.0;
    bool linear = false;
};

// "25dB" is always dB; a bare number is dB unless --linear is given.
double parse_power(const std::string& text, bool linear_default, const char* flag)
{
    std::string s = text;
    bool db = !linear_default;
    for (const char* suffix : {"dB", "db", "DB"}) {
        const std::string suf(suffix);
        if (s.size() > suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0) {
            s.erase(s.size() - suf.size());
            db = true;
            break;
        }
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size())
        throw UsageError(std::string("cannot parse ") + flag + " value '" + text + "'");
    return db ? zrelay::from_db(v) : v;
}

zrelay::ChannelParams make_params(const ChannelFlags& f)
{
    try {
        return zrelay::ChannelParams::linear(parse_power(f.snr1, f.linear, "--snr1"),
                                             parse_power(f.snr2, f.linear, "--snr2"),
                                             parse_power(f.inr2, f.linear, "--inr2"), f.r0);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

zrelay::ChannelType channel_type(int t) { return t == 1 ? zrelay::ChannelType::TypeI : zrelay::ChannelType::TypeII; }

void add_channel_flags(CLI::App* cmd, ChannelFlags& f)
{
    cmd->add_option("--type", f.type, "Channel type: 1 (link from receiver 2 to 1) or 2 (link from 1 to 2)")
        ->required()
        ->check(CLI::IsMember({1, 2}));
    cmd->add_option("--snr1", f.snr1, "SNR of user 1 (dB unless --linear; a 'dB' suffix always means dB)")
        ->required();
    cmd->add_option("--snr2", f.snr2, "SNR of user 2")->required();
    cmd->add_option("--inr2", f.inr2, "INR of user 2 at receiver 1")->required();
    cmd->add_option("--r0", f.r0, "Relay link rate in bits per channel use")->required()->check(CLI::NonNegativeNumber);
    cmd->add_flag("--linear", f.linear, "Read unsuffixed SNR/INR values as linear power ratios");
}

std::string governing_region(const zrelay::Regime& r)
{
    using zrelay::RegimeLabel;
    const bool t1 = r.type == zrelay::ChannelType::TypeI;
    switch (r.label) {
    case RegimeLabel::Weak:
        return t1 ? "union over beta of decode-and-forward pentagons (achievable)"
                  : "union over beta of quantize-and-forward shifted pentagons (achievable)";
    case RegimeLabel::ModeratelyStrong:
        return "convex hull of combined decode/compress-forward pentagons (achievable)";
    case RegimeLabel::Strong:
        return t1 ? "pentagon gamma(SNR1), gamma(SNR2), gamma(SNR1+INR2)+R0 (capacity)"
                  : "pentagon gamma(SNR1), gamma(SNR2)+R0, gamma(SNR1+INR2) (capacity)";
    case RegimeLabel::VeryStrong:
        return t1 ? "rectangle gamma(SNR1) x gamma(SNR2) (capacity)"
                  : "rectangle gamma(SNR1) x (gamma(SNR2)+R0) (capacity)";
    }
    return "";
}

std::filesystem::path output_path(const std::string& requested, const std::string& fallback_name)
{
    if (!requested.empty())
        return requested;
    const char* dir = std::getenv("ZRELAY_OUTPUT_DIR");
    return std::filesystem::path(dir && *dir ? dir : ".") / fallback_name;
}

void write_text(const std::filesystem::path& path, const std::string& text)
{
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::error_code ec;
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw IoError("cannot open " + path.string() + " for writing");
    os << text;
    os.close();
    if (!os)
        throw IoError("write failed for " + path.string());
}

int cmd_classify(const ChannelFlags& f, bool as_json)
{
    const auto p = make_params(f);
    const auto regime = zrelay::classify(channel_type(f.type), p);
    if (as_json) {
        auto j = zrelay::to_json(regime);
        j["region"] = governing_region(regime);
        j["params"] = zrelay::to_json(p);
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << zrelay::to_string(regime.label) << ", region: " << governing_region(regime) << '\n';
    std::cout << "INR2 = " << regime.inr2;
    if (regime.inr2 > 0.0)
        std::cout << " (" << zrelay::to_db(regime.inr2) << " dB)";
    std::cout << '\n';
    for (const auto& [name, v] : regime.thresholds) {
        std::cout << "  " << name << " = " << v;
        if (v > 0.0)
            std::cout << " (" << zrelay::to_db(v) << " dB)";
        std::cout << '\n';
    }
    return 0;
}

struct RegionFlags
{
    std::string format = "json";
    std::string output;
    bool curve = false;
    zrelay::SweepConfig sweep;
};

int cmd_region(const ChannelFlags& f, const RegionFlags& rf)
{
    const auto p = make_params(f);
    const auto result = f.type == 1 ? zrelay::region_type1(p, rf.sweep) : zrelay::region_type2(p, rf.sweep);
    const auto path = output_path(rf.output, "region_type" + std::to_string(f.type) + "." + rf.format);
    std::string text;
    if (rf.format == "csv") {
        text = zrelay::to_csv(result.region, rf.curve ? &result.vertex_beta : nullptr);
    } else {
        auto j = zrelay::to_json(result);
        j["params"] = zrelay::to_json(p);
        text = j.dump(2) + "\n";
    }
    write_text(path, text);
    if (path != "-")
        std::cerr << zrelay::to_string(result.regime.label) << ": " << result.region.vertices.size()
                  << " vertices, max sum rate " << result.region.max_sum_rate() << " bits -> " << path.string()
                  << '\n';
    return 0;
}

int cmd_verify(const std::string& suite, const zrelay::VerifyOptions& opt, const std::string& output)
{
    nlohmann::json reports = nlohmann::json::array();
    bool ok = true;
    const auto& names = zrelay::suite_names();
    std::vector<std::string> run = suite == "all" ? names : std::vector<std::string>{suite};
    for (const auto& name : run) {
        const auto rep = zrelay::run_suite(name, opt);
        ok = ok && rep.passed();
        reports.push_back(zrelay::to_json(rep));
    }
    const nlohmann::json out{{"passed", ok}, {"suites", reports}};
    write_text(output.empty() ? std::filesystem::path("-") : std::filesystem::path(output), out.dump(2) + "\n");
    return ok ? 0 : kExitVerify;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Rate regions of the Gaussian Z-interference channel with a digital relay link"};
    app.require_subcommand(1);

    ChannelFlags classify_flags;
    bool classify_json = false;
    auto* classify = app.add_subcommand("classify", "Report the interference regime and its thresholds");
    add_channel_flags(classify, classify_flags);
    classify->add_flag("--json", classify_json, "Emit JSON");

    ChannelFlags region_flags;
    RegionFlags rf;
    auto* region = app.add_subcommand("region", "Compute a rate region and write its vertices and half-planes");
    add_channel_flags(region, region_flags);
    region->add_option("--format", rf.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    region->add_option("-o,--output", rf.output,
                       "Output file ('-' for stdout); default $ZRELAY_OUTPUT_DIR/region_type<T>.<format>");
    region->add_flag("--curve", rf.curve, "Add the power split of each vertex as a beta column (CSV)");
    region->add_option("--beta-points", rf.sweep.beta_points, "Corner-curve samples")->check(CLI::Range(2, 1000000));
    region->add_option("--alpha-points", rf.sweep.alpha_points, "Alpha grid (moderately strong)")
        ->check(CLI::Range(2, 100000));
    region->add_option("--alpha-halfwidth", rf.sweep.alpha_halfwidth, "Alpha grid half-width around alpha*")
        ->check(CLI::NonNegativeNumber);
    region->add_option("--hull-beta-points", rf.sweep.hull_beta_points, "Beta grid (moderately strong)")
        ->check(CLI::Range(2, 100000));
    region->add_option("--ra-points", rf.sweep.ra_points, "Ra grid (moderately strong)")->check(CLI::Range(2, 100000));

    std::string suite = "all";
    std::string verify_output;
    zrelay::VerifyOptions vopt;
    auto* verify = app.add_subcommand("verify", "Run the verification suites and print a JSON report");
    std::vector<std::string> suite_choices = zrelay::suite_names();
    suite_choices.push_back("all");
    verify->add_option("--suite", suite, "Suite to run")->check(CLI::IsMember(suite_choices));
    verify->add_option("--seed", vopt.seed, "Random seed");
    verify->add_option("--draws", vopt.draws, "Random draws per suite")->check(CLI::Range(1, 100000000));
    verify->add_option("-o,--output", verify_output, "Write the report to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*classify)
            return cmd_classify(classify_flags, classify_json);
        if (*region)
            return cmd_region(region_flags, rf);
        if (*verify)
            return cmd_verify(suite, vopt, verify_output);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
