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

#include <cmath>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "zrelay/core.hpp"
#include "zrelay/geometry.hpp"
#include "zrelay/sweep.hpp"
#include "zrelay/verify.hpp"

namespace zrelay {

inline nlohmann::json to_json(const RateRegion& r)
{
    nlohmann::json hp = nlohmann::json::array();
    for (const auto& h : r.halfplanes)
        hp.push_back({h.a, h.b, h.c});
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : r.vertices)
        vs.push_back({v.r1, v.r2});
    return {{"halfplanes", hp}, {"vertices", vs}};
}

inline RateRegion region_from_json(const nlohmann::json& j)
{
    RateRegion r;
    for (const auto& h : j.at("halfplanes"))
        r.halfplanes.push_back({h.at(0).get<double>(), h.at(1).get<double>(), h.at(2).get<double>()});
    for (const auto& v : j.at("vertices"))
        r.vertices.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
    return r;
}

inline nlohmann::json to_json(const ChannelParams& p)
{
    return {{"snr1", p.snr1}, {"snr2", p.snr2}, {"inr2", p.inr2}, {"r0_bits", p.r0}};
}

inline nlohmann::json to_json(const Regime& r)
{
    nlohmann::json th = nlohmann::json::object();
    for (const auto& [k, v] : r.thresholds)
        th[k] = {{"linear", v}, {"db", v > 0.0 ? nlohmann::json(to_db(v)) : nlohmann::json(nullptr)}};
    return {{"type", static_cast<int>(r.type)},
            {"label", std::string(to_string(r.label))},
            {"inr2", r.inr2},
            {"thresholds", th}};
}

inline nlohmann::json to_json(const RegionResult& r)
{
    nlohmann::json betas = nlohmann::json::array();
    for (double b : r.vertex_beta)
        betas.push_back(std::isnan(b) ? nlohmann::json(nullptr) : nlohmann::json(b));
    nlohmann::json j = to_json(r.region);
    j["vertex_beta"] = betas;
    j["regime"] = to_json(r.regime);
    j["capacity"] = r.capacity;
    j["description"] = r.description;
    j["hull_excess"] = r.hull_excess;
    j["max_sum_rate"] = r.region.max_sum_rate();
    return j;
}

inline nlohmann::json to_json(const SuiteReport& s)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : s.checks) {
        nlohmann::json cj{{"name", c.name}, {"count", c.count}, {"worst", c.worst}, {"limit", c.limit},
                          {"passed", c.ok}};
        if (!c.note.empty())
            cj["note"] = c.note;
        checks.push_back(cj);
    }
    nlohmann::json j{{"suite", s.name}, {"seed", s.seed}, {"draws", s.draws}, {"passed", s.passed()},
                     {"checks", checks}};
    if (!s.error.empty())
        j["error"] = s.error;
    return j;
}

/// Vertex table with header r1_bits,r2_bits[,beta]; full double precision.
inline std::string to_csv(const RateRegion& r, const std::vector<double>* betas = nullptr)
{
    std::ostringstream os;
    os << std::setprecision(17);
    os << (betas ? "r1_bits,r2_bits,beta\n" : "r1_bits,r2_bits\n");
    for (std::size_t i = 0; i < r.vertices.size(); ++i) {
        os << r.vertices[i].r1 << ',' << r.vertices[i].r2;
        if (betas) {
            os << ',';
            if (i < betas->size() && !std::isnan((*betas)[i]))
                os << (*betas)[i];
        }
        os << '\n';
    }
    return os.str();
}

/// Parses the vertex columns of to_csv output.
inline std::vector<Point> vertices_from_csv(const std::string& text)
{
    std::istringstream is(text);
    std::string line;
    std::vector<Point> out;
    if (!std::getline(is, line) || line.rfind("r1_bits,r2_bits", 0) != 0)
        throw std::invalid_argument("vertices_from_csv: missing r1_bits,r2_bits header");
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        std::istringstream ls(line);
        std::string a, b;
        std::getline(ls, a, ',');
        std::getline(ls, b, ',');
        out.push_back({std::stod(a), std::stod(b)});
    }
    return out;
}

} // namespace zrelay
