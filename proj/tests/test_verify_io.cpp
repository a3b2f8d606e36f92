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

#include <string>

#include "zrelay/io.hpp"
#include "zrelay/type1.hpp"
#include "zrelay/type2.hpp"
#include "zrelay/verify.hpp"

using namespace zrelay;
using Catch::Approx;

TEST_CASE("every suite passes with the default seed", "[verify]")
{
    VerifyOptions opt;
    opt.draws = 30;
    for (const auto& name : suite_names()) {
        const auto rep = run_suite(name, opt);
        INFO(to_json(rep).dump(2));
        CHECK(rep.passed());
        CHECK_FALSE(rep.checks.empty());
    }
    CHECK_THROWS(run_suite("nope", opt));
}

TEST_CASE("suites are deterministic for a seed", "[verify]")
{
    VerifyOptions opt;
    opt.seed = 77;
    opt.draws = 10;
    CHECK(to_json(verify_oracle(opt)).dump() == to_json(verify_oracle(opt)).dump());
    opt.seed = 78;
    const auto a = to_json(verify_fm(opt)).dump();
    opt.seed = 79;
    CHECK(a != to_json(verify_fm(opt)).dump());
}

TEST_CASE("a failing check fails its suite", "[verify]")
{
    SuiteReport rep;
    CheckResult c{"x", 0, 0.0, 1e-9, true, ""};
    c.record(1e-10);
    CHECK(c.ok);
    c.record(std::nan(""));
    CHECK_FALSE(c.ok);
    rep.checks = {c};
    CHECK_FALSE(rep.passed());
    SuiteReport aborted;
    aborted.error = "boom";
    CHECK_FALSE(aborted.passed());
}

TEST_CASE("JSON and CSV describe the same vertices", "[io]")
{
    const auto r = region_type1(ChannelParams::db(25.0, 25.0, 20.0, 1.0));
    const auto j = to_json(r);
    const auto back = region_from_json(j);
    const auto csv = vertices_from_csv(to_csv(r.region, &r.vertex_beta));
    REQUIRE(back.vertices.size() == r.region.vertices.size());
    REQUIRE(csv.size() == r.region.vertices.size());
    for (std::size_t i = 0; i < csv.size(); ++i) {
        CHECK(back.vertices[i] == r.region.vertices[i]);
        CHECK(csv[i] == r.region.vertices[i]);
    }
    CHECK(back.halfplanes.size() == r.region.halfplanes.size());
    CHECK(j.at("regime").at("label") == "Weak");
    CHECK(j.at("capacity") == false);
    CHECK(to_csv(r.region).rfind("r1_bits,r2_bits\n", 0) == 0);
    CHECK_THROWS(vertices_from_csv("a,b\n1,2\n"));
}

TEST_CASE("regime JSON carries thresholds in both units", "[io]")
{
    const auto j = to_json(classify_type2(ChannelParams::db(20.0, 20.0, 55.0, 4.0)));
    CHECK(j.at("label") == "Strong");
    CHECK(j.at("thresholds").at("INR2_dagger").at("linear").get<double>() == Approx(256.0 * 101.0 - 1.0));
    CHECK(j.at("thresholds").at("SNR2").at("db").get<double>() == Approx(20.0));
}
