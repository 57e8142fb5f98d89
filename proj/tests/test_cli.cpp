// SPDX-License-Identifier: Apache-2.0
//
// pathgain: closed-form average path gain laws for common radio environments
// Copyright (C) 2026 The pathgain authors
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

#include "commands.hpp"
#include "test_support.hpp"

using namespace pathgain;
using namespace pathgain::cli;

namespace
{
struct Run
{
    int code;
    std::string out;
    std::string err;
};

template <class F>
Run capture(F f)
{
    std::ostringstream out, err;
    const int code = f(out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &s)
{
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);)
        out.push_back(l);
    return out;
}

std::string synthetic_csv(double intercept, double exponent, int n)
{
    std::ostringstream s;
    s << "range_m,path_gain_db\n";
    for (int i = 0; i < n; ++i)
    {
        const double r = 10.0 * std::pow(100.0, double(i) / (n - 1));
        s << format_range(r) << ',' << intercept - 10.0 * exponent * std::log10(r) << '\n';
    }
    return s.str();
}
} // namespace

TEST_CASE("range parsing", "[cli]")
{
    const auto r = parse_range("5:70:14");
    CHECK(r.values().size() == 14);
    CHECK(r.values().front() == 5.0);
    CHECK(r.values().back() == 70.0);
    const auto g = parse_range("10:1000:3", true).values();
    CHECK_THAT(g[1], test::WithinRel(100.0, 1e-14));
    CHECK(parse_range("7:7:1").values() == std::vector<double>{7.0});
    for (const char *bad : {"", "1:2", "0:10:5", "10:5:3", "1:2:0", "1:2:3x", "a:b:c"})
    {
        INFO(bad);
        CHECK_THROWS_AS(parse_range(bad), UsageError);
    }
}

TEST_CASE("predict writes a CSV series", "[cli]")
{
    PredictOptions o;
    o.config_path = test::source_path("configs/corridor_2ghz.ini");
    o.morphology = "los_corridor";
    o.range = "5:70:14";
    const auto run = capture([&](auto &out, auto &err) { return cmd_predict(o, out, err); });
    REQUIRE(run.code == kOk);
    const auto l = lines(run.out);
    REQUIRE(l.size() == 15);
    CHECK(l[0] == "range_m,gain_db,component_coherent,component_waveguide,component_free_space,flags");
    CHECK(l[1].rfind("5,", 0) == 0);
    CHECK(l.back().rfind("70,", 0) == 0);
}

TEST_CASE("predict noise is seeded", "[cli]")
{
    PredictOptions o;
    o.config_path = test::source_path("configs/rural_28ghz.ini");
    o.morphology = "rural";
    o.range = "20:2000:30";
    o.log_spacing = true;
    o.noise_db = 5.0;
    auto go = [&] { return capture([&](auto &out, auto &err) { return cmd_predict(o, out, err); }); };
    const auto a = go(), b = go();
    CHECK(a.code == kOk);
    CHECK(a.out == b.out);
    o.seed = 2;
    CHECK(go().out != a.out);
    o.noise_db = 0.0;
    const auto clean = go();
    o.seed = 1;
    CHECK(go().out == clean.out);
}

TEST_CASE("predict reports bad inputs", "[cli]")
{
    PredictOptions o;
    o.config_path = test::source_path("configs/corridor_2ghz.ini");
    o.morphology = "overtop";
    auto run = capture([&](auto &out, auto &err) { return cmd_predict(o, out, err); });
    CHECK(run.code == kInvalid);
    CHECK(run.err.find("[macro]") != std::string::npos);
    CHECK(run.out.empty());

    o.morphology = "friis";
    o.config_path = "/nonexistent.ini";
    run = capture([&](auto &out, auto &err) { return cmd_predict(o, out, err); });
    CHECK(run.code == kInvalid);
    CHECK(run.err.find("cannot open") != std::string::npos);
}

TEST_CASE("predict to a file", "[cli]")
{
    test::TempDir dir;
    PredictOptions o;
    o.config_path = test::source_path("configs/overtop_28ghz.ini");
    o.morphology = "overtop";
    o.range = "100:200:2";
    o.output = dir.path("p.csv");
    const auto run = capture([&](auto &out, auto &err) { return cmd_predict(o, out, err); });
    CHECK(run.code == kOk);
    CHECK(run.out.empty());
    CHECK(lines(test::slurp(o.output)).size() == 3);
}

TEST_CASE("verify command", "[cli]")
{
    VerifyCommandOptions o;
    auto run = capture([&](auto &out, auto &err) { return cmd_verify(o, out, err); });
    CHECK(run.code == kOk);
    CHECK(run.err.empty());
    CHECK(lines(run.out).back().find(" 0 failed") != std::string::npos);

    o.format = "csv";
    const auto csv1 = capture([&](auto &out, auto &err) { return cmd_verify(o, out, err); });
    const auto csv2 = capture([&](auto &out, auto &err) { return cmd_verify(o, out, err); });
    CHECK(csv1.out == csv2.out);
    CHECK(lines(csv1.out)[0] == "suite,comparison,closed_form,oracle,gap,gap_kind,bound,status,flags");

    o.inject_fault = 10.0;
    run = capture([&](auto &out, auto &err) { return cmd_verify(o, out, err); });
    CHECK(run.code == kVerifyFailed);
    CHECK(run.err.find("verify: FAILED") != std::string::npos);

    o = {};
    o.suite = "bogus";
    CHECK(capture([&](auto &out, auto &err) { return cmd_verify(o, out, err); }).code == kInvalid);
    o = {};
    o.format = "json";
    CHECK(capture([&](auto &out, auto &err) { return cmd_verify(o, out, err); }).code == kInvalid);
}

TEST_CASE("fit command", "[cli]")
{
    test::TempDir dir;
    FitOptions o;
    o.dataset_path = dir.file("d.csv", synthetic_csv(-45.0, 2.7, 25));
    o.output = dir.path("fit.csv");
    const auto run = capture([&](auto &out, auto &err) { return cmd_fit(o, out, err); });
    REQUIRE(run.code == kOk);
    CHECK(run.out == "intercept_db=-45.00 exponent=2.7000 slope_db_per_decade=-27.00 rmse_db=0.00 n_points=25\n");
    CHECK(test::slurp(o.output) == "intercept_db,exponent,rmse_db,n_points\n-45.00,2.700000,0.00,25\n");

    o.dataset_path = dir.file("bad.csv", "range_m,path_gain_db\n10,-80\nx,1\n");
    o.output.clear();
    const auto bad = capture([&](auto &out, auto &err) { return cmd_fit(o, out, err); });
    CHECK(bad.code == kInvalid);
    CHECK(bad.err.find("line 3") != std::string::npos);
}

TEST_CASE("evaluate command", "[cli]")
{
    test::TempDir dir;
    // Data generated from the model itself: zero residuals.
    PredictOptions p;
    p.config_path = test::source_path("configs/urban_canyon_3p5ghz.ini");
    p.morphology = "los_canyon";
    p.range = "20:400:20";
    const auto pred = capture([&](auto &out, auto &err) { return cmd_predict(p, out, err); });
    REQUIRE(pred.code == kOk);
    std::string csv = "range_m,path_gain_db\n";
    for (const auto &l : lines(pred.out))
        if (l.rfind("range_m", 0) != 0)
            csv += l.substr(0, l.find(',', l.find(',') + 1)) + "\n";

    EvaluateOptions o;
    o.dataset_path = dir.file("d.csv", csv);
    o.config_path = p.config_path;
    o.model = "los_canyon";
    o.residuals_output = dir.path("res.csv");
    const auto run = capture([&](auto &out, auto &err) { return cmd_evaluate(o, out, err); });
    REQUIRE(run.code == kOk);
    CHECK(run.out == "model=los_canyon rmse_db=0.00 n_points=20\n");
    const auto res = lines(test::slurp(o.residuals_output));
    CHECK(res.size() == 21);
    CHECK(res[0] == "range_m,path_gain_db,predicted_db,residual_db");

    o.model = "friis";
    const auto off = capture([&](auto &out, auto &err) { return cmd_evaluate(o, out, err); });
    CHECK(off.code == kOk);
    CHECK(off.out.find("rmse_db=0.00") == std::string::npos);
}

TEST_CASE("table command", "[cli]")
{
    test::TempDir dir;
    TableOptions o;
    for (const char *street : {"3rd_ave", "120th_nw_winter"})
    {
        const std::string cfg = test::source_path(std::string("configs/streets/") + street + ".ini");
        PredictOptions p;
        p.config_path = cfg;
        p.morphology = "canyon_total";
        p.range = "50:600:40";
        p.noise_db = 3.0;
        p.output = dir.path(std::string(street) + "_pred.csv");
        std::ostringstream sink;
        REQUIRE(cmd_predict(p, sink, sink) == kOk);
        o.streets.push_back({cfg, p.output});
    }
    const auto run = capture([&](auto &out, auto &err) { return cmd_table(o, out, err); });
    REQUIRE(run.code == kOk);
    const auto l = lines(run.out);
    REQUIRE(l.size() == 4);
    CHECK(l[0] == "street,n_points,data_fit_db,uma_los_db,uma_nlos_db,theory_db");
    CHECK(l[1].rfind("3rd Ave,40,", 0) == 0);
    CHECK(l[3].rfind("Overall,80,", 0) == 0);

    o.streets = {{test::source_path("configs/corridor_2ghz.ini"), o.streets[0].second}};
    CHECK(capture([&](auto &out, auto &err) { return cmd_table(o, out, err); }).code == kInvalid);
}

TEST_CASE("models command lists the catalogue", "[cli]")
{
    std::ostringstream out;
    CHECK(cmd_models(out) == kOk);
    CHECK(lines(out.str()).size() == model_catalog().size());
    CHECK(out.str().find("canyon_total") != std::string::npos);
}
