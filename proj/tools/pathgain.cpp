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

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char **argv)
{
    using namespace pathgain::cli;

    CLI::App app{"Closed-form average path gain: prediction sweeps, oracle verification and dataset fitting"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "pathgain 1.0.0");

    PredictOptions po;
    auto *predict = app.add_subcommand("predict", "Sweep a model over range and write CSV");
    predict->add_option("-c,--config", po.config_path, "Environment config (INI)")->required()->check(CLI::ExistingFile);
    predict->add_option("-m,--morphology", po.morphology, "Model name (see `pathgain models`)")->required();
    predict->add_option("-r,--range", po.range, "Horizontal range sweep min:max:points in m")->capture_default_str();
    predict->add_flag("--log", po.log_spacing, "Logarithmic range spacing");
    predict->add_option("-o,--output", po.output, "Output CSV (default stdout)");
    predict->add_option("--format", "Output format")->check(CLI::IsMember({"csv"}));
    predict->add_option("--noise-db", po.noise_db, "Add zero-mean Gaussian noise with this deviation (dB)");
    predict->add_option("--seed", po.seed, "Noise seed")->capture_default_str();

    VerifyCommandOptions vo;
    auto *verify = app.add_subcommand("verify", "Check closed forms against numerical oracles");
    verify->add_option("suite", vo.suite, "Suite name or `all`")->capture_default_str();
    verify->add_option("--tolerance-profile", vo.tolerance_profile, "Oracle numerics")
        ->check(CLI::IsMember({"default", "strict"}))
        ->capture_default_str();
    verify->add_option("--format", vo.format, "Report format")->check(CLI::IsMember({"text", "csv"}))->capture_default_str();
    verify->add_option("-o,--output", vo.output, "Report file (default stdout)");
    verify->add_option("--inject-fault", vo.inject_fault, "Scale closed forms to exercise failure paths")->group("");

    FitOptions fo;
    auto *fit = app.add_subcommand("fit", "Least-squares slope-intercept fit of a dataset");
    fit->add_option("dataset", fo.dataset_path, "CSV with range_m,path_gain_db")->required()->check(CLI::ExistingFile);
    fit->add_option("-o,--output", fo.output, "Also write the fit as CSV");
    fit->add_option("--format", "Output format")->check(CLI::IsMember({"csv"}));

    EvaluateOptions eo;
    auto *evaluate = app.add_subcommand("evaluate", "RMS error of a model against a dataset");
    evaluate->add_option("dataset", eo.dataset_path, "CSV with range_m,path_gain_db")->required()->check(CLI::ExistingFile);
    evaluate->add_option("-c,--config", eo.config_path, "Environment config (INI)")->required()->check(CLI::ExistingFile);
    evaluate->add_option("-m,--model", eo.model, "Model name")->required();
    evaluate->add_option("--residuals", eo.residuals_output, "Write per-record residuals CSV");
    evaluate->add_option("--format", "Output format")->check(CLI::IsMember({"csv"}));

    TableOptions to;
    std::vector<std::string> street_args;
    auto *table = app.add_subcommand("table", "Per-street RMS table: data fit, 38.901 UMa LOS/NLOS, canyon_total");
    table->add_option("-s,--street", street_args, "Street config and dataset: --street CONFIG DATA (repeatable)")
        ->required()
        ->expected(2, CLI::detail::expected_max_vector_size)
        ->allow_extra_args(false);
    table->add_option("-o,--output", to.output, "Output CSV (default stdout)");

    auto *models = app.add_subcommand("models", "List model names");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInvalid;
    }

    if (*predict)
        return cmd_predict(po, std::cout, std::cerr);
    if (*verify)
        return cmd_verify(vo, std::cout, std::cerr);
    if (*fit)
        return cmd_fit(fo, std::cout, std::cerr);
    if (*evaluate)
        return cmd_evaluate(eo, std::cout, std::cerr);
    if (*table)
    {
        if (street_args.size() % 2 != 0)
        {
            std::cerr << "table: each --street takes CONFIG DATA\n";
            return kInvalid;
        }
        for (std::size_t i = 0; i < street_args.size(); i += 2)
            to.streets.emplace_back(street_args[i], street_args[i + 1]);
        return cmd_table(to, std::cout, std::cerr);
    }
    if (*models)
        return cmd_models(std::cout);
    return kInvalid;
}
