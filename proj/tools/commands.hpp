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

#ifndef PATHGAIN_TOOLS_COMMANDS_HPP
#define PATHGAIN_TOOLS_COMMANDS_HPP

#include "pathgain/pathgain.hpp"

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/normal_distribution.hpp>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

// Subcommand bodies of the `pathgain` tool. Each takes its parsed options and
// the output/error streams and returns the process exit code, so tests can
// drive them without spawning processes.

namespace pathgain::cli
{

enum ExitCode : int
{
    kOk = 0,
    kInvalid = 1,      // bad input, config or dataset
    kVerifyFailed = 2, // a closed form missed its oracle bound
};

// Thrown for malformed command-line values that CLI11 cannot check itself.
class UsageError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

struct RangeSpec
{
    double min_m = 0.0;
    double max_m = 0.0;
    int points = 0;
    bool log_spacing = false;

    std::vector<double> values() const
    {
        std::vector<double> out;
        for (int i = 0; i < points; ++i)
        {
            const double t = points == 1 ? 0.0 : double(i) / (points - 1);
            out.push_back(log_spacing ? min_m * std::pow(max_m / min_m, t) : min_m + (max_m - min_m) * t);
        }
        if (points > 1)
            out.back() = max_m;
        return out;
    }
};

// "min:max:points", e.g. 5:70:100.
inline RangeSpec parse_range(const std::string &text, bool log_spacing = false)
{
    RangeSpec r;
    r.log_spacing = log_spacing;
    char tail = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &r.min_m, &r.max_m, &r.points, &tail) != 3)
        throw UsageError("range must look like min:max:points, got '" + text + "'");
    if (!(r.min_m > 0.0) || !std::isfinite(r.max_m) || r.points < 1)
        throw UsageError("range needs min > 0 and at least one point");
    if (r.points == 1 ? r.max_m != r.min_m : !(r.max_m > r.min_m))
        throw UsageError("range needs max > min (or max == min with one point)");
    return r;
}

namespace detail
{
using pathgain::detail::csv_field;

// Writes to `path`, or to `fallback` when the path is empty.
template <class F>
inline void with_output(const std::string &path, std::ostream &fallback, F write)
{
    if (path.empty())
    {
        write(fallback);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw UsageError("cannot open output file '" + path + "'");
    write(f);
    if (!f)
        throw UsageError("failed writing '" + path + "'");
}

inline MeasurementDataset load_dataset(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DatasetError("cannot open dataset '" + path + "'");
    try
    {
        return read_csv(in);
    }
    catch (const DatasetError &e)
    {
        throw DatasetError(path + ": " + e.what());
    }
}

inline std::string gap_text(const OracleReport &r)
{
    char buf[64];
    if (r.kind == GapKind::db)
        std::snprintf(buf, sizeof buf, "%+.2f dB", r.gap);
    else if (r.kind == GapKind::relative)
        std::snprintf(buf, sizeof buf, "%+.2e rel", r.gap);
    else
        std::snprintf(buf, sizeof buf, "%+.4f abs", r.gap);
    return buf;
}

inline std::string bound_text(const OracleReport &r)
{
    char buf[64];
    if (r.kind == GapKind::db)
        std::snprintf(buf, sizeof buf, "%.2f dB", r.bound);
    else
        std::snprintf(buf, sizeof buf, "%.2g", r.bound);
    return buf;
}

inline std::string value_text(const OracleReport &r, double v)
{
    char buf[64];
    if (r.kind == GapKind::db)
        std::snprintf(buf, sizeof buf, "%.2f", to_db(v));
    else
        std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

inline const char *status_text(const OracleReport &r)
{
    if (!r.gated)
        return "info";
    return r.passed() ? "pass" : "FAIL";
}
} // namespace detail

// ---- predict -------------------------------------------------------------

struct PredictOptions
{
    std::string config_path;
    std::string morphology;
    std::string range = "10:1000:100";
    bool log_spacing = false;
    std::string output;
    double noise_db = 0.0;
    std::uint32_t seed = 1;
};

inline int cmd_predict(const PredictOptions &o, std::ostream &out, std::ostream &err)
{
    try
    {
        const auto cfg = load_config(o.config_path);
        const auto model = make_model(o.morphology, cfg);
        const auto ranges = parse_range(o.range, o.log_spacing).values();
        pathgain::detail::require(o.noise_db >= 0.0, "noise deviation must be nonnegative");
        boost::random::mt19937 rng(o.seed);
        boost::random::normal_distribution<double> noise(0.0, o.noise_db > 0.0 ? o.noise_db : 1.0);

        std::ostringstream buf;
        buf << "range_m,gain_db";
        for (const auto &c : model.component_names)
            buf << ",component_" << c;
        buf << ",flags\n";
        for (double x : ranges)
        {
            const auto p = model.eval(x);
            double g = p.gain_db;
            if (o.noise_db > 0.0)
                g += noise(rng);
            buf << format_range(x) << ',' << format_db(g);
            for (double c : p.components_db)
                buf << ',' << format_db(c);
            buf << ',' << p.flags.to_string() << '\n';
        }
        detail::with_output(o.output, out, [&](std::ostream &s) { s << buf.str(); });
        return kOk;
    }
    catch (const std::exception &e)
    {
        err << "predict: " << e.what() << '\n';
        return kInvalid;
    }
}

// ---- verify --------------------------------------------------------------

struct VerifyCommandOptions
{
    std::string suite = "all";
    std::string tolerance_profile = "default";
    std::string format = "text";
    std::string output;
    double inject_fault = 1.0;
};

inline void print_reports(const std::vector<OracleReport> &rows, const std::string &format, std::ostream &s)
{
    if (format == "csv")
    {
        s << "suite,comparison,closed_form,oracle,gap,gap_kind,bound,status,flags\n";
        for (const auto &r : rows)
        {
            const char *kind = r.kind == GapKind::db ? "db" : r.kind == GapKind::relative ? "relative" : "absolute";
            char gap[64];
            std::snprintf(gap, sizeof gap, r.kind == GapKind::db ? "%.2f" : "%.6g", r.gap);
            s << r.suite << ',' << detail::csv_field(r.name) << ',' << detail::value_text(r, r.closed_form) << ','
              << detail::value_text(r, r.oracle) << ',' << gap << ',' << kind << ',' << detail::csv_field(detail::bound_text(r))
              << ',' << detail::status_text(r) << ',' << r.flags.to_string() << '\n';
        }
        return;
    }
    char line[512];
    std::snprintf(line, sizeof line, "%-15s %-62s %12s %12s %14s %10s  %-6s %s\n", "suite", "comparison", "closed", "oracle", "gap",
                  "bound", "status", "flags");
    s << line;
    for (const auto &r : rows)
    {
        std::snprintf(line, sizeof line, "%-15s %-62s %12s %12s %14s %10s  %-6s %s\n", r.suite.c_str(), r.name.c_str(),
                      detail::value_text(r, r.closed_form).c_str(), detail::value_text(r, r.oracle).c_str(),
                      detail::gap_text(r).c_str(), detail::bound_text(r).c_str(), detail::status_text(r),
                      r.flags.to_string().c_str());
        s << line;
    }
}

inline int cmd_verify(const VerifyCommandOptions &o, std::ostream &out, std::ostream &err)
{
    VerifyOptions vo;
    if (o.tolerance_profile == "strict")
        vo.profile = ToleranceProfile::strict;
    else if (o.tolerance_profile != "default")
    {
        err << "verify: tolerance profile must be strict or default\n";
        return kInvalid;
    }
    if (o.format != "text" && o.format != "csv")
    {
        err << "verify: format must be text or csv\n";
        return kInvalid;
    }
    vo.fault_scale = o.inject_fault;

    std::vector<OracleReport> rows;
    try
    {
        rows = run_verification(o.suite, vo);
    }
    catch (const std::invalid_argument &e)
    {
        err << "verify: " << e.what() << '\n';
        return kInvalid;
    }
    catch (const std::exception &e)
    {
        err << "verify: oracle failure: " << e.what() << '\n';
        return kVerifyFailed;
    }

    std::size_t failed = 0, gated = 0;
    for (const auto &r : rows)
    {
        gated += r.gated;
        failed += !r.passed();
    }
    try
    {
        detail::with_output(o.output, out, [&](std::ostream &s) {
            print_reports(rows, o.format, s);
            if (o.format == "text")
                s << rows.size() << " comparisons, " << gated << " gated, " << failed << " failed\n";
        });
    }
    catch (const std::exception &e)
    {
        err << "verify: " << e.what() << '\n';
        return kInvalid;
    }
    for (const auto &r : rows)
        if (!r.passed())
            err << "verify: FAILED " << r.suite << ": " << r.name << " (gap " << detail::gap_text(r) << ", bound "
                << detail::bound_text(r) << ")\n";
    return failed ? kVerifyFailed : kOk;
}

// ---- fit -----------------------------------------------------------------

struct FitOptions
{
    std::string dataset_path;
    std::string output;
};

inline int cmd_fit(const FitOptions &o, std::ostream &out, std::ostream &err)
{
    try
    {
        const auto ds = detail::load_dataset(o.dataset_path);
        const auto fit = fit_slope_intercept(ds);
        char buf[256];
        std::snprintf(buf, sizeof buf, "intercept_db=%.2f exponent=%.4f slope_db_per_decade=%.2f rmse_db=%.2f n_points=%zu\n",
                      fit.model.intercept_db, fit.model.exponent, -10.0 * fit.model.exponent, fit.rmse_db, fit.n_points);
        out << buf;
        if (!o.output.empty())
            detail::with_output(o.output, out, [&](std::ostream &s) {
                std::snprintf(buf, sizeof buf, "intercept_db,exponent,rmse_db,n_points\n%.2f,%.6f,%.2f,%zu\n", fit.model.intercept_db,
                              fit.model.exponent, fit.rmse_db, fit.n_points);
                s << buf;
            });
        return kOk;
    }
    catch (const std::exception &e)
    {
        err << "fit: " << e.what() << '\n';
        return kInvalid;
    }
}

// ---- evaluate ------------------------------------------------------------

struct EvaluateOptions
{
    std::string dataset_path;
    std::string config_path;
    std::string model;
    std::string residuals_output;
};

inline int cmd_evaluate(const EvaluateOptions &o, std::ostream &out, std::ostream &err)
{
    try
    {
        const auto ds = detail::load_dataset(o.dataset_path);
        const auto cfg = load_config(o.config_path);
        const auto model = make_model(o.model, cfg);
        const GainModel g = [&](const MeasurementRecord &r) { return model.eval(r.range_m).gain_db; };
        const auto res = residuals_db(ds.records, g);
        char buf[128];
        std::snprintf(buf, sizeof buf, "model=%s rmse_db=%.2f n_points=%zu\n", o.model.c_str(), rms(res), res.size());
        out << buf;
        if (!o.residuals_output.empty())
            detail::with_output(o.residuals_output, out, [&](std::ostream &s) {
                s << "range_m,path_gain_db,predicted_db,residual_db\n";
                for (std::size_t i = 0; i < res.size(); ++i)
                {
                    const auto &r = ds.records[i];
                    s << format_range(r.range_m) << ',' << format_db(r.path_gain_db) << ',' << format_db(r.path_gain_db - res[i])
                      << ',' << format_db(res[i]) << '\n';
                }
            });
        return kOk;
    }
    catch (const std::exception &e)
    {
        err << "evaluate: " << e.what() << '\n';
        return kInvalid;
    }
}

// ---- table ---------------------------------------------------------------

struct TableOptions
{
    std::vector<std::pair<std::string, std::string>> streets; // (config, dataset)
    std::string output;
};

inline int cmd_table(const TableOptions &o, std::ostream &out, std::ostream &err)
{
    try
    {
        std::vector<StreetCase> cases;
        for (const auto &[cfg_path, data_path] : o.streets)
        {
            const auto cfg = load_config(cfg_path);
            if (!cfg.frequency_hz || !cfg.canyon || !cfg.foliage || !cfg.macro)
                throw ConfigError(cfg_path + ": street needs [link], [canyon], [foliage] and [macro]");
            StreetCase c;
            c.name = cfg.meta.count("name") ? cfg.meta.at("name") : std::filesystem::path(cfg_path).stem().string();
            c.data = detail::load_dataset(data_path);
            c.data.frequency_hz = *cfg.frequency_hz;
            c.scene = pathgain::detail::street_scene(cfg);
            c.macro = pathgain::detail::macro_geometry(cfg);
            c.scene.validate();
            c.macro.validate();
            cases.push_back(std::move(c));
        }
        const auto rep = street_table_report(cases);
        detail::with_output(o.output, out, [&](std::ostream &s) {
            s << "street,n_points,data_fit_db,uma_los_db,uma_nlos_db,theory_db\n";
            auto row = [&](const StreetTableRow &r) {
                s << detail::csv_field(r.name) << ',' << r.n_points << ',' << format_db(r.fit_db) << ',' << format_db(r.uma_los_db)
                  << ',' << format_db(r.uma_nlos_db) << ',' << format_db(r.theory_db) << '\n';
            };
            for (const auto &r : rep.streets)
                row(r);
            row(rep.overall);
        });
        return kOk;
    }
    catch (const std::exception &e)
    {
        err << "table: " << e.what() << '\n';
        return kInvalid;
    }
}

// ---- models --------------------------------------------------------------

inline int cmd_models(std::ostream &out)
{
    char buf[160];
    for (const auto &m : model_catalog())
    {
        std::snprintf(buf, sizeof buf, "%-24s %s\n", m.name, m.summary);
        out << buf;
    }
    return kOk;
}

} // namespace pathgain::cli

#endif
