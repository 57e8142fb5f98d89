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

#ifndef PATHGAIN_DATA_FIT_HPP
#define PATHGAIN_DATA_FIT_HPP

#include "pathgain/common.hpp"
#include "pathgain/morphology.hpp"
#include "pathgain/reference_models.hpp"

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/normal_distribution.hpp>
#include <boost/tokenizer.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

// Measured (range, path gain) records, least-squares slope-intercept fits and
// RMS error of any model against a dataset.

namespace pathgain
{

inline constexpr double kMaxPlausibleGainDb = 20.0;

struct MeasurementRecord
{
    double range_m = 0.0;
    double path_gain_db = 0.0;
    std::string street;
    std::string flag;

    void validate() const
    {
        detail::require(std::isfinite(range_m) && range_m > 0.0, "record range must be positive and finite");
        detail::require(std::isfinite(path_gain_db), "record path gain must be finite");
        detail::require(path_gain_db < kMaxPlausibleGainDb, "record path gain exceeds the +20 dB sanity bound");
    }
};

struct MeasurementDataset
{
    std::vector<MeasurementRecord> records;
    double frequency_hz = 0.0;
    std::string morphology;
};

struct FitResult
{
    SlopeIntercept model;
    double rmse_db = 0.0;
    std::size_t n_points = 0;
};

class DatasetError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Model failure on one record; `index` is zero-based.
class ModelEvaluationError : public std::runtime_error
{
public:
    ModelEvaluationError(std::size_t index, const std::string &why)
        : std::runtime_error("model evaluation failed at record " + std::to_string(index) + ": " + why), index(index)
    {
    }
    std::size_t index;
};

// Ordinary least squares of gain in dB on log10(range), two-pass for accuracy.
// Sums run in record order, so results do not depend on threading.
inline FitResult fit_slope_intercept(const std::vector<MeasurementRecord> &records)
{
    if (records.empty())
        throw DatasetError("cannot fit an empty dataset");
    const double n = double(records.size());
    double mx = 0.0, my = 0.0;
    for (const auto &r : records)
    {
        r.validate();
        mx += std::log10(r.range_m);
        my += r.path_gain_db;
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (const auto &r : records)
    {
        const double dx = std::log10(r.range_m) - mx;
        sxx += dx * dx;
        sxy += dx * (r.path_gain_db - my);
    }
    if (!(sxx > 0.0))
        throw DatasetError("fit needs at least two distinct ranges");

    const double slope = sxy / sxx;
    FitResult out;
    out.model.exponent = -slope / 10.0;
    out.model.intercept_db = my - slope * mx;
    out.n_points = records.size();
    double ss = 0.0;
    for (const auto &r : records)
    {
        const double e = r.path_gain_db - out.model.eval_db(r.range_m);
        ss += e * e;
    }
    out.rmse_db = std::sqrt(ss / n);
    return out;
}

inline FitResult fit_slope_intercept(const MeasurementDataset &ds) { return fit_slope_intercept(ds.records); }

// Predicted path gain in dB for one record.
using GainModel = std::function<double(const MeasurementRecord &)>;

inline std::vector<double> residuals_db(const std::vector<MeasurementRecord> &records, const GainModel &model)
{
    std::vector<double> out;
    out.reserve(records.size());
    for (std::size_t i = 0; i < records.size(); ++i)
    {
        double predicted = 0.0;
        try
        {
            predicted = model(records[i]);
        }
        catch (const std::exception &e)
        {
            throw ModelEvaluationError(i, e.what());
        }
        if (!std::isfinite(predicted))
            throw ModelEvaluationError(i, "non-finite prediction");
        out.push_back(records[i].path_gain_db - predicted);
    }
    return out;
}

inline double rms(const std::vector<double> &v)
{
    if (v.empty())
        throw DatasetError("RMS of an empty set");
    double ss = 0.0;
    for (double e : v)
        ss += e * e;
    return std::sqrt(ss / double(v.size()));
}

// Bias is not removed: a constant offset counts fully.
inline double rmse_against_model(const MeasurementDataset &ds, const GainModel &model)
{
    if (ds.records.empty())
        throw DatasetError("cannot evaluate against an empty dataset");
    return rms(residuals_db(ds.records, model));
}

// One street of a Table-1 style evaluation.
struct StreetCase
{
    std::string name;
    MeasurementDataset data;
    StreetScene scene;
    MacroGeometry macro;
};

struct StreetTableRow
{
    std::string name;
    std::size_t n_points = 0;
    double fit_db = 0.0;
    double uma_los_db = 0.0;
    double uma_nlos_db = 0.0;
    double theory_db = 0.0;
};

struct StreetTableReport
{
    std::vector<StreetTableRow> streets;
    StreetTableRow overall; // one fit to the pooled data; other columns pool all residuals
};

inline ThreeGppScenario uma_for(const MacroGeometry &m, double frequency_hz, ThreeGppCondition cond)
{
    ThreeGppScenario s;
    s.family = ThreeGppFamily::UMa;
    s.condition = cond;
    s.fc_ghz = frequency_hz * 1e-9;
    s.bs_height_m = m.bs_height_m;
    s.ut_height_m = m.mobile_height_m;
    return s;
}

inline StreetTableReport street_table_report(const std::vector<StreetCase> &streets)
{
    if (streets.empty())
        throw DatasetError("table needs at least one street");
    StreetTableReport rep;
    std::vector<MeasurementRecord> pooled;
    std::vector<double> res_los, res_nlos, res_theory;
    for (const auto &st : streets)
    {
        const double f = st.data.frequency_hz;
        detail::require(f > 0.0, "street dataset needs a frequency");
        const auto los = uma_for(st.macro, f, ThreeGppCondition::LOS);
        const auto nlos = uma_for(st.macro, f, ThreeGppCondition::NLOS);
        auto r_los = residuals_db(st.data.records, [&](const MeasurementRecord &r) { return -tr38901_eval(los, r.range_m).value; });
        auto r_nlos = residuals_db(st.data.records, [&](const MeasurementRecord &r) { return -tr38901_eval(nlos, r.range_m).value; });
        auto r_th = residuals_db(st.data.records, [&](const MeasurementRecord &r) {
            return canyon_total_gain(st.scene, st.macro, Link{r.range_m, f}).total.db();
        });

        StreetTableRow row;
        row.name = st.name;
        row.n_points = st.data.records.size();
        row.fit_db = fit_slope_intercept(st.data).rmse_db;
        row.uma_los_db = rms(r_los);
        row.uma_nlos_db = rms(r_nlos);
        row.theory_db = rms(r_th);
        rep.streets.push_back(row);

        pooled.insert(pooled.end(), st.data.records.begin(), st.data.records.end());
        res_los.insert(res_los.end(), r_los.begin(), r_los.end());
        res_nlos.insert(res_nlos.end(), r_nlos.begin(), r_nlos.end());
        res_theory.insert(res_theory.end(), r_th.begin(), r_th.end());
    }
    rep.overall.name = "Overall";
    rep.overall.n_points = pooled.size();
    rep.overall.fit_db = fit_slope_intercept(pooled).rmse_db;
    rep.overall.uma_los_db = rms(res_los);
    rep.overall.uma_nlos_db = rms(res_nlos);
    rep.overall.theory_db = rms(res_theory);
    return rep;
}

// Sliding median of odd width over a raw trace; edges use the available samples.
inline std::vector<double> median_window(const std::vector<double> &values, std::size_t width)
{
    detail::require(width >= 1 && width % 2 == 1, "median window width must be odd");
    const std::size_t half = width / 2;
    std::vector<double> out(values.size()), buf;
    for (std::size_t i = 0; i < values.size(); ++i)
    {
        const std::size_t lo = i >= half ? i - half : 0;
        const std::size_t hi = std::min(values.size(), i + half + 1);
        buf.assign(values.begin() + std::ptrdiff_t(lo), values.begin() + std::ptrdiff_t(hi));
        const auto mid = buf.begin() + std::ptrdiff_t(buf.size() / 2);
        std::nth_element(buf.begin(), mid, buf.end());
        double v = *mid;
        if (buf.size() % 2 == 0)
            v = 0.5 * (v + *std::max_element(buf.begin(), mid));
        out[i] = v;
    }
    return out;
}

// Gain samples of `model_db` at `ranges` plus zero-mean Gaussian noise. The
// generator is fully specified (mt19937 + Boost normal), so a seed reproduces
// the same data on every platform.
inline std::vector<MeasurementRecord> synthesize(const std::function<double(double)> &model_db, const std::vector<double> &ranges,
                                                 double sigma_db, std::uint32_t seed)
{
    detail::require(sigma_db >= 0.0, "noise deviation must be nonnegative");
    boost::random::mt19937 rng(seed);
    boost::random::normal_distribution<double> noise(0.0, sigma_db > 0.0 ? sigma_db : 1.0);
    std::vector<MeasurementRecord> out;
    out.reserve(ranges.size());
    for (double r : ranges)
    {
        const double n = noise(rng);
        out.push_back({r, model_db(r) + (sigma_db > 0.0 ? n : 0.0), {}, {}});
    }
    return out;
}

// --- CSV ----------------------------------------------------------------

namespace detail
{
inline std::vector<std::string> split_csv_line(const std::string &line)
{
    using Tok = boost::tokenizer<boost::escaped_list_separator<char>>;
    std::vector<std::string> out;
    try
    {
        Tok tok(line, boost::escaped_list_separator<char>('\\', ',', '"'));
        for (const auto &t : tok)
            out.push_back(t);
    }
    catch (const boost::escaped_list_error &e)
    {
        throw DatasetError(e.what());
    }
    return out;
}

inline std::string trim(std::string s)
{
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

inline double parse_number(const std::string &s, std::size_t line, const char *column)
{
    const std::string t = trim(s);
    std::size_t used = 0;
    double v = 0.0;
    try
    {
        v = std::stod(t, &used);
    }
    catch (const std::exception &)
    {
        used = 0;
    }
    if (t.empty() || used != t.size())
        throw DatasetError("line " + std::to_string(line) + ": malformed " + column + " '" + t + "'");
    if (!std::isfinite(v))
        throw DatasetError("line " + std::to_string(line) + ": non-finite " + column);
    return v;
}
} // namespace detail

// Header must name range_m and either path_gain_db or gain_db; optional
// `street` and `flag` columns are kept, any other columns are ignored.
// Errors carry 1-based line numbers.
inline MeasurementDataset read_csv(std::istream &in)
{
    MeasurementDataset ds;
    std::string line;
    std::size_t lineno = 0;
    int c_range = -1, c_gain = -1, c_street = -1, c_flag = -1;
    std::size_t ncols = 0;
    bool have_header = false;
    while (std::getline(in, line))
    {
        ++lineno;
        if (lineno == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0)
            line.erase(0, 3);
        if (detail::trim(line).empty())
            continue;
        const auto cells = detail::split_csv_line(line);
        if (!have_header)
        {
            for (std::size_t i = 0; i < cells.size(); ++i)
            {
                const auto h = detail::trim(cells[i]);
                if (h == "range_m")
                    c_range = int(i);
                else if (h == "path_gain_db" || h == "gain_db")
                    c_gain = c_gain < 0 ? int(i) : c_gain;
                else if (h == "street")
                    c_street = int(i);
                else if (h == "flag")
                    c_flag = int(i);
            }
            if (c_range < 0 || c_gain < 0)
                throw DatasetError("line " + std::to_string(lineno) + ": header must contain range_m and path_gain_db");
            ncols = cells.size();
            have_header = true;
            continue;
        }
        if (cells.size() != ncols)
            throw DatasetError("line " + std::to_string(lineno) + ": expected " + std::to_string(ncols) + " fields, got " +
                               std::to_string(cells.size()));
        MeasurementRecord r;
        r.range_m = detail::parse_number(cells[std::size_t(c_range)], lineno, "range_m");
        r.path_gain_db = detail::parse_number(cells[std::size_t(c_gain)], lineno, "path_gain_db");
        if (c_street >= 0)
            r.street = detail::trim(cells[std::size_t(c_street)]);
        if (c_flag >= 0)
            r.flag = detail::trim(cells[std::size_t(c_flag)]);
        try
        {
            r.validate();
        }
        catch (const std::invalid_argument &e)
        {
            throw DatasetError("line " + std::to_string(lineno) + ": " + e.what());
        }
        ds.records.push_back(std::move(r));
    }
    if (!have_header)
        throw DatasetError("empty CSV: no header");
    return ds;
}

inline std::string format_db(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// Ranges keep full round-trip precision; gains use two decimals.
inline std::string format_range(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace detail
{
// Quotes a field holding separators; embedded quotes get the reader's backslash escape.
inline std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\\\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s)
    {
        if (ch == '"' || ch == '\\')
            out += '\\';
        out += ch;
    }
    return out + "\"";
}
} // namespace detail

inline void write_csv(std::ostream &out, const std::vector<MeasurementRecord> &records)
{
    bool tags = std::any_of(records.begin(), records.end(), [](const auto &r) { return !r.street.empty() || !r.flag.empty(); });
    out << (tags ? "range_m,path_gain_db,street,flag\n" : "range_m,path_gain_db\n");
    for (const auto &r : records)
    {
        out << format_range(r.range_m) << ',' << format_db(r.path_gain_db);
        if (tags)
            out << ',' << detail::csv_field(r.street) << ',' << detail::csv_field(r.flag);
        out << '\n';
    }
}

} // namespace pathgain

#endif
