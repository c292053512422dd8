// Copyright 2026 The wshift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include "wshift/wshift.h"

namespace wshift::cli {

namespace {

using Json = nlohmann::ordered_json;

struct HelpRequested {
    std::string text;
};

struct ShiftDeleter {
    void operator()(wshift_shift *s) const { wshift_shift_destroy(s); }
};
struct ReportDeleter {
    void operator()(wshift_report *r) const { wshift_report_destroy(r); }
};
using ShiftPtr = std::unique_ptr<wshift_shift, ShiftDeleter>;
using ReportPtr = std::unique_ptr<wshift_report, ReportDeleter>;

// Computation failures surfaced from the C API.
struct ComputationError {
    wshift_status status;
    std::string message;
};

void check(wshift_status status) {
    if (status != WSHIFT_OK) throw ComputationError{status, wshift_last_error()};
}

ShiftPtr make_shift(const WeightList &w) {
    wshift_shift *raw = nullptr;
    check(wshift_shift_create(w.re.data(), w.im.data(), w.re.size(), &raw));
    return ShiftPtr(raw);
}

double parse_real(std::string_view s, std::string_view token) {
    double value = 0.0;
    if (s.empty()) throw UsageError("malformed complex token '" + std::string(token) + "'");
    const char *first = s.data();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value))
        throw UsageError("malformed complex token '" + std::string(token) + "'");
    return value;
}

// Coefficient of an imaginary part written before the 'i': "", "+", "-", "2.5".
double parse_imag_coeff(std::string_view s, std::string_view token) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real(s, token);
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read weights file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("cannot read weights file '" + path + "'");
    return ss.str();
}

WeightList weights_from_json_text(const std::string &text, const std::string &path) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw UsageError("weights file '" + path + "' is not valid JSON: " + e.what());
    }
    if (!doc.is_array()) throw UsageError("weights file '" + path + "' must hold a JSON array");
    WeightList w;
    for (const auto &x : doc) {
        if (x.is_number()) {
            w.re.push_back(x.get<double>());
            w.im.push_back(0.0);
        } else if (x.is_array() && x.size() == 2 && x[0].is_number() && x[1].is_number()) {
            w.re.push_back(x[0].get<double>());
            w.im.push_back(x[1].get<double>());
        } else {
            throw UsageError("weights file '" + path + "': entries must be numbers or [re, im] pairs");
        }
    }
    return w;
}

const char *command_name(Command c) {
    switch (c) {
        case Command::Equiv:
            return "equiv";
        case Command::Reduce:
            return "reduce";
        case Command::Kipp:
            return "kipp";
        case Command::Wequal:
            return "wequal";
        case Command::Boundary:
            return "boundary";
        case Command::Analyze:
            return "analyze";
    }
    return "?";
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string boundary_csv(const Json &doc) {
    std::string out = "theta,support,re,im\n";
    const auto &angles = doc["angles"];
    for (std::size_t i = 0; i < angles.size(); ++i) {
        out += fmt(angles[i].get<double>()) + "," + fmt(doc["support"][i].get<double>()) + ",";
        const auto &p = doc["points"][i];
        if (!p.is_null()) out += fmt(p[0].get<double>()) + "," + fmt(p[1].get<double>());
        else out += ",";
        out += "\n";
    }
    return out;
}

std::string boundary_svg(const Json &doc) {
    std::vector<std::pair<double, double>> pts;
    double extent = 0.0;
    for (const auto &p : doc["points"]) {
        if (p.is_null()) continue;
        pts.emplace_back(p[0].get<double>(), p[1].get<double>());
        extent = std::max({extent, std::abs(pts.back().first), std::abs(pts.back().second)});
    }
    for (const auto &h : doc["support"]) extent = std::max(extent, std::abs(h.get<double>()));
    const double r = extent > 0.0 ? 1.1 * extent : 1.0;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fmt(-r) + " " + fmt(-r) + " " +
           fmt(2 * r) + " " + fmt(2 * r) + "\">\n";
    // Flip y so the imaginary axis points up.
    out += "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"" + fmt(r / 200) + "\">\n";
    out += "<line x1=\"" + fmt(-r) + "\" y1=\"0\" x2=\"" + fmt(r) + "\" y2=\"0\" stroke=\"gray\"/>\n";
    out += "<line x1=\"0\" y1=\"" + fmt(-r) + "\" x2=\"0\" y2=\"" + fmt(r) + "\" stroke=\"gray\"/>\n";
    out += "<polygon stroke=\"black\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out += " ";
        out += fmt(pts[i].first) + "," + fmt(pts[i].second);
    }
    out += "\"/>\n</g>\n</svg>\n";
    return out;
}

std::string report_text(const wshift_report *report) { return std::string(wshift_report_json_pretty(report)) + "\n"; }

std::string produce(const JobSpec &job) {
    std::vector<ShiftPtr> shifts;
    for (const auto &w : job.inputs) shifts.push_back(make_shift(w));

    wshift_report *raw = nullptr;
    switch (job.command) {
        case Command::Equiv:
            check(wshift_check_equivalent(shifts[0].get(), shifts[1].get(), job.tol, 1, &raw));
            break;
        case Command::Reduce:
            check(wshift_reduce(shifts[0].get(), job.tol, &raw));
            break;
        case Command::Kipp:
            check(wshift_kippenhahn(shifts[0].get(), &raw));
            break;
        case Command::Wequal:
            check(wshift_ranges_equal(shifts[0].get(), shifts[1].get(), job.tol, &raw));
            break;
        case Command::Boundary:
            check(wshift_boundary(shifts[0].get(), job.samples, &raw));
            break;
        case Command::Analyze:
            check(wshift_analyze(shifts[0].get(), job.tol, &raw));
            break;
    }
    ReportPtr report(raw);
    if (job.command == Command::Boundary && job.format != Format::Json) {
        const auto doc = Json::parse(wshift_report_json(report.get()));
        return job.format == Format::Csv ? boundary_csv(doc) : boundary_svg(doc);
    }
    return report_text(report.get());
}

}  // namespace

std::complex<double> parse_complex_token(std::string_view token) {
    std::string s;
    for (char c : token)
        if (c != ' ' && c != '\t') s += c;
    if (s.empty()) throw UsageError("empty weight token");
    if (s.back() != 'i') return {parse_real(s, token), 0.0};

    const std::string_view body(s.data(), s.size() - 1);
    // Split at the last sign that is not a leading sign or an exponent sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos) return {0.0, parse_imag_coeff(body, token)};
    return {parse_real(body.substr(0, split), token), parse_imag_coeff(body.substr(split), token)};
}

WeightList parse_weights(const std::string &file_or_inline) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(file_or_inline, ec))
        return weights_from_json_text(read_file(file_or_inline), file_or_inline);

    WeightList w;
    std::size_t start = 0;
    while (start <= file_or_inline.size()) {
        const auto comma = file_or_inline.find(',', start);
        const auto end = comma == std::string::npos ? file_or_inline.size() : comma;
        const auto z = parse_complex_token(std::string_view(file_or_inline).substr(start, end - start));
        w.re.push_back(z.real());
        w.im.push_back(z.imag());
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return w;
}

JobSpec parse_args(const std::vector<std::string> &argv) {
    CLI::App app{"Weighted shift matrix analysis", argv.empty() ? "wshift-cli" : argv[0]};
    app.require_subcommand(1);

    struct Raw {
        std::string weights, weights2, out, format = "json";
        double tol = 1e-10;
        long long samples = 256;
    };
    Raw raw;

    const std::vector<std::pair<Command, const char *>> commands = {
        {Command::Equiv, "decide unitary equivalence of two shifts"},
        {Command::Reduce, "decide reducibility and build the decomposition"},
        {Command::Kipp, "closed-form Kippenhahn polynomial coefficients"},
        {Command::Wequal, "decide whether two numerical ranges coincide"},
        {Command::Boundary, "sample the numerical range boundary"},
        {Command::Analyze, "combined report for one shift"},
    };
    std::vector<CLI::App *> subs;
    for (const auto &[cmd, desc] : commands) {
        auto *sub = app.add_subcommand(command_name(cmd), desc);
        sub->add_option("--weights", raw.weights, "weights: file path or inline list like \"1,2i,1-i\"");
        sub->add_option("--weights2", raw.weights2, "second weight list (equiv, wequal)");
        sub->add_option("--tol", raw.tol, "modulus / comparison tolerance");
        sub->add_option("--samples", raw.samples, "boundary sample count (>= 3)");
        sub->add_option("--out", raw.out, "write the report to this path instead of stdout");
        sub->add_option("--format", raw.format, "json, csv or svg (csv/svg for boundary only)");
        subs.push_back(sub);
    }

    std::vector<const char *> cargs;
    for (const auto &a : argv) cargs.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::CallForHelp &) {
        throw HelpRequested{app.help()};
    } catch (const CLI::ParseError &e) {
        throw UsageError(e.what());
    }

    JobSpec job;
    std::size_t which = 0;
    for (; which < subs.size(); ++which)
        if (subs[which]->parsed()) break;
    job.command = commands[which].first;
    const auto *sub = subs[which];

    const bool pair = job.command == Command::Equiv || job.command == Command::Wequal;
    if (raw.weights.empty()) throw UsageError("--weights is required");
    if (pair && raw.weights2.empty()) throw UsageError(std::string(command_name(job.command)) + " requires --weights2");
    if (!pair && sub->count("--weights2") > 0)
        throw UsageError(std::string(command_name(job.command)) + " takes a single weight list");

    if (sub->count("--samples") > 0 && raw.samples < 3) throw UsageError("--samples must be at least 3");
    job.samples = static_cast<std::size_t>(raw.samples);
    if (!(raw.tol >= 0.0)) throw UsageError("--tol must be nonnegative");
    job.tol = raw.tol;
    if (sub->count("--out") > 0) job.out_path = raw.out;

    if (raw.format == "json") job.format = Format::Json;
    else if (raw.format == "csv") job.format = Format::Csv;
    else if (raw.format == "svg") job.format = Format::Svg;
    else throw UsageError("unknown --format '" + raw.format + "'");
    if (job.format != Format::Json && job.command != Command::Boundary)
        throw UsageError("--format csv/svg applies to boundary only");

    job.inputs.push_back(parse_weights(raw.weights));
    if (pair) job.inputs.push_back(parse_weights(raw.weights2));
    return job;
}

int run(const JobSpec &job, std::ostream &out, std::ostream &err) {
    std::string text;
    try {
        text = produce(job);
    } catch (const ComputationError &e) {
        Json diag;
        diag["error"] = wshift_status_string(e.status);
        diag["message"] = e.message;
        err << diag.dump() << "\n";
        return kExitComputation;
    }

    if (job.out_path) {
        std::ofstream file(*job.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open '" << *job.out_path << "' for writing\n";
            return kExitIo;
        }
        file << text;
        file.close();
        if (!file) {
            err << "error: failed writing '" << *job.out_path << "'\n";
            return kExitIo;
        }
        return kExitOk;
    }
    out << text;
    out.flush();
    return out ? kExitOk : kExitIo;
}

int main_entry(const std::vector<std::string> &argv, std::ostream &out, std::ostream &err) {
    JobSpec job;
    try {
        job = parse_args(argv);
    } catch (const HelpRequested &h) {
        out << h.text;
        return kExitOk;
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError &e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return run(job, out, err);
}

}  // namespace wshift::cli
