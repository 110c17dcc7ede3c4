// Copyright 2026 The qlogic Authors
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

#include "qlogic/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace qlogic {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

bool Report::passed() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const Check& c) { return c.status == CheckStatus::Fail; });
}

std::string format_number(double x) {
    if (std::isnan(x)) return "";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string emit_csv(const Report& r) {
    std::string out = "check_name,exact,empirical,tolerance,pass\r\n";
    for (const auto& c : r.checks) {
        out += csv_field(c.name) + ',' + format_number(c.exact) + ',' + format_number(c.empirical) + ',' +
               format_number(c.tolerance) + ',' + to_string(c.status) + "\r\n";
    }
    return out;
}

std::string emit_text(const Report& r) {
    auto show = [](double x) {
        const std::string s = format_number(x);
        return s.empty() ? std::string("-") : s;
    };
    std::size_t name_width = 10;
    for (const auto& c : r.checks) name_width = std::max(name_width, c.name.size());

    std::string out;
    out += "scenario: " + r.scenario + "\n";
    out += "config digest: " + r.digest + "\n";
    out += "seed: " + std::to_string(r.seed) + "\n";
    out += "trials: " + std::to_string(r.trials) + "\n";
    for (const auto& n : r.notes) out += "note: " + n + "\n";
    out += "\n";
    for (const auto& c : r.checks) {
        std::string line = (c.status == CheckStatus::Fail ? "FAIL " : c.status == CheckStatus::Skipped ? "SKIP " : "ok   ");
        line += c.name + std::string(name_width - c.name.size() + 2, ' ');
        line += "exact=" + show(c.exact) + " empirical=" + show(c.empirical) + " tol=" + show(c.tolerance);
        if (!c.note.empty()) line += "  (" + c.note + ")";
        out += line + "\n";
    }
    out += "\nverdict: ";
    out += r.passed() ? "pass" : "fail";
    out += "\n";
    return out;
}

std::string emit(const Report& r, ReportFormat format) {
    return format == ReportFormat::Csv ? emit_csv(r) : emit_text(r);
}

std::string emit_cells_csv(const Report& r) {
    if (r.cells.empty()) return "";
    std::string out = "n,j,exact,empirical,stderr\r\n";
    for (const auto& c : r.cells) {
        out += std::to_string(c.n) + ',' + std::to_string(c.j) + ',' + format_number(c.exact) + ',' +
               format_number(c.empirical) + ',' + format_number(c.std_error) + "\r\n";
    }
    return out;
}

}  // namespace qlogic
