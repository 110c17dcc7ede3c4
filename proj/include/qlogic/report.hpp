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

#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace qlogic {

enum class CheckStatus { Pass, Fail, Skipped };

const char* to_string(CheckStatus s);

struct Check {
    std::string name;
    /// NaN when a column does not apply; rendered as an empty CSV field.
    double exact = std::numeric_limits<double>::quiet_NaN();
    double empirical = std::numeric_limits<double>::quiet_NaN();
    double tolerance = std::numeric_limits<double>::quiet_NaN();
    CheckStatus status = CheckStatus::Fail;
    std::string note;
};

/// One cell of a joint outcome table, indexed by eigenvalue groups.
struct JointCell {
    std::size_t n;
    std::size_t j;
    double exact;
    double empirical;
    double std_error;
};

struct Report {
    std::string scenario;
    std::string digest;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::vector<Check> checks;
    std::vector<std::string> notes;
    std::vector<JointCell> cells;

    /// No check failed. Skipped checks (e.g. empty selected ensembles) do not
    /// count against the verdict.
    bool passed() const;
};

enum class ReportFormat { Text, Csv };

/// Header "check_name,exact,empirical,tolerance,pass"; the pass column is
/// "pass", "fail" or "skipped".
std::string emit_csv(const Report& r);
std::string emit_text(const Report& r);
std::string emit(const Report& r, ReportFormat format);

/// Header "n,j,exact,empirical,stderr"; empty when the scenario has no table.
std::string emit_cells_csv(const Report& r);

/// Shortest decimal that round-trips; "" for NaN.
std::string format_number(double x);

/// RFC 4180 field quoting.
std::string csv_field(const std::string& s);

}  // namespace qlogic
