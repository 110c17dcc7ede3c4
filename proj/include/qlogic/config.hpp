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

// Scenario configuration files.
//
// One "key: value" pair per line, where value is a JSON literal. Blank lines
// and lines starting with '#' are ignored. Complex numbers are [re, im] or a bare real.
//
//   scenario: eprb
//   dims: [2, 2]
//   state: [[[0.7071067811865476, 0], [0, 0]], [[0, 0], [0.7071067811865476, 0]]]
//   basis1: {"angle": 0}
//   basis2: {"vectors": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]], "eigenvalues": [1, -1]}
//   trials: 100000
//   seed: 42
//
// See docs/config.md for the full key list.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlogic/eprb.hpp"
#include "qlogic/error.hpp"
#include "qlogic/hilbert.hpp"

namespace qlogic {

enum class Scenario { Theorem1, Theorem2, Retrodiction, Eprb, DualEnsemble, Chain };

const char* to_string(Scenario s);
std::optional<Scenario> parse_scenario(std::string_view name);

/// Scenarios whose state is an amplitude matrix over two channels.
bool is_bipartite(Scenario s);

inline constexpr std::size_t kDefaultTrials = 100000;
inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr std::size_t kMaxChannelDim = 16;

struct BasisSpec {
    /// Set for the dimension-2 analyzer form {"angle": radians}.
    std::optional<double> angle;
    std::vector<ComplexVector> vectors;
    std::vector<double> eigenvalues;

    ObservableBasis build() const;
    friend bool operator==(const BasisSpec&, const BasisSpec&) = default;
};

struct Config {
    Scenario scenario = Scenario::Theorem1;
    std::vector<std::size_t> dims;
    /// Row-major amplitudes: dims[0] values, or dims[0] x dims[1] values.
    ComplexVector state;
    /// "basis" for single-system scenarios; "basis1"/"basis2" (and optional
    /// "basis1_alt" for the no-signaling check) for two-channel ones.
    std::map<std::string, BasisSpec> bases;
    std::size_t trials = kDefaultTrials;
    std::uint64_t seed = kDefaultSeed;
    std::size_t steps = 1;
    MeasurementOrder order = MeasurementOrder::OneThenTwo;
    std::string output;

    friend bool operator==(const Config&, const Config&) = default;
};

/// Parses and validates. Errors carry the 1-based line of the offending key
/// as "line N: ..." in the message and in ConfigError::line().
Config parse_config(std::string_view text);

class ConfigError : public Error {
public:
    ConfigError(ErrorCode code, std::size_t line, const std::string& message)
        : Error(code, line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Canonical text form; parse_config(echo_config(c)) == c.
std::string echo_config(const Config& c);

/// FNV-1a 64 of echo_config(c), as 16 lowercase hex digits.
std::string config_digest(const Config& c);

StateVector config_state_vector(const Config& c);
BipartiteState config_bipartite(const Config& c);

}  // namespace qlogic
