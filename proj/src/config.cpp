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

#include "qlogic/config.hpp"

#include <array>
#include <cmath>
#include <cstdio>

#include "json.hpp"
#include "qlogic/error.hpp"

namespace qlogic {

using nlohmann::json;

namespace {

constexpr std::array<std::pair<Scenario, const char*>, 6> kScenarioNames{{
    {Scenario::Theorem1, "theorem1"},
    {Scenario::Theorem2, "theorem2"},
    {Scenario::Retrodiction, "retrodiction"},
    {Scenario::Eprb, "eprb"},
    {Scenario::DualEnsemble, "dual-ensemble"},
    {Scenario::Chain, "chain"},
}};

const std::array<const char*, 12> kKnownKeys{"scenario", "dims",  "state", "basis",  "basis1", "basis2",
                                             "basis1_alt", "trials", "seed", "steps", "order", "output"};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

struct Entry {
    json value;
    std::size_t line;
};

class Reader {
public:
    explicit Reader(std::map<std::string, Entry> entries) : entries_(std::move(entries)) {}

    bool has(const std::string& key) const { return entries_.contains(key); }
    std::size_t line(const std::string& key) const { return has(key) ? entries_.at(key).line : 0; }

    const json& require(const std::string& key) const {
        auto it = entries_.find(key);
        if (it == entries_.end()) throw ConfigError(ErrorCode::Syntax, 0, "missing key '" + key + "'");
        return it->second.value;
    }

    [[noreturn]] void fail(ErrorCode code, const std::string& key, const std::string& why) const {
        throw ConfigError(code, line(key), why);
    }

    std::uint64_t unsigned_value(const std::string& key) const {
        const json& v = require(key);
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
            fail(ErrorCode::Syntax, key, "'" + key + "' must be a non-negative integer");
        }
        return v.get<std::uint64_t>();
    }

    std::string string_value(const std::string& key) const {
        const json& v = require(key);
        if (!v.is_string()) fail(ErrorCode::Syntax, key, "'" + key + "' must be a string");
        return v.get<std::string>();
    }

    Complex complex_value(const json& v, const std::string& key) const {
        if (v.is_number()) {
            const double re = v.get<double>();
            if (!std::isfinite(re)) fail(ErrorCode::Syntax, key, "non-finite number in '" + key + "'");
            return Complex(re, 0.0);
        }
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
            fail(ErrorCode::Syntax, key, "complex numbers in '" + key + "' must be reals or [re, im] pairs");
        }
        const Complex c(v[0].get<double>(), v[1].get<double>());
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            fail(ErrorCode::Syntax, key, "non-finite number in '" + key + "'");
        }
        return c;
    }

    ComplexVector complex_list(const json& v, const std::string& key) const {
        if (!v.is_array()) fail(ErrorCode::Syntax, key, "'" + key + "' must be a list of [re, im] pairs");
        ComplexVector out;
        for (const auto& x : v) out.push_back(complex_value(x, key));
        return out;
    }

    BasisSpec basis(const std::string& key) const {
        const json& v = require(key);
        if (!v.is_object()) fail(ErrorCode::Syntax, key, "'" + key + "' must be an object");
        BasisSpec parsed;
        if (v.contains("angle")) {
            if (v.size() != 1 || !v["angle"].is_number()) {
                fail(ErrorCode::Syntax, key, "'" + key + "' angle form is {\"angle\": <radians>}");
            }
            parsed.angle = v["angle"].get<double>();
            return parsed;
        }
        if (!v.contains("vectors") || !v.contains("eigenvalues") || v.size() != 2) {
            fail(ErrorCode::Syntax, key, "'" + key + "' needs \"vectors\" and \"eigenvalues\" (or \"angle\")");
        }
        if (!v["vectors"].is_array()) fail(ErrorCode::Syntax, key, "'" + key + "' vectors must be a list");
        for (const auto& vec : v["vectors"]) parsed.vectors.push_back(complex_list(vec, key));
        if (!v["eigenvalues"].is_array()) fail(ErrorCode::Syntax, key, "'" + key + "' eigenvalues must be a list");
        for (const auto& e : v["eigenvalues"]) {
            if (!e.is_number()) fail(ErrorCode::Syntax, key, "'" + key + "' eigenvalues must be numbers");
            parsed.eigenvalues.push_back(e.get<double>());
        }
        return parsed;
    }

private:
    std::map<std::string, Entry> entries_;
};

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

json basis_json(const BasisSpec& b) {
    if (b.angle) return json{{"angle", *b.angle}};
    json vectors = json::array();
    for (const auto& v : b.vectors) {
        json row = json::array();
        for (const auto& c : v) row.push_back(complex_json(c));
        vectors.push_back(std::move(row));
    }
    return json{{"vectors", std::move(vectors)}, {"eigenvalues", b.eigenvalues}};
}

}  // namespace

const char* to_string(Scenario s) {
    for (const auto& [value, name] : kScenarioNames) {
        if (value == s) return name;
    }
    return "?";
}

std::optional<Scenario> parse_scenario(std::string_view name) {
    for (const auto& [value, n] : kScenarioNames) {
        if (name == n) return value;
    }
    return std::nullopt;
}

bool is_bipartite(Scenario s) {
    return s == Scenario::Eprb || s == Scenario::DualEnsemble || s == Scenario::Chain;
}

ObservableBasis BasisSpec::build() const {
    if (angle) return qubit_basis(*angle);
    std::vector<StateVector> vecs;
    for (const auto& v : vectors) vecs.emplace_back(v);
    return ObservableBasis(std::move(vecs), eigenvalues);
}

Config parse_config(std::string_view text) {
    std::map<std::string, Entry> entries;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        std::string_view line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (line.empty() || line.front() == '#') continue;

        const std::size_t colon = line.find(':');
        if (colon == std::string_view::npos) {
            throw ConfigError(ErrorCode::Syntax, line_no, "expected 'key: value'");
        }
        const std::string key(trim(line.substr(0, colon)));
        if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end()) {
            throw ConfigError(ErrorCode::Syntax, line_no, "unknown key '" + key + "'");
        }
        if (entries.contains(key)) throw ConfigError(ErrorCode::Syntax, line_no, "duplicate key '" + key + "'");
        const std::string_view raw = trim(line.substr(colon + 1));
        json value;
        try {
            value = json::parse(raw.begin(), raw.end());
        } catch (const json::parse_error& e) {
            throw ConfigError(ErrorCode::Syntax, line_no, "invalid value for '" + key + "': " + e.what());
        }
        entries.emplace(key, Entry{std::move(value), line_no});
    }
    const Reader in(std::move(entries));

    Config c;
    const std::string name = in.string_value("scenario");
    const auto scenario = parse_scenario(name);
    if (!scenario) in.fail(ErrorCode::UnknownScenario, "scenario", "unknown scenario \"" + name + "\"");
    c.scenario = *scenario;
    const bool two_channel = is_bipartite(c.scenario);

    // dims
    const json& dims = in.require("dims");
    if (!dims.is_array()) in.fail(ErrorCode::Syntax, "dims", "'dims' must be a list of counts");
    for (const auto& d : dims) {
        if (!d.is_number_unsigned()) in.fail(ErrorCode::Syntax, "dims", "'dims' must be a list of counts");
        c.dims.push_back(d.get<std::size_t>());
    }
    const std::size_t want_dims = two_channel ? 2 : 1;
    if (c.dims.size() != want_dims) {
        in.fail(ErrorCode::DimensionMismatch, "dims",
                std::string("scenario ") + to_string(c.scenario) + " needs " + std::to_string(want_dims) +
                    " dimension(s)");
    }
    for (std::size_t d : c.dims) {
        if (d < 1 || d > kMaxChannelDim) {
            in.fail(ErrorCode::DimensionMismatch, "dims",
                    "dimensions must be between 1 and " + std::to_string(kMaxChannelDim));
        }
    }

    // state
    const json& state = in.require("state");
    if (!state.is_array()) in.fail(ErrorCode::Syntax, "state", "'state' must be a list");
    if (two_channel) {
        if (state.size() != c.dims[0]) {
            in.fail(ErrorCode::DimensionMismatch, "state",
                    "state has " + std::to_string(state.size()) + " rows, dims say " + std::to_string(c.dims[0]));
        }
        for (const auto& row : state) {
            ComplexVector r = in.complex_list(row, "state");
            if (r.size() != c.dims[1]) {
                in.fail(ErrorCode::DimensionMismatch, "state",
                        "state row has " + std::to_string(r.size()) + " entries, dims say " +
                            std::to_string(c.dims[1]));
            }
            c.state.insert(c.state.end(), r.begin(), r.end());
        }
    } else {
        c.state = in.complex_list(state, "state");
        if (c.state.size() != c.dims[0]) {
            in.fail(ErrorCode::DimensionMismatch, "state",
                    "state has " + std::to_string(c.state.size()) + " amplitudes, dims say " +
                        std::to_string(c.dims[0]));
        }
    }
    const double n2 = squared_norm(c.state);
    const double norm_tol = two_channel ? kBipartiteNormTolerance : kTolerance;
    if (!(std::abs(n2 - 1.0) <= norm_tol)) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", n2);
        in.fail(ErrorCode::NotNormalized, "state", std::string("state not normalized (squared norm ") + buf + ")");
    }

    // bases
    const std::vector<std::pair<std::string, std::size_t>> wanted =
        two_channel ? std::vector<std::pair<std::string, std::size_t>>{{"basis1", c.dims[0]}, {"basis2", c.dims[1]}}
                    : std::vector<std::pair<std::string, std::size_t>>{{"basis", c.dims[0]}};
    auto load_basis = [&](const std::string& key, std::size_t dim) {
        BasisSpec parsed = in.basis(key);
        const std::size_t got = parsed.angle ? 2 : parsed.vectors.size();
        if (got != dim) {
            in.fail(ErrorCode::DimensionMismatch, key,
                    "'" + key + "' has dimension " + std::to_string(got) + ", expected " + std::to_string(dim));
        }
        try {
            (void)parsed.build();
        } catch (const Error& e) {
            in.fail(e.code(), key,
                    "'" + key + "': " + e.what());
        }
        c.bases.emplace(key, std::move(parsed));
    };
    for (const auto& [key, dim] : wanted) load_basis(key, dim);
    if (in.has("basis1_alt")) {
        if (c.scenario != Scenario::Eprb) {
            in.fail(ErrorCode::Syntax, "basis1_alt", "'basis1_alt' is only used by the eprb scenario");
        }
        load_basis("basis1_alt", c.dims[0]);
    }
    if (!two_channel && (in.has("basis1") || in.has("basis2"))) {
        in.fail(ErrorCode::Syntax, in.has("basis1") ? "basis1" : "basis2",
                "single-system scenarios take 'basis', not 'basis1'/'basis2'");
    }
    if (two_channel && in.has("basis")) {
        in.fail(ErrorCode::Syntax, "basis", "two-channel scenarios take 'basis1' and 'basis2'");
    }

    // scalars
    if (in.has("trials")) {
        c.trials = in.unsigned_value("trials");
        if (c.trials < 1) in.fail(ErrorCode::InvalidArgument, "trials", "'trials' must be at least 1");
    }
    if (in.has("seed")) c.seed = in.unsigned_value("seed");
    if (in.has("steps")) {
        c.steps = in.unsigned_value("steps");
        if (c.steps < 1) in.fail(ErrorCode::InvalidArgument, "steps", "'steps' must be at least 1");
    }
    if (in.has("order")) {
        try {
            c.order = parse_order(in.string_value("order"));
        } catch (const ConfigError&) {
            throw;
        } catch (const Error& e) {
            in.fail(ErrorCode::InvalidArgument, "order", e.what());
        }
    }
    if (in.has("output")) c.output = in.string_value("output");
    return c;
}

std::string echo_config(const Config& c) {
    std::string out;
    auto put = [&](const char* key, const json& value) {
        out += key;
        out += ": ";
        out += value.dump();
        out += '\n';
    };
    put("scenario", to_string(c.scenario));
    put("dims", c.dims);
    json state = json::array();
    if (is_bipartite(c.scenario)) {
        for (std::size_t i = 0; i < c.dims[0]; ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < c.dims[1]; ++j) row.push_back(complex_json(c.state[i * c.dims[1] + j]));
            state.push_back(std::move(row));
        }
    } else {
        for (const auto& a : c.state) state.push_back(complex_json(a));
    }
    put("state", state);
    for (const auto& [key, b] : c.bases) put(key.c_str(), basis_json(b));
    put("trials", c.trials);
    put("seed", c.seed);
    put("steps", c.steps);
    put("order", to_string(c.order));
    if (!c.output.empty()) put("output", c.output);
    return out;
}

std::string config_digest(const Config& c) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : echo_config(c)) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

StateVector config_state_vector(const Config& c) { return StateVector(c.state); }

BipartiteState config_bipartite(const Config& c) {
    return BipartiteState(ComplexMatrix(c.dims[0], c.dims[1], c.state), share(c.bases.at("basis1").build()),
                          share(c.bases.at("basis2").build()));
}

}  // namespace qlogic
