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

// qlogic: scenario runner on top of the libqlogic C API.
//
//   qlogic run --config <path> [--format text|csv] [--seed N] [--trials N] [--out <path>]
//   qlogic validate --config <path> [--echo]
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 state not normalized,
// 3 unknown scenario, 4 config syntax, 5 dimension mismatch, 6 other invalid
// config value, 7 usage, 8 i/o, 9 internal error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qlogic/qlogic.h"

namespace {

enum Exit : int {
    kPass = 0,
    kCheckFailed = 1,
    kNotNormalized = 2,
    kUnknownScenario = 3,
    kSyntax = 4,
    kDimension = 5,
    kInvalidConfig = 6,
    kUsage = 7,
    kIo = 8,
    kInternal = 9,
};

int exit_code_for(qlg_status s) {
    switch (s) {
        case QLG_OK: return kPass;
        case QLG_ERR_NOT_NORMALIZED: return kNotNormalized;
        case QLG_ERR_UNKNOWN_SCENARIO: return kUnknownScenario;
        case QLG_ERR_SYNTAX: return kSyntax;
        case QLG_ERR_DIMENSION: return kDimension;
        case QLG_ERR_IO: return kIo;
        case QLG_ERR_INTERNAL: return kInternal;
        default: return kInvalidConfig;
    }
}

int report_error(qlg_status s, const std::string& context) {
    std::cerr << "qlogic: " << context << ": " << qlg_last_error() << "\n";
    return exit_code_for(s);
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    out.close();
    return static_cast<bool>(out);
}

/// Owns a string returned by the C API.
struct CString {
    char* p = nullptr;
    ~CString() { qlg_string_free(p); }
    std::string str() const { return p ? std::string(p) : std::string(); }
};

struct ConfigHandle {
    qlg_config* p = nullptr;
    ~ConfigHandle() { qlg_config_free(p); }
};

struct ReportHandle {
    qlg_report* p = nullptr;
    ~ReportHandle() { qlg_report_free(p); }
};

int load_config(const std::string& path, ConfigHandle& cfg) {
    const auto text = read_file(path);
    if (!text) {
        std::cerr << "qlogic: cannot read config '" << path << "'\n";
        return kIo;
    }
    if (qlg_status s = qlg_config_parse(text->c_str(), &cfg.p); s != QLG_OK) return report_error(s, path);
    return kPass;
}

struct RunOptions {
    std::string config;
    std::string format = "text";
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::string out;
    std::string cells;
    unsigned threads = 1;
};

int run(const RunOptions& opt) {
    ConfigHandle cfg;
    if (int rc = load_config(opt.config, cfg); rc != kPass) return rc;
    if (opt.seed) qlg_config_set_seed(cfg.p, *opt.seed);
    if (opt.trials) {
        if (qlg_status s = qlg_config_set_trials(cfg.p, *opt.trials); s != QLG_OK) return report_error(s, "--trials");
    }
    if (!opt.out.empty()) qlg_config_set_output(cfg.p, opt.out.c_str());

    ReportHandle report;
    if (qlg_status s = qlg_run(cfg.p, opt.threads, &report.p); s != QLG_OK) return report_error(s, "run");

    CString body;
    const qlg_format format = opt.format == "csv" ? QLG_FORMAT_CSV : QLG_FORMAT_TEXT;
    if (qlg_status s = qlg_report_emit(report.p, format, &body.p); s != QLG_OK) return report_error(s, "emit");

    const std::string target = qlg_config_output(cfg.p);
    if (target.empty()) {
        std::cout << body.str();
        std::cout.flush();
    } else if (!write_file(target, body.str())) {
        std::cerr << "qlogic: cannot write output '" << target << "'\n";
        return kIo;
    }

    if (!opt.cells.empty()) {
        CString cells;
        if (qlg_status s = qlg_report_emit_cells(report.p, &cells.p); s != QLG_OK) return report_error(s, "emit");
        if (!write_file(opt.cells, cells.str())) {
            std::cerr << "qlogic: cannot write cells '" << opt.cells << "'\n";
            return kIo;
        }
    }
    return qlg_report_passed(report.p) ? kPass : kCheckFailed;
}

int validate(const std::string& path, bool echo) {
    ConfigHandle cfg;
    if (int rc = load_config(path, cfg); rc != kPass) return rc;
    if (echo) {
        CString text;
        if (qlg_status s = qlg_config_echo(cfg.p, &text.p); s != QLG_OK) return report_error(s, "echo");
        std::cout << text.str();
        return kPass;
    }
    CString digest;
    if (qlg_status s = qlg_config_digest(cfg.p, &digest.p); s != QLG_OK) return report_error(s, "digest");
    std::cout << "ok " << path << " digest=" << digest.str() << "\n";
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Truth-operator logic and measurement scenario runner"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(qlg_version()));

    RunOptions run_opt;
    auto* run_cmd = app.add_subcommand("run", "Run the scenario described by a config file");
    run_cmd->add_option("--config", run_opt.config, "Config file")->required();
    run_cmd->add_option("--format", run_opt.format, "Report format")->check(CLI::IsMember({"text", "csv"}));
    run_cmd->add_option("--seed", run_opt.seed, "Override the config seed");
    run_cmd->add_option("--trials", run_opt.trials, "Override the config trial count")->check(CLI::PositiveNumber);
    run_cmd->add_option("--out", run_opt.out, "Write the report here instead of stdout");
    run_cmd->add_option("--cells", run_opt.cells, "Also write the joint-outcome table (n,j,exact,empirical,stderr)");
    run_cmd->add_option("--threads", run_opt.threads, "Worker threads for trials")->check(CLI::Range(1u, 256u));

    std::string validate_path;
    bool echo = false;
    auto* validate_cmd = app.add_subcommand("validate", "Parse and validate a config file");
    validate_cmd->add_option("--config", validate_path, "Config file")->required();
    validate_cmd->add_flag("--echo", echo, "Print the canonical form of the config");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    if (*run_cmd) return run(run_opt);
    return validate(validate_path, echo);
}
