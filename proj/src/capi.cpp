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

#include "qlogic/qlogic.h"

#include <cstring>
#include <new>
#include <string>

#include "qlogic/config.hpp"
#include "qlogic/eprb.hpp"
#include "qlogic/error.hpp"
#include "qlogic/logic.hpp"
#include "qlogic/measurement.hpp"
#include "qlogic/scenario.hpp"

struct qlg_basis {
    qlogic::BasisRef basis;
};

struct qlg_state {
    qlogic::StateVector state;
};

struct qlg_bipartite {
    qlogic::BipartiteState state;
};

struct qlg_config {
    qlogic::Config config;
};

struct qlg_report {
    qlogic::Report report;
};

namespace {

thread_local std::string g_last_error;
thread_local std::size_t g_last_error_line = 0;

qlg_status status_of(qlogic::ErrorCode code) {
    using qlogic::ErrorCode;
    switch (code) {
        case ErrorCode::DimensionMismatch: return QLG_ERR_DIMENSION;
        case ErrorCode::NotNormalized: return QLG_ERR_NOT_NORMALIZED;
        case ErrorCode::IndexOutOfRange: return QLG_ERR_INDEX;
        case ErrorCode::NoMatchingEigenvalue: return QLG_ERR_NO_EIGENVALUE;
        case ErrorCode::MixedBases: return QLG_ERR_MIXED_BASES;
        case ErrorCode::OverlappingStatements: return QLG_ERR_OVERLAP;
        case ErrorCode::NonCommuting: return QLG_ERR_NONCOMMUTING;
        case ErrorCode::ImpossibleOutcome: return QLG_ERR_IMPOSSIBLE_OUTCOME;
        case ErrorCode::UnknownStage: return QLG_ERR_UNKNOWN_STAGE;
        case ErrorCode::InvalidArgument: return QLG_ERR_INVALID_ARGUMENT;
        case ErrorCode::Syntax: return QLG_ERR_SYNTAX;
        case ErrorCode::UnknownScenario: return QLG_ERR_UNKNOWN_SCENARIO;
        case ErrorCode::Io: return QLG_ERR_IO;
    }
    return QLG_ERR_INTERNAL;
}

qlg_status fail(qlg_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

/// Runs `body`, translating exceptions into a status and the thread's last
/// error message.
template <class F>
qlg_status guarded(F&& body) {
    g_last_error.clear();
    g_last_error_line = 0;
    try {
        body();
        return QLG_OK;
    } catch (const qlogic::ConfigError& e) {
        g_last_error_line = e.line();
        return fail(status_of(e.code()), e.what());
    } catch (const qlogic::Error& e) {
        return fail(status_of(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(QLG_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(QLG_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(QLG_ERR_INTERNAL, "unknown error");
    }
}

qlogic::ComplexVector complex_from(const double* re_im, std::size_t count) {
    qlogic::ComplexVector out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = {re_im[2 * i], re_im[2 * i + 1]};
    return out;
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(bool cond, const char* what) {
    if (!cond) throw qlogic::Error(qlogic::ErrorCode::InvalidArgument, what);
}

}  // namespace

extern "C" {

QLG_API const char* qlg_version(void) { return "0.1.0"; }

QLG_API const char* qlg_last_error(void) { return g_last_error.c_str(); }

QLG_API size_t qlg_last_error_line(void) { return g_last_error_line; }

QLG_API void qlg_string_free(char* s) { delete[] s; }

QLG_API qlg_status qlg_basis_create(size_t dim, const double* vectors, const double* eigenvalues, qlg_basis** out) {
    return guarded([&] {
        require(out && vectors && eigenvalues, "null argument");
        std::vector<qlogic::StateVector> vecs;
        for (std::size_t l = 0; l < dim; ++l) vecs.emplace_back(complex_from(vectors + 2 * l * dim, dim));
        *out = new qlg_basis{qlogic::share(
            qlogic::ObservableBasis(std::move(vecs), std::vector<double>(eigenvalues, eigenvalues + dim)))};
    });
}

QLG_API qlg_status qlg_basis_qubit(double angle, qlg_basis** out) {
    return guarded([&] {
        require(out, "null argument");
        *out = new qlg_basis{qlogic::share(qlogic::qubit_basis(angle))};
    });
}

QLG_API size_t qlg_basis_dim(const qlg_basis* basis) { return basis ? basis->basis->dim() : 0; }

QLG_API void qlg_basis_free(qlg_basis* basis) { delete basis; }

QLG_API qlg_status qlg_state_create(size_t dim, const double* amplitudes, qlg_state** out) {
    return guarded([&] {
        require(out && amplitudes, "null argument");
        *out = new qlg_state{qlogic::StateVector(complex_from(amplitudes, dim))};
    });
}

QLG_API size_t qlg_state_dim(const qlg_state* state) { return state ? state->state.dim() : 0; }

QLG_API void qlg_state_free(qlg_state* state) { delete state; }

QLG_API qlg_status qlg_truth_value(const qlg_basis* basis, const size_t* indices, size_t count,
                                   const qlg_state* state, qlg_truth* truth, double* expectation) {
    return guarded([&] {
        require(basis && state && truth && expectation && (indices || count == 0), "null argument");
        const qlogic::Statement s(basis->basis, std::set<std::size_t>(indices, indices + count));
        const qlogic::TruthValue tv = qlogic::truth_value(s, state->state);
        *expectation = tv.expectation;
        *truth = tv.truth == qlogic::Truth::True    ? QLG_TRUE
                 : tv.truth == qlogic::Truth::False ? QLG_FALSE
                                                    : QLG_INDETERMINATE;
    });
}

QLG_API qlg_status qlg_support(const qlg_state* state, const qlg_basis* basis, double eps, size_t* indices_out,
                               size_t capacity, size_t* count) {
    return guarded([&] {
        require(state && basis && count && (indices_out || capacity == 0), "null argument");
        const auto s = qlogic::support_statement(state->state, basis->basis, eps);
        *count = s.indices().size();
        std::size_t k = 0;
        for (std::size_t l : s.indices()) {
            if (k < capacity) indices_out[k] = l;
            ++k;
        }
    });
}

QLG_API qlg_status qlg_theorem2_witness(const qlg_state* state, const qlg_basis* basis, double eps, int* witness) {
    return guarded([&] {
        require(state && basis && witness, "null argument");
        *witness = qlogic::theorem2_witness(state->state, basis->basis, eps) ? 1 : 0;
    });
}

QLG_API qlg_status qlg_born_distribution(const qlg_state* state, const qlg_basis* basis, double* eigenvalues,
                                         double* probabilities, size_t capacity, size_t* count) {
    return guarded([&] {
        require(state && basis && count && ((eigenvalues && probabilities) || capacity == 0), "null argument");
        const auto weights = qlogic::born_distribution(state->state, *basis->basis);
        *count = weights.size();
        for (std::size_t g = 0; g < weights.size() && g < capacity; ++g) {
            eigenvalues[g] = weights[g].eigenvalue;
            probabilities[g] = weights[g].probability;
        }
    });
}

QLG_API qlg_status qlg_bipartite_create(size_t d1, size_t d2, const double* amplitudes, const qlg_basis* basis1,
                                        const qlg_basis* basis2, qlg_bipartite** out) {
    return guarded([&] {
        require(out && amplitudes && basis1 && basis2, "null argument");
        *out = new qlg_bipartite{qlogic::BipartiteState(
            qlogic::ComplexMatrix(d1, d2, complex_from(amplitudes, d1 * d2)), basis1->basis, basis2->basis)};
    });
}

QLG_API void qlg_bipartite_free(qlg_bipartite* state) { delete state; }

QLG_API qlg_status qlg_joint_probability(const qlg_bipartite* state, size_t n, size_t j, double* out) {
    return guarded([&] {
        require(state && out, "null argument");
        *out = qlogic::joint_probability(state->state, n, j);
    });
}

QLG_API qlg_status qlg_conditional_state(const qlg_bipartite* state, int channel, size_t outcome,
                                         double* probability, double* partner_out, size_t partner_capacity) {
    return guarded([&] {
        require(state && probability && partner_out, "null argument");
        require(channel == 1 || channel == 2, "channel must be 1 or 2");
        const auto r = qlogic::conditional_state(
            state->state, channel == 1 ? qlogic::Channel::One : qlogic::Channel::Two, outcome);
        require(partner_capacity >= 2 * r.partner_state.dim(), "partner buffer too small");
        *probability = r.probability;
        for (std::size_t i = 0; i < r.partner_state.dim(); ++i) {
            partner_out[2 * i] = r.partner_state[i].real();
            partner_out[2 * i + 1] = r.partner_state[i].imag();
        }
    });
}

QLG_API qlg_status qlg_dual_ensemble_max_discrepancy(const qlg_bipartite* state, double* out) {
    return guarded([&] {
        require(state && out, "null argument");
        *out = qlogic::dual_ensemble_check(state->state).max_discrepancy;
    });
}

QLG_API qlg_status qlg_config_parse(const char* text, qlg_config** out) {
    return guarded([&] {
        require(text && out, "null argument");
        *out = new qlg_config{qlogic::parse_config(text)};
    });
}

QLG_API void qlg_config_free(qlg_config* config) { delete config; }

QLG_API void qlg_config_set_seed(qlg_config* config, uint64_t seed) {
    if (config) config->config.seed = seed;
}

QLG_API qlg_status qlg_config_set_trials(qlg_config* config, uint64_t trials) {
    return guarded([&] {
        require(config, "null argument");
        require(trials >= 1, "trials must be at least 1");
        config->config.trials = static_cast<std::size_t>(trials);
    });
}

QLG_API qlg_status qlg_config_set_output(qlg_config* config, const char* path) {
    return guarded([&] {
        require(config && path, "null argument");
        config->config.output = path;
    });
}

QLG_API const char* qlg_config_output(const qlg_config* config) {
    return config ? config->config.output.c_str() : "";
}

QLG_API qlg_status qlg_config_echo(const qlg_config* config, char** out) {
    return guarded([&] {
        require(config && out, "null argument");
        *out = copy_string(qlogic::echo_config(config->config));
    });
}

QLG_API qlg_status qlg_config_digest(const qlg_config* config, char** out) {
    return guarded([&] {
        require(config && out, "null argument");
        *out = copy_string(qlogic::config_digest(config->config));
    });
}

QLG_API qlg_status qlg_run(const qlg_config* config, unsigned threads, qlg_report** out) {
    return guarded([&] {
        require(config && out, "null argument");
        *out = new qlg_report{qlogic::run_scenario(config->config, threads == 0 ? 1 : threads)};
    });
}

QLG_API void qlg_report_free(qlg_report* report) { delete report; }

QLG_API int qlg_report_passed(const qlg_report* report) { return report && report->report.passed() ? 1 : 0; }

QLG_API size_t qlg_report_check_count(const qlg_report* report) {
    return report ? report->report.checks.size() : 0;
}

QLG_API qlg_status qlg_report_check(const qlg_report* report, size_t index, qlg_check* out) {
    return guarded([&] {
        require(report && out, "null argument");
        if (index >= report->report.checks.size()) {
            throw qlogic::Error(qlogic::ErrorCode::IndexOutOfRange, "check index out of range");
        }
        const auto& c = report->report.checks[index];
        out->name = c.name.c_str();
        out->exact = c.exact;
        out->empirical = c.empirical;
        out->tolerance = c.tolerance;
        out->status = c.status == qlogic::CheckStatus::Pass   ? QLG_CHECK_PASS
                      : c.status == qlogic::CheckStatus::Fail ? QLG_CHECK_FAIL
                                                              : QLG_CHECK_SKIPPED;
        out->note = c.note.c_str();
    });
}

QLG_API qlg_status qlg_report_emit(const qlg_report* report, qlg_format format, char** out) {
    return guarded([&] {
        require(report && out, "null argument");
        *out = copy_string(qlogic::emit(report->report, format == QLG_FORMAT_CSV ? qlogic::ReportFormat::Csv
                                                                                 : qlogic::ReportFormat::Text));
    });
}

QLG_API qlg_status qlg_report_emit_cells(const qlg_report* report, char** out) {
    return guarded([&] {
        require(report && out, "null argument");
        *out = copy_string(qlogic::emit_cells_csv(report->report));
    });
}

}  // extern "C"
