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

#include "qlogic/measurement.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <thread>

#include "qlogic/error.hpp"

namespace qlogic {

namespace {

void require_dim(const StateVector& psi, const ObservableBasis& basis) {
    if (psi.dim() != basis.dim()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "state dimension " + std::to_string(psi.dim()) + " vs basis dimension " +
                        std::to_string(basis.dim()));
    }
}

std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

std::vector<BornWeight> born_distribution(const StateVector& psi, const ObservableBasis& basis) {
    require_dim(psi, basis);
    std::vector<BornWeight> out;
    out.reserve(basis.groups().size());
    for (const auto& g : basis.groups()) {
        double p = 0.0;
        for (std::size_t l : g.indices) p += std::norm(inner(basis.eigenvector(l), psi));
        out.push_back({g.eigenvalue, g.indices, p});
    }
    return out;
}

Outcome measure(const StateVector& psi, const ObservableBasis& basis, TrialRng& rng) {
    const auto weights = born_distribution(psi, basis);

    double total = 0.0;
    for (const auto& w : weights) {
        if (w.probability >= kImpossibleProbability) total += w.probability;
    }
    const double u = rng.uniform() * total;

    std::size_t pick = weights.size();
    double cum = 0.0;
    for (std::size_t g = 0; g < weights.size(); ++g) {
        if (weights[g].probability < kImpossibleProbability) continue;
        pick = g;  // the last possible outcome absorbs u that rounding pushed past cum
        cum += weights[g].probability;
        if (u < cum) break;
    }
    const BornWeight& hit = weights[pick];

    ComplexVector projected(psi.dim());
    for (std::size_t l : hit.indices) {
        const auto& k = basis.eigenvector(l);
        const Complex c = inner(k, psi);
        for (std::size_t i = 0; i < psi.dim(); ++i) projected[i] += c * k[i];
    }
    return Outcome{hit.eigenvalue, hit.indices, hit.probability, canonical_phase(normalize(projected))};
}

const StageRecord* TrialRecord::stage(std::string_view label) const {
    for (const auto& s : stages) {
        if (s.label == label) return &s;
    }
    return nullptr;
}

Ensemble::Ensemble(std::vector<std::string> stage_labels, std::vector<TrialRecord> trials,
                   std::vector<Selector> selectors)
    : stage_labels_(std::move(stage_labels)), trials_(std::move(trials)), selectors_(std::move(selectors)) {}

std::string Ensemble::selector_description() const {
    if (selectors_.empty()) return "all";
    std::string out;
    for (const auto& s : selectors_) {
        if (!out.empty()) out += " & ";
        out += s.stage_label + "=" + format_double(s.eigenvalue);
    }
    return out;
}

std::vector<TrialRecord> run_partitioned(std::size_t n, unsigned threads,
                                         const std::function<TrialRecord(std::uint64_t)>& worker) {
    std::vector<std::optional<TrialRecord>> slots(n);
    const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
    if (workers == 1) {
        for (std::size_t t = 0; t < n; ++t) slots[t] = worker(t);
    } else {
        std::vector<std::exception_ptr> errors(workers);
        {
            std::vector<std::jthread> pool;
            for (std::size_t w = 0; w < workers; ++w) {
                pool.emplace_back([&, w] {
                    try {
                        const std::size_t begin = n * w / workers;
                        const std::size_t end = n * (w + 1) / workers;
                        for (std::size_t t = begin; t < end; ++t) slots[t] = worker(t);
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            }
        }
        for (const auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }
    std::vector<TrialRecord> out;
    out.reserve(n);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

Ensemble run_trials(const StateVector& psi, std::span<const PlanStage> plan, std::size_t n,
                    const RngStream& rng, unsigned threads) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "at least one trial is required");
    if (plan.empty()) throw Error(ErrorCode::InvalidArgument, "measurement plan is empty");
    std::vector<std::string> labels;
    for (const auto& stage : plan) {
        if (!stage.basis) throw Error(ErrorCode::InvalidArgument, "plan stage without basis");
        require_dim(psi, *stage.basis);
        if (std::find(labels.begin(), labels.end(), stage.label) != labels.end()) {
            throw Error(ErrorCode::InvalidArgument, "duplicate stage label '" + stage.label + "'");
        }
        labels.push_back(stage.label);
    }

    auto trials = run_partitioned(n, threads, [&](std::uint64_t id) {
        TrialRng trial_rng = rng.trial(id);
        TrialRecord rec{id, {}};
        rec.stages.reserve(plan.size());
        const StateVector* current = &psi;
        for (const auto& stage : plan) {
            rec.stages.push_back({stage.label, stage.basis_id, measure(*current, *stage.basis, trial_rng)});
            current = &rec.stages.back().outcome.posterior;
        }
        return rec;
    });
    return Ensemble(std::move(labels), std::move(trials));
}

Ensemble select(const Ensemble& e, std::string_view stage_label, double eigenvalue) {
    const auto labels = e.stage_labels();
    if (std::find(labels.begin(), labels.end(), stage_label) == labels.end()) {
        throw Error(ErrorCode::UnknownStage, "no stage labelled '" + std::string(stage_label) + "'");
    }
    std::vector<TrialRecord> kept;
    for (const auto& t : e.trials()) {
        const StageRecord* s = t.stage(stage_label);
        if (s && std::abs(s->outcome.eigenvalue - eigenvalue) <= kTolerance) kept.push_back(t);
    }
    std::vector<Selector> selectors(e.selectors().begin(), e.selectors().end());
    const bool repeated = std::any_of(selectors.begin(), selectors.end(), [&](const Selector& s) {
        return s.stage_label == stage_label && std::abs(s.eigenvalue - eigenvalue) <= kTolerance;
    });
    if (!repeated) selectors.push_back({std::string(stage_label), eigenvalue});
    return Ensemble(std::vector<std::string>(labels.begin(), labels.end()), std::move(kept),
                    std::move(selectors));
}

std::vector<double> stage_frequencies(const Ensemble& e, std::string_view stage_label,
                                      const ObservableBasis& basis) {
    std::vector<double> freq(basis.groups().size(), 0.0);
    if (e.empty()) return freq;
    for (const auto& t : e.trials()) {
        const StageRecord* s = t.stage(stage_label);
        if (!s) throw Error(ErrorCode::UnknownStage, "no stage labelled '" + std::string(stage_label) + "'");
        freq[basis.group_of(s->outcome.indices.front())] += 1.0;
    }
    for (auto& f : freq) f /= static_cast<double>(e.size());
    return freq;
}

double total_variation(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) throw Error(ErrorCode::DimensionMismatch, "distributions differ in size");
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
    return 0.5 * s;
}

double two_sample_tv_tolerance(std::span<const double> exact, std::size_t n_a, std::size_t n_b) {
    const double scale = 1.0 / static_cast<double>(n_a) + 1.0 / static_cast<double>(n_b);
    double s = 0.0;
    for (double p : exact) s += 4.0 * std::sqrt(std::max(0.0, p * (1.0 - p)) * scale);
    return 0.5 * s;
}

std::string serialize(const Ensemble& e) {
    std::string out;
    for (const auto& t : e.trials()) {
        out += std::to_string(t.trial_id);
        for (const auto& s : t.stages) {
            out += ", ";
            out += s.label;
            out += '=';
            out += format_double(s.outcome.eigenvalue);
        }
        out += '\n';
    }
    return out;
}

std::vector<SerializedTrial> parse_serialized(std::string_view text) {
    std::vector<SerializedTrial> out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        line = trim(line);
        if (line.empty()) continue;

        auto fail = [&](const std::string& why) {
            return Error(ErrorCode::Syntax, "line " + std::to_string(line_no) + ": " + why);
        };
        SerializedTrial rec{};
        std::size_t field = 0;
        while (true) {
            const std::size_t comma = line.find(',');
            std::string_view item = trim(line.substr(0, comma));
            if (field == 0) {
                auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), rec.trial_id);
                if (ec != std::errc{} || ptr != item.data() + item.size()) throw fail("bad trial id");
            } else {
                const std::size_t eq = item.find('=');
                if (eq == std::string_view::npos || eq == 0) throw fail("expected label=eigenvalue");
                std::string_view value = item.substr(eq + 1);
                double v = 0.0;
                auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
                if (ec != std::errc{} || ptr != value.data() + value.size()) throw fail("bad eigenvalue");
                rec.stages.emplace_back(std::string(item.substr(0, eq)), v);
            }
            ++field;
            if (comma == std::string_view::npos) break;
            line = line.substr(comma + 1);
        }
        if (rec.stages.empty()) throw fail("trial without stages");
        out.push_back(std::move(rec));
    }
    return out;
}

bool RetrodictionReport::retrodiction_holds() const {
    return std::all_of(sub_ensembles.begin(), sub_ensembles.end(),
                       [](const SubEnsembleCheck& c) { return c.pre_matches == c.trials; });
}

RetrodictionReport retrodiction_check(const StateVector& psi, const BasisRef& basis, std::size_t n,
                                      const RngStream& rng, unsigned threads) {
    const PlanStage single[] = {{"t0", "K", basis}};
    const PlanStage twice[] = {{"pre", "K", basis}, {"post", "K", basis}};
    const Ensemble a = run_trials(psi, single, n, rng.fork(1), threads);
    const Ensemble b = run_trials(psi, twice, n, rng.fork(2), threads);

    RetrodictionReport r{};
    r.trials = n;
    for (const auto& t : b.trials()) {
        if (std::abs(t.stages[0].outcome.eigenvalue - t.stages[1].outcome.eigenvalue) <= kTolerance) {
            ++r.agreeing_trials;
        }
    }
    for (const auto& w : born_distribution(psi, *basis)) r.exact_distribution.push_back(w.probability);
    r.single_distribution = stage_frequencies(a, "t0", *basis);
    r.double_distribution = stage_frequencies(b, "post", *basis);
    r.total_variation = total_variation(r.single_distribution, r.double_distribution);
    r.tv_tolerance = two_sample_tv_tolerance(r.exact_distribution, n, n);

    // Conclusions about the premeasured state are drawn only inside selected
    // ensembles; the unselected ensemble b is never used for them.
    for (const auto& g : basis->groups()) {
        const Ensemble selected = select(b, "post", g.eigenvalue);
        SubEnsembleCheck c{g.eigenvalue, selected.size(), 0};
        for (const auto& t : selected.trials()) {
            if (std::abs(t.stage("pre")->outcome.eigenvalue - g.eigenvalue) <= kTolerance) ++c.pre_matches;
        }
        r.sub_ensembles.push_back(c);
    }
    return r;
}

}  // namespace qlogic
