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

// Ideal projective measurement with reduction, repeated trials, selection of
// postmeasured ensembles, and the retrodiction experiment built on them.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qlogic/hilbert.hpp"
#include "qlogic/logic.hpp"
#include "qlogic/rng.hpp"

namespace qlogic {

/// Outcomes whose Born weight falls below this are never sampled.
inline constexpr double kImpossibleProbability = 1e-14;

struct BornWeight {
    double eigenvalue;
    std::vector<std::size_t> indices;
    double probability;
};

/// One entry per distinct eigenvalue, in the basis' group order.
std::vector<BornWeight> born_distribution(const StateVector& psi, const ObservableBasis& basis);

struct Outcome {
    double eigenvalue;
    std::vector<std::size_t> indices;
    double probability;
    /// Normalized projection onto the outcome eigenspace, phase-fixed so the
    /// largest-magnitude amplitude is real and positive.
    StateVector posterior;
};

/// Samples by inverse CDF: draw u in [0,1) lands in outcome l when
/// cum_{l-1} <= u < cum_l.
Outcome measure(const StateVector& psi, const ObservableBasis& basis, TrialRng& rng);

struct StageRecord {
    std::string label;
    std::string basis_id;
    Outcome outcome;
};

struct TrialRecord {
    std::uint64_t trial_id;
    std::vector<StageRecord> stages;

    const StageRecord* stage(std::string_view label) const;
};

struct Selector {
    std::string stage_label;
    double eigenvalue;
};

class Ensemble {
public:
    Ensemble(std::vector<std::string> stage_labels, std::vector<TrialRecord> trials,
             std::vector<Selector> selectors = {});

    std::span<const TrialRecord> trials() const noexcept { return trials_; }
    std::size_t size() const noexcept { return trials_.size(); }
    bool empty() const noexcept { return trials_.empty(); }
    std::span<const std::string> stage_labels() const noexcept { return stage_labels_; }
    std::span<const Selector> selectors() const noexcept { return selectors_; }

    /// "all", or the conjunction of selectors as "label=value & ...".
    std::string selector_description() const;

private:
    std::vector<std::string> stage_labels_;
    std::vector<TrialRecord> trials_;
    std::vector<Selector> selectors_;
};

struct PlanStage {
    std::string label;
    std::string basis_id;
    BasisRef basis;
};

/// Runs `worker(trial_id)` for trial ids [0, n) on up to `threads` threads
/// and returns the records in trial-id order. Each trial must draw only from
/// its own substream so the result is independent of `threads`.
std::vector<TrialRecord> run_partitioned(std::size_t n, unsigned threads,
                                         const std::function<TrialRecord(std::uint64_t)>& worker);

/// n independent trials; stage s measures the posterior of stage s-1 and
/// stage 0 measures psi. Trial t draws from rng.trial(t).
Ensemble run_trials(const StateVector& psi, std::span<const PlanStage> plan, std::size_t n,
                    const RngStream& rng, unsigned threads = 1);

/// Trials whose `stage_label` stage produced `eigenvalue` (within kTolerance).
Ensemble select(const Ensemble& e, std::string_view stage_label, double eigenvalue);

/// Relative frequency of each distinct eigenvalue of `basis` at `stage_label`.
std::vector<double> stage_frequencies(const Ensemble& e, std::string_view stage_label,
                                      const ObservableBasis& basis);

double total_variation(std::span<const double> p, std::span<const double> q);

/// Half the sum over cells of 4 sigma of the two-sample frequency difference,
/// sigma_l = sqrt(p_l (1 - p_l) (1/n_a + 1/n_b)).
double two_sample_tv_tolerance(std::span<const double> exact, std::size_t n_a, std::size_t n_b);

/// One line per trial: "trial_id, label=eigenvalue, label=eigenvalue, ...".
/// Eigenvalues use the shortest round-trip decimal form.
std::string serialize(const Ensemble& e);

struct SerializedTrial {
    std::uint64_t trial_id;
    std::vector<std::pair<std::string, double>> stages;
};
std::vector<SerializedTrial> parse_serialized(std::string_view text);

struct SubEnsembleCheck {
    double eigenvalue;
    std::size_t trials;
    /// Trials in the sub-ensemble whose pre stage also gave `eigenvalue`.
    std::size_t pre_matches;
};

struct RetrodictionReport {
    std::size_t trials;
    /// Experiment B trials with equal pre and post eigenvalues.
    std::size_t agreeing_trials;
    std::vector<double> exact_distribution;
    std::vector<double> single_distribution;  // experiment A
    std::vector<double> double_distribution;  // experiment B, post stage
    double total_variation;
    double tv_tolerance;
    std::vector<SubEnsembleCheck> sub_ensembles;

    bool repeatability_holds() const { return agreeing_trials == trials; }
    bool statistics_agree() const { return total_variation <= tv_tolerance; }
    bool retrodiction_holds() const;
};

/// (A) measures K once; (B) measures K at a "pre" stage and again at "post".
/// Checks that B's stages always agree, that A and B give the same t0
/// statistics, and that every selected post ensemble K = k had pre value k.
RetrodictionReport retrodiction_check(const StateVector& psi, const BasisRef& basis, std::size_t n,
                                      const RngStream& rng, unsigned threads = 1);

}  // namespace qlogic
