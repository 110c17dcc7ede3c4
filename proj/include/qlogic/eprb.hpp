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

// Two-particle states |Psi> = sum_ij a_ij |k_i>_1 |l_j>_2 and the two-channel
// (EPR-Bohm) experiment on them.
//
// Partner states are returned in the computational coordinates of the
// partner particle, e.g. |l'> = A sum_j a_nj |l_j> with A = 1/sqrt(w_n) real.

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "qlogic/hilbert.hpp"
#include "qlogic/logic.hpp"
#include "qlogic/measurement.hpp"
#include "qlogic/rng.hpp"

namespace qlogic {

/// Norm tolerance for amplitude matrices.
inline constexpr double kBipartiteNormTolerance = 1e-8;

/// Agreement required between the two routes to a joint probability.
inline constexpr double kJointTolerance = 1e-12;

enum class Channel { One = 1, Two = 2 };

class BipartiteState {
public:
    /// `amplitudes` is d1 x d2 with rows indexed by basis1 and columns by
    /// basis2. The norm is checked, never repaired.
    BipartiteState(ComplexMatrix amplitudes, BasisRef basis1, BasisRef basis2,
                   double tol = kBipartiteNormTolerance);

    std::size_t d1() const noexcept { return a_.rows(); }
    std::size_t d2() const noexcept { return a_.cols(); }
    const ComplexMatrix& amplitudes() const noexcept { return a_; }
    const ObservableBasis& basis1() const noexcept { return *basis1_; }
    const ObservableBasis& basis2() const noexcept { return *basis2_; }
    const BasisRef& basis_ref(Channel c) const noexcept { return c == Channel::One ? basis1_ : basis2_; }

    /// sum_ij a_ij |k_i> (x) |l_j> in computational product coordinates,
    /// composite index i * d2 + j.
    StateVector flatten() const;

private:
    ComplexMatrix a_;
    BasisRef basis1_;
    BasisRef basis2_;
};

/// Re-expresses the same physical state in new channel bases.
BipartiteState rebase(const BipartiteState& s, BasisRef basis1, BasisRef basis2);

struct ConditionalResult {
    std::size_t channel_outcome;
    double probability;
    StateVector partner_state;
};

/// Row (channel 1) or column (channel 2) conditioning on a single eigen-index.
/// Throws ImpossibleOutcome when the outcome has probability below 1e-14.
ConditionalResult conditional_state(const BipartiteState& s, Channel channel, std::size_t outcome_index);

/// |a_nj|^2, cross-checked against <Psi| P_n (x) P_j |Psi> on the flattened
/// state; a disagreement beyond kJointTolerance throws std::logic_error.
double joint_probability(const BipartiteState& s, std::size_t n, std::size_t j);

/// Joint probabilities pooled over eigenvalue groups: cell (g1, g2).
std::vector<std::vector<double>> exact_joint_table(const BipartiteState& s);

/// Joint frequencies of the "ch1"/"ch2" stages over eigenvalue groups.
std::vector<std::vector<double>> empirical_joint_table(const Ensemble& e, const BipartiteState& s);

/// Marginal over the eigenvalue groups of one channel.
std::vector<double> channel_marginal(const BipartiteState& s, Channel channel);

struct DualEnsembleCell {
    std::size_t n;
    std::size_t j;
    double joint;
    double route_a;  // select K = k_n, then Born weight of l_j in the partner
    double route_b;  // select L = l_j, then Born weight of k_n in the partner
};

struct DualEnsembleReport {
    std::vector<DualEnsembleCell> cells;
    double max_discrepancy;
};

DualEnsembleReport dual_ensemble_check(const BipartiteState& s);

enum class MeasurementOrder { OneThenTwo, TwoThenOne };

const char* to_string(MeasurementOrder order);
MeasurementOrder parse_order(std::string_view text);

/// Measures one channel of a bipartite state: samples the channel marginal,
/// then keeps only the outcome eigenspace rows (or columns), renormalized.
/// The Outcome's posterior is the flattened reduced state.
std::pair<Outcome, BipartiteState> measure_channel(const BipartiteState& s, Channel channel, TrialRng& rng);

/// Each trial measures the first channel, reduces, then measures the other.
/// Stages are labelled "ch1" and "ch2" in the order measured.
Ensemble simulate_eprb(const BipartiteState& s, MeasurementOrder order, std::size_t n_trials,
                       const RngStream& rng, unsigned threads = 1);

/// Like simulate_eprb(OneThenTwo) but channel 1 is measured steps + 1 times
/// (labels "ch1@-steps", ..., "ch1@-1", "ch1") before channel 2.
Ensemble simulate_chain(const BipartiteState& s, std::size_t steps, std::size_t n_trials,
                        const RngStream& rng, unsigned threads = 1);

struct FollowupReport {
    ConditionalResult conditional;
    /// Probability that the basis built around the partner state yields the
    /// partner's own eigenvalue.
    double deterministic_probability;
    std::vector<BornWeight> contrast_distribution;
    bool contrast_commutes;
    bool contrast_unpredictable;
};

/// Measures the channel-1 partner state in (a) a channel-2 basis completed
/// around it and (b) the given contrast basis.
FollowupReport commuting_followup_check(const BipartiteState& s, std::size_t n,
                                        const ObservableBasis& contrast);

/// The completed basis used above: partner first with eigenvalue 0, then the
/// Gram-Schmidt completion with eigenvalues 1, 2, ...
ObservableBasis followup_basis(const StateVector& partner);

struct ChainReport {
    std::size_t steps;
    std::size_t trials;
    /// Trials whose channel-1 values were identical across all stages.
    std::size_t consistent_trials;
    std::vector<std::vector<double>> chain_joint;
    std::vector<std::vector<double>> reference_joint;
    double total_variation;
    double tv_tolerance;

    bool chain_holds() const { return consistent_trials == trials; }
    bool statistics_agree() const { return total_variation <= tv_tolerance; }
};

ChainReport logical_chain_check(const BipartiteState& s, std::size_t steps, std::size_t n_trials,
                                const RngStream& rng, unsigned threads = 1);

struct NoSignalingReport {
    std::vector<double> exact_marginal;
    std::vector<double> marginal_primary;
    std::vector<double> marginal_alternative;
    /// Per-cell 4 sigma two-sample tolerance.
    std::vector<double> tolerance;

    bool holds() const;
};

/// Channel-2 marginal frequencies when channel 1 is analysed in its own basis
/// versus `alternative_basis1`.
NoSignalingReport no_signaling_check(const BipartiteState& s, const BasisRef& alternative_basis1,
                                     std::size_t n_trials, const RngStream& rng, unsigned threads = 1);

}  // namespace qlogic
