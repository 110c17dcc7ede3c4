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

#include "qlogic/eprb.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "qlogic/error.hpp"

namespace qlogic {

namespace {

const char* kChannelLabel[] = {"", "ch1", "ch2"};
const char* kChannelBasisId[] = {"", "K", "L"};

Channel other(Channel c) { return c == Channel::One ? Channel::Two : Channel::One; }

std::size_t channel_dim(const BipartiteState& s, Channel c) { return c == Channel::One ? s.d1() : s.d2(); }

const ObservableBasis& channel_basis(const BipartiteState& s, Channel c) {
    return c == Channel::One ? s.basis1() : s.basis2();
}

/// Squared weight of one row (channel 1) or column (channel 2).
double line_weight(const ComplexMatrix& a, Channel c, std::size_t idx) {
    double w = 0.0;
    if (c == Channel::One) {
        for (std::size_t j = 0; j < a.cols(); ++j) w += std::norm(a(idx, j));
    } else {
        for (std::size_t i = 0; i < a.rows(); ++i) w += std::norm(a(i, idx));
    }
    return w;
}

/// Combination sum_x coeffs[x] * basis.eigenvector(x).
ComplexVector combine(const ObservableBasis& basis, std::span<const Complex> coeffs) {
    ComplexVector v(basis.dim());
    for (std::size_t x = 0; x < coeffs.size(); ++x) {
        const auto& e = basis.eigenvector(x);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += coeffs[x] * e[i];
    }
    return v;
}

/// Stage label for the channel-1 measurement `back` steps before t0.
std::string chain_label(std::size_t back) {
    return back == 0 ? std::string("ch1") : "ch1@-" + std::to_string(back);
}

/// Measures `first` (repeat + 1 times), then the other channel once.
TrialRecord eprb_trial(const BipartiteState& s, Channel first, std::size_t repeat, std::uint64_t id,
                       const RngStream& rng) {
    TrialRng trial_rng = rng.trial(id);
    TrialRecord rec{id, {}};
    rec.stages.reserve(repeat + 2);
    BipartiteState current = s;
    for (std::size_t r = 0; r <= repeat; ++r) {
        auto [outcome, reduced] = measure_channel(current, first, trial_rng);
        const std::string label =
            first == Channel::One ? chain_label(repeat - r) : std::string(kChannelLabel[2]);
        rec.stages.push_back({label, kChannelBasisId[static_cast<int>(first)], std::move(outcome)});
        current = std::move(reduced);
    }
    const Channel second = other(first);
    auto [outcome, reduced] = measure_channel(current, second, trial_rng);
    rec.stages.push_back({kChannelLabel[static_cast<int>(second)], kChannelBasisId[static_cast<int>(second)],
                          std::move(outcome)});
    return rec;
}

std::vector<std::string> labels_of(const TrialRecord& rec) {
    std::vector<std::string> labels;
    for (const auto& st : rec.stages) labels.push_back(st.label);
    return labels;
}

std::vector<double> flat(const std::vector<std::vector<double>>& table) {
    std::vector<double> out;
    for (const auto& row : table) out.insert(out.end(), row.begin(), row.end());
    return out;
}

}  // namespace

BipartiteState::BipartiteState(ComplexMatrix amplitudes, BasisRef basis1, BasisRef basis2, double tol)
    : a_(std::move(amplitudes)), basis1_(std::move(basis1)), basis2_(std::move(basis2)) {
    if (!basis1_ || !basis2_) throw Error(ErrorCode::InvalidArgument, "bipartite state needs two bases");
    if (a_.rows() != basis1_->dim() || a_.cols() != basis2_->dim()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "amplitude matrix " + std::to_string(a_.rows()) + "x" + std::to_string(a_.cols()) +
                        " vs channel dimensions " + std::to_string(basis1_->dim()) + "x" +
                        std::to_string(basis2_->dim()));
    }
    const double n2 = squared_norm(a_.entries());
    if (!(std::abs(n2 - 1.0) <= tol)) {
        throw Error(ErrorCode::NotNormalized,
                    "amplitude matrix not normalized (squared norm " + std::to_string(n2) + ")");
    }
}

StateVector BipartiteState::flatten() const {
    ComplexVector flat(d1() * d2());
    for (std::size_t i = 0; i < d1(); ++i) {
        for (std::size_t j = 0; j < d2(); ++j) {
            const Complex aij = a_(i, j);
            if (aij == Complex{}) continue;
            const auto prod = kron(basis1_->eigenvector(i).amplitudes(), basis2_->eigenvector(j).amplitudes());
            for (std::size_t x = 0; x < flat.size(); ++x) flat[x] += aij * prod[x];
        }
    }
    return StateVector(std::move(flat), kBipartiteNormTolerance);
}

BipartiteState rebase(const BipartiteState& s, BasisRef basis1, BasisRef basis2) {
    if (!basis1 || !basis2) throw Error(ErrorCode::InvalidArgument, "rebase needs two bases");
    if (basis1->dim() != s.d1() || basis2->dim() != s.d2()) {
        throw Error(ErrorCode::DimensionMismatch, "rebase bases do not match channel dimensions");
    }
    const StateVector psi = s.flatten();
    ComplexMatrix a(s.d1(), s.d2());
    for (std::size_t p = 0; p < s.d1(); ++p) {
        for (std::size_t q = 0; q < s.d2(); ++q) {
            a(p, q) = inner(kron(basis1->eigenvector(p).amplitudes(), basis2->eigenvector(q).amplitudes()),
                            psi.amplitudes());
        }
    }
    return BipartiteState(std::move(a), std::move(basis1), std::move(basis2));
}

ConditionalResult conditional_state(const BipartiteState& s, Channel channel, std::size_t outcome_index) {
    if (outcome_index >= channel_dim(s, channel)) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "channel " + std::to_string(static_cast<int>(channel)) + " outcome " +
                        std::to_string(outcome_index) + " out of range");
    }
    const double w = line_weight(s.amplitudes(), channel, outcome_index);
    if (w < kImpossibleProbability) {
        throw Error(ErrorCode::ImpossibleOutcome,
                    "channel " + std::to_string(static_cast<int>(channel)) + " outcome " +
                        std::to_string(outcome_index) + " has zero probability");
    }
    const ComplexVector coeffs =
        channel == Channel::One ? s.amplitudes().row(outcome_index) : s.amplitudes().col(outcome_index);
    return {outcome_index, w, normalize(combine(channel_basis(s, other(channel)), coeffs))};
}

double joint_probability(const BipartiteState& s, std::size_t n, std::size_t j) {
    if (n >= s.d1() || j >= s.d2()) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "joint cell (" + std::to_string(n) + ", " + std::to_string(j) + ") out of range");
    }
    const double direct = std::norm(s.amplitudes()(n, j));

    const auto& kn = s.basis1().eigenvector(n);
    const auto& lj = s.basis2().eigenvector(j);
    const ComplexMatrix truth = kron(outer(kn, kn), outer(lj, lj));
    const StateVector psi = s.flatten();
    const double via_projector = inner(psi.amplitudes(), apply(truth, psi)).real();
    if (std::abs(direct - via_projector) > kJointTolerance) {
        throw std::logic_error("joint probability routes disagree: |a_nj|^2 = " + std::to_string(direct) +
                               ", projector expectation = " + std::to_string(via_projector));
    }
    return direct;
}

std::vector<std::vector<double>> exact_joint_table(const BipartiteState& s) {
    const auto g1 = s.basis1().groups();
    const auto g2 = s.basis2().groups();
    std::vector<std::vector<double>> table(g1.size(), std::vector<double>(g2.size(), 0.0));
    for (std::size_t a = 0; a < g1.size(); ++a) {
        for (std::size_t b = 0; b < g2.size(); ++b) {
            for (std::size_t i : g1[a].indices) {
                for (std::size_t j : g2[b].indices) table[a][b] += std::norm(s.amplitudes()(i, j));
            }
        }
    }
    return table;
}

std::vector<std::vector<double>> empirical_joint_table(const Ensemble& e, const BipartiteState& s) {
    std::vector<std::vector<double>> table(s.basis1().groups().size(),
                                           std::vector<double>(s.basis2().groups().size(), 0.0));
    if (e.empty()) return table;
    for (const auto& t : e.trials()) {
        const StageRecord* one = t.stage("ch1");
        const StageRecord* two = t.stage("ch2");
        if (!one || !two) throw Error(ErrorCode::UnknownStage, "trial lacks ch1/ch2 stages");
        table[s.basis1().group_of(one->outcome.indices.front())]
             [s.basis2().group_of(two->outcome.indices.front())] += 1.0;
    }
    for (auto& row : table) {
        for (auto& x : row) x /= static_cast<double>(e.size());
    }
    return table;
}

std::vector<double> channel_marginal(const BipartiteState& s, Channel channel) {
    const auto& basis = channel_basis(s, channel);
    std::vector<double> out;
    for (const auto& g : basis.groups()) {
        double w = 0.0;
        for (std::size_t idx : g.indices) w += line_weight(s.amplitudes(), channel, idx);
        out.push_back(w);
    }
    return out;
}

DualEnsembleReport dual_ensemble_check(const BipartiteState& s) {
    std::vector<std::optional<ConditionalResult>> by_row(s.d1());
    std::vector<std::optional<ConditionalResult>> by_col(s.d2());
    for (std::size_t n = 0; n < s.d1(); ++n) {
        if (line_weight(s.amplitudes(), Channel::One, n) >= kImpossibleProbability) {
            by_row[n] = conditional_state(s, Channel::One, n);
        }
    }
    for (std::size_t j = 0; j < s.d2(); ++j) {
        if (line_weight(s.amplitudes(), Channel::Two, j) >= kImpossibleProbability) {
            by_col[j] = conditional_state(s, Channel::Two, j);
        }
    }

    DualEnsembleReport report{{}, 0.0};
    for (std::size_t n = 0; n < s.d1(); ++n) {
        for (std::size_t j = 0; j < s.d2(); ++j) {
            DualEnsembleCell cell{n, j, joint_probability(s, n, j), 0.0, 0.0};
            if (by_row[n]) {
                cell.route_a = by_row[n]->probability *
                               std::norm(inner(s.basis2().eigenvector(j), by_row[n]->partner_state));
            }
            if (by_col[j]) {
                cell.route_b = by_col[j]->probability *
                               std::norm(inner(s.basis1().eigenvector(n), by_col[j]->partner_state));
            }
            report.max_discrepancy = std::max(
                {report.max_discrepancy, std::abs(cell.route_a - cell.joint), std::abs(cell.route_b - cell.joint)});
            report.cells.push_back(cell);
        }
    }
    return report;
}

const char* to_string(MeasurementOrder order) {
    return order == MeasurementOrder::OneThenTwo ? "1-then-2" : "2-then-1";
}

MeasurementOrder parse_order(std::string_view text) {
    if (text == "1-then-2") return MeasurementOrder::OneThenTwo;
    if (text == "2-then-1") return MeasurementOrder::TwoThenOne;
    throw Error(ErrorCode::InvalidArgument, "order must be \"1-then-2\" or \"2-then-1\"");
}

std::pair<Outcome, BipartiteState> measure_channel(const BipartiteState& s, Channel channel, TrialRng& rng) {
    const auto& basis = channel_basis(s, channel);
    const auto marginal = channel_marginal(s, channel);

    double total = 0.0;
    for (double p : marginal) {
        if (p >= kImpossibleProbability) total += p;
    }
    const double u = rng.uniform() * total;
    std::size_t pick = marginal.size();
    double cum = 0.0;
    for (std::size_t g = 0; g < marginal.size(); ++g) {
        if (marginal[g] < kImpossibleProbability) continue;
        pick = g;
        cum += marginal[g];
        if (u < cum) break;
    }
    const auto& group = basis.groups()[pick];

    ComplexMatrix reduced(s.d1(), s.d2());
    const double scale = 1.0 / std::sqrt(marginal[pick]);
    for (std::size_t idx : group.indices) {
        if (channel == Channel::One) {
            for (std::size_t j = 0; j < s.d2(); ++j) reduced(idx, j) = s.amplitudes()(idx, j) * scale;
        } else {
            for (std::size_t i = 0; i < s.d1(); ++i) reduced(i, idx) = s.amplitudes()(i, idx) * scale;
        }
    }
    BipartiteState next(std::move(reduced), s.basis_ref(Channel::One), s.basis_ref(Channel::Two));
    Outcome outcome{group.eigenvalue, group.indices, marginal[pick], canonical_phase(next.flatten())};
    return {std::move(outcome), std::move(next)};
}

Ensemble simulate_eprb(const BipartiteState& s, MeasurementOrder order, std::size_t n_trials,
                       const RngStream& rng, unsigned threads) {
    if (n_trials < 1) throw Error(ErrorCode::InvalidArgument, "at least one trial is required");
    const Channel first = order == MeasurementOrder::OneThenTwo ? Channel::One : Channel::Two;
    auto trials = run_partitioned(n_trials, threads,
                                  [&](std::uint64_t id) { return eprb_trial(s, first, 0, id, rng); });
    auto labels = labels_of(trials.front());
    return Ensemble(std::move(labels), std::move(trials));
}

Ensemble simulate_chain(const BipartiteState& s, std::size_t steps, std::size_t n_trials, const RngStream& rng,
                        unsigned threads) {
    if (n_trials < 1) throw Error(ErrorCode::InvalidArgument, "at least one trial is required");
    auto trials = run_partitioned(n_trials, threads,
                                  [&](std::uint64_t id) { return eprb_trial(s, Channel::One, steps, id, rng); });
    auto labels = labels_of(trials.front());
    return Ensemble(std::move(labels), std::move(trials));
}

ObservableBasis followup_basis(const StateVector& partner) {
    const StateVector seed[] = {partner};
    auto vectors = complete_basis(seed, partner.dim());
    std::vector<double> values(vectors.size());
    for (std::size_t l = 0; l < values.size(); ++l) values[l] = static_cast<double>(l);
    return ObservableBasis(std::move(vectors), std::move(values));
}

FollowupReport commuting_followup_check(const BipartiteState& s, std::size_t n, const ObservableBasis& contrast) {
    ConditionalResult cond = conditional_state(s, Channel::One, n);
    if (contrast.dim() != s.d2()) {
        throw Error(ErrorCode::DimensionMismatch, "contrast basis does not match channel 2 dimension");
    }
    const ObservableBasis built = followup_basis(cond.partner_state);
    const auto weights = born_distribution(cond.partner_state, built);
    const double deterministic = weights[built.group_of(0)].probability;

    auto contrast_weights = born_distribution(cond.partner_state, contrast);
    double biggest = 0.0;
    for (const auto& w : contrast_weights) biggest = std::max(biggest, w.probability);

    return FollowupReport{std::move(cond), deterministic, std::move(contrast_weights),
                          commutes(built.observable(), contrast.observable()), biggest < 1.0 - kTruthBand};
}

ChainReport logical_chain_check(const BipartiteState& s, std::size_t steps, std::size_t n_trials,
                                const RngStream& rng, unsigned threads) {
    const Ensemble chain = simulate_chain(s, steps, n_trials, rng.fork(1), threads);
    const Ensemble reference = simulate_eprb(s, MeasurementOrder::OneThenTwo, n_trials, rng.fork(2), threads);

    ChainReport r{};
    r.steps = steps;
    r.trials = n_trials;
    for (const auto& t : chain.trials()) {
        const double first = t.stages.front().outcome.eigenvalue;
        bool same = true;
        for (std::size_t k = 0; k <= steps; ++k) {
            same = same && std::abs(t.stages[k].outcome.eigenvalue - first) <= kTolerance;
        }
        if (same) ++r.consistent_trials;
    }
    r.chain_joint = empirical_joint_table(chain, s);
    r.reference_joint = empirical_joint_table(reference, s);
    r.total_variation = total_variation(flat(r.chain_joint), flat(r.reference_joint));
    r.tv_tolerance = two_sample_tv_tolerance(flat(exact_joint_table(s)), n_trials, n_trials);
    return r;
}

bool NoSignalingReport::holds() const {
    for (std::size_t j = 0; j < exact_marginal.size(); ++j) {
        if (std::abs(marginal_primary[j] - marginal_alternative[j]) > tolerance[j]) return false;
    }
    return true;
}

NoSignalingReport no_signaling_check(const BipartiteState& s, const BasisRef& alternative_basis1,
                                     std::size_t n_trials, const RngStream& rng, unsigned threads) {
    const BipartiteState alt = rebase(s, alternative_basis1, s.basis_ref(Channel::Two));
    const Ensemble primary = simulate_eprb(s, MeasurementOrder::OneThenTwo, n_trials, rng.fork(1), threads);
    const Ensemble alternative = simulate_eprb(alt, MeasurementOrder::OneThenTwo, n_trials, rng.fork(2), threads);

    NoSignalingReport r;
    r.exact_marginal = channel_marginal(s, Channel::Two);
    r.marginal_primary = stage_frequencies(primary, "ch2", s.basis2());
    r.marginal_alternative = stage_frequencies(alternative, "ch2", s.basis2());
    const double scale = 2.0 / static_cast<double>(n_trials);
    for (double p : r.exact_marginal) r.tolerance.push_back(4.0 * std::sqrt(std::max(0.0, p * (1.0 - p)) * scale));
    return r;
}

}  // namespace qlogic
