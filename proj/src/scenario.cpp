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

#include "qlogic/scenario.hpp"

#include <algorithm>
#include <cmath>

#include "qlogic/eprb.hpp"
#include "qlogic/error.hpp"
#include "qlogic/logic.hpp"
#include "qlogic/measurement.hpp"

namespace qlogic {

namespace {

constexpr double kIdentityTolerance = 1e-9;

Check within(std::string name, double exact, double empirical, double tol, std::string note = {}) {
    const bool ok = std::abs(empirical - exact) <= tol;
    return Check{std::move(name), exact, empirical, tol, ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(note)};
}

std::string index_set(const std::set<std::size_t>& s) {
    std::string out = "{";
    for (std::size_t l : s) {
        if (out.size() > 1) out += ",";
        out += std::to_string(l);
    }
    return out + "}";
}

std::string cell_name(const char* prefix, std::size_t n, std::size_t j) {
    return std::string(prefix) + "[" + std::to_string(n) + "," + std::to_string(j) + "]";
}

double max_residual(std::span<const Complex> a, std::span<const Complex> b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

void run_theorem1(const Config& c, Report& r) {
    const StateVector psi = config_state_vector(c);
    const BasisRef basis = share(c.bases.at("basis").build());

    const Statement support = support_statement(psi, basis);
    r.notes.push_back("support = " + index_set(support.indices()));

    const double residual = max_residual(apply(support.projector(), psi), psi.amplitudes());
    r.checks.push_back(within("support_identity_residual", 0.0, residual, kIdentityTolerance));

    const TruthValue support_truth = truth_value(support, psi);
    r.checks.push_back(within("support_statement_truth", 1.0, support_truth.expectation, kTruthBand,
                              to_string(support_truth.truth)));

    const Statement all = tautology(basis);
    const TruthValue all_truth = truth_value(all, psi);
    r.checks.push_back(within("tautology_truth", 1.0, all_truth.expectation, kTruthBand, to_string(all_truth.truth)));

    r.checks.push_back(within("support_projector_idempotence", 0.0,
                              max_abs_diff(support.projector() * support.projector(), support.projector()),
                              kTolerance));

    // Dropping any present eigenvector must break the identity.
    for (std::size_t l : support.indices()) {
        std::set<std::size_t> fewer = support.indices();
        fewer.erase(l);
        const Statement smaller(basis, std::move(fewer));
        const double miss = max_residual(apply(smaller.projector(), psi), psi.amplitudes());
        Check chk{"support_minimal[" + std::to_string(l) + "]", 0.0, miss, kSupportEpsilon,
                  miss > kSupportEpsilon ? CheckStatus::Pass : CheckStatus::Fail, "residual must exceed tolerance"};
        r.checks.push_back(std::move(chk));
    }
}

void run_theorem2(const Config& c, Report& r) {
    const StateVector psi = config_state_vector(c);
    const BasisRef basis = share(c.bases.at("basis").build());
    const Statement support = support_statement(psi, basis);
    r.notes.push_back("support = " + index_set(support.indices()));

    // With a single eigenvector in the support the location is definite and
    // the witness must come out false.
    const bool spread = support.indices().size() > 1;
    const bool witness = theorem2_witness(psi, basis);
    r.checks.push_back(within("witness", spread ? 1.0 : 0.0, witness ? 1.0 : 0.0, 0.0,
                              spread ? "" : "support size 1: exact location is definite"));

    for (std::size_t l : support.indices()) {
        const TruthValue tv = truth_value(elementary(basis, l), psi);
        Check chk{"elementary_truth[" + std::to_string(l) + "]", std::numeric_limits<double>::quiet_NaN(),
                  tv.expectation, kTruthBand, CheckStatus::Skipped, to_string(tv.truth)};
        if (spread) chk.status = tv.truth == Truth::Indeterminate ? CheckStatus::Pass : CheckStatus::Fail;
        r.checks.push_back(std::move(chk));
    }

    // psi is an eigenvector of the observable L built around it; the theorem's
    // premise is that L does not commute with K.
    const ObservableBasis l_basis = followup_basis(psi);
    const double comm = max_abs_entry(commutator(basis->observable(), l_basis.observable()));
    Check premise{"premise_noncommuting", std::numeric_limits<double>::quiet_NaN(), comm, kTolerance,
                  comm >= kTolerance ? CheckStatus::Pass : CheckStatus::Skipped, ""};
    if (premise.status == CheckStatus::Skipped) premise.note = "K commutes with L: premise not met";
    r.checks.push_back(std::move(premise));
}

void run_retrodiction(const Config& c, Report& r, unsigned threads) {
    const StateVector psi = config_state_vector(c);
    const BasisRef basis = share(c.bases.at("basis").build());
    const RetrodictionReport rep = retrodiction_check(psi, basis, c.trials, RngStream(c.seed), threads);
    const double n = static_cast<double>(c.trials);

    r.checks.push_back(within("pre_post_agreement", 1.0, static_cast<double>(rep.agreeing_trials) / n, 0.0));
    r.checks.push_back(within("t0_distribution_tv", 0.0, rep.total_variation, rep.tv_tolerance,
                              "single vs double measurement"));
    for (std::size_t g = 0; g < rep.exact_distribution.size(); ++g) {
        const double p = rep.exact_distribution[g];
        r.checks.push_back(within("born[" + format_number(basis->groups()[g].eigenvalue) + "]", p,
                                  rep.single_distribution[g], 4.0 * std::sqrt(p * (1.0 - p) / n)));
    }
    for (const auto& sub : rep.sub_ensembles) {
        const std::string name = "retrodiction[" + format_number(sub.eigenvalue) + "]";
        if (sub.trials == 0) {
            r.checks.push_back(Check{name, 1.0, std::numeric_limits<double>::quiet_NaN(), 0.0, CheckStatus::Skipped,
                                     "empty ensemble"});
            continue;
        }
        r.checks.push_back(within(name, 1.0, static_cast<double>(sub.pre_matches) / static_cast<double>(sub.trials),
                                  0.0, std::to_string(sub.trials) + " selected trials"));
    }
}

void run_eprb(const Config& c, Report& r, unsigned threads) {
    const BipartiteState s = config_bipartite(c);
    const RngStream rng(c.seed);
    const double n = static_cast<double>(c.trials);
    const MeasurementOrder flipped =
        c.order == MeasurementOrder::OneThenTwo ? MeasurementOrder::TwoThenOne : MeasurementOrder::OneThenTwo;

    const Ensemble main_run = simulate_eprb(s, c.order, c.trials, rng.fork(1), threads);
    const Ensemble flip_run = simulate_eprb(s, flipped, c.trials, rng.fork(2), threads);
    r.notes.push_back(std::string("order = ") + to_string(c.order) + ", flipped = " + to_string(flipped));

    const auto exact = exact_joint_table(s);
    const auto empirical = empirical_joint_table(main_run, s);
    const auto flip_empirical = empirical_joint_table(flip_run, s);
    std::vector<double> exact_flat, main_flat, flip_flat;
    for (std::size_t a = 0; a < exact.size(); ++a) {
        for (std::size_t b = 0; b < exact[a].size(); ++b) {
            const double w = exact[a][b];
            const double se = std::sqrt(w * (1.0 - w) / n);
            r.checks.push_back(within(cell_name("joint", a, b), w, empirical[a][b], 4.0 * se));
            r.cells.push_back({a, b, w, empirical[a][b], se});
            exact_flat.push_back(w);
            main_flat.push_back(empirical[a][b]);
            flip_flat.push_back(flip_empirical[a][b]);
        }
    }
    r.checks.push_back(within("order_flip_tv", 0.0, total_variation(main_flat, flip_flat),
                              two_sample_tv_tolerance(exact_flat, c.trials, c.trials)));

    // Follow-up on each possible partner state in a basis that contains it.
    for (std::size_t idx = 0; idx < s.d1(); ++idx) {
        double w = 0.0;
        for (std::size_t j = 0; j < s.d2(); ++j) w += std::norm(s.amplitudes()(idx, j));
        if (w < kImpossibleProbability) continue;
        const FollowupReport f = commuting_followup_check(s, idx, s.basis2());
        r.checks.push_back(within("followup_deterministic[" + std::to_string(idx) + "]", 1.0,
                                  f.deterministic_probability, kJointTolerance));
    }

    if (c.bases.contains("basis1_alt")) {
        const NoSignalingReport ns =
            no_signaling_check(s, share(c.bases.at("basis1_alt").build()), c.trials, rng.fork(3), threads);
        for (std::size_t g = 0; g < ns.exact_marginal.size(); ++g) {
            r.checks.push_back(within("no_signaling[" + std::to_string(g) + "]", 0.0,
                                      ns.marginal_alternative[g] - ns.marginal_primary[g], ns.tolerance[g],
                                      "channel-2 marginal difference; exact " +
                                          format_number(ns.exact_marginal[g])));
        }
    }
}

void run_dual_ensemble(const Config& c, Report& r) {
    const BipartiteState s = config_bipartite(c);
    const DualEnsembleReport rep = dual_ensemble_check(s);
    for (const auto& cell : rep.cells) {
        r.checks.push_back(within(cell_name("route_a", cell.n, cell.j), cell.joint, cell.route_a, kJointTolerance));
        r.checks.push_back(within(cell_name("route_b", cell.n, cell.j), cell.joint, cell.route_b, kJointTolerance));
        r.cells.push_back({cell.n, cell.j, cell.joint, cell.joint, 0.0});
    }
    r.checks.push_back(within("max_discrepancy", 0.0, rep.max_discrepancy, kJointTolerance));
}

void run_chain(const Config& c, Report& r, unsigned threads) {
    const BipartiteState s = config_bipartite(c);
    const ChainReport rep = logical_chain_check(s, c.steps, c.trials, RngStream(c.seed), threads);
    r.notes.push_back("steps = " + std::to_string(c.steps));
    r.checks.push_back(within("channel1_constancy", 1.0,
                              static_cast<double>(rep.consistent_trials) / static_cast<double>(rep.trials), 0.0));
    r.checks.push_back(within("chain_vs_single_tv", 0.0, rep.total_variation, rep.tv_tolerance));
    const auto exact = exact_joint_table(s);
    const double n = static_cast<double>(c.trials);
    for (std::size_t a = 0; a < exact.size(); ++a) {
        for (std::size_t b = 0; b < exact[a].size(); ++b) {
            const double w = exact[a][b];
            r.cells.push_back({a, b, w, rep.chain_joint[a][b], std::sqrt(w * (1.0 - w) / n)});
        }
    }
}

}  // namespace

Report run_scenario(const Config& c, unsigned threads) {
    Report r;
    r.scenario = to_string(c.scenario);
    r.digest = config_digest(c);
    r.seed = c.seed;
    r.trials = c.trials;
    try {
        switch (c.scenario) {
            case Scenario::Theorem1: run_theorem1(c, r); break;
            case Scenario::Theorem2: run_theorem2(c, r); break;
            case Scenario::Retrodiction: run_retrodiction(c, r, threads); break;
            case Scenario::Eprb: run_eprb(c, r, threads); break;
            case Scenario::DualEnsemble: run_dual_ensemble(c, r); break;
            case Scenario::Chain: run_chain(c, r, threads); break;
        }
    } catch (const Error& e) {
        throw Error(e.code(), r.scenario + ": " + e.what());
    }
    return r;
}

}  // namespace qlogic
