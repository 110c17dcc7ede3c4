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

#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "qlogic/error.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace qlogic;
using namespace qlogic::testing;

namespace {

template <typename F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected qlogic::Error";
    return ErrorCode::InvalidArgument;
}

std::vector<PlanStage> single_stage(const BasisRef& b, const char* label = "t0") {
    return {PlanStage{label, "K", b}};
}

}  // namespace

TEST(BornDistribution, MatchesOracleAndSumsToOne) {
    Rng rng(31);
    for (int t = 0; t < 200; ++t) {
        const std::size_t d = random_dim(rng, 1, 8);
        const ObservableBasis b = random_basis(rng, d, t % 2 == 1);
        const StateVector psi = random_state(rng, d);
        const auto dist = born_distribution(psi, b);
        ASSERT_EQ(dist.size(), b.groups().size());
        double total = 0.0;
        for (const auto& w : dist) {
            const std::set<std::size_t> idx(w.indices.begin(), w.indices.end());
            EXPECT_NEAR(w.probability, oracle::born(vectors_of(b), idx, amplitudes_of(psi)), 1e-12);
            total += w.probability;
        }
        EXPECT_NEAR(total, 1.0, 1e-12);
    }
}

TEST(Measure, EigenstateIsUndisturbed) {
    Rng rng(32);
    for (int t = 0; t < 50; ++t) {
        const std::size_t d = random_dim(rng, 1, 6);
        const ObservableBasis b = random_basis(rng, d);
        const std::size_t l = t % d;
        const StateVector eig = canonical_phase(b.eigenvector(l));
        TrialRng trng(static_cast<std::uint64_t>(t));
        const Outcome o = measure(eig, b, trng);
        EXPECT_EQ(o.eigenvalue, b.eigenvalue(l));
        EXPECT_NEAR(o.probability, 1.0, 1e-12);
        for (std::size_t i = 0; i < d; ++i) EXPECT_LE(std::abs(o.posterior[i] - eig[i]), 1e-12);
    }
}

TEST(Measure, FrequenciesWithinFourSigma) {
    const StateVector psi({std::sqrt(0.5), Complex(0.0, std::sqrt(0.3)), std::sqrt(0.2)});
    const ObservableBasis b = computational_basis(3);
    const std::size_t n = 20000;
    std::vector<std::size_t> counts(3);
    const RngStream stream(99);
    for (std::size_t t = 0; t < n; ++t) {
        TrialRng trng = stream.trial(t);
        counts[static_cast<std::size_t>(measure(psi, b, trng).eigenvalue)]++;
    }
    const double p[] = {0.5, 0.3, 0.2};
    for (std::size_t l = 0; l < 3; ++l) {
        EXPECT_NEAR(static_cast<double>(counts[l]) / n, p[l], 4.0 * std::sqrt(p[l] * (1 - p[l]) / n)) << l;
    }
}

TEST(Measure, ImpossibleOutcomeNeverSampled) {
    const StateVector psi({1.0, 0.0});
    const ObservableBasis b = computational_basis(2);
    const RngStream stream(5);
    for (std::size_t t = 0; t < 2000; ++t) {
        TrialRng trng = stream.trial(t);
        EXPECT_EQ(measure(psi, b, trng).eigenvalue, 0.0);
    }
}

TEST(Measure, DegeneratePosteriorIsEigenspaceProjection) {
    const ObservableBasis b({StateVector::basis_state(3, 0), StateVector::basis_state(3, 1),
                             StateVector::basis_state(3, 2)},
                            {1.0, 1.0, 0.0});
    const StateVector psi({0.6, Complex(0, 0.48), 0.64});
    const RngStream stream(6);
    for (std::size_t t = 0; t < 200; ++t) {
        TrialRng trng = stream.trial(t);
        const Outcome o = measure(psi, b, trng);
        if (o.eigenvalue != 1.0) continue;
        EXPECT_NEAR(o.probability, 0.36 + 0.2304, 1e-12);
        const double s = 1.0 / std::sqrt(0.36 + 0.2304);
        EXPECT_LE(std::abs(o.posterior[0] - Complex(0.6 * s)), 1e-12);
        EXPECT_LE(std::abs(o.posterior[1] - Complex(0, 0.48 * s)), 1e-12);
        EXPECT_EQ(o.posterior[2], Complex(0.0));
    }
}

TEST(RunTrials, RepeatedMeasurementIsRepeatable) {
    Rng rng(33);
    for (int t = 0; t < 20; ++t) {
        const std::size_t d = random_dim(rng, 2, 6);
        const BasisRef b = share(random_basis(rng, d, t % 2 == 0));
        const StateVector psi = random_state(rng, d);
        const std::vector<PlanStage> plan{{"a", "K", b}, {"b", "K", b}, {"c", "K", b}};
        const Ensemble e = run_trials(psi, plan, 500, RngStream(static_cast<std::uint64_t>(t)));
        for (const auto& tr : e.trials()) {
            EXPECT_EQ(tr.stage("a")->outcome.eigenvalue, tr.stage("b")->outcome.eigenvalue);
            EXPECT_EQ(tr.stage("b")->outcome.eigenvalue, tr.stage("c")->outcome.eigenvalue);
        }
    }
}

TEST(RunTrials, SeedDeterminismAndThreadIndependence) {
    Rng rng(34);
    const BasisRef k = share(random_basis(rng, 4));
    const BasisRef l = share(random_basis(rng, 4, true));
    const StateVector psi = random_state(rng, 4);
    const std::vector<PlanStage> plan{{"k", "K", k}, {"l", "L", l}, {"k2", "K", k}};
    const std::string one = serialize(run_trials(psi, plan, 3000, RngStream(7), 1));
    EXPECT_EQ(one, serialize(run_trials(psi, plan, 3000, RngStream(7), 1)));
    EXPECT_EQ(one, serialize(run_trials(psi, plan, 3000, RngStream(7), 4)));
    EXPECT_EQ(one, serialize(run_trials(psi, plan, 3000, RngStream(7), 13)));
    EXPECT_NE(one, serialize(run_trials(psi, plan, 3000, RngStream(8), 1)));
    EXPECT_NE(one, serialize(run_trials(psi, plan, 3000, RngStream(7).fork(1), 1)));
}

TEST(RunTrials, RejectsBadPlans) {
    const BasisRef b = share(computational_basis(2));
    const StateVector psi = StateVector::basis_state(2, 0);
    const std::vector<PlanStage> dup{{"x", "K", b}, {"x", "K", b}};
    EXPECT_EQ(code_of([&] { run_trials(psi, dup, 1, RngStream(1)); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([&] { run_trials(psi, {}, 1, RngStream(1)); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([&] { run_trials(psi, single_stage(b), 0, RngStream(1)); }), ErrorCode::InvalidArgument);
    const BasisRef wrong = share(computational_basis(3));
    EXPECT_EQ(code_of([&] { run_trials(psi, single_stage(wrong), 1, RngStream(1)); }),
              ErrorCode::DimensionMismatch);
}

TEST(Select, FiltersAndIsIdempotent) {
    const BasisRef b = share(computational_basis(2));
    const StateVector psi({std::sqrt(0.5), std::sqrt(0.5)});
    const Ensemble e = run_trials(psi, single_stage(b), 1000, RngStream(3));
    const Ensemble up = select(e, "t0", 0.0);
    const Ensemble down = select(e, "t0", 1.0);
    EXPECT_EQ(up.size() + down.size(), e.size());
    for (const auto& t : up.trials()) EXPECT_EQ(t.stage("t0")->outcome.eigenvalue, 0.0);
    const Ensemble again = select(up, "t0", 0.0);
    EXPECT_EQ(serialize(again), serialize(up));
    EXPECT_EQ(again.selectors().size(), 1u);
    EXPECT_EQ(up.selector_description(), "t0=0");
    EXPECT_EQ(e.selector_description(), "all");
    EXPECT_TRUE(select(up, "t0", 1.0).empty());
    EXPECT_EQ(code_of([&] { select(e, "nope", 0.0); }), ErrorCode::UnknownStage);
}

TEST(Serialize, RoundTrip) {
    Rng rng(35);
    const BasisRef k = share(ObservableBasis(
        {StateVector::basis_state(3, 0), StateVector::basis_state(3, 1), StateVector::basis_state(3, 2)},
        {0.1, -2.5e-7, 1.0 / 3.0}));
    const StateVector psi = random_state(rng, 3);
    const std::vector<PlanStage> plan{{"pre", "K", k}, {"post", "K", k}};
    const Ensemble e = run_trials(psi, plan, 200, RngStream(4));
    const std::string text = serialize(e);
    const auto parsed = parse_serialized(text);
    ASSERT_EQ(parsed.size(), e.size());
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        const auto& tr = e.trials()[i];
        EXPECT_EQ(parsed[i].trial_id, tr.trial_id);
        ASSERT_EQ(parsed[i].stages.size(), tr.stages.size());
        for (std::size_t s = 0; s < tr.stages.size(); ++s) {
            EXPECT_EQ(parsed[i].stages[s].first, tr.stages[s].label);
            EXPECT_EQ(parsed[i].stages[s].second, tr.stages[s].outcome.eigenvalue);  // bit-exact
        }
    }
    EXPECT_EQ(text.substr(0, text.find('\n')).find("0, pre="), 0u);
}

TEST(Serialize, ParseErrors) {
    EXPECT_EQ(code_of([] { parse_serialized("x, a=1\n"); }), ErrorCode::Syntax);
    EXPECT_EQ(code_of([] { parse_serialized("0, a\n"); }), ErrorCode::Syntax);
    EXPECT_EQ(code_of([] { parse_serialized("0, a=one\n"); }), ErrorCode::Syntax);
    EXPECT_EQ(code_of([] { parse_serialized("0\n"); }), ErrorCode::Syntax);
    EXPECT_TRUE(parse_serialized("\n\n").empty());
}

TEST(TotalVariation, Basics) {
    const std::vector<double> p{0.5, 0.5}, q{0.2, 0.8};
    EXPECT_NEAR(total_variation(p, q), 0.3, 1e-15);
    EXPECT_EQ(total_variation(p, p), 0.0);
    const std::vector<double> r{1.0};
    EXPECT_EQ(code_of([&] { total_variation(p, r); }), ErrorCode::DimensionMismatch);
    EXPECT_NEAR(two_sample_tv_tolerance(p, 100, 100), 0.5 * 2 * 4 * std::sqrt(0.25 * 0.02), 1e-15);
}

TEST(Retrodiction, HoldsForTwoLevelState) {
    const StateVector psi({std::sqrt(0.8), std::sqrt(0.2)});
    const BasisRef b = share(computational_basis(2));
    const RetrodictionReport r = retrodiction_check(psi, b, 20000, RngStream(42));
    EXPECT_TRUE(r.repeatability_holds());
    EXPECT_TRUE(r.statistics_agree()) << r.total_variation << " vs " << r.tv_tolerance;
    EXPECT_TRUE(r.retrodiction_holds());
    ASSERT_EQ(r.sub_ensembles.size(), 2u);
    EXPECT_EQ(r.sub_ensembles[0].trials + r.sub_ensembles[1].trials, 20000u);
    EXPECT_NEAR(r.exact_distribution[0], 0.8, 1e-12);
}

TEST(Retrodiction, EigenstateLeavesEmptyEnsemble) {
    const BasisRef b = share(computational_basis(2));
    const RetrodictionReport r = retrodiction_check(StateVector::basis_state(2, 1), b, 500, RngStream(1));
    EXPECT_TRUE(r.repeatability_holds());
    EXPECT_TRUE(r.statistics_agree());
    EXPECT_TRUE(r.retrodiction_holds());
    EXPECT_EQ(r.total_variation, 0.0);
    std::map<double, std::size_t> sizes;
    for (const auto& s : r.sub_ensembles) sizes[s.eigenvalue] = s.trials;
    EXPECT_EQ(sizes[0.0], 0u);
    EXPECT_EQ(sizes[1.0], 500u);
}

TEST(RunPartitioned, PropagatesWorkerExceptions) {
    EXPECT_THROW(run_partitioned(100, 4,
                                 [](std::uint64_t id) -> TrialRecord {
                                     if (id == 57) throw Error(ErrorCode::InvalidArgument, "boom");
                                     return TrialRecord{id, {}};
                                 }),
                 Error);
}
