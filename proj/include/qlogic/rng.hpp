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

#pragma once

#include <cstdint>
#include <random>

namespace qlogic {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Random source for one trial. Uniform draws are built from the top 53 bits
/// of mt19937_64 so sequences are identical on every standard library.
class TrialRng {
public:
    explicit TrialRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

/// A seeded family of independent per-trial substreams. fork() yields a
/// disjoint family for a separate experiment under the same seed.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0) : seed_(seed), stream_(stream) {}

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream() const noexcept { return stream_; }

    RngStream fork(std::uint64_t tag) const {
        return RngStream(seed_, splitmix64(stream_ ^ splitmix64(tag + 0x5851f42d4c957f2dULL)));
    }

    TrialRng trial(std::uint64_t trial_id) const {
        return TrialRng(splitmix64(splitmix64(splitmix64(seed_) ^ stream_) ^ trial_id));
    }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
};

}  // namespace qlogic
