// Copyright 2026 The mubkit Authors
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
#include <string>
#include <vector>

#include "mubkit/cyclo.h"

namespace mubkit {

enum class Mode { exact, approx };

std::string to_string(Mode mode);
/// "exact" or "approx"; throws std::invalid_argument otherwise.
Mode parse_mode(const std::string &text);

struct VerifyConfig {
    int d_max = 7;
    Mode mode = Mode::exact;
    /// Absolute tolerance for approximate checks.
    double tolerance = 1e-10;
    std::uint64_t seed = 1;
    /// Random cases for the scalar ring-axiom sweep.
    std::size_t scalar_samples = 2000;
    /// Random triples for the sampled associativity check.
    std::size_t associativity_samples = 10000;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::size_t cases = 0;
    std::string detail;
};

/// Every invariant of the library, each swept up to d_max (or the smaller
/// range it is stated for). Results come back in a fixed order.
std::vector<CheckResult> run_verification(const VerifyConfig &config);

bool all_passed(const std::vector<CheckResult> &results);

/// Fixed-width summary table, one row per check.
std::string format_summary(const std::vector<CheckResult> &results);

/// Random scalar with small order, a few terms and an optional radical.
CycloScalar random_scalar(std::mt19937_64 &rng);

}  // namespace mubkit
