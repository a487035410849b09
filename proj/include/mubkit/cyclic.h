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

#include <optional>
#include <string>
#include <vector>

#include "mubkit/mub.h"

namespace mubkit {

/// A ring of N equivalent sites (atoms of a cyclic molecule, spins of a closed chain).
struct RingSpec {
    int sites = 1;
    /// Optional names for the sites; when given there must be exactly `sites` of them.
    std::vector<std::string> site_labels;
};

/// |kappa_s> = N^(-1/2) sum_n exp(2 pi i n s / N) |phi_n>, s = 0..N-1.
Basis molecular_orbitals(const RingSpec &ring);
ApproxBasis molecular_orbitals_approx(const RingSpec &ring);

/// Same vectors over spin sites, tagged as spin waves.
Basis spin_wave_basis(int sites);

struct PhaseMatch {
    int s = 0;
    int alpha = 0;
    /// c with |kappa_s> = c |0 alpha>.
    CycloScalar phase;
};

struct RingMatchReport {
    std::vector<PhaseMatch> matches;
    /// Every vector matched some eigenvector with a unit-modulus factor.
    bool all_matched = false;
    /// s -> alpha is one-to-one and onto.
    bool bijective = false;
};

/// Matches each vector of `ring_basis` to a vector of eigenbasis(N, 0), up to a phase.
RingMatchReport match_to_eigenbasis(const Basis &ring_basis);

/// c with u == c v when u is a scalar multiple of v.
std::optional<CycloScalar> proportionality(const std::vector<CycloScalar> &u, const std::vector<CycloScalar> &v);

}  // namespace mubkit
