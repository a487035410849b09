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

#include "mubkit/cyclic.h"

#include <cmath>
#include <stdexcept>

namespace mubkit {

namespace {

void check_ring(const RingSpec &ring) {
    if (ring.sites < 1) throw std::invalid_argument("a ring needs at least one site");
    if (!ring.site_labels.empty() && ring.site_labels.size() != static_cast<std::size_t>(ring.sites)) {
        throw std::invalid_argument("expected " + std::to_string(ring.sites) + " site labels, got " +
                                    std::to_string(ring.site_labels.size()));
    }
}

template <class S>
BasisT<S> ring_skeleton(const RingSpec &ring) {
    BasisT<S> basis;
    basis.dim = ring.sites;
    basis.tag = "kappa_N" + std::to_string(ring.sites);
    basis.site_labels = ring.site_labels;
    basis.metadata["system"] = "ring";
    basis.metadata["sites"] = std::to_string(ring.sites);
    return basis;
}

}  // namespace

Basis molecular_orbitals(const RingSpec &ring) {
    check_ring(ring);
    const int n_sites = ring.sites;
    Basis basis = ring_skeleton<CycloScalar>(ring);
    const CycloScalar norm = CycloScalar::inv_sqrt(static_cast<std::uint32_t>(n_sites));
    for (int s = 0; s < n_sites; ++s) {
        BasisVector v;
        v.dim = n_sites;
        v.label.kind = VectorKind::orbital;
        v.label.alpha = s;
        v.label.note = "kappa_" + std::to_string(s);
        for (int n = 0; n < n_sites; ++n) {
            v.amps.push_back(norm * root_of_unity(static_cast<std::uint32_t>(n_sites), static_cast<std::int64_t>(n) * s));
        }
        basis.vectors.push_back(std::move(v));
    }
    return basis;
}

ApproxBasis molecular_orbitals_approx(const RingSpec &ring) {
    check_ring(ring);
    const int n_sites = ring.sites;
    ApproxBasis basis = ring_skeleton<ApproxScalar>(ring);
    const double norm = 1.0 / std::sqrt(static_cast<double>(n_sites));
    for (int s = 0; s < n_sites; ++s) {
        ApproxBasisVector v;
        v.dim = n_sites;
        v.label.kind = VectorKind::orbital;
        v.label.alpha = s;
        v.label.note = "kappa_" + std::to_string(s);
        for (int n = 0; n < n_sites; ++n) {
            v.amps.push_back(norm * unit_root(static_cast<std::int64_t>(n) * s, static_cast<std::uint32_t>(n_sites)));
        }
        basis.vectors.push_back(std::move(v));
    }
    return basis;
}

Basis spin_wave_basis(int sites) {
    RingSpec ring;
    ring.sites = sites;
    for (int n = 0; n < sites; ++n) ring.site_labels.push_back("spin" + std::to_string(n));
    Basis basis = molecular_orbitals(ring);
    basis.tag = "spin_wave_N" + std::to_string(sites);
    basis.metadata["system"] = "spin chain";
    basis.metadata["boundary"] = "periodic";
    return basis;
}

std::optional<CycloScalar> proportionality(const std::vector<CycloScalar> &u, const std::vector<CycloScalar> &v) {
    if (u.size() != v.size()) return std::nullopt;
    std::optional<CycloScalar> c;
    for (std::size_t k = 0; k < u.size(); ++k) {
        if (v[k].is_zero()) {
            if (!u[k].is_zero()) return std::nullopt;
            continue;
        }
        if (!c) c = u[k] / v[k];
        if (!(u[k] == *c * v[k])) return std::nullopt;
    }
    return c;
}

RingMatchReport match_to_eigenbasis(const Basis &ring_basis) {
    const Basis reference = eigenbasis(ring_basis.dim, 0);
    RingMatchReport report;
    report.all_matched = true;
    std::vector<int> hits(reference.vectors.size(), 0);
    for (std::size_t s = 0; s < ring_basis.vectors.size(); ++s) {
        bool found = false;
        for (std::size_t alpha = 0; alpha < reference.vectors.size() && !found; ++alpha) {
            auto c = proportionality(ring_basis.vectors[s].amps, reference.vectors[alpha].amps);
            if (!c) continue;
            if (!(abs_squared(*c) == CycloScalar(1))) continue;
            report.matches.push_back({static_cast<int>(s), static_cast<int>(alpha), c->simplified()});
            ++hits[alpha];
            found = true;
        }
        if (!found) report.all_matched = false;
    }
    report.bijective = report.all_matched && ring_basis.vectors.size() == reference.vectors.size();
    for (int h : hits) {
        if (h != 1) report.bijective = false;
    }
    return report;
}

}  // namespace mubkit
