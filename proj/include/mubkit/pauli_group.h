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

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mubkit/matrix.h"

namespace mubkit {

/// w_abc = q^a X^b Z^c, all indices mod d.
struct PauliElement {
    int a = 0;
    int b = 0;
    int c = 0;

    PauliElement reduced(int d) const;
    std::string str() const;
    friend auto operator<=>(const PauliElement &, const PauliElement &) = default;
};

/// The finite Pauli group in dimension d, built from its matrices.
///
/// Products of labels are never computed from a closed-form phase rule: the
/// constructor multiplies the d^3 matrices pairwise and looks each product up,
/// so the Cayley table is whatever the matrices say it is.
class PauliGroup {
   public:
    explicit PauliGroup(int d);

    int dim() const { return d_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<PauliElement> &elements() const { return elements_; }
    const ExactMatrix &matrix(const PauliElement &x) const { return matrices_[index(x)]; }
    const std::vector<ExactMatrix> &matrices() const { return matrices_; }

    /// Position of a label in elements(); a is the slowest index.
    std::size_t index(const PauliElement &x) const;

    PauliElement multiply(const PauliElement &x, const PauliElement &y) const;
    PauliElement inverse(const PauliElement &x) const;

    /// Label of a matrix, if it belongs to the group.
    std::optional<PauliElement> identify(const ExactMatrix &m) const;

    /// table[i][j] = index(elements[i] * elements[j]).
    const std::vector<std::vector<std::uint32_t>> &cayley_table() const { return table_; }

   private:
    std::uint64_t fingerprint(const ExactMatrix &m) const;

    int d_;
    std::vector<PauliElement> elements_;
    std::vector<ExactMatrix> matrices_;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> lookup_;  // sorted by fingerprint
    std::vector<std::vector<std::uint32_t>> table_;
    std::vector<std::uint32_t> inverse_;
};

/// Shared, lazily built group for dimension d (thread-safe).
std::shared_ptr<const PauliGroup> pauli_group(int d);

PauliElement multiply(const PauliElement &x, const PauliElement &y, int d);
PauliElement inverse(const PauliElement &x, int d);
std::vector<PauliElement> enumerate_group(int d);

/// q^a X^b Z^c assembled directly from the Weyl pair.
ExactMatrix pauli_element_matrix(int d, const PauliElement &x);

struct GroupReport {
    std::size_t order = 0;
    bool order_is_d_cubed = false;
    bool injective = false;
    bool closed = false;
    bool has_identity = false;
    bool has_inverses = false;
    bool associative_sampled = false;
    std::size_t associativity_samples = 0;
    /// Size of the matrix group generated by X and Z (closure by search).
    std::size_t generated_order = 0;
    /// True when X and Z generate more matrices than the d^3 labels cover.
    bool generated_exceeds_labels = false;

    bool ok() const {
        return order_is_d_cubed && injective && closed && has_identity && has_inverses && associative_sampled &&
               !generated_exceeds_labels;
    }
};

/// Group axioms checked on matrices. Associativity is sampled on random triples.
GroupReport verify_group(int d, std::size_t associativity_samples, std::uint64_t seed);

/// Order of the matrix group generated by X and Z, by breadth-first closure.
/// Stops once more than `limit` elements are found.
std::size_t generated_group_order(int d, std::size_t limit);

}  // namespace mubkit
