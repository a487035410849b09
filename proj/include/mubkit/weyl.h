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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mubkit/cyclo.h"
#include "mubkit/matrix.h"
#include "mubkit/rational.h"

namespace mubkit {

/// The real parameter r of V(r,a). Exact constructions accept only the
/// rational alternative; a floating value must go through approximate mode.
using RealParameter = std::variant<Rational, double>;

std::string to_string(const RealParameter &r);
double to_double(const RealParameter &r);

struct OperatorParams {
    int d = 1;
    RealParameter r = Rational(0);
    int a = 0;
};

/// (a, b) naming u_ab = X^a Z^b.
struct PauliLabel {
    int a = 0;
    int b = 0;

    PauliLabel reduced(int d) const;
    friend auto operator<=>(const PauliLabel &, const PauliLabel &) = default;
};

/// Nonnegative remainder of value modulo d.
int reduce_mod(long long value, int d);
bool is_prime(int n);

/// Matrix of v_ra on |0>..|d-1>: entry q^(k a) at (k-1, k) and exp(2 pi i j r)
/// at (d-1, 0), with q = exp(2 pi i / d) and j = (d-1)/2.
/// Throws ModeError if r is floating, std::invalid_argument if d < 1.
ExactMatrix build_v_matrix(const OperatorParams &params);
ApproxMatrix build_v_matrix_approx(const OperatorParams &params);

struct WeylPair {
    ExactMatrix x;  // cyclic shift, x|k> = |k-1>
    ExactMatrix z;  // clock, z|k> = q^k |k>
};

/// X = V(0,0) and Z = V(0,0)^dagger V(0,1).
WeylPair weyl_pair(int d);

/// u_ab = X^a Z^b with the label reduced mod d.
ExactMatrix generalized_pauli(int d, PauliLabel label);

/// Tr(u^dagger v).
CycloScalar trace_inner_product(const ExactMatrix &u, const ExactMatrix &v);

enum class Bracket { commutator, anticommutator };

/// [u, v] or {u, v}.
ExactMatrix bracket(const ExactMatrix &u, const ExactMatrix &v, Bracket kind);

struct StructureConstant {
    CycloScalar coefficient;
    PauliLabel result;
};

/// [u_ab, u_a'b']_(-/+) = (q^(-b a') -/+ q^(-a b')) u_(a+a', b+b'), labels mod d.
StructureConstant structure_constants(int d, PauliLabel l, PauliLabel lp, Bracket kind);

/// Checks the closed form above against explicit matrix arithmetic.
bool structure_constants_hold(int d, PauliLabel l, PauliLabel lp, Bracket kind);

using CommutingClass = std::vector<PauliLabel>;

struct PartitionReport {
    bool disjoint = false;
    bool complete = false;
    bool sizes_ok = false;
    bool internally_commuting = false;
    bool cross_noncommuting = false;
    std::size_t internal_pairs = 0;
    std::size_t cross_pairs = 0;

    bool ok() const { return disjoint && complete && sizes_ok && internally_commuting && cross_noncommuting; }
};

/// Splits the d^2 - 1 non-identity labels into d + 1 classes of d - 1 mutually
/// commuting operators: {(t, lambda t)} for each slope lambda, then {(0, t)}.
/// Throws UnsupportedDimensionError unless d is prime. The result is checked
/// with matrix commutators before it is returned.
std::vector<CommutingClass> partition_commuting_classes(int d);

/// Matrix-level audit of a proposed partition.
PartitionReport verify_commuting_partition(int d, const std::vector<CommutingClass> &classes);

/// {aa, (ab + ba)/sqrt2, bb, (ab - ba)/sqrt2} in the ordering aa, ab, ba, bb.
std::vector<std::vector<CycloScalar>> coupled_spin_basis();

/// Exchanges the two qubit factors of a 4-dimensional vector.
ExactMatrix swap_matrix();

/// +1 or -1 if v is symmetric or antisymmetric under the factor swap.
std::optional<int> swap_eigenvalue(const std::vector<CycloScalar> &v);

}  // namespace mubkit
