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

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mubkit/cyclo.h"
#include "mubkit/matrix.h"
#include "mubkit/weyl.h"

namespace mubkit {

enum class VectorKind { computational, eigen, tensor, combined, orbital, coupled };

std::string to_string(VectorKind kind);

struct VectorLabel {
    VectorKind kind = VectorKind::computational;
    int a = 0;
    int alpha = 0;
    /// (b, beta) of the second factor for tensor and combined vectors.
    std::optional<std::pair<int, int>> extra;
    /// Human-readable origin, e.g. "lambda|0100> + mu|0111>".
    std::string note;
};

template <class S>
struct BasisVectorT {
    int dim = 0;
    std::vector<S> amps;
    VectorLabel label;
};

template <class S>
struct BasisT {
    int dim = 0;
    std::vector<BasisVectorT<S>> vectors;
    std::string tag;
    /// Names of the coordinates |0>..|dim-1>; empty means plain indices.
    std::vector<std::string> site_labels;
    std::map<std::string, std::string> metadata;
};

using BasisVector = BasisVectorT<CycloScalar>;
using Basis = BasisT<CycloScalar>;
using ApproxBasisVector = BasisVectorT<ApproxScalar>;
using ApproxBasis = BasisT<ApproxScalar>;

struct PairCertificate {
    std::size_t first = 0;
    std::size_t second = 0;
    bool passed = false;
    /// Distinct |<u|v>|^2 values seen between the two bases, in first-seen order.
    std::vector<CycloScalar> magnitudes_squared;
};

struct CertificateReport {
    bool passed = false;
    std::vector<PairCertificate> pairs;
};

struct MubSet {
    int dim = 0;
    std::vector<Basis> bases;
    CertificateReport certificate;
    bool certified = false;
    std::string diagnostic;
};

/// |0>, ..., |d-1>.
Basis computational_basis(int d);

/// Eigenvectors |a alpha> of V(r,a), alpha ascending. For r = 0 the amplitude on
/// |k> is q^((d-k-1)(k+1)a/2 - (k+1)alpha) / sqrt(d); for general rational r the
/// angular-momentum form with m = j - k is used. Throws ModeError for floating r.
Basis eigenbasis(int d, int a, const RealParameter &r = Rational(0));
ApproxBasis eigenbasis_approx(int d, int a, const RealParameter &r = Rational(0));

/// q^(j(a + r) - alpha), the eigenvalue of V(r,a) on |a alpha>.
CycloScalar eigenvalue(int d, int a, int alpha, const Rational &r = Rational(0));

/// Computational basis followed by B_0a for a = 0..d-1, certified exhaustively.
/// For non-prime d the family is still built and checked, but returned with
/// certified == false and a diagnostic.
MubSet mub_set_prime(int d);

/// The five mutually unbiased bases of two qubits: canonical, w_00, w_11, w_01, w_10.
MubSet mub_set_dim4();

/// v_0a (x) v_0b on two qubits.
ExactMatrix w_operator(int a, int b);

/// <u|v>.
CycloScalar overlap(const BasisVector &u, const BasisVector &v);
CycloScalar overlap_magnitude_squared(const BasisVector &u, const BasisVector &v);

/// Within-basis Gram must be the identity; across bases every |<u|v>|^2 must be 1/dim.
CertificateReport certify(const MubSet &set);
CertificateReport certify(int dim, const std::vector<Basis> &bases);

struct ProductTest {
    bool product = false;
    /// (s, t) with s (x) t == v, when product.
    std::optional<std::pair<std::vector<CycloScalar>, std::vector<CycloScalar>>> factors;
};

/// Exact test for v = s (x) t on two qubits (zero determinant of the 2x2 reshape).
ProductTest is_product_vector(const BasisVector &v);

/// lambda with M v == lambda v, if v is a nonzero eigenvector of M.
std::optional<CycloScalar> eigenvalue_of(const ExactMatrix &m, const std::vector<CycloScalar> &v);

ApproxBasis to_approx(const Basis &basis);

}  // namespace mubkit
