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

#include "mubkit/matrix.h"

#include <algorithm>

namespace mubkit {

std::string MatrixLabel::str() const {
    switch (kind) {
        case Kind::v_operator: return "V(r=" + r + ",a=" + std::to_string(a) + ")";
        case Kind::shift: return "X";
        case Kind::clock: return "Z";
        case Kind::pauli: return "U(" + std::to_string(a) + "," + std::to_string(b) + ")";
        case Kind::product: return text.empty() ? "product" : text;
        case Kind::other: break;
    }
    return text.empty() ? "other" : text;
}

ApproxMatrix to_approx(const ExactMatrix &m) {
    ApproxMatrix out(m.dim(), m.label());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = m(i, j).to_approx();
    }
    return out;
}

std::vector<ApproxScalar> to_approx(const std::vector<CycloScalar> &v) {
    std::vector<ApproxScalar> out;
    out.reserve(v.size());
    for (const auto &x : v) out.push_back(x.to_approx());
    return out;
}

bool is_unitary(const ExactMatrix &m) {
    return m * m.adjoint() == ExactMatrix::identity(m.dim());
}

bool is_unitary(const ApproxMatrix &m, double tolerance) {
    return max_abs_difference(m * m.adjoint(), ApproxMatrix::identity(m.dim())) <= tolerance;
}

double max_abs_difference(const ApproxMatrix &a, const ApproxMatrix &b) {
    if (a.dim() != b.dim()) throw DimensionMismatchError("matrix dimensions differ");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

double max_abs_difference(const std::vector<ApproxScalar> &a, const std::vector<ApproxScalar> &b) {
    if (a.size() != b.size()) throw DimensionMismatchError("vector dimensions differ");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace mubkit
