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

#include "mubkit/weyl.h"

#include <numbers>
#include <set>
#include <sstream>

#include "mubkit/errors.h"

namespace mubkit {

namespace {

void require_dim(int d) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1, got " + std::to_string(d));
}

std::vector<ExactMatrix> pauli_table(int d, const std::vector<PauliLabel> &labels) {
    std::vector<ExactMatrix> out;
    out.reserve(labels.size());
    for (const auto &l : labels) out.push_back(generalized_pauli(d, l));
    return out;
}

}  // namespace

std::string to_string(const RealParameter &r) {
    if (const auto *q = std::get_if<Rational>(&r)) return q->str();
    std::ostringstream out;
    out.precision(17);
    out << std::get<double>(r);
    return out.str();
}

double to_double(const RealParameter &r) {
    if (const auto *q = std::get_if<Rational>(&r)) return q->to_double();
    return std::get<double>(r);
}

PauliLabel PauliLabel::reduced(int d) const {
    return {reduce_mod(a, d), reduce_mod(b, d)};
}

int reduce_mod(long long value, int d) {
    if (d < 1) throw std::invalid_argument("modulus must be >= 1");
    long long r = value % d;
    return static_cast<int>(r < 0 ? r + d : r);
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) return false;
    }
    return true;
}

ExactMatrix build_v_matrix(const OperatorParams &params) {
    require_dim(params.d);
    const auto *r = std::get_if<Rational>(&params.r);
    if (r == nullptr) {
        throw ModeError("r = " + to_string(params.r) +
                        " is not given as a rational p/q; use approximate mode for floating r");
    }
    const int d = params.d;
    const int a = reduce_mod(params.a, d);
    ExactMatrix v(d, MatrixLabel::v_operator(a, r->str()));
    for (int k = 1; k < d; ++k) {
        v(k - 1, k) = root_of_unity(d, static_cast<std::int64_t>(k) * a);
    }
    // exp(2 pi i j r) with j = (d - 1) / 2
    v(d - 1, 0) = phase(Rational(d - 1, 2) * *r);
    return v;
}

ApproxMatrix build_v_matrix_approx(const OperatorParams &params) {
    require_dim(params.d);
    const int d = params.d;
    const int a = reduce_mod(params.a, d);
    ApproxMatrix v(d, MatrixLabel::v_operator(a, to_string(params.r)));
    for (int k = 1; k < d; ++k) {
        v(k - 1, k) = unit_root(static_cast<std::int64_t>(k) * a, d);
    }
    if (const auto *r = std::get_if<Rational>(&params.r)) {
        v(d - 1, 0) = phase(Rational(d - 1, 2) * *r).to_approx();
    } else {
        const double j = (d - 1) / 2.0;
        v(d - 1, 0) = std::polar(1.0, 2.0 * std::numbers::pi * j * std::get<double>(params.r));
    }
    return v;
}

WeylPair weyl_pair(int d) {
    require_dim(d);
    ExactMatrix x = build_v_matrix({d, Rational(0), 0});
    ExactMatrix z = x.adjoint() * build_v_matrix({d, Rational(0), 1});
    x.set_label({MatrixLabel::Kind::shift, 1, 0, {}, {}});
    z.set_label({MatrixLabel::Kind::clock, 0, 1, {}, {}});
    return {std::move(x), std::move(z)};
}

ExactMatrix generalized_pauli(int d, PauliLabel label) {
    require_dim(d);
    const PauliLabel l = label.reduced(d);
    const WeylPair w = weyl_pair(d);
    ExactMatrix u = ExactMatrix::identity(d);
    for (int i = 0; i < l.a; ++i) u = u * w.x;
    for (int i = 0; i < l.b; ++i) u = u * w.z;
    u.set_label(MatrixLabel::pauli(l.a, l.b));
    return u;
}

CycloScalar trace_inner_product(const ExactMatrix &u, const ExactMatrix &v) {
    if (u.dim() != v.dim()) {
        throw DimensionMismatchError("trace inner product of " + std::to_string(u.dim()) + "x" +
                                     std::to_string(u.dim()) + " and " + std::to_string(v.dim()) + "x" +
                                     std::to_string(v.dim()) + " matrices");
    }
    CycloScalar sum;
    for (std::size_t k = 0; k < u.dim(); ++k) {
        for (std::size_t i = 0; i < u.dim(); ++i) {
            if (u(k, i).is_zero() || v(k, i).is_zero()) continue;
            sum += u(k, i).conj() * v(k, i);
        }
    }
    return sum;
}

ExactMatrix bracket(const ExactMatrix &u, const ExactMatrix &v, Bracket kind) {
    ExactMatrix uv = u * v;
    ExactMatrix vu = v * u;
    ExactMatrix out = kind == Bracket::commutator ? uv - vu : uv + vu;
    out.set_label(MatrixLabel::other((kind == Bracket::commutator ? "[" : "{") + u.label().str() + "," +
                                     v.label().str() + (kind == Bracket::commutator ? "]" : "}")));
    return out;
}

StructureConstant structure_constants(int d, PauliLabel l, PauliLabel lp, Bracket kind) {
    require_dim(d);
    const PauliLabel x = l.reduced(d);
    const PauliLabel y = lp.reduced(d);
    CycloScalar first = root_of_unity(d, -static_cast<std::int64_t>(x.b) * y.a);
    CycloScalar second = root_of_unity(d, -static_cast<std::int64_t>(x.a) * y.b);
    CycloScalar coefficient = kind == Bracket::commutator ? first - second : first + second;
    return {std::move(coefficient), PauliLabel{x.a + y.a, x.b + y.b}.reduced(d)};
}

bool structure_constants_hold(int d, PauliLabel l, PauliLabel lp, Bracket kind) {
    const StructureConstant sc = structure_constants(d, l, lp, kind);
    const ExactMatrix lhs = bracket(generalized_pauli(d, l), generalized_pauli(d, lp), kind);
    return lhs == sc.coefficient * generalized_pauli(d, sc.result);
}

std::vector<CommutingClass> partition_commuting_classes(int d) {
    if (!is_prime(d)) {
        throw UnsupportedDimensionError("commuting-class partition requires a prime dimension, got " +
                                        std::to_string(d));
    }
    std::vector<CommutingClass> classes;
    for (int slope = 0; slope < d; ++slope) {
        CommutingClass c;
        for (int t = 1; t < d; ++t) c.push_back(PauliLabel{t, slope * t}.reduced(d));
        classes.push_back(std::move(c));
    }
    CommutingClass vertical;
    for (int t = 1; t < d; ++t) vertical.push_back({0, t});
    classes.push_back(std::move(vertical));

    if (!verify_commuting_partition(d, classes).ok()) {
        throw std::logic_error("commuting-class partition failed matrix verification for d = " + std::to_string(d));
    }
    return classes;
}

PartitionReport verify_commuting_partition(int d, const std::vector<CommutingClass> &classes) {
    PartitionReport report;
    std::set<PauliLabel> seen;
    std::size_t total = 0;
    report.sizes_ok = classes.size() == static_cast<std::size_t>(d + 1);
    for (const auto &c : classes) {
        if (c.size() != static_cast<std::size_t>(d - 1)) report.sizes_ok = false;
        for (const auto &l : c) {
            seen.insert(l.reduced(d));
            ++total;
        }
    }
    report.disjoint = seen.size() == total;
    report.complete = seen.size() == static_cast<std::size_t>(d * d - 1) && !seen.contains(PauliLabel{0, 0});

    std::vector<PauliLabel> flat;
    std::vector<std::size_t> owner;
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        for (const auto &l : classes[ci]) {
            flat.push_back(l);
            owner.push_back(ci);
        }
    }
    const auto mats = pauli_table(d, flat);
    report.internally_commuting = true;
    report.cross_noncommuting = true;
    for (std::size_t i = 0; i < flat.size(); ++i) {
        for (std::size_t j = i + 1; j < flat.size(); ++j) {
            const bool commute = (mats[i] * mats[j]) == (mats[j] * mats[i]);
            if (owner[i] == owner[j]) {
                ++report.internal_pairs;
                if (!commute) report.internally_commuting = false;
            } else {
                ++report.cross_pairs;
                if (commute) report.cross_noncommuting = false;
            }
        }
    }
    return report;
}

std::vector<std::vector<CycloScalar>> coupled_spin_basis() {
    const CycloScalar h = CycloScalar::inv_sqrt(2);
    const CycloScalar zero;
    const CycloScalar one(1);
    return {
        {one, zero, zero, zero},
        {zero, h, h, zero},
        {zero, zero, zero, one},
        {zero, h, -h, zero},
    };
}

ExactMatrix swap_matrix() {
    ExactMatrix s(4, MatrixLabel::other("SWAP"));
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) s(2 * j + i, 2 * i + j) = CycloScalar(1);
    }
    return s;
}

std::optional<int> swap_eigenvalue(const std::vector<CycloScalar> &v) {
    if (v.size() != 4) throw DimensionMismatchError("swap acts on 4-dimensional vectors");
    const auto swapped = apply(swap_matrix(), v);
    if (swapped == v) return 1;
    std::vector<CycloScalar> negated;
    for (const auto &x : v) negated.push_back(-x);
    if (swapped == negated) return -1;
    return std::nullopt;
}

}  // namespace mubkit
