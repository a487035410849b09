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

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mubkit/cyclo.h"
#include "mubkit/errors.h"

namespace mubkit {

inline bool is_structural_zero(const CycloScalar &x) {
    return x.is_zero();
}
inline bool is_structural_zero(const ApproxScalar &x) {
    return x == 0.0;
}

inline ApproxScalar conj(const ApproxScalar &x) {
    return std::conj(x);
}

/// Where a matrix came from. Carried through to JSON.
struct MatrixLabel {
    enum class Kind { v_operator, shift, clock, pauli, product, other };

    Kind kind = Kind::other;
    int a = 0;
    int b = 0;
    std::string r;     // v_operator only, "p/q" or a decimal
    std::string text;  // free-form description for product/other

    std::string str() const;

    static MatrixLabel v_operator(int a, std::string r) { return {Kind::v_operator, a, 0, std::move(r), {}}; }
    static MatrixLabel pauli(int a, int b) { return {Kind::pauli, a, b, {}, {}}; }
    static MatrixLabel other(std::string text) { return {Kind::other, 0, 0, {}, std::move(text)}; }
};

/// Dense square matrix, row-major.
template <class S>
class Matrix {
   public:
    Matrix() = default;
    explicit Matrix(std::size_t dim, MatrixLabel label = {})
        : dim_(dim), entries_(dim * dim), label_(std::move(label)) {}

    static Matrix identity(std::size_t dim) {
        Matrix m(dim, MatrixLabel::pauli(0, 0));
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = S(1);
        return m;
    }

    std::size_t dim() const { return dim_; }
    S &operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const S &operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
    std::span<const S> entries() const { return entries_; }

    const MatrixLabel &label() const { return label_; }
    void set_label(MatrixLabel label) { label_ = std::move(label); }

    Matrix adjoint() const {
        Matrix out(dim_, MatrixLabel::other(label_.str() + "^dagger"));
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) out(j, i) = conj((*this)(i, j));
        }
        return out;
    }

    Matrix &operator+=(const Matrix &other) {
        require_same_dim(other);
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
        label_ = MatrixLabel::other("sum");
        return *this;
    }

    Matrix &operator-=(const Matrix &other) {
        require_same_dim(other);
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
        label_ = MatrixLabel::other("difference");
        return *this;
    }

    friend Matrix operator+(Matrix lhs, const Matrix &rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix &rhs) { return lhs -= rhs; }

    friend Matrix operator*(const Matrix &lhs, const Matrix &rhs) {
        lhs.require_same_dim(rhs);
        const std::size_t n = lhs.dim_;
        Matrix out(n, MatrixLabel{MatrixLabel::Kind::product, 0, 0, {}, lhs.label_.str() + "*" + rhs.label_.str()});
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                const S &left = lhs(i, k);
                if (is_structural_zero(left)) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    const S &right = rhs(k, j);
                    if (is_structural_zero(right)) continue;
                    out(i, j) += left * right;
                }
            }
        }
        return out;
    }

    friend Matrix operator*(const S &scalar, Matrix m) {
        for (auto &e : m.entries_) e = scalar * e;
        return m;
    }

    /// Entrywise comparison; labels are ignored.
    friend bool operator==(const Matrix &lhs, const Matrix &rhs) {
        return lhs.dim_ == rhs.dim_ && lhs.entries_ == rhs.entries_;
    }

    bool is_zero() const {
        for (const auto &e : entries_) {
            if (!is_structural_zero(e)) return false;
        }
        return true;
    }

   private:
    void require_same_dim(const Matrix &other) const {
        if (dim_ != other.dim_) {
            throw DimensionMismatchError("matrix dimensions differ: " + std::to_string(dim_) + " vs " +
                                         std::to_string(other.dim_));
        }
    }

    std::size_t dim_ = 0;
    std::vector<S> entries_;
    MatrixLabel label_;
};

using ExactMatrix = Matrix<CycloScalar>;
using ApproxMatrix = Matrix<ApproxScalar>;

template <class S>
std::vector<S> apply(const Matrix<S> &m, const std::vector<S> &v) {
    if (m.dim() != v.size()) throw DimensionMismatchError("matrix/vector dimensions differ");
    std::vector<S> out(v.size());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t k = 0; k < m.dim(); ++k) {
            if (is_structural_zero(m(i, k)) || is_structural_zero(v[k])) continue;
            out[i] += m(i, k) * v[k];
        }
    }
    return out;
}

/// <u|v> = sum_k conj(u_k) v_k
template <class S>
S inner(const std::vector<S> &u, const std::vector<S> &v) {
    if (u.size() != v.size()) throw DimensionMismatchError("vector dimensions differ");
    S sum{};
    for (std::size_t k = 0; k < u.size(); ++k) {
        if (is_structural_zero(u[k]) || is_structural_zero(v[k])) continue;
        sum += conj(u[k]) * v[k];
    }
    return sum;
}

template <class S>
Matrix<S> kron(const Matrix<S> &a, const Matrix<S> &b) {
    const std::size_t n = a.dim() * b.dim();
    Matrix<S> out(n, MatrixLabel{MatrixLabel::Kind::product, 0, 0, {}, a.label().str() + "(x)" + b.label().str()});
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (is_structural_zero(a(i, j))) continue;
            for (std::size_t k = 0; k < b.dim(); ++k) {
                for (std::size_t l = 0; l < b.dim(); ++l) {
                    out(i * b.dim() + k, j * b.dim() + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

template <class S>
std::vector<S> tensor(const std::vector<S> &u, const std::vector<S> &v) {
    std::vector<S> out;
    out.reserve(u.size() * v.size());
    for (const auto &x : u) {
        for (const auto &y : v) out.push_back(x * y);
    }
    return out;
}

ApproxMatrix to_approx(const ExactMatrix &m);
std::vector<ApproxScalar> to_approx(const std::vector<CycloScalar> &v);

/// M M^dagger == I, exactly.
bool is_unitary(const ExactMatrix &m);
/// max |(M M^dagger - I)_ij| <= tolerance.
bool is_unitary(const ApproxMatrix &m, double tolerance);

double max_abs_difference(const ApproxMatrix &a, const ApproxMatrix &b);
double max_abs_difference(const std::vector<ApproxScalar> &a, const std::vector<ApproxScalar> &b);

}  // namespace mubkit
