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

// Plain complex<double> reference implementations, written from the defining
// formulas and sharing no code with the library.

#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Vec = std::vector<C>;
using Mat = std::vector<std::vector<C>>;

inline C expi(double turns) {
    const double angle = 2.0 * M_PI * turns;
    return {std::cos(angle), std::sin(angle)};
}

inline Mat zeros(int d) { return Mat(d, Vec(d, C(0, 0))); }

inline Mat identity(int d) {
    Mat m = zeros(d);
    for (int i = 0; i < d; ++i) m[i][i] = 1;
    return m;
}

inline Mat mul(const Mat &a, const Mat &b) {
    const int d = static_cast<int>(a.size());
    Mat m = zeros(d);
    for (int i = 0; i < d; ++i) {
        for (int k = 0; k < d; ++k) {
            for (int j = 0; j < d; ++j) m[i][j] += a[i][k] * b[k][j];
        }
    }
    return m;
}

inline Vec apply(const Mat &m, const Vec &v) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t k = 0; k < v.size(); ++k) out[i] += m[i][k] * v[k];
    }
    return out;
}

inline C inner(const Vec &u, const Vec &v) {
    C s = 0;
    for (std::size_t k = 0; k < u.size(); ++k) s += std::conj(u[k]) * v[k];
    return s;
}

/// v_ra in the k = j - m labeling: v|k> = q^(k a)|k-1> for k >= 1 and
/// v|0> = exp(2 pi i j r)|d-1>.
inline Mat v_matrix(int d, double r, int a) {
    const double j = (d - 1) / 2.0;
    Mat m = zeros(d);
    for (int k = 1; k < d; ++k) m[k - 1][k] = expi(static_cast<double>(k) * a / d);
    m[d - 1][0] = expi(j * r);
    return m;
}

inline Mat shift(int d) {
    Mat m = zeros(d);
    for (int k = 0; k < d; ++k) m[(k + d - 1) % d][k] = 1;
    return m;
}

inline Mat clock(int d) {
    Mat m = zeros(d);
    for (int k = 0; k < d; ++k) m[k][k] = expi(static_cast<double>(k) / d);
    return m;
}

inline Mat power(const Mat &m, int e) {
    Mat out = identity(static_cast<int>(m.size()));
    for (int i = 0; i < e; ++i) out = mul(out, m);
    return out;
}

inline Mat pauli(int d, int a, int b) { return mul(power(shift(d), a), power(clock(d), b)); }

/// |a alpha> with amplitude q^((d-k-1)(k+1)a/2 - (k+1)alpha) / sqrt(d) on |k>.
inline Vec eigenvector(int d, int a, int alpha) {
    Vec v(d);
    for (int k = 0; k < d; ++k) {
        const double e = (d - k - 1) * (k + 1) * a / 2.0 - (k + 1) * alpha;
        v[k] = expi(e / d) / std::sqrt(static_cast<double>(d));
    }
    return v;
}

/// Angular-momentum form: m = j - k, exponent (j+m)(j-m+1)a/2 - j m r + (j+m) alpha.
inline Vec eigenvector_general(int d, int a, int alpha, double r) {
    const double j = (d - 1) / 2.0;
    Vec v(d);
    for (int k = 0; k < d; ++k) {
        const double m = j - k;
        const double e = (j + m) * (j - m + 1) * a / 2.0 - j * m * r + (j + m) * alpha;
        v[k] = expi(e / d) / std::sqrt(static_cast<double>(d));
    }
    return v;
}

inline double distance(const Vec &u, const Vec &v) {
    double worst = 0;
    for (std::size_t k = 0; k < u.size(); ++k) worst = std::max(worst, std::abs(u[k] - v[k]));
    return worst;
}

inline double distance(const Mat &a, const Mat &b) {
    double worst = 0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, distance(a[i], b[i]));
    return worst;
}

}  // namespace oracle
