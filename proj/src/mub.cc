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

#include "mubkit/mub.h"

#include <cmath>
#include <numbers>

#include "mubkit/errors.h"

namespace mubkit {

namespace {

void require_dim(int d) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1, got " + std::to_string(d));
}

std::string index_text(int a) {
    return a < 10 ? std::to_string(a) : "(" + std::to_string(a) + ")";
}

std::string eigen_tag(int a, const RealParameter &r) {
    const auto *q = std::get_if<Rational>(&r);
    if (q != nullptr && q->is_zero()) return "B_0" + index_text(a);
    return "B_(" + to_string(r) + ")" + index_text(a);
}

// Exponent of q on |k> for |a alpha> of V(r,a).
Rational eigen_exponent(int d, int k, int a, int alpha, const Rational &r) {
    if (r.is_zero()) {
        return Rational(static_cast<std::int64_t>(d - k - 1) * (k + 1) * a, 2) -
               Rational(static_cast<std::int64_t>(k + 1) * alpha);
    }
    const Rational j(d - 1, 2);
    const Rational m = j - Rational(k);
    return (j + m) * (j - m + Rational(1)) * Rational(a) / Rational(2) - j * m * r + (j + m) * Rational(alpha);
}

// Factor with x * factor real and positive; x must be a single root-of-unity term.
CycloScalar positive_phase(const CycloScalar &x) {
    if (!x.is_monomial()) throw std::logic_error("rephasing needs a monomial leading amplitude");
    const auto &t = x.terms().front();
    CycloScalar u = root_of_unity(x.order(), -static_cast<std::int64_t>(t.exponent));
    return t.coeff < Rational(0) ? -u : u;
}

std::vector<CycloScalar> scaled(const CycloScalar &c, const std::vector<CycloScalar> &v) {
    std::vector<CycloScalar> out;
    out.reserve(v.size());
    for (const auto &x : v) out.push_back(c * x);
    return out;
}

std::vector<CycloScalar> added(const std::vector<CycloScalar> &u, const std::vector<CycloScalar> &v) {
    std::vector<CycloScalar> out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] + v[i];
    return out;
}

std::vector<CycloScalar> rephased(const std::vector<CycloScalar> &v) {
    return scaled(positive_phase(v.front()), v);
}

// Qubit factors of the two-qubit bases: complex conjugates of the d = 2
// eigenvectors, the labelling of the usual two-qubit tables.
std::vector<CycloScalar> qubit_factor(int a, int alpha) {
    std::vector<CycloScalar> v = eigenbasis(2, a).vectors.at(alpha).amps;
    for (auto &x : v) x = x.conj();
    return v;
}

std::vector<CycloScalar> qubit_pair(int a, int b, int alpha, int beta) {
    return tensor(qubit_factor(a, alpha), qubit_factor(b, beta));
}

std::string ket(int a, int b, int alpha, int beta) {
    return "|" + std::to_string(a) + std::to_string(b) + std::to_string(alpha) + std::to_string(beta) + ">";
}

Basis product_basis(int a, int b) {
    Basis basis;
    basis.dim = 4;
    basis.tag = "w_" + std::to_string(a) + std::to_string(b);
    basis.metadata["generator"] = "v_0" + std::to_string(a) + " (x) v_0" + std::to_string(b);
    for (int alpha = 0; alpha < 2; ++alpha) {
        for (int beta = 0; beta < 2; ++beta) {
            BasisVector v;
            v.dim = 4;
            v.amps = rephased(qubit_pair(a, b, alpha, beta));
            v.label = {VectorKind::tensor, a, alpha, std::make_pair(b, beta), ket(a, b, alpha, beta)};
            basis.vectors.push_back(std::move(v));
        }
    }
    return basis;
}

// lambda|ab00> + mu|ab11>, mu|ab00> + lambda|ab11>, lambda|ab01> + mu|ab10>, mu|ab01> + lambda|ab10>
Basis entangled_basis(int a, int b) {
    const CycloScalar lambda = CycloScalar::from_parts(4, {{0, Rational(1, 2)}, {1, Rational(-1, 2)}});
    const CycloScalar mu = CycloScalar::from_parts(4, {{0, Rational(1, 2)}, {1, Rational(1, 2)}});
    Basis basis;
    basis.dim = 4;
    basis.tag = "w_" + std::to_string(a) + std::to_string(b);
    basis.metadata["generator"] = "v_0" + std::to_string(a) + " (x) v_0" + std::to_string(b);
    basis.metadata["lambda"] = "(1-i)/2";
    basis.metadata["mu"] = "(1+i)/2";
    struct Combo {
        bool lambda_first;
        int alpha;
        int beta;
    };
    const Combo combos[] = {{true, 0, 0}, {false, 0, 0}, {true, 0, 1}, {false, 0, 1}};
    for (const auto &c : combos) {
        const auto first = qubit_pair(a, b, c.alpha, c.beta);
        const auto second = qubit_pair(a, b, 1 - c.alpha, 1 - c.beta);
        const CycloScalar &w1 = c.lambda_first ? lambda : mu;
        const CycloScalar &w2 = c.lambda_first ? mu : lambda;
        BasisVector v;
        v.dim = 4;
        v.amps = rephased(added(scaled(w1, first), scaled(w2, second)));
        v.label = {VectorKind::combined, a, c.alpha, std::make_pair(b, c.beta),
                   std::string(c.lambda_first ? "lambda" : "mu") + ket(a, b, c.alpha, c.beta) + " + " +
                       (c.lambda_first ? "mu" : "lambda") + ket(a, b, 1 - c.alpha, 1 - c.beta)};
        basis.vectors.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

std::string to_string(VectorKind kind) {
    switch (kind) {
        case VectorKind::computational: return "computational";
        case VectorKind::eigen: return "eigen";
        case VectorKind::tensor: return "tensor";
        case VectorKind::combined: return "combined";
        case VectorKind::orbital: return "orbital";
        case VectorKind::coupled: return "coupled";
    }
    return "unknown";
}

Basis computational_basis(int d) {
    require_dim(d);
    Basis basis;
    basis.dim = d;
    basis.tag = "B_" + std::to_string(d);
    for (int k = 0; k < d; ++k) {
        BasisVector v;
        v.dim = d;
        v.amps.assign(d, CycloScalar());
        v.amps[k] = CycloScalar(1);
        v.label = {VectorKind::computational, 0, k, std::nullopt, {}};
        basis.vectors.push_back(std::move(v));
    }
    return basis;
}

Basis eigenbasis(int d, int a, const RealParameter &r) {
    require_dim(d);
    if (a < 0 || a >= d) {
        throw std::invalid_argument("a must lie in [0, d-1], got " + std::to_string(a));
    }
    const auto *rq = std::get_if<Rational>(&r);
    if (rq == nullptr) {
        throw ModeError("r = " + to_string(r) + " is not rational; use approximate mode");
    }
    const CycloScalar norm = CycloScalar::inv_sqrt(d);
    Basis basis;
    basis.dim = d;
    basis.tag = eigen_tag(a, r);
    basis.metadata["generator"] = MatrixLabel::v_operator(a, rq->str()).str();
    for (int alpha = 0; alpha < d; ++alpha) {
        BasisVector v;
        v.dim = d;
        v.label = {VectorKind::eigen, a, alpha, std::nullopt, {}};
        for (int k = 0; k < d; ++k) {
            v.amps.push_back(phase(eigen_exponent(d, k, a, alpha, *rq) / Rational(d)) * norm);
        }
        basis.vectors.push_back(std::move(v));
    }
    return basis;
}

ApproxBasis eigenbasis_approx(int d, int a, const RealParameter &r) {
    if (std::holds_alternative<Rational>(r)) return to_approx(eigenbasis(d, a, r));
    require_dim(d);
    if (a < 0 || a >= d) {
        throw std::invalid_argument("a must lie in [0, d-1], got " + std::to_string(a));
    }
    const double rr = std::get<double>(r);
    const double j = (d - 1) / 2.0;
    ApproxBasis basis;
    basis.dim = d;
    basis.tag = eigen_tag(a, r);
    basis.metadata["generator"] = MatrixLabel::v_operator(a, to_string(r)).str();
    for (int alpha = 0; alpha < d; ++alpha) {
        ApproxBasisVector v;
        v.dim = d;
        v.label = {VectorKind::eigen, a, alpha, std::nullopt, {}};
        for (int k = 0; k < d; ++k) {
            const double m = j - k;
            const double exponent = (j + m) * (j - m + 1) * a / 2.0 - j * m * rr + (j + m) * alpha;
            v.amps.push_back(std::polar(1.0 / std::sqrt(static_cast<double>(d)),
                                        2.0 * std::numbers::pi * exponent / d));
        }
        basis.vectors.push_back(std::move(v));
    }
    return basis;
}

CycloScalar eigenvalue(int d, int a, int alpha, const Rational &r) {
    require_dim(d);
    const Rational j(d - 1, 2);
    return phase((j * (Rational(a) + r) - Rational(alpha)) / Rational(d));
}

MubSet mub_set_prime(int d) {
    require_dim(d);
    MubSet set;
    set.dim = d;
    set.bases.push_back(computational_basis(d));
    for (int a = 0; a < d; ++a) set.bases.push_back(eigenbasis(d, a));
    set.certificate = certify(set);
    if (is_prime(d)) {
        set.certified = set.certificate.passed;
        if (!set.certified) set.diagnostic = "certification failed for prime d = " + std::to_string(d);
    } else {
        set.certified = false;
        set.diagnostic = "d = " + std::to_string(d) +
                         " is not prime: the eigenbasis family is built and checked but not claimed to be "
                         "mutually unbiased (certificate " +
                         (set.certificate.passed ? "passed" : "failed") + ")";
    }
    return set;
}

MubSet mub_set_dim4() {
    MubSet set;
    set.dim = 4;
    Basis canonical = computational_basis(4);
    canonical.tag = "canonical";
    set.bases.push_back(std::move(canonical));
    set.bases.push_back(product_basis(0, 0));
    set.bases.push_back(product_basis(1, 1));
    set.bases.push_back(entangled_basis(0, 1));
    set.bases.push_back(entangled_basis(1, 0));
    set.certificate = certify(set);
    set.certified = set.certificate.passed;
    if (!set.certified) set.diagnostic = "two-qubit bases failed certification";
    return set;
}

ExactMatrix w_operator(int a, int b) {
    ExactMatrix w = kron(build_v_matrix({2, Rational(0), a}), build_v_matrix({2, Rational(0), b}));
    w.set_label(MatrixLabel::other("w_" + std::to_string(a) + std::to_string(b)));
    return w;
}

CycloScalar overlap(const BasisVector &u, const BasisVector &v) {
    if (u.amps.size() != v.amps.size()) {
        throw DimensionMismatchError("overlap of vectors of dimension " + std::to_string(u.amps.size()) + " and " +
                                     std::to_string(v.amps.size()));
    }
    return inner(u.amps, v.amps);
}

CycloScalar overlap_magnitude_squared(const BasisVector &u, const BasisVector &v) {
    return abs_squared(overlap(u, v));
}

CertificateReport certify(const MubSet &set) {
    return certify(set.dim, set.bases);
}

CertificateReport certify(int dim, const std::vector<Basis> &bases) {
    require_dim(dim);
    CertificateReport report;
    report.passed = true;
    const CycloScalar unbiased(Rational(1, dim));
    for (std::size_t i = 0; i < bases.size(); ++i) {
        for (std::size_t j = i; j < bases.size(); ++j) {
            PairCertificate pair;
            pair.first = i;
            pair.second = j;
            pair.passed = true;
            const auto &left = bases[i].vectors;
            const auto &right = bases[j].vectors;
            if (left.size() != static_cast<std::size_t>(dim) || right.size() != static_cast<std::size_t>(dim)) {
                pair.passed = false;
            }
            for (std::size_t x = 0; x < left.size(); ++x) {
                for (std::size_t y = 0; y < right.size(); ++y) {
                    const CycloScalar ov = overlap(left[x], right[y]);
                    const CycloScalar mag = abs_squared(ov);
                    bool ok;
                    if (i == j) {
                        ok = ov == CycloScalar(x == y ? 1 : 0);
                    } else {
                        ok = mag == unbiased;
                    }
                    pair.passed = pair.passed && ok;
                    bool seen = false;
                    for (const auto &m : pair.magnitudes_squared) {
                        if (m == mag) {
                            seen = true;
                            break;
                        }
                    }
                    if (!seen) pair.magnitudes_squared.push_back(mag);
                }
            }
            report.passed = report.passed && pair.passed;
            report.pairs.push_back(std::move(pair));
        }
    }
    return report;
}

ProductTest is_product_vector(const BasisVector &v) {
    if (v.amps.size() != 4) {
        throw DimensionMismatchError("product test is defined on two qubits, got dimension " +
                                     std::to_string(v.amps.size()));
    }
    const auto &x = v.amps;
    ProductTest result;
    result.product = (x[0] * x[3] - x[1] * x[2]).is_zero();
    if (!result.product) return result;
    std::size_t pivot = 0;
    while (pivot < 4 && x[pivot].is_zero()) ++pivot;
    if (pivot == 4) return result;  // zero vector: product, no meaningful factors
    const std::size_t row = pivot / 2;
    const std::size_t col = pivot % 2;
    const CycloScalar inv = x[pivot].inverse();
    std::vector<CycloScalar> s = {x[col], x[2 + col]};
    std::vector<CycloScalar> t = {x[2 * row] * inv, x[2 * row + 1] * inv};
    result.factors = std::make_pair(std::move(s), std::move(t));
    return result;
}

std::optional<CycloScalar> eigenvalue_of(const ExactMatrix &m, const std::vector<CycloScalar> &v) {
    const auto image = apply(m, v);
    std::size_t pivot = 0;
    while (pivot < v.size() && v[pivot].is_zero()) ++pivot;
    if (pivot == v.size()) return std::nullopt;
    const CycloScalar lambda = image[pivot] * v[pivot].inverse();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!(image[i] == lambda * v[i])) return std::nullopt;
    }
    return lambda;
}

ApproxBasis to_approx(const Basis &basis) {
    ApproxBasis out;
    out.dim = basis.dim;
    out.tag = basis.tag;
    out.site_labels = basis.site_labels;
    out.metadata = basis.metadata;
    for (const auto &v : basis.vectors) out.vectors.push_back({v.dim, to_approx(v.amps), v.label});
    return out;
}

}  // namespace mubkit
