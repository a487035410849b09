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

#include <set>

#include "gtest/gtest.h"

#include "mubkit/errors.h"
#include "oracle.h"
#include "reference_values.h"

using namespace mubkit;

namespace {

void expect_basis_matches(const Basis &basis, const std::vector<reference::Column> &columns) {
    ASSERT_EQ(basis.vectors.size(), columns.size()) << basis.tag;
    for (std::size_t v = 0; v < columns.size(); ++v) {
        ASSERT_EQ(basis.vectors[v].amps, columns[v].value()) << basis.tag << " vector " << v;
    }
}

bool all_product(const Basis &b) {
    for (const auto &v : b.vectors) {
        if (!is_product_vector(v).product) return false;
    }
    return true;
}

bool none_product(const Basis &b) {
    for (const auto &v : b.vectors) {
        if (is_product_vector(v).product) return false;
    }
    return true;
}

}  // namespace

TEST(mub, computational_basis) {
    expect_basis_matches(computational_basis(2), reference::bases_d2()[0]);
    expect_basis_matches(computational_basis(3), reference::bases_d3()[0]);
    const Basis one = computational_basis(1);
    ASSERT_EQ(one.vectors.size(), 1u);
    ASSERT_EQ(one.vectors[0].amps, std::vector<CycloScalar>{1});
    ASSERT_EQ(computational_basis(3).tag, "B_3");
}

TEST(mub, eigenbasis_d2_reference) {
    const auto ref = reference::bases_d2();
    expect_basis_matches(eigenbasis(2, 0), ref[1]);
    expect_basis_matches(eigenbasis(2, 1), ref[2]);
    ASSERT_EQ(eigenbasis(2, 1).tag, "B_01");
}

TEST(mub, eigenbasis_d3_reference) {
    const auto ref = reference::bases_d3();
    for (int a = 0; a < 3; ++a) expect_basis_matches(eigenbasis(3, a), ref[a + 1]);
}

TEST(mub, eigenbasis_matches_oracle) {
    for (int d = 1; d <= 12; ++d) {
        for (int a = 0; a < d; ++a) {
            const Basis b = eigenbasis(d, a);
            for (int alpha = 0; alpha < d; ++alpha) {
                ASSERT_LE(oracle::distance(to_approx(b.vectors[alpha].amps), oracle::eigenvector(d, a, alpha)), 1e-12)
                    << d << " " << a << " " << alpha;
                ASSERT_EQ(b.vectors[alpha].label.a, a);
                ASSERT_EQ(b.vectors[alpha].label.alpha, alpha);
            }
        }
    }
}

TEST(mub, general_r_matches_oracle) {
    for (int d = 1; d <= 9; ++d) {
        for (const Rational &r : {Rational(1, 2), Rational(1, 3), Rational(-2, 5)}) {
            for (int a = 0; a < d; ++a) {
                const Basis b = eigenbasis(d, a, r);
                for (int alpha = 0; alpha < d; ++alpha) {
                    ASSERT_LE(oracle::distance(to_approx(b.vectors[alpha].amps),
                                               oracle::eigenvector_general(d, a, alpha, r.to_double())),
                              1e-12);
                }
            }
        }
    }
}

TEST(mub, general_r_reduces_to_r0_form) {
    // At r = 0 the angular-momentum form and the k-indexed form agree exactly.
    for (int d = 1; d <= 12; ++d) {
        for (int a = 0; a < d; ++a) {
            for (int alpha = 0; alpha < d; ++alpha) {
                ASSERT_LE(oracle::distance(oracle::eigenvector_general(d, a, alpha, 0.0), oracle::eigenvector(d, a, alpha)),
                          1e-12);
            }
        }
    }
}

TEST(mub, eigenvalue_equation_r0) {
    for (int d = 1; d <= 12; ++d) {
        for (int a = 0; a < d; ++a) {
            const ExactMatrix v = build_v_matrix({d, Rational(0), a});
            const Basis b = eigenbasis(d, a);
            std::vector<CycloScalar> spectrum;
            for (int alpha = 0; alpha < d; ++alpha) {
                const CycloScalar lambda =
                    root_of_unity(2 * d, static_cast<std::int64_t>(d - 1) * a - 2 * static_cast<std::int64_t>(alpha));
                ASSERT_EQ(eigenvalue(d, a, alpha), lambda);
                const auto image = apply(v, b.vectors[alpha].amps);
                for (int k = 0; k < d; ++k) ASSERT_EQ(image[k], lambda * b.vectors[alpha].amps[k]);
                for (const auto &s : spectrum) ASSERT_FALSE(s == lambda);
                spectrum.push_back(lambda);
            }
        }
    }
}

TEST(mub, eigenvalue_equation_general_r) {
    for (int d = 1; d <= 12; ++d) {
        for (const Rational &r : {Rational(1, 2), Rational(1, 3)}) {
            for (int a = 0; a < d; ++a) {
                const ExactMatrix v = build_v_matrix({d, r, a});
                const Basis b = eigenbasis(d, a, r);
                for (int alpha = 0; alpha < d; ++alpha) {
                    const auto lambda = eigenvalue_of(v, b.vectors[alpha].amps);
                    ASSERT_TRUE(lambda.has_value());
                    ASSERT_EQ(*lambda, eigenvalue(d, a, alpha, r));
                    const double j = (d - 1) / 2.0;
                    const auto want = oracle::expi((j * (a + r.to_double()) - alpha) / d);
                    ASSERT_LE(std::abs(lambda->to_approx() - want), 1e-12);
                }
            }
        }
    }
}

TEST(mub, floating_r_needs_approx_mode) {
    ASSERT_THROW(eigenbasis(3, 1, 0.7), ModeError);
    const ApproxBasis b = eigenbasis_approx(3, 1, 0.7);
    for (int alpha = 0; alpha < 3; ++alpha) {
        ASSERT_LE(oracle::distance(b.vectors[alpha].amps, oracle::eigenvector_general(3, 1, alpha, 0.7)), 1e-12);
    }
}

TEST(mub, overlap_examples) {
    const Basis b00 = eigenbasis(3, 0);
    const Basis b01 = eigenbasis(3, 1);
    ASSERT_EQ(overlap_magnitude_squared(b00.vectors[1], b00.vectors[1]), CycloScalar(1));
    ASSERT_EQ(overlap_magnitude_squared(b00.vectors[0], b01.vectors[2]), CycloScalar(Rational(1, 3)));
    const Basis d2 = eigenbasis(2, 0);
    ASSERT_EQ(overlap_magnitude_squared(d2.vectors[0], computational_basis(2).vectors[1]),
              CycloScalar(Rational(1, 2)));
    ASSERT_THROW(overlap(d2.vectors[0], b00.vectors[0]), DimensionMismatchError);
}

TEST(mub, prime_sets_certify) {
    for (int p : {2, 3, 5, 7, 11, 13}) {
        const MubSet set = mub_set_prime(p);
        ASSERT_TRUE(set.certified) << p << " " << set.diagnostic;
        ASSERT_EQ(set.bases.size(), static_cast<std::size_t>(p + 1));
        ASSERT_EQ(set.certificate.pairs.size(), static_cast<std::size_t>((p + 1) * (p + 2) / 2));
        for (const auto &pair : set.certificate.pairs) {
            ASSERT_TRUE(pair.passed);
            if (pair.first != pair.second) {
                ASSERT_EQ(pair.magnitudes_squared, std::vector<CycloScalar>{CycloScalar(Rational(1, p))});
            }
        }
    }
}

TEST(mub, prime_set_d5_brute_force_numeric) {
    // Independent oracle: the full 6*5 x 6*5 table from complex doubles.
    std::vector<oracle::Vec> vs;
    for (int k = 0; k < 5; ++k) {
        oracle::Vec e(5, 0);
        e[k] = 1;
        vs.push_back(e);
    }
    for (int a = 0; a < 5; ++a) {
        for (int alpha = 0; alpha < 5; ++alpha) vs.push_back(oracle::eigenvector(5, a, alpha));
    }
    for (std::size_t x = 0; x < vs.size(); ++x) {
        for (std::size_t y = 0; y < vs.size(); ++y) {
            const double m = std::norm(oracle::inner(vs[x], vs[y]));
            const double want = x / 5 != y / 5 ? 0.2 : (x == y ? 1.0 : 0.0);
            ASSERT_NEAR(m, want, 1e-12);
        }
    }
    ASSERT_TRUE(mub_set_prime(5).certified);
}

TEST(mub, non_prime_is_reported_not_certified) {
    const MubSet set = mub_set_prime(6);
    ASSERT_FALSE(set.certified);
    ASSERT_FALSE(set.diagnostic.empty());
    ASSERT_EQ(set.bases.size(), 7u);
}

TEST(mub, duplicate_basis_fails) {
    const Basis b = eigenbasis(3, 1);
    const CertificateReport rep = certify(3, {computational_basis(3), b, b});
    ASSERT_FALSE(rep.passed);
    bool found_one = false;
    for (const auto &pair : rep.pairs) {
        if (pair.first == 1 && pair.second == 2) {
            ASSERT_FALSE(pair.passed);
            for (const auto &m : pair.magnitudes_squared) found_one = found_one || m == CycloScalar(1);
        }
    }
    ASSERT_TRUE(found_one);
}

TEST(mub, dim4_reference) {
    const MubSet set = mub_set_dim4();
    const auto ref = reference::bases_d4();
    ASSERT_EQ(set.bases.size(), 5u);
    for (std::size_t i = 0; i < 5; ++i) expect_basis_matches(set.bases[i], ref[i]);
}

TEST(mub, dim4_certified) {
    const MubSet set = mub_set_dim4();
    ASSERT_TRUE(set.certified);
    for (const auto &pair : set.certificate.pairs) {
        if (pair.first == pair.second) continue;
        ASSERT_EQ(pair.magnitudes_squared, std::vector<CycloScalar>{CycloScalar(Rational(1, 4))});
    }
}

TEST(mub, dim4_entanglement) {
    const MubSet set = mub_set_dim4();
    ASSERT_TRUE(all_product(set.bases[0]));
    ASSERT_TRUE(all_product(set.bases[1]));
    ASSERT_TRUE(all_product(set.bases[2]));
    ASSERT_TRUE(none_product(set.bases[3]));
    ASSERT_TRUE(none_product(set.bases[4]));
}

TEST(mub, dim4_vectors_are_eigenvectors_of_w) {
    const MubSet set = mub_set_dim4();
    const std::pair<int, int> ops[] = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};
    for (std::size_t i = 0; i < 4; ++i) {
        const ExactMatrix w = w_operator(ops[i].first, ops[i].second);
        for (const auto &v : set.bases[i + 1].vectors) {
            ASSERT_TRUE(eigenvalue_of(w, v.amps).has_value()) << set.bases[i + 1].tag;
        }
    }
}

TEST(mub, w01_is_degenerate) {
    const MubSet set = mub_set_dim4();
    const ExactMatrix w = w_operator(0, 1);
    std::vector<CycloScalar> distinct;
    for (const auto &v : set.bases[3].vectors) {
        const CycloScalar l = *eigenvalue_of(w, v.amps);
        bool seen = false;
        for (const auto &x : distinct) seen = seen || x == l;
        if (!seen) distinct.push_back(l);
    }
    ASSERT_EQ(distinct.size(), 2u);
}

TEST(mub, product_factors) {
    const BasisVector e{4, {1, 0, 0, 0}, {}};
    const ProductTest t = is_product_vector(e);
    ASSERT_TRUE(t.product);
    ASSERT_TRUE(t.factors.has_value());
    ASSERT_EQ(t.factors->first, (std::vector<CycloScalar>{1, 0}));
    ASSERT_EQ(t.factors->second, (std::vector<CycloScalar>{1, 0}));
    const MubSet set = mub_set_dim4();
    for (const auto &v : set.bases[2].vectors) {
        const ProductTest p = is_product_vector(v);
        ASSERT_TRUE(p.product);
        ASSERT_EQ(tensor(p.factors->first, p.factors->second), v.amps);
    }
    const BasisVector three{3, {1, 0, 0}, {}};
    ASSERT_THROW(is_product_vector(three), DimensionMismatchError);
}

TEST(mub, naive_dim4_family_is_not_unbiased) {
    std::vector<Basis> naive{computational_basis(4)};
    for (int a = 0; a < 4; ++a) naive.push_back(eigenbasis(4, a));
    const CertificateReport rep = certify(4, naive);
    ASSERT_FALSE(rep.passed);
    bool off = false;
    for (const auto &pair : rep.pairs) {
        if (pair.first == pair.second) continue;
        for (const auto &m : pair.magnitudes_squared) off = off || !(m == CycloScalar(Rational(1, 4)));
    }
    ASSERT_TRUE(off);
    // Each of them is still an orthonormal basis.
    for (const auto &b : naive) ASSERT_TRUE(certify(4, {b}).passed);
}
