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

#include "mubkit/verify.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "mubkit/cyclic.h"
#include "mubkit/errors.h"
#include "mubkit/mub.h"
#include "mubkit/pauli_group.h"
#include "mubkit/weyl.h"

namespace mubkit {

namespace {

/// Tracks one check: counts cases and keeps the first failure message.
struct Tally {
    explicit Tally(std::string check_name) : name(std::move(check_name)) {}

    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    void expect(bool ok, const std::function<std::string()> &what) {
        ++cases;
        if (ok) return;
        if (failures++ == 0) first_failure = what();
    }

    CheckResult result(const std::string &scope) const {
        CheckResult r{name, failures == 0 && cases > 0, cases, scope};
        if (cases == 0) r.detail = scope + " (no cases in range)";
        if (failures != 0) {
            r.detail = std::to_string(failures) + " failing case(s); first: " + first_failure;
        }
        return r;
    }
};

std::string range_text(const char *var, int lo, int hi) {
    return std::string(var) + " in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

std::vector<int> primes_up_to(int n) {
    std::vector<int> out;
    for (int p = 2; p <= n; ++p) {
        if (is_prime(p)) out.push_back(p);
    }
    return out;
}

std::string label_text(PauliLabel l) { return "(" + std::to_string(l.a) + "," + std::to_string(l.b) + ")"; }

// ---------------------------------------------------------------------------
// scalar kernel

CheckResult check_ring_axioms(const VerifyConfig &cfg) {
    Tally t{"scalar/ring_axioms"};
    std::mt19937_64 rng(cfg.seed);
    for (std::size_t i = 0; i < cfg.scalar_samples; ++i) {
        const CycloScalar x = random_scalar(rng);
        const CycloScalar y = random_scalar(rng);
        const CycloScalar z = random_scalar(rng);
        auto show = [&] { return "x=" + x.str() + " y=" + y.str() + " z=" + z.str(); };
        t.expect((x + y) + z == x + (y + z), show);
        t.expect((x * y) * z == x * (y * z), show);
        t.expect(x * (y + z) == x * y + x * z, show);
        t.expect(x * y == y * x && x + y == y + x, show);
        t.expect(conj(conj(x)) == x, show);
        t.expect(x - x == CycloScalar(0), show);
    }
    return t.result(std::to_string(cfg.scalar_samples) + " random triples");
}

CheckResult check_geometric_sums() {
    Tally t{"scalar/geometric_sums"};
    for (std::uint32_t n = 2; n <= 64; ++n) {
        CycloScalar sum;
        for (std::uint32_t k = 0; k < n; ++k) sum += root_of_unity(n, k);
        t.expect(sum.is_zero(), [&] { return "n=" + std::to_string(n) + " sum=" + sum.str(); });
    }
    return t.result(range_text("n", 2, 64));
}

// ---------------------------------------------------------------------------
// weyl operators

CheckResult check_v_unitary(int d_max) {
    Tally t{"weyl/v_unitary"};
    const int hi = std::min(d_max, 12);
    for (int d = 1; d <= hi; ++d) {
        for (const Rational &r : {Rational(0), Rational(1, 2), Rational(1, 3)}) {
            for (int a = 0; a < d; ++a) {
                t.expect(is_unitary(build_v_matrix({d, r, a})),
                         [&] { return "d=" + std::to_string(d) + " r=" + r.str() + " a=" + std::to_string(a); });
            }
        }
    }
    return t.result(range_text("d", 1, hi) + ", r in {0, 1/2, 1/3}");
}

CheckResult check_q_commutation(int d_max) {
    Tally t{"weyl/q_commutation"};
    for (int d = 1; d <= d_max; ++d) {
        const WeylPair w = weyl_pair(d);
        const CycloScalar q = root_of_unity(static_cast<std::uint32_t>(d), 1);
        t.expect((w.x * w.z - q * (w.z * w.x)).is_zero(), [&] { return "d=" + std::to_string(d); });
    }
    return t.result(range_text("d", 1, d_max));
}

CheckResult check_weyl_powers(int d_max) {
    Tally t{"weyl/powers_are_identity"};
    const int hi = std::min(d_max, 12);
    for (int d = 1; d <= hi; ++d) {
        const WeylPair w = weyl_pair(d);
        ExactMatrix xp = ExactMatrix::identity(d);
        ExactMatrix zp = ExactMatrix::identity(d);
        for (int i = 0; i < d; ++i) {
            xp = xp * w.x;
            zp = zp * w.z;
        }
        t.expect(xp == ExactMatrix::identity(d) && zp == ExactMatrix::identity(d),
                 [&] { return "d=" + std::to_string(d); });
    }
    return t.result(range_text("d", 1, hi));
}

CheckResult check_trace_orthogonality(int d_max) {
    Tally t{"weyl/trace_orthogonality"};
    const int hi = std::min(d_max, 9);
    for (int d = 1; d <= hi; ++d) {
        std::vector<ExactMatrix> u;
        for (int a = 0; a < d; ++a) {
            for (int b = 0; b < d; ++b) u.push_back(generalized_pauli(d, {a, b}));
        }
        for (std::size_t i = 0; i < u.size(); ++i) {
            for (std::size_t j = 0; j < u.size(); ++j) {
                const CycloScalar expected = i == j ? CycloScalar(d) : CycloScalar(0);
                t.expect(trace_inner_product(u[i], u[j]) == expected, [&] {
                    return "d=" + std::to_string(d) + " pair " + std::to_string(i) + "," + std::to_string(j);
                });
            }
        }
    }
    return t.result(range_text("d", 1, hi) + ", all label pairs");
}

CheckResult check_structure_constants(int d_max) {
    Tally t{"weyl/structure_constants"};
    const int hi = std::min(d_max, 7);
    for (int d = 1; d <= hi; ++d) {
        for (int a = 0; a < d; ++a) {
            for (int b = 0; b < d; ++b) {
                for (int ap = 0; ap < d; ++ap) {
                    for (int bp = 0; bp < d; ++bp) {
                        for (Bracket kind : {Bracket::commutator, Bracket::anticommutator}) {
                            t.expect(structure_constants_hold(d, {a, b}, {ap, bp}, kind), [&] {
                                return "d=" + std::to_string(d) + " " + label_text({a, b}) + " " +
                                       label_text({ap, bp}) +
                                       (kind == Bracket::commutator ? " commutator" : " anticommutator");
                            });
                        }
                    }
                }
            }
        }
    }
    return t.result(range_text("d", 1, hi) + ", both brackets");
}

CheckResult check_anticommutators(int d_max) {
    Tally t{"weyl/anticommutator_zeros"};
    const int hi = std::min(d_max, 9);
    for (int d = 1; d <= hi; ++d) {
        const bool odd = d % 2 == 1;
        if (!odd && d != 2 && d != 4) continue;
        std::vector<ExactMatrix> u;
        for (int a = 0; a < d; ++a) {
            for (int b = 0; b < d; ++b) u.push_back(generalized_pauli(d, {a, b}));
        }
        for (int i = 0; i < d * d; ++i) {
            for (int j = 0; j < d * d; ++j) {
                const PauliLabel l{i / d, i % d};
                const PauliLabel lp{j / d, j % d};
                const bool vanishes = bracket(u[i], u[j], Bracket::anticommutator).is_zero();
                const bool expected = !odd && reduce_mod(static_cast<long long>(l.a) * lp.b -
                                                             static_cast<long long>(l.b) * lp.a,
                                                         d) == d / 2;
                t.expect(vanishes == expected, [&] {
                    return "d=" + std::to_string(d) + " " + label_text(l) + " " + label_text(lp) +
                           (vanishes ? " vanishes" : " does not vanish");
                });
            }
        }
    }
    return t.result("odd d and d in {2, 4}, d <= " + std::to_string(hi));
}

CheckResult check_partition(int d_max) {
    Tally t{"weyl/commuting_partition"};
    const int hi = std::min(d_max, 13);
    for (int p : primes_up_to(hi)) {
        const auto classes = partition_commuting_classes(p);
        const PartitionReport rep = verify_commuting_partition(p, classes);
        bool shape = classes.size() == static_cast<std::size_t>(p + 1);
        for (const auto &c : classes) shape = shape && c.size() == static_cast<std::size_t>(p - 1);
        t.expect(rep.ok() && shape, [&] { return "p=" + std::to_string(p); });
    }
    t.expect(
        [] {
            try {
                partition_commuting_classes(6);
            } catch (const UnsupportedDimensionError &) {
                return true;
            }
            return false;
        }(),
        [] { return "d=6 was not refused"; });
    return t.result("primes <= " + std::to_string(hi));
}

CheckResult check_coupled_basis() {
    Tally t{"weyl/coupled_spin_basis"};
    const auto basis = coupled_spin_basis();
    const int expected[] = {1, 1, 1, -1};
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto sign = swap_eigenvalue(basis[i]);
        t.expect(sign && *sign == expected[i], [&] { return "vector " + std::to_string(i); });
        for (std::size_t j = 0; j < basis.size(); ++j) {
            t.expect(inner(basis[i], basis[j]) == CycloScalar(i == j ? 1 : 0),
                     [&] { return "gram " + std::to_string(i) + "," + std::to_string(j); });
        }
    }
    return t.result("4 vectors");
}

// ---------------------------------------------------------------------------
// mub

CheckResult check_mub_prime(int d_max) {
    Tally t{"mub/prime_certificate"};
    const int hi = std::min(d_max, 13);
    for (int p : primes_up_to(hi)) {
        const MubSet set = mub_set_prime(p);
        t.expect(set.certified && set.bases.size() == static_cast<std::size_t>(p + 1) && set.certificate.passed,
                 [&] { return "p=" + std::to_string(p) + " " + set.diagnostic; });
    }
    return t.result("primes <= " + std::to_string(hi));
}

CheckResult check_eigen_r0(int d_max) {
    Tally t{"mub/eigenvalue_r0"};
    const int hi = std::min(d_max, 12);
    for (int d = 1; d <= hi; ++d) {
        for (int a = 0; a < d; ++a) {
            const ExactMatrix v = build_v_matrix({d, Rational(0), a});
            const Basis basis = eigenbasis(d, a);
            std::vector<CycloScalar> seen;
            for (int alpha = 0; alpha < d; ++alpha) {
                const auto &amps = basis.vectors[alpha].amps;
                const CycloScalar lambda = root_of_unity(static_cast<std::uint32_t>(2 * d),
                                                         static_cast<std::int64_t>(d - 1) * a - 2 * alpha);
                const auto image = apply(v, amps);
                bool ok = true;
                for (int k = 0; k < d; ++k) ok = ok && image[k] == lambda * amps[k];
                t.expect(ok, [&] {
                    return "d=" + std::to_string(d) + " a=" + std::to_string(a) + " alpha=" + std::to_string(alpha);
                });
                for (const auto &s : seen) {
                    t.expect(!(s == lambda), [&] {
                        return "degenerate eigenvalue d=" + std::to_string(d) + " a=" + std::to_string(a);
                    });
                }
                seen.push_back(lambda);
            }
        }
    }
    return t.result(range_text("d", 1, hi) + ", all a and alpha, spectrum nondegenerate");
}

CheckResult check_eigen_general_r(int d_max) {
    Tally t{"mub/eigenvalue_general_r"};
    const int hi = std::min(d_max, 12);
    for (int d = 1; d <= hi; ++d) {
        for (const Rational &r : {Rational(1, 2), Rational(1, 3)}) {
            for (int a = 0; a < d; ++a) {
                const ExactMatrix v = build_v_matrix({d, r, a});
                const Basis basis = eigenbasis(d, a, r);
                for (int alpha = 0; alpha < d; ++alpha) {
                    const auto &amps = basis.vectors[alpha].amps;
                    const CycloScalar lambda = eigenvalue(d, a, alpha, r);
                    const auto image = apply(v, amps);
                    bool ok = true;
                    for (int k = 0; k < d; ++k) ok = ok && image[k] == lambda * amps[k];
                    t.expect(ok, [&] {
                        return "d=" + std::to_string(d) + " r=" + r.str() + " a=" + std::to_string(a) +
                               " alpha=" + std::to_string(alpha);
                    });
                }
                std::vector<Basis> single{basis};
                t.expect(certify(d, single).passed, [&] {
                    return "not orthonormal d=" + std::to_string(d) + " r=" + r.str() + " a=" + std::to_string(a);
                });
            }
        }
    }
    return t.result(range_text("d", 1, hi) + ", r in {1/2, 1/3}");
}

CheckResult check_dim4(int d_max) {
    Tally t{"mub/dim4_five_bases"};
    if (d_max < 4) return t.result("d = 4");
    const MubSet set = mub_set_dim4();
    t.expect(set.certified && set.bases.size() == 5, [] { return "five-basis set not certified"; });
    int product_bases = 0;
    int entangled_bases = 0;
    for (std::size_t i = 1; i < set.bases.size(); ++i) {
        std::size_t products = 0;
        for (const auto &v : set.bases[i].vectors) products += is_product_vector(v).product ? 1 : 0;
        if (products == set.bases[i].vectors.size()) ++product_bases;
        if (products == 0) ++entangled_bases;
    }
    t.expect(product_bases == 2 && entangled_bases == 2, [&] {
        return std::to_string(product_bases) + " product bases, " + std::to_string(entangled_bases) +
               " entangled bases";
    });

    std::vector<Basis> naive{computational_basis(4)};
    for (int a = 0; a < 4; ++a) naive.push_back(eigenbasis(4, a));
    t.expect(!certify(4, naive).passed, [] { return "naive d=4 family certified"; });
    return t.result("d = 4, including the naive-family negative control");
}

// ---------------------------------------------------------------------------
// pauli group

CheckResult check_pauli_group(const VerifyConfig &cfg) {
    Tally t{"pauli/group_axioms"};
    for (int d : {1, 2, 3, 4, 5}) {
        if (d > cfg.d_max) break;
        const GroupReport rep = verify_group(d, cfg.associativity_samples, cfg.seed + static_cast<std::uint64_t>(d));
        t.expect(rep.ok(), [&] { return "d=" + std::to_string(d); });
        const auto group = pauli_group(d);
        for (int b = 0; b < d; ++b) {
            for (int c = 0; c < d; ++c) {
                t.expect(group->matrix({0, b, c}) == generalized_pauli(d, {b, c}), [&] {
                    return "d=" + std::to_string(d) + " (0," + std::to_string(b) + "," + std::to_string(c) +
                           ") differs from u_bc";
                });
            }
        }
    }
    return t.result("d <= " + std::to_string(std::min(cfg.d_max, 5)));
}

// ---------------------------------------------------------------------------
// cyclic

CheckResult check_rings(int d_max) {
    Tally t{"ring/orbitals"};
    const int hi = std::min(d_max, 24);
    for (int n = 1; n <= hi; ++n) {
        const Basis orbitals = molecular_orbitals({n, {}});
        std::vector<Basis> single{orbitals};
        t.expect(certify(n, single).passed, [&] { return "not orthonormal N=" + std::to_string(n); });
        const RingMatchReport rep = match_to_eigenbasis(orbitals);
        t.expect(rep.all_matched && rep.bijective, [&] { return "no phase bijection N=" + std::to_string(n); });
    }
    return t.result(range_text("N", 1, hi));
}

// ---------------------------------------------------------------------------
// approximate mode

CheckResult approx_v_unitary(const VerifyConfig &cfg) {
    Tally t{"approx/v_unitary"};
    const int hi = std::min(cfg.d_max, 32);
    for (int d = 1; d <= hi; ++d) {
        for (double r : {0.0, 0.5, 1.0 / 3.0, std::sqrt(2.0)}) {
            for (int a = 0; a < d; ++a) {
                t.expect(is_unitary(build_v_matrix_approx({d, r, a}), cfg.tolerance),
                         [&] { return "d=" + std::to_string(d) + " r=" + std::to_string(r); });
            }
        }
    }
    return t.result(range_text("d", 1, hi) + ", r in {0, 0.5, 1/3, sqrt 2}");
}

CheckResult approx_eigen(const VerifyConfig &cfg) {
    Tally t{"approx/eigenvalue"};
    const int hi = std::min(cfg.d_max, 32);
    for (int d = 1; d <= hi; ++d) {
        for (double r : {0.0, std::sqrt(2.0)}) {
            const double j = (d - 1) / 2.0;
            for (int a = 0; a < d; ++a) {
                const ApproxMatrix v = build_v_matrix_approx({d, r, a});
                const ApproxBasis basis = eigenbasis_approx(d, a, r);
                for (int alpha = 0; alpha < d; ++alpha) {
                    const double turns = (j * (a + r) - alpha) / d;
                    const ApproxScalar lambda = std::polar(1.0, 2.0 * M_PI * turns);
                    const auto &amps = basis.vectors[alpha].amps;
                    const auto image = apply(v, amps);
                    double err = 0;
                    for (int k = 0; k < d; ++k) err = std::max(err, std::abs(image[k] - lambda * amps[k]));
                    t.expect(err <= cfg.tolerance, [&] {
                        return "d=" + std::to_string(d) + " a=" + std::to_string(a) + " residual " + std::to_string(err);
                    });
                }
            }
        }
    }
    return t.result(range_text("d", 1, hi) + ", r in {0, sqrt 2}");
}

CheckResult approx_mub(const VerifyConfig &cfg) {
    Tally t{"approx/mub_overlaps"};
    const int hi = std::min(cfg.d_max, 32);
    for (int p : primes_up_to(hi)) {
        std::vector<ApproxBasis> bases{to_approx(computational_basis(p))};
        for (int a = 0; a < p; ++a) bases.push_back(eigenbasis_approx(p, a));
        double worst = 0;
        for (std::size_t i = 0; i < bases.size(); ++i) {
            for (std::size_t j = i; j < bases.size(); ++j) {
                for (int x = 0; x < p; ++x) {
                    for (int y = 0; y < p; ++y) {
                        const double m = std::norm(inner(bases[i].vectors[x].amps, bases[j].vectors[y].amps));
                        const double expected = i != j ? 1.0 / p : (x == y ? 1.0 : 0.0);
                        worst = std::max(worst, std::abs(m - expected));
                    }
                }
            }
        }
        t.expect(worst <= cfg.tolerance, [&] { return "p=" + std::to_string(p) + " deviation " + std::to_string(worst); });
    }
    return t.result("primes <= " + std::to_string(hi));
}

CheckResult approx_rings(const VerifyConfig &cfg) {
    Tally t{"approx/ring_orthonormal"};
    const int hi = std::min(cfg.d_max, 64);
    for (int n = 1; n <= hi; ++n) {
        const ApproxBasis b = molecular_orbitals_approx({n, {}});
        double worst = 0;
        for (int x = 0; x < n; ++x) {
            for (int y = 0; y < n; ++y) {
                const ApproxScalar g = inner(b.vectors[x].amps, b.vectors[y].amps);
                worst = std::max(worst, std::abs(g - ApproxScalar(x == y ? 1.0 : 0.0)));
            }
        }
        t.expect(worst <= cfg.tolerance, [&] { return "N=" + std::to_string(n) + " residual " + std::to_string(worst); });
    }
    return t.result(range_text("N", 1, hi));
}

}  // namespace

std::string to_string(Mode mode) { return mode == Mode::exact ? "exact" : "approx"; }

Mode parse_mode(const std::string &text) {
    if (text == "exact") return Mode::exact;
    if (text == "approx") return Mode::approx;
    throw std::invalid_argument("mode must be exact or approx, got '" + text + "'");
}

CycloScalar random_scalar(std::mt19937_64 &rng) {
    static constexpr std::uint32_t kOrders[] = {1, 2, 3, 4, 5, 6, 8, 10, 12};
    static constexpr std::uint32_t kRadicands[] = {2, 3, 5};
    std::uniform_int_distribution<std::size_t> pick_order(0, std::size(kOrders) - 1);
    std::uniform_int_distribution<int> term_count(0, 3);
    std::uniform_int_distribution<std::int64_t> num(-4, 4);
    std::uniform_int_distribution<std::int64_t> den(1, 3);
    std::uniform_int_distribution<int> radical(0, 5);
    const std::uint32_t n = kOrders[pick_order(rng)];
    std::uniform_int_distribution<std::uint32_t> exponent(0, n - 1);
    std::vector<CycloTerm> terms;
    const int count = term_count(rng);
    for (int i = 0; i < count; ++i) terms.push_back({exponent(rng), Rational(num(rng), den(rng))});
    const int r = radical(rng);
    if (r < 3) return CycloScalar::from_parts(n, std::move(terms), 1, kRadicands[r]);
    return CycloScalar::from_parts(n, std::move(terms));
}

std::vector<CheckResult> run_verification(const VerifyConfig &config) {
    if (config.d_max < 1) throw std::invalid_argument("d_max must be >= 1");
    if (config.mode == Mode::approx && !(config.tolerance > 0)) throw std::invalid_argument("tolerance must be > 0");
    std::vector<CheckResult> out;
    if (config.mode == Mode::approx) {
        out.push_back(approx_v_unitary(config));
        out.push_back(approx_eigen(config));
        out.push_back(approx_mub(config));
        out.push_back(approx_rings(config));
        return out;
    }
    out.push_back(check_ring_axioms(config));
    out.push_back(check_geometric_sums());
    out.push_back(check_v_unitary(config.d_max));
    out.push_back(check_q_commutation(config.d_max));
    out.push_back(check_weyl_powers(config.d_max));
    out.push_back(check_trace_orthogonality(config.d_max));
    out.push_back(check_structure_constants(config.d_max));
    out.push_back(check_anticommutators(config.d_max));
    if (config.d_max >= 2) out.push_back(check_partition(config.d_max));
    out.push_back(check_coupled_basis());
    if (config.d_max >= 2) out.push_back(check_mub_prime(config.d_max));
    out.push_back(check_eigen_r0(config.d_max));
    out.push_back(check_eigen_general_r(config.d_max));
    if (config.d_max >= 4) out.push_back(check_dim4(config.d_max));
    out.push_back(check_pauli_group(config));
    out.push_back(check_rings(config.d_max));
    return out;
}

bool all_passed(const std::vector<CheckResult> &results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult &r) { return r.passed; });
}

std::string format_summary(const std::vector<CheckResult> &results) {
    std::size_t width = 5;
    for (const auto &r : results) width = std::max(width, r.name.size());
    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(width)) << "check" << "  result  " << std::right << std::setw(8)
        << "cases" << "  detail\n";
    for (const auto &r : results) {
        out << std::left << std::setw(static_cast<int>(width)) << r.name << "  " << (r.passed ? "PASS  " : "FAIL  ")
            << "  " << std::right << std::setw(8) << r.cases << "  " << r.detail << '\n';
    }
    std::size_t passed = 0;
    for (const auto &r : results) passed += r.passed ? 1 : 0;
    out << passed << "/" << results.size() << " checks passed\n";
    return out.str();
}

}  // namespace mubkit
