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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "mubkit/cyclic.h"
#include "mubkit/mub.h"
#include "mubkit/pauli_group.h"
#include "mubkit/weyl.h"
#include "reference_values.h"

using namespace mubkit;

namespace {

/// Collects the first reason a criterion failed.
class Check {
   public:
    void require(bool ok, const std::string &what) {
        if (!ok && reason_.empty()) reason_ = what;
        ++cases_;
    }
    bool ok() const { return reason_.empty(); }
    const std::string &reason() const { return reason_; }
    std::size_t cases() const { return cases_; }

   private:
    std::string reason_;
    std::size_t cases_ = 0;
};

std::string num(int x) { return std::to_string(x); }

void match_bases(Check &c, const std::vector<Basis> &got, const std::vector<std::vector<reference::Column>> &want,
                 const std::string &where) {
    c.require(got.size() == want.size(), where + ": basis count");
    for (std::size_t b = 0; b < std::min(got.size(), want.size()); ++b) {
        c.require(got[b].vectors.size() == want[b].size(), where + ": vector count in " + got[b].tag);
        for (std::size_t v = 0; v < std::min(got[b].vectors.size(), want[b].size()); ++v) {
            c.require(got[b].vectors[v].amps == want[b][v].value(),
                      where + ": " + got[b].tag + " vector " + std::to_string(v));
        }
    }
}

bool commute(const ExactMatrix &u, const ExactMatrix &v) { return (u * v - v * u).is_zero(); }

void criterion_1(Check &c) {
    c.require(build_v_matrix({2, Rational(0), 0}) == reference::v00_d2(), "V00");
    c.require(build_v_matrix({2, Rational(0), 1}) == reference::v01_d2(), "V01");
    match_bases(c, {computational_basis(2), eigenbasis(2, 0), eigenbasis(2, 1)}, reference::bases_d2(), "d=2");
}

void criterion_2(Check &c) {
    const auto vs = reference::v_matrices_d3();
    for (int a = 0; a < 3; ++a) c.require(build_v_matrix({3, Rational(0), a}) == vs[a], "V0" + num(a));
    match_bases(c, {computational_basis(3), eigenbasis(3, 0), eigenbasis(3, 1), eigenbasis(3, 2)},
                reference::bases_d3(), "d=3");
    const auto table = reference::pauli_table_d3();
    c.require(table.size() == 9, "nine Pauli matrices");
    for (const auto &e : table) {
        c.require(generalized_pauli(3, {e.a, e.b}) == e.m, "u_" + num(e.a) + num(e.b));
    }
}

void criterion_3(Check &c) {
    const MubSet set = mub_set_dim4();
    match_bases(c, set.bases, reference::bases_d4(), "d=4");
    std::size_t vectors = 0;
    for (const auto &b : set.bases) vectors += b.vectors.size();
    c.require(vectors == 20, "20 column vectors");
    const CycloScalar quarter(Rational(1, 4));
    for (std::size_t i = 0; i < set.bases.size(); ++i) {
        for (std::size_t j = 0; j < set.bases.size(); ++j) {
            for (const auto &u : set.bases[i].vectors) {
                for (const auto &v : set.bases[j].vectors) {
                    const CycloScalar m = overlap_magnitude_squared(u, v);
                    if (i != j) c.require(m == quarter, "unbiased " + set.bases[i].tag + "/" + set.bases[j].tag);
                }
            }
        }
    }
    for (std::size_t b = 1; b < set.bases.size(); ++b) {
        const bool expect_product = b == 1 || b == 2;
        for (const auto &v : set.bases[b].vectors) {
            c.require(is_product_vector(v).product == expect_product,
                      set.bases[b].tag + (expect_product ? " has an intricated vector" : " has a product vector"));
        }
    }
    c.require(set.bases[1].tag == "w_00" && set.bases[2].tag == "w_11" && set.bases[3].tag == "w_01" &&
                  set.bases[4].tag == "w_10",
              "basis order");
}

void criterion_4(Check &c) {
    for (int d : {2, 3, 5, 7, 11, 13}) {
        const MubSet set = mub_set_prime(d);
        c.require(set.bases.size() == static_cast<std::size_t>(d + 1), "d=" + num(d) + ": d+1 bases");
        std::vector<const BasisVector *> all;
        std::vector<std::size_t> basis_of;
        for (std::size_t b = 0; b < set.bases.size(); ++b) {
            for (const auto &v : set.bases[b].vectors) {
                all.push_back(&v);
                basis_of.push_back(b);
            }
        }
        const CycloScalar unbiased(Rational(1, d));
        std::size_t ordered_pairs = 0;
        for (std::size_t x = 0; x < all.size(); ++x) {
            for (std::size_t y = 0; y < all.size(); ++y) {
                ++ordered_pairs;
                const CycloScalar ov = overlap(*all[x], *all[y]);
                if (basis_of[x] == basis_of[y]) {
                    c.require(ov == CycloScalar(x == y ? 1 : 0), "d=" + num(d) + ": Gram entry");
                } else {
                    c.require(abs_squared(ov) == unbiased, "d=" + num(d) + ": cross magnitude");
                }
            }
        }
        c.require(ordered_pairs == static_cast<std::size_t>(d * d * (d + 1) * (d + 1)), "d=" + num(d) + ": pair count");
        c.require(set.certified, "d=" + num(d) + ": certificate");
    }
}

void criterion_5(Check &c) {
    for (int d = 1; d <= 9; ++d) {
        const WeylPair w = weyl_pair(d);
        c.require((w.x * w.z - root_of_unity(d, 1) * (w.z * w.x)).is_zero(), "xz - qzx, d=" + num(d));
        std::vector<ExactMatrix> u;
        for (int a = 0; a < d; ++a) {
            for (int b = 0; b < d; ++b) u.push_back(generalized_pauli(d, {a, b}));
        }
        for (int i = 0; i < d * d; ++i) {
            for (int j = 0; j < d * d; ++j) {
                c.require(trace_inner_product(u[i], u[j]) == CycloScalar(i == j ? d : 0), "trace, d=" + num(d));
                const PauliLabel l{i / d, i % d};
                const PauliLabel lp{j / d, j % d};
                const ExactMatrix anti = bracket(u[i], u[j], Bracket::anticommutator);
                if (d <= 7) {
                    for (Bracket kind : {Bracket::commutator, Bracket::anticommutator}) {
                        const ExactMatrix lhs = kind == Bracket::commutator ? bracket(u[i], u[j], kind) : anti;
                        const CycloScalar coeff = root_of_unity(d, -static_cast<std::int64_t>(l.b) * lp.a) +
                                                  (kind == Bracket::commutator ? CycloScalar(-1) : CycloScalar(1)) *
                                                      root_of_unity(d, -static_cast<std::int64_t>(l.a) * lp.b);
                        const PauliLabel result{(l.a + lp.a) % d, (l.b + lp.b) % d};
                        c.require(lhs == coeff * generalized_pauli(d, result), "structure constants, d=" + num(d));
                        const auto sc = structure_constants(d, l, lp, kind);
                        c.require(sc.coefficient == coeff && sc.result == result, "structure_constants(), d=" + num(d));
                    }
                }
                if (d % 2 == 1) {
                    c.require(!anti.is_zero(), "anticommutator vanished, odd d=" + num(d));
                } else if (d == 2 || d == 4) {
                    const bool expected = reduce_mod(l.a * lp.b - l.b * lp.a, d) == d / 2;
                    c.require(anti.is_zero() == expected, "anticommutator zero pattern, d=" + num(d));
                }
            }
        }
    }
}

void criterion_6(Check &c) {
    for (int d = 1; d <= 12; ++d) {
        for (int a = 0; a < d; ++a) {
            const ExactMatrix v = build_v_matrix({d, Rational(0), a});
            const Basis b = eigenbasis(d, a);
            for (int alpha = 0; alpha < d; ++alpha) {
                const CycloScalar lambda = root_of_unity(2 * d, static_cast<std::int64_t>(d - 1) * a - 2 * alpha);
                const auto image = apply(v, b.vectors[alpha].amps);
                for (int k = 0; k < d; ++k) {
                    c.require((image[k] - lambda * b.vectors[alpha].amps[k]).is_zero(),
                              "r=0 residual d=" + num(d) + " a=" + num(a) + " alpha=" + num(alpha));
                }
            }
        }
    }
    for (int d : {2, 3, 5}) {
        for (const Rational &r : {Rational(1, 2), Rational(1, 3)}) {
            for (int a = 0; a < d; ++a) {
                const ExactMatrix v = build_v_matrix({d, r, a});
                const Basis b = eigenbasis(d, a, r);
                for (int alpha = 0; alpha < d; ++alpha) {
                    // q^(j(a + r) - alpha) with j = (d - 1)/2.
                    const Rational turns = (Rational(d - 1, 2) * (Rational(a) + r) - Rational(alpha)) / Rational(d);
                    const CycloScalar lambda = phase(turns);
                    const auto image = apply(v, b.vectors[alpha].amps);
                    for (int k = 0; k < d; ++k) {
                        c.require((image[k] - lambda * b.vectors[alpha].amps[k]).is_zero(),
                                  "r=" + r.str() + " residual d=" + num(d) + " a=" + num(a));
                    }
                }
            }
        }
    }
}

void criterion_7(Check &c) {
    for (int p : {2, 3, 5, 7, 11, 13}) {
        const auto classes = partition_commuting_classes(p);
        c.require(classes.size() == static_cast<std::size_t>(p + 1), "p=" + num(p) + ": p+1 classes");
        std::set<PauliLabel> seen;
        std::vector<std::pair<std::size_t, ExactMatrix>> mats;
        for (std::size_t k = 0; k < classes.size(); ++k) {
            c.require(classes[k].size() == static_cast<std::size_t>(p - 1), "p=" + num(p) + ": class size");
            for (const auto &l : classes[k]) {
                c.require(seen.insert(l.reduced(p)).second, "p=" + num(p) + ": classes overlap");
                c.require(!(l.reduced(p) == PauliLabel{0, 0}), "p=" + num(p) + ": identity included");
                mats.emplace_back(k, generalized_pauli(p, l));
            }
        }
        c.require(seen.size() == static_cast<std::size_t>(p * p - 1), "p=" + num(p) + ": union incomplete");
        for (std::size_t x = 0; x < mats.size(); ++x) {
            for (std::size_t y = x + 1; y < mats.size(); ++y) {
                const bool same = mats[x].first == mats[y].first;
                c.require(commute(mats[x].second, mats[y].second) == same,
                          "p=" + num(p) + (same ? ": class member does not commute" : ": cross pair commutes"));
            }
        }
    }
}

void criterion_8(Check &c) {
    for (int d : {2, 3, 5}) {
        const GroupReport rep = verify_group(d, 10000, 20260101);
        c.require(rep.order == static_cast<std::size_t>(d * d * d), "d=" + num(d) + ": order");
        c.require(rep.closed, "d=" + num(d) + ": closure");
        c.require(rep.has_identity, "d=" + num(d) + ": identity");
        c.require(rep.has_inverses, "d=" + num(d) + ": inverses");
        c.require(rep.injective, "d=" + num(d) + ": label to matrix map not injective");
        c.require(rep.associative_sampled, "d=" + num(d) + ": associativity");
    }
}

void criterion_9(Check &c) {
    std::vector<Basis> naive{computational_basis(4)};
    for (int a = 0; a < 4; ++a) naive.push_back(eigenbasis(4, a));
    const CertificateReport rep = certify(4, naive);
    c.require(!rep.passed, "naive family was certified");
    bool off = false;
    const CycloScalar half_squared(Rational(1, 4));
    for (std::size_t i = 0; i < naive.size(); ++i) {
        for (std::size_t j = i + 1; j < naive.size(); ++j) {
            for (const auto &u : naive[i].vectors) {
                for (const auto &v : naive[j].vectors) off = off || !(overlap_magnitude_squared(u, v) == half_squared);
            }
        }
    }
    c.require(off, "no cross magnitude differs from 1/2");
}

void criterion_10(Check &c) {
    const Basis orbitals = molecular_orbitals({6, {"C1", "C2", "C3", "C4", "C5", "C6"}});
    c.require(orbitals.vectors.size() == 6, "six orbitals");
    for (std::size_t x = 0; x < 6; ++x) {
        for (std::size_t y = 0; y < 6; ++y) {
            c.require(overlap(orbitals.vectors[x], orbitals.vectors[y]) == CycloScalar(x == y ? 1 : 0), "orthonormal");
        }
    }
    const Basis reference = eigenbasis(6, 0);
    std::set<int> alphas;
    for (int s = 0; s < 6; ++s) {
        int matches = 0;
        for (int alpha = 0; alpha < 6; ++alpha) {
            const auto c_s = proportionality(orbitals.vectors[s].amps, reference.vectors[alpha].amps);
            if (!c_s) continue;
            c.require(abs_squared(*c_s) == CycloScalar(1), "phase is not unimodular");
            alphas.insert(alpha);
            ++matches;
        }
        c.require(matches == 1, "orbital " + num(s) + " matched " + num(matches) + " eigenvectors");
    }
    c.require(alphas.size() == 6, "s -> alpha not a bijection");
    const RingMatchReport rep = match_to_eigenbasis(orbitals);
    c.require(rep.bijective && rep.all_matched, "library phase report");
}

std::string capture(const std::string &args, int &exit_code) {
    const std::string cmd = std::string(MUBKIT_CLI) + " " + args + " 2>/dev/null";
    std::string out;
    exit_code = -1;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

void criterion_11(Check &c) {
    const char *commands[] = {"basis --d 3 --a 1",   "basis --d 5 --a 2 --r 1/3", "mub --d 4",   "mub --d 7",
                              "pauli --d 3 --a 1 --b 1", "group --d 3",           "ring --N 6",  "group --d 2 --cayley"};
    for (const char *args : commands) {
        int first_code = 0;
        int second_code = 0;
        const std::string first = capture(args, first_code);
        const std::string second = capture(args, second_code);
        c.require(first_code == 0 && second_code == 0, std::string(args) + ": nonzero exit");
        c.require(!first.empty(), std::string(args) + ": empty output");
        c.require(first == second, std::string(args) + ": outputs differ");
    }
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char *title;
        std::function<void(Check &)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "golden reproduction d=2 (V00, V01, B2, B00, B01)", criterion_1},
        {2, "golden reproduction d=3 (V0a, 12 basis vectors, 9 Pauli matrices)", criterion_2},
        {3, "golden reproduction d=4 (5 bases, unbiased, product/intricated split)", criterion_3},
        {4, "MUB law for d in {2,3,5,7,11,13}", criterion_4},
        {5, "Weyl pair and generalized Pauli algebra", criterion_5},
        {6, "eigenvalue equations (r = 0 and r in {1/2, 1/3})", criterion_6},
        {7, "commuting-class partition for p in {2,3,5,7,11,13}", criterion_7},
        {8, "Pauli group of order d^3 for d in {2,3,5}", criterion_8},
        {9, "negative control: naive d=4 family is not unbiased", criterion_9},
        {10, "benzene orbitals match eigenbasis(6, 0) up to phases", criterion_10},
        {11, "exact-mode CLI output is byte-identical across runs", criterion_11},
    };
    int failed = 0;
    for (const auto &crit : criteria) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            crit.run(check);
        } catch (const std::exception &e) {
            check.require(false, std::string("exception: ") + e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line << (check.ok() ? "[PASS] " : "[FAIL] ") << "criterion " << crit.id << ": " << crit.title << " ("
             << check.cases() << " checks, " << std::fixed;
        line.precision(2);
        line << secs << " s)";
        if (!check.ok()) line << " -- " << check.reason();
        std::cout << line.str() << std::endl;
        if (!check.ok()) ++failed;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
