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

#include "mubkit/pauli_group.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

#include "mubkit/weyl.h"

namespace mubkit {

namespace {

constexpr std::uint32_t kMissing = std::numeric_limits<std::uint32_t>::max();

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

std::uint64_t matrix_fingerprint(const ExactMatrix &m) {
    std::uint64_t h = m.dim();
    for (std::size_t i = 0; i < m.entries().size(); ++i) {
        const auto &e = m.entries()[i];
        if (e.is_zero()) continue;
        const ApproxScalar z = e.to_approx();
        h = mix(h, i);
        h = mix(h, static_cast<std::uint64_t>(std::llround(z.real() * 4096.0)));
        h = mix(h, static_cast<std::uint64_t>(std::llround(z.imag() * 4096.0)));
    }
    return h;
}

}  // namespace

PauliElement PauliElement::reduced(int d) const {
    return {reduce_mod(a, d), reduce_mod(b, d), reduce_mod(c, d)};
}

std::string PauliElement::str() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

ExactMatrix pauli_element_matrix(int d, const PauliElement &x) {
    const PauliElement r = x.reduced(d);
    ExactMatrix m = root_of_unity(d, r.a) * generalized_pauli(d, {r.b, r.c});
    m.set_label(MatrixLabel::other("w" + r.str()));
    return m;
}

PauliGroup::PauliGroup(int d) : d_(d) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            for (int c = 0; c < d; ++c) elements_.push_back({a, b, c});
        }
    }
    const WeylPair w = weyl_pair(d);
    std::vector<ExactMatrix> shifts{ExactMatrix::identity(d)};
    std::vector<ExactMatrix> clocks{ExactMatrix::identity(d)};
    for (int i = 1; i < d; ++i) {
        shifts.push_back(shifts.back() * w.x);
        clocks.push_back(clocks.back() * w.z);
    }
    matrices_.reserve(elements_.size());
    for (const auto &e : elements_) {
        ExactMatrix m = root_of_unity(d, e.a) * (shifts[e.b] * clocks[e.c]);
        m.set_label(MatrixLabel::other("w" + e.str()));
        matrices_.push_back(std::move(m));
    }
    lookup_.reserve(matrices_.size());
    for (std::uint32_t i = 0; i < matrices_.size(); ++i) lookup_.emplace_back(fingerprint(matrices_[i]), i);
    std::sort(lookup_.begin(), lookup_.end());

    const std::size_t n = elements_.size();
    table_.assign(n, std::vector<std::uint32_t>(n, kMissing));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (auto hit = identify(matrices_[i] * matrices_[j])) table_[i][j] = static_cast<std::uint32_t>(index(*hit));
        }
    }
    inverse_.assign(n, kMissing);
    const std::uint32_t identity = static_cast<std::uint32_t>(index({0, 0, 0}));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (table_[i][j] == identity) {
                inverse_[i] = static_cast<std::uint32_t>(j);
                break;
            }
        }
    }
}

std::size_t PauliGroup::index(const PauliElement &x) const {
    const PauliElement r = x.reduced(d_);
    return (static_cast<std::size_t>(r.a) * d_ + r.b) * d_ + r.c;
}

std::uint64_t PauliGroup::fingerprint(const ExactMatrix &m) const {
    return matrix_fingerprint(m);
}

std::optional<PauliElement> PauliGroup::identify(const ExactMatrix &m) const {
    if (m.dim() != static_cast<std::size_t>(d_)) return std::nullopt;
    const std::uint64_t fp = fingerprint(m);
    auto range = std::equal_range(lookup_.begin(), lookup_.end(), std::make_pair(fp, std::uint32_t{0}),
                                  [](const auto &l, const auto &r) { return l.first < r.first; });
    for (auto it = range.first; it != range.second; ++it) {
        if (matrices_[it->second] == m) return elements_[it->second];
    }
    // Rounding can in principle split equal values across fingerprints.
    for (std::size_t i = 0; i < matrices_.size(); ++i) {
        if (matrices_[i] == m) return elements_[i];
    }
    return std::nullopt;
}

PauliElement PauliGroup::multiply(const PauliElement &x, const PauliElement &y) const {
    const std::uint32_t k = table_[index(x)][index(y)];
    if (k == kMissing) throw std::logic_error("product " + x.str() + "*" + y.str() + " is not a group element");
    return elements_[k];
}

PauliElement PauliGroup::inverse(const PauliElement &x) const {
    const std::uint32_t k = inverse_[index(x)];
    if (k == kMissing) throw std::logic_error(x.str() + " has no inverse in the label set");
    return elements_[k];
}

std::shared_ptr<const PauliGroup> pauli_group(int d) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const PauliGroup>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto &slot = cache[d];
    if (!slot) slot = std::make_shared<const PauliGroup>(d);
    return slot;
}

PauliElement multiply(const PauliElement &x, const PauliElement &y, int d) {
    return pauli_group(d)->multiply(x, y);
}

PauliElement inverse(const PauliElement &x, int d) {
    return pauli_group(d)->inverse(x);
}

std::vector<PauliElement> enumerate_group(int d) {
    return pauli_group(d)->elements();
}

GroupReport verify_group(int d, std::size_t associativity_samples, std::uint64_t seed) {
    const PauliGroup group(d);
    const auto &mats = group.matrices();
    const std::size_t n = group.order();
    GroupReport report;
    report.order = n;
    report.order_is_d_cubed = n == static_cast<std::size_t>(d) * d * d;

    report.injective = true;
    for (std::size_t i = 0; i < n && report.injective; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (mats[i] == mats[j]) {
                report.injective = false;
                break;
            }
        }
    }

    report.closed = true;
    for (const auto &row : group.cayley_table()) {
        if (std::find(row.begin(), row.end(), kMissing) != row.end()) report.closed = false;
    }

    const std::size_t e = group.index({0, 0, 0});
    report.has_identity = mats[e] == ExactMatrix::identity(d);
    report.has_inverses = true;
    if (report.closed) {
        for (std::size_t i = 0; i < n; ++i) {
            if (group.cayley_table()[e][i] != i || group.cayley_table()[i][e] != i) report.has_identity = false;
            const auto &row = group.cayley_table()[i];
            if (std::find(row.begin(), row.end(), static_cast<std::uint32_t>(e)) == row.end()) {
                report.has_inverses = false;
            }
        }
    } else {
        report.has_identity = false;
        report.has_inverses = false;
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    report.associative_sampled = true;
    for (std::size_t s = 0; s < associativity_samples; ++s) {
        const auto &x = mats[pick(rng)];
        const auto &y = mats[pick(rng)];
        const auto &z = mats[pick(rng)];
        if (!((x * y) * z == x * (y * z))) {
            report.associative_sampled = false;
            break;
        }
    }
    report.associativity_samples = associativity_samples;

    report.generated_order = generated_group_order(d, n + 1);
    report.generated_exceeds_labels = report.generated_order > n;
    return report;
}

std::size_t generated_group_order(int d, std::size_t limit) {
    const WeylPair w = weyl_pair(d);
    std::vector<ExactMatrix> found{ExactMatrix::identity(d)};
    std::multimap<std::uint64_t, std::size_t> seen{{matrix_fingerprint(found.front()), 0}};
    std::size_t frontier = 0;
    while (frontier < found.size() && found.size() <= limit) {
        const ExactMatrix current = found[frontier++];
        for (const ExactMatrix *g : {&w.x, &w.z}) {
            ExactMatrix next = current * *g;
            const std::uint64_t fp = matrix_fingerprint(next);
            bool known = false;
            auto range = seen.equal_range(fp);
            for (auto it = range.first; it != range.second; ++it) {
                if (found[it->second] == next) {
                    known = true;
                    break;
                }
            }
            if (!known) {
                seen.emplace(fp, found.size());
                found.push_back(std::move(next));
                if (found.size() > limit) break;
            }
        }
    }
    return found.size();
}

}  // namespace mubkit
