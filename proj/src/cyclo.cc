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

#include "mubkit/cyclo.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "mubkit/errors.h"

namespace mubkit {

namespace {

constexpr std::uint64_t kMaxOrder = 1u << 30;

std::uint32_t checked_lcm(std::uint32_t a, std::uint32_t b) {
    std::uint64_t l = std::lcm<std::uint64_t>(a, b);
    if (l > kMaxOrder) {
        throw std::overflow_error("root-of-unity order too large: " + std::to_string(l));
    }
    return static_cast<std::uint32_t>(l);
}

// r = square^2 * free, free squarefree.
std::pair<std::uint64_t, std::uint64_t> square_decompose(std::uint64_t r) {
    std::uint64_t square = 1;
    std::uint64_t free = 1;
    for (std::uint64_t p = 2; p * p <= r; ++p) {
        int count = 0;
        while (r % p == 0) {
            r /= p;
            ++count;
        }
        for (int i = 0; i + 1 < count; i += 2) square *= p;
        if (count % 2 == 1) free *= p;
    }
    free *= r;
    return {square, free};
}

Rational int_pow(std::int64_t base, int exp) {
    Rational result(1);
    for (int i = 0; i < exp; ++i) result *= Rational(base);
    return result;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
    std::int64_t result = 1;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

// Remainder of sum_k c_k x^k modulo the n-th cyclotomic polynomial.
std::vector<Rational> reduce_mod_cyclotomic(std::uint32_t n, const std::vector<CycloTerm> &terms) {
    const auto &phi = cyclotomic_polynomial(n);
    const std::size_t deg = phi.size() - 1;
    std::vector<Rational> r(std::max<std::size_t>(n, deg), Rational());
    for (const auto &t : terms) r[t.exponent] += t.coeff;
    for (std::size_t i = r.size(); i-- > deg;) {
        if (r[i].is_zero()) continue;
        Rational c = r[i];
        for (std::size_t j = 0; j < deg; ++j) {
            if (phi[j] != 0) r[i - deg + j] -= c * Rational(phi[j]);
        }
        r[i] = Rational();
    }
    r.resize(deg);
    return r;
}

// In-place exact division of num by the monic divisor.
std::vector<std::int64_t> divide_monic(const std::vector<std::int64_t> &num, const std::vector<std::int64_t> &div) {
    std::vector<std::int64_t> rem = num;
    const std::size_t dn = rem.size() - 1;
    const std::size_t dd = div.size() - 1;
    std::vector<std::int64_t> quot(dn - dd + 1, 0);
    for (std::size_t i = dn + 1; i-- > dd;) {
        std::int64_t c = rem[i];
        quot[i - dd] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= c * div[j];
    }
    for (std::size_t i = 0; i < dd; ++i) {
        if (rem[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
    }
    return quot;
}

CycloScalar gauss_sqrt_prime(std::uint32_t p) {
    if (p == 2) {
        return CycloScalar::from_parts(8, {{1, Rational(1)}, {7, Rational(1)}});
    }
    std::vector<CycloTerm> terms;
    for (std::uint32_t a = 1; a < p; ++a) {
        std::int64_t legendre = pow_mod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
        terms.push_back({a, Rational(legendre)});
    }
    CycloScalar g = CycloScalar::from_parts(p, std::move(terms));
    // g^2 = p for p = 1 mod 4 and -p for p = 3 mod 4.
    if (p % 4 == 1) return g;
    return root_of_unity(4, 3) * g;
}

}  // namespace

// --- cyclotomic polynomials and numeric helpers -----------------------------

const std::vector<std::int64_t> &cyclotomic_polynomial(std::uint32_t n) {
    if (n == 0) throw InvalidOrderError("cyclotomic polynomial of order 0");
    static std::mutex mu;
    static std::map<std::uint32_t, std::vector<std::int64_t>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    std::vector<std::int64_t> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (std::uint32_t d = 1; d < n; ++d) {
        if (n % d == 0) poly = divide_monic(poly, cyclotomic_polynomial(d));
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(n, std::move(poly)).first->second;
}

ApproxScalar unit_root(std::int64_t k, std::uint32_t n) {
    if (n == 0) throw InvalidOrderError("root of unity of order 0");
    const std::int64_t nn = n;
    const std::int64_t kk = ((k % nn) + nn) % nn;
    // Nearest quarter turn, then a residual angle in [-pi/4, pi/4].
    const std::int64_t quarter = (8 * kk + nn) / (2 * nn);
    const std::int64_t rem = 4 * kk - quarter * nn;
    double c = 1.0;
    double s = 0.0;
    if (rem != 0) {
        const double theta = std::numbers::pi * static_cast<double>(rem) / (2.0 * static_cast<double>(nn));
        c = std::cos(theta);
        s = std::sin(theta);
    }
    switch (quarter % 4) {
        case 0: return {c, s};
        case 1: return {-s, c};
        case 2: return {-c, -s};
        default: return {s, -c};
    }
}

// --- CycloScalar -------------------------------------------------------------

CycloScalar::CycloScalar(Rational value) {
    if (!value.is_zero()) terms_.push_back({0, value});
}

CycloScalar::CycloScalar(std::int64_t value) : CycloScalar(Rational(value)) {}

CycloScalar CycloScalar::from_parts(std::uint32_t order, std::vector<CycloTerm> terms, int sqrt_d_power,
                                    std::uint32_t radicand) {
    if (order == 0) throw InvalidOrderError("cyclotomic scalar of order 0");
    if (radicand == 0) throw std::domain_error("radicand must be positive");
    CycloScalar x;
    x.order_ = order;
    x.terms_ = std::move(terms);
    for (auto &t : x.terms_) t.exponent %= order;
    std::sort(x.terms_.begin(), x.terms_.end(),
              [](const CycloTerm &a, const CycloTerm &b) { return a.exponent < b.exponent; });
    std::vector<CycloTerm> merged;
    for (const auto &t : x.terms_) {
        if (!merged.empty() && merged.back().exponent == t.exponent) {
            merged.back().coeff += t.coeff;
        } else {
            merged.push_back(t);
        }
    }
    std::erase_if(merged, [](const CycloTerm &t) { return t.coeff.is_zero(); });
    x.terms_ = std::move(merged);
    x.sqrt_power_ = sqrt_d_power;
    x.radicand_ = radicand;
    x.canonicalize();
    return x;
}

CycloScalar CycloScalar::inv_sqrt(std::uint32_t radicand) {
    return from_parts(1, {{0, Rational(1)}}, 1, radicand);
}

// Expects sorted, merged, nonzero terms with reduced exponents.
void CycloScalar::canonicalize() {
    if (terms_.empty()) {
        *this = CycloScalar();
        return;
    }
    if (radicand_ == 1) sqrt_power_ = 0;
    if (sqrt_power_ != 0) {
        const int half = (sqrt_power_ >= 0) ? sqrt_power_ / 2 : -((-sqrt_power_ + 1) / 2);
        const int odd = sqrt_power_ - 2 * half;
        Rational scale(1);
        if (half > 0) scale = Rational(1) / int_pow(radicand_, half);
        if (half < 0) scale = int_pow(radicand_, -half);
        if (odd == 1) {
            auto [square, free] = square_decompose(radicand_);
            if (free == 1) {
                scale /= Rational(static_cast<std::int64_t>(square));
                sqrt_power_ = 0;
            } else {
                sqrt_power_ = 1;
            }
        } else {
            sqrt_power_ = 0;
        }
        if (scale != Rational(1)) {
            for (auto &t : terms_) t.coeff *= scale;
        }
    }
    if (sqrt_power_ == 0) radicand_ = 1;
    if (terms_.size() > 1 && sum_vanishes()) {
        *this = CycloScalar();
        return;
    }
    std::uint32_t g = order_;
    for (const auto &t : terms_) g = std::gcd(g, t.exponent);
    if (g > 1) {
        order_ /= g;
        for (auto &t : terms_) t.exponent /= g;
    }
}

bool CycloScalar::sum_vanishes() const {
    ApproxScalar value = 0.0;
    double scale = 0.0;
    for (const auto &t : terms_) {
        const double c = t.coeff.to_double();
        value += c * unit_root(t.exponent, order_);
        scale += std::abs(c);
    }
    if (std::abs(value) > 1e-9 * scale) return false;
    auto rem = reduce_mod_cyclotomic(order_, terms_);
    return std::all_of(rem.begin(), rem.end(), [](const Rational &c) { return c.is_zero(); });
}

std::optional<Rational> CycloScalar::as_rational() const {
    if (is_zero()) return Rational();
    if (sqrt_power_ == 0 && order_ == 1) return terms_.front().coeff;
    const CycloScalar plain = without_radical();
    if (plain.order_ == 1) return plain.terms_.front().coeff;
    auto rem = reduce_mod_cyclotomic(plain.order_, plain.terms_);
    for (std::size_t i = 1; i < rem.size(); ++i) {
        if (!rem[i].is_zero()) return std::nullopt;
    }
    return rem.front();
}

CycloScalar CycloScalar::simplified() const {
    if (auto r = as_rational()) return CycloScalar(*r);
    return *this;
}

CycloScalar CycloScalar::without_radical() const {
    if (sqrt_power_ == 0) return *this;
    CycloScalar plain = *this;
    plain.sqrt_power_ = 0;
    plain.radicand_ = 1;
    return plain * sqrt_as_cyclotomic(radicand_) * CycloScalar(Rational(1, radicand_));
}

CycloScalar CycloScalar::conj() const {
    std::vector<CycloTerm> out = terms_;
    for (auto &t : out) t.exponent = (order_ - t.exponent) % order_;
    return from_parts(order_, std::move(out), sqrt_power_, radicand_);
}

CycloScalar CycloScalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (sqrt_power_ == 1) {
        CycloScalar plain = *this;
        plain.sqrt_power_ = 0;
        plain.radicand_ = 1;
        CycloScalar inv = plain.inverse();
        for (auto &t : inv.terms_) t.coeff *= Rational(radicand_);
        return from_parts(inv.order_, inv.terms_, 1, radicand_);
    }
    if (is_monomial()) {
        const auto &t = terms_.front();
        return from_parts(order_, {{(order_ - t.exponent) % order_, Rational(1) / t.coeff}});
    }
    // Product of the nontrivial Galois conjugates is norm / x.
    CycloScalar conjugates(1);
    for (std::uint32_t k = 2; k < order_; ++k) {
        if (std::gcd(k, order_) != 1) continue;
        std::vector<CycloTerm> image = terms_;
        for (auto &t : image) {
            t.exponent = static_cast<std::uint32_t>(static_cast<std::uint64_t>(t.exponent) * k % order_);
        }
        conjugates *= from_parts(order_, std::move(image));
    }
    auto norm = (*this * conjugates).as_rational();
    if (!norm || norm->is_zero()) throw std::logic_error("field norm is not a nonzero rational");
    return conjugates * CycloScalar(Rational(1) / *norm);
}

ApproxScalar CycloScalar::to_approx() const {
    ApproxScalar value = 0.0;
    for (const auto &t : terms_) value += t.coeff.to_double() * unit_root(t.exponent, order_);
    if (sqrt_power_ == 1) value /= std::sqrt(static_cast<double>(radicand_));
    return value;
}

std::string CycloScalar::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    if (sqrt_power_ == 1) out << "(";
    bool first = true;
    for (const auto &t : terms_) {
        if (!first) out << " + ";
        first = false;
        out << t.coeff;
        if (t.exponent != 0) out << "*z" << order_ << "^" << t.exponent;
    }
    if (sqrt_power_ == 1) out << ")/sqrt(" << radicand_ << ")";
    return out.str();
}

CycloScalar CycloScalar::operator-() const {
    CycloScalar x = *this;
    for (auto &t : x.terms_) t.coeff = -t.coeff;
    return x;
}

CycloScalar operator+(const CycloScalar &lhs, const CycloScalar &rhs) {
    if (lhs.is_zero()) return rhs;
    if (rhs.is_zero()) return lhs;
    CycloScalar a = lhs;
    CycloScalar b = rhs;
    const bool same_radical = a.sqrt_power_ == b.sqrt_power_ && (a.sqrt_power_ == 0 || a.radicand_ == b.radicand_);
    if (!same_radical) {
        bool aligned = false;
        if (a.sqrt_power_ == 1 && b.sqrt_power_ == 1) {
            auto [sa, fa] = square_decompose(a.radicand_);
            auto [sb, fb] = square_decompose(b.radicand_);
            if (fa == fb) {
                // 1/sqrt(s^2 f) = (1/s) / sqrt(f)
                for (auto &t : a.terms_) t.coeff /= Rational(static_cast<std::int64_t>(sa));
                for (auto &t : b.terms_) t.coeff /= Rational(static_cast<std::int64_t>(sb));
                a.radicand_ = b.radicand_ = static_cast<std::uint32_t>(fa);
                aligned = true;
            }
        }
        if (!aligned) {
            a = a.without_radical();
            b = b.without_radical();
            if (a.is_zero()) return b;
            if (b.is_zero()) return a;
        }
    }
    const std::uint32_t order = checked_lcm(a.order_, b.order_);
    const std::uint32_t fa = order / a.order_;
    const std::uint32_t fb = order / b.order_;
    std::vector<CycloTerm> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
        const std::uint32_t ea = i < a.terms_.size() ? a.terms_[i].exponent * fa : order;
        const std::uint32_t eb = j < b.terms_.size() ? b.terms_[j].exponent * fb : order;
        if (ea < eb) {
            out.push_back({ea, a.terms_[i++].coeff});
        } else if (eb < ea) {
            out.push_back({eb, b.terms_[j++].coeff});
        } else {
            Rational c = a.terms_[i++].coeff + b.terms_[j++].coeff;
            if (!c.is_zero()) out.push_back({ea, c});
        }
    }
    CycloScalar result;
    result.order_ = order;
    result.terms_ = std::move(out);
    result.sqrt_power_ = a.sqrt_power_;
    result.radicand_ = a.radicand_;
    result.canonicalize();
    return result;
}

CycloScalar operator-(const CycloScalar &lhs, const CycloScalar &rhs) {
    return lhs + (-rhs);
}

CycloScalar operator*(const CycloScalar &lhs, const CycloScalar &rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return CycloScalar();
    const std::uint32_t order = checked_lcm(lhs.order_, rhs.order_);
    const std::uint32_t fl = order / lhs.order_;
    const std::uint32_t fr = order / rhs.order_;

    int power = lhs.sqrt_power_ + rhs.sqrt_power_;
    std::uint64_t radicand = 1;
    if (lhs.sqrt_power_ == 1 && rhs.sqrt_power_ == 1) {
        if (lhs.radicand_ == rhs.radicand_) {
            radicand = lhs.radicand_;
        } else {
            radicand = static_cast<std::uint64_t>(lhs.radicand_) * rhs.radicand_;
            power = 1;
            if (radicand > kMaxOrder) throw std::overflow_error("radicand too large");
        }
    } else if (lhs.sqrt_power_ == 1) {
        radicand = lhs.radicand_;
    } else if (rhs.sqrt_power_ == 1) {
        radicand = rhs.radicand_;
    }

    std::vector<CycloTerm> out;
    if (lhs.is_monomial() || rhs.is_monomial()) {
        const bool left_mono = lhs.is_monomial();
        const CycloTerm &mono = left_mono ? lhs.terms_.front() : rhs.terms_.front();
        const std::uint32_t mono_shift = mono.exponent * (left_mono ? fl : fr);
        const auto &others = left_mono ? rhs.terms_ : lhs.terms_;
        const std::uint32_t other_scale = left_mono ? fr : fl;
        out.reserve(others.size());
        for (const auto &t : others) {
            out.push_back({(t.exponent * other_scale + mono_shift) % order, t.coeff * mono.coeff});
        }
        std::sort(out.begin(), out.end(), [](const CycloTerm &a, const CycloTerm &b) { return a.exponent < b.exponent; });
    } else {
        std::vector<Rational> acc(order);
        for (const auto &x : lhs.terms_) {
            for (const auto &y : rhs.terms_) {
                acc[(x.exponent * fl + y.exponent * fr) % order] += x.coeff * y.coeff;
            }
        }
        for (std::uint32_t k = 0; k < order; ++k) {
            if (!acc[k].is_zero()) out.push_back({k, acc[k]});
        }
    }
    CycloScalar result;
    result.order_ = order;
    result.terms_ = std::move(out);
    result.sqrt_power_ = power;
    result.radicand_ = static_cast<std::uint32_t>(radicand);
    result.canonicalize();
    return result;
}

CycloScalar &CycloScalar::operator+=(const CycloScalar &other) {
    return *this = *this + other;
}

CycloScalar &CycloScalar::operator-=(const CycloScalar &other) {
    return *this = *this - other;
}

CycloScalar &CycloScalar::operator*=(const CycloScalar &other) {
    return *this = *this * other;
}

bool operator==(const CycloScalar &lhs, const CycloScalar &rhs) {
    if (lhs.order_ == rhs.order_ && lhs.sqrt_power_ == rhs.sqrt_power_ && lhs.radicand_ == rhs.radicand_ &&
        lhs.terms_ == rhs.terms_) {
        return true;
    }
    return (lhs - rhs).is_zero();
}

// --- free functions ----------------------------------------------------------

CycloScalar root_of_unity(std::uint32_t n, std::int64_t k) {
    if (n == 0) throw InvalidOrderError("root of unity of order 0");
    const std::int64_t nn = n;
    const auto reduced = static_cast<std::uint32_t>(((k % nn) + nn) % nn);
    return CycloScalar::from_parts(n, {{reduced, Rational(1)}});
}

CycloScalar phase(const Rational &turns) {
    if (turns.den() > static_cast<std::int64_t>(kMaxOrder)) {
        throw std::overflow_error("phase denominator too large");
    }
    return root_of_unity(static_cast<std::uint32_t>(turns.den()), turns.num());
}

CycloScalar conj(const CycloScalar &x) {
    return x.conj();
}

CycloScalar abs_squared(const CycloScalar &x) {
    return (x * x.conj()).simplified();
}

ApproxScalar to_approx(const CycloScalar &x) {
    return x.to_approx();
}

CycloScalar sqrt_as_cyclotomic(std::uint32_t r) {
    if (r == 0) return CycloScalar();
    auto [square, free] = square_decompose(r);
    CycloScalar result(Rational(static_cast<std::int64_t>(square)));
    std::uint64_t rest = free;
    for (std::uint64_t p = 2; p <= rest; ++p) {
        if (rest % p == 0) {
            result *= gauss_sqrt_prime(static_cast<std::uint32_t>(p));
            rest /= p;
        }
    }
    return result;
}

std::ostream &operator<<(std::ostream &out, const CycloScalar &x) {
    return out << x.str();
}

}  // namespace mubkit
