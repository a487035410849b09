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

#include "mubkit/rational.h"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace mubkit {

namespace {

wide_int gcd128(wide_int a, wide_int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        wide_int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(wide_int v) {
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view text) {
    std::int64_t value = 0;
    const char *first = text.data();
    const char *last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

Rational::Rational(std::int64_t num) : num_(num), den_(1) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    *this = from_wide(num, den);
}

Rational Rational::from_wide(wide_int num, wide_int den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    wide_int g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0) den = 1;
    if (!fits64(num) || !fits64(den)) {
        throw std::overflow_error("rational arithmetic overflowed 64 bits");
    }
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    std::int64_t n = parse_int(text.substr(0, slash));
    std::int64_t d = parse_int(text.substr(slash + 1));
    if (d == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(n, d);
}

std::string Rational::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    return from_wide(-static_cast<wide_int>(num_), den_);
}

Rational &Rational::operator+=(const Rational &other) {
    if (den_ == other.den_) {
        *this = from_wide(static_cast<wide_int>(num_) + other.num_, den_);
    } else {
        *this = from_wide(static_cast<wide_int>(num_) * other.den_ + static_cast<wide_int>(other.num_) * den_,
                          static_cast<wide_int>(den_) * other.den_);
    }
    return *this;
}

Rational &Rational::operator-=(const Rational &other) {
    return *this += -other;
}

Rational &Rational::operator*=(const Rational &other) {
    if (num_ == 0 || other.num_ == 0) {
        *this = Rational();
        return *this;
    }
    *this = from_wide(static_cast<wide_int>(num_) * other.num_, static_cast<wide_int>(den_) * other.den_);
    return *this;
}

Rational &Rational::operator/=(const Rational &other) {
    if (other.num_ == 0) {
        throw std::domain_error("rational division by zero");
    }
    *this = from_wide(static_cast<wide_int>(num_) * other.den_, static_cast<wide_int>(den_) * other.num_);
    return *this;
}

std::strong_ordering operator<=>(const Rational &lhs, const Rational &rhs) {
    wide_int l = static_cast<wide_int>(lhs.num_) * rhs.den_;
    wide_int r = static_cast<wide_int>(rhs.num_) * lhs.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational abs(const Rational &x) {
    return x.num() < 0 ? -x : x;
}

std::ostream &operator<<(std::ostream &out, const Rational &x) {
    out << x.num();
    if (x.den() != 1) out << "/" << x.den();
    return out;
}

}  // namespace mubkit
