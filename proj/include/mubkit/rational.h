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

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace mubkit {

__extension__ typedef __int128 wide_int;

/// Exact rational number with 64-bit numerator and denominator.
///
/// Always normalized: gcd(num, den) == 1 and den > 0. Arithmetic is carried
/// out in 128-bit intermediates; a result that does not fit back into 64 bits
/// throws std::overflow_error instead of wrapping.
class Rational {
   public:
    constexpr Rational() = default;
    Rational(std::int64_t num);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);

    /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on anything else.
    static Rational parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Always "p/q", including "0/1" and "3/1".
    std::string str() const;

    Rational operator-() const;
    Rational &operator+=(const Rational &other);
    Rational &operator-=(const Rational &other);
    Rational &operator*=(const Rational &other);
    Rational &operator/=(const Rational &other);

    friend Rational operator+(Rational lhs, const Rational &rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational &rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational &rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational &rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational &, const Rational &) = default;
    friend std::strong_ordering operator<=>(const Rational &lhs, const Rational &rhs);

   private:
    static Rational from_wide(wide_int num, wide_int den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

Rational abs(const Rational &x);

std::ostream &operator<<(std::ostream &out, const Rational &x);

}  // namespace mubkit
