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

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mubkit/rational.h"

namespace mubkit {

/// Floating-point amplitude used by approximate mode.
using ApproxScalar = std::complex<double>;

/// One term c * zeta_n^exponent of a CycloScalar.
struct CycloTerm {
    std::uint32_t exponent = 0;
    Rational coeff;

    friend bool operator==(const CycloTerm &, const CycloTerm &) = default;
};

/// Exact element of a cyclotomic field with an explicit inverse-square-root factor.
///
/// The represented value is
///
///     radicand^(-sqrt_d_power / 2) * sum_k coeff_k * exp(2 pi i exponent_k / order)
///
/// Canonical form, maintained by every operation:
///   - exponents lie in [0, order), strictly increasing, with nonzero coefficients;
///   - order is minimal for the stored exponents (gcd of order and all exponents is 1);
///   - sqrt_d_power is 0 or 1, and radicand is a non-square > 1 exactly when it is 1;
///   - zero is the empty sum with order 1.
///
/// A sum of roots of unity that vanishes (1 + q + q^2, say) is detected and
/// collapsed to zero, so is_zero() and operator== are exact. Nonzero values
/// are not put in a unique normal form; equality goes through subtraction.
class CycloScalar {
   public:
    CycloScalar() = default;
    CycloScalar(Rational value);      // NOLINT(google-explicit-constructor)
    CycloScalar(std::int64_t value);  // NOLINT(google-explicit-constructor)
    CycloScalar(int value) : CycloScalar(static_cast<std::int64_t>(value)) {}  // NOLINT

    /// Builds radicand^(-sqrt_d_power/2) * sum(terms) and canonicalizes. Exponents
    /// may be unreduced and repeated; sqrt_d_power may be any integer.
    static CycloScalar from_parts(std::uint32_t order, std::vector<CycloTerm> terms, int sqrt_d_power = 0,
                                  std::uint32_t radicand = 1);

    /// radicand^(-1/2).
    static CycloScalar inv_sqrt(std::uint32_t radicand);

    std::uint32_t order() const { return order_; }
    const std::vector<CycloTerm> &terms() const { return terms_; }
    int sqrt_d_power() const { return sqrt_power_; }
    std::uint32_t radicand() const { return radicand_; }

    bool is_zero() const { return terms_.empty(); }
    /// Single term: a rational multiple of a root of unity, times the radical.
    bool is_monomial() const { return terms_.size() == 1; }

    /// Returns the value as a rational when it is one (exact test).
    std::optional<Rational> as_rational() const;
    /// Same value, rewritten as a plain rational when possible.
    CycloScalar simplified() const;

    CycloScalar conj() const;
    /// Multiplicative inverse. Throws std::domain_error on zero.
    CycloScalar inverse() const;
    ApproxScalar to_approx() const;
    /// Re-expresses the value with sqrt_d_power == 0 by writing the radical as a
    /// sum of roots of unity. Not canonical; used to add mismatched radicals.
    CycloScalar without_radical() const;

    std::string str() const;

    CycloScalar operator-() const;
    CycloScalar &operator+=(const CycloScalar &other);
    CycloScalar &operator-=(const CycloScalar &other);
    CycloScalar &operator*=(const CycloScalar &other);

    friend CycloScalar operator+(const CycloScalar &lhs, const CycloScalar &rhs);
    friend CycloScalar operator-(const CycloScalar &lhs, const CycloScalar &rhs);
    friend CycloScalar operator*(const CycloScalar &lhs, const CycloScalar &rhs);
    friend CycloScalar operator/(const CycloScalar &lhs, const CycloScalar &rhs) { return lhs * rhs.inverse(); }

    /// Exact equality of values, regardless of representation.
    friend bool operator==(const CycloScalar &lhs, const CycloScalar &rhs);

   private:
    void canonicalize();
    bool sum_vanishes() const;

    std::uint32_t order_ = 1;
    std::vector<CycloTerm> terms_;
    int sqrt_power_ = 0;
    std::uint32_t radicand_ = 1;
};

/// exp(2 pi i k / n). Throws InvalidOrderError for n == 0.
CycloScalar root_of_unity(std::uint32_t n, std::int64_t k);

/// exp(2 pi i turns).
CycloScalar phase(const Rational &turns);

CycloScalar conj(const CycloScalar &x);

/// x * conj(x), rewritten as a rational when it is one.
CycloScalar abs_squared(const CycloScalar &x);

ApproxScalar to_approx(const CycloScalar &x);

/// sqrt(r) as a sum of roots of unity (Gauss sums over the prime factors of r).
CycloScalar sqrt_as_cyclotomic(std::uint32_t r);

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<std::int64_t> &cyclotomic_polynomial(std::uint32_t n);

/// exp(2 pi i k / n) evaluated with exact quadrant reduction.
ApproxScalar unit_root(std::int64_t k, std::uint32_t n);

std::ostream &operator<<(std::ostream &out, const CycloScalar &x);

}  // namespace mubkit
