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

#include <stdexcept>
#include <string>

namespace mubkit {

/// A root-of-unity order of zero was requested.
class InvalidOrderError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// An exact-mode construction received a parameter only approximate mode can
/// represent (a floating r, for instance).
class ModeError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// The requested dimension is outside what a construction is defined for
/// (non-prime d for the commuting-class partition, d=6 MUBs, ...).
class UnsupportedDimensionError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

class DimensionMismatchError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace mubkit
