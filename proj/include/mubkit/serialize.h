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

#include <string>

#include "json.hpp"
#include "mubkit/cyclic.h"
#include "mubkit/cyclo.h"
#include "mubkit/matrix.h"
#include "mubkit/mub.h"
#include "mubkit/pauli_group.h"

namespace mubkit {

using Json = nlohmann::ordered_json;

/// {"order": n, "terms": [[k, "p/q"], ...], "sqrt_d_power": t}, plus "radicand"
/// when t != 0.
Json to_json(const CycloScalar &x);
CycloScalar scalar_from_json(const Json &j);

/// [re, im].
Json to_json(const ApproxScalar &x);
ApproxScalar approx_scalar_from_json(const Json &j);

Json to_json(const MatrixLabel &label);
Json to_json(const ExactMatrix &m);
Json to_json(const ApproxMatrix &m);
ExactMatrix exact_matrix_from_json(const Json &j);

Json to_json(const VectorLabel &label);
Json to_json(const Basis &basis);
Json to_json(const ApproxBasis &basis);
Json to_json(const CertificateReport &report);
Json to_json(const MubSet &set);

Json to_json(const PauliElement &x);
Json to_json(const GroupReport &report);
Json to_json(const RingMatchReport &report);

/// One row per amplitude: vector,label,site,re,im.
std::string basis_csv(const ApproxBasis &basis);
std::string basis_csv(const std::vector<ApproxBasis> &bases);

/// d^3 x d^3 table of product labels, first row and column being the factors.
std::string cayley_csv(const PauliGroup &group);

/// Pretty JSON text with a trailing newline.
std::string dump(const Json &j);

}  // namespace mubkit
