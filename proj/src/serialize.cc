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

#include "mubkit/serialize.h"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace mubkit {

namespace {

std::string vector_name(const VectorLabel &label) {
    if (label.kind == VectorKind::computational) return "|" + std::to_string(label.alpha) + ">";
    if (label.kind == VectorKind::orbital) return "|kappa_" + std::to_string(label.alpha) + ">";
    if (label.extra) {
        return "|" + std::to_string(label.a) + " " + std::to_string(label.extra->first) + " " +
               std::to_string(label.alpha) + " " + std::to_string(label.extra->second) + ">";
    }
    return "|" + std::to_string(label.a) + " " + std::to_string(label.alpha) + ">";
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

template <class S>
Json basis_json(const BasisT<S> &basis) {
    Json j;
    j["dim"] = basis.dim;
    j["tag"] = basis.tag;
    if (!basis.site_labels.empty()) j["site_labels"] = basis.site_labels;
    if (!basis.metadata.empty()) {
        Json meta = Json::object();
        for (const auto &[k, v] : basis.metadata) meta[k] = v;
        j["metadata"] = meta;
    }
    Json vectors = Json::array();
    for (const auto &v : basis.vectors) {
        Json entry;
        entry["label"] = to_json(v.label);
        Json amps = Json::array();
        for (const auto &x : v.amps) amps.push_back(to_json(x));
        entry["amps"] = amps;
        vectors.push_back(entry);
    }
    j["vectors"] = vectors;
    return j;
}

template <class S>
Json matrix_json(const Matrix<S> &m, const char *mode) {
    Json j;
    j["dim"] = m.dim();
    j["mode"] = mode;
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(row);
    }
    j["entries"] = rows;
    j["label"] = to_json(m.label());
    return j;
}

}  // namespace

Json to_json(const CycloScalar &x) {
    Json j;
    j["order"] = x.order();
    Json terms = Json::array();
    for (const auto &t : x.terms()) terms.push_back(Json::array({t.exponent, t.coeff.str()}));
    j["terms"] = terms;
    j["sqrt_d_power"] = x.sqrt_d_power();
    if (x.sqrt_d_power() != 0) j["radicand"] = x.radicand();
    return j;
}

CycloScalar scalar_from_json(const Json &j) {
    if (!j.is_object()) throw std::invalid_argument("scalar must be a JSON object");
    const auto order = j.at("order").get<std::uint32_t>();
    std::vector<CycloTerm> terms;
    for (const auto &t : j.at("terms")) {
        if (!t.is_array() || t.size() != 2) throw std::invalid_argument("scalar term must be [exponent, \"p/q\"]");
        terms.push_back({t[0].get<std::uint32_t>(), Rational::parse(t[1].get<std::string>())});
    }
    const int power = j.at("sqrt_d_power").get<int>();
    const std::uint32_t radicand = j.contains("radicand") ? j.at("radicand").get<std::uint32_t>() : 1;
    if (power != 0 && !j.contains("radicand")) throw std::invalid_argument("scalar with sqrt_d_power needs a radicand");
    return CycloScalar::from_parts(order, std::move(terms), power, radicand);
}

Json to_json(const ApproxScalar &x) { return Json::array({x.real(), x.imag()}); }

ApproxScalar approx_scalar_from_json(const Json &j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("approximate scalar must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const MatrixLabel &label) {
    Json j;
    switch (label.kind) {
        case MatrixLabel::Kind::v_operator:
            j["kind"] = "V";
            j["r"] = label.text;
            j["a"] = label.a;
            break;
        case MatrixLabel::Kind::shift:
            j["kind"] = "X";
            break;
        case MatrixLabel::Kind::clock:
            j["kind"] = "Z";
            break;
        case MatrixLabel::Kind::pauli:
            j["kind"] = "U";
            j["a"] = label.a;
            j["b"] = label.b;
            break;
        case MatrixLabel::Kind::product:
            j["kind"] = "product";
            j["text"] = label.text;
            break;
        case MatrixLabel::Kind::other:
            j["kind"] = "other";
            j["text"] = label.text;
            break;
    }
    return j;
}

Json to_json(const ExactMatrix &m) { return matrix_json(m, "exact"); }
Json to_json(const ApproxMatrix &m) { return matrix_json(m, "approx"); }

ExactMatrix exact_matrix_from_json(const Json &j) {
    if (j.at("mode").get<std::string>() != "exact") throw std::invalid_argument("matrix is not in exact mode");
    const auto dim = j.at("dim").get<std::size_t>();
    ExactMatrix m(dim);
    const auto &rows = j.at("entries");
    if (rows.size() != dim) throw std::invalid_argument("matrix row count does not match dim");
    for (std::size_t r = 0; r < dim; ++r) {
        if (rows[r].size() != dim) throw std::invalid_argument("matrix row length does not match dim");
        for (std::size_t c = 0; c < dim; ++c) m(r, c) = scalar_from_json(rows[r][c]);
    }
    return m;
}

Json to_json(const VectorLabel &label) {
    Json j;
    j["kind"] = to_string(label.kind);
    j["name"] = vector_name(label);
    j["a"] = label.a;
    j["alpha"] = label.alpha;
    if (label.extra) {
        j["b"] = label.extra->first;
        j["beta"] = label.extra->second;
    }
    if (!label.note.empty()) j["note"] = label.note;
    return j;
}

Json to_json(const Basis &basis) { return basis_json(basis); }
Json to_json(const ApproxBasis &basis) { return basis_json(basis); }

Json to_json(const CertificateReport &report) {
    Json j;
    j["passed"] = report.passed;
    Json pairs = Json::array();
    for (const auto &p : report.pairs) {
        Json entry;
        entry["first"] = p.first;
        entry["second"] = p.second;
        entry["passed"] = p.passed;
        Json mags = Json::array();
        for (const auto &m : p.magnitudes_squared) {
            const auto r = m.as_rational();
            mags.push_back(r ? Json(r->str()) : to_json(m));
        }
        entry["magnitudes_squared"] = mags;
        pairs.push_back(entry);
    }
    j["pairs"] = pairs;
    return j;
}

Json to_json(const MubSet &set) {
    Json j;
    j["dim"] = set.dim;
    j["certified"] = set.certified;
    if (!set.diagnostic.empty()) j["diagnostic"] = set.diagnostic;
    Json bases = Json::array();
    for (const auto &b : set.bases) bases.push_back(to_json(b));
    j["bases"] = bases;
    j["certificate"] = to_json(set.certificate);
    return j;
}

Json to_json(const PauliElement &x) { return Json::array({x.a, x.b, x.c}); }

Json to_json(const GroupReport &report) {
    Json j;
    j["order"] = report.order;
    j["order_is_d_cubed"] = report.order_is_d_cubed;
    j["injective"] = report.injective;
    j["closed"] = report.closed;
    j["has_identity"] = report.has_identity;
    j["has_inverses"] = report.has_inverses;
    j["associative_sampled"] = report.associative_sampled;
    j["associativity_samples"] = report.associativity_samples;
    j["generated_order"] = report.generated_order;
    j["generated_exceeds_labels"] = report.generated_exceeds_labels;
    j["ok"] = report.ok();
    return j;
}

Json to_json(const RingMatchReport &report) {
    Json j;
    j["all_matched"] = report.all_matched;
    j["bijective"] = report.bijective;
    Json matches = Json::array();
    for (const auto &m : report.matches) {
        Json entry;
        entry["s"] = m.s;
        entry["alpha"] = m.alpha;
        entry["phase"] = to_json(m.phase);
        matches.push_back(entry);
    }
    j["matches"] = matches;
    return j;
}

std::string basis_csv(const ApproxBasis &basis) { return basis_csv(std::vector<ApproxBasis>{basis}); }

std::string basis_csv(const std::vector<ApproxBasis> &bases) {
    std::ostringstream out;
    out << "basis,vector,label,site,re,im\n";
    for (const auto &basis : bases) {
        for (std::size_t v = 0; v < basis.vectors.size(); ++v) {
            const auto &vec = basis.vectors[v];
            for (std::size_t k = 0; k < vec.amps.size(); ++k) {
                const std::string site = k < basis.site_labels.size() ? basis.site_labels[k] : std::to_string(k);
                out << basis.tag << ',' << v << ',' << vector_name(vec.label) << ',' << site << ','
                    << format_double(vec.amps[k].real()) << ',' << format_double(vec.amps[k].imag()) << '\n';
            }
        }
    }
    return out.str();
}

std::string cayley_csv(const PauliGroup &group) {
    const auto &elements = group.elements();
    auto name = [](const PauliElement &x) {
        return std::to_string(x.a) + " " + std::to_string(x.b) + " " + std::to_string(x.c);
    };
    std::ostringstream out;
    out << "*";
    for (const auto &e : elements) out << ',' << name(e);
    out << '\n';
    const auto &table = group.cayley_table();
    for (std::size_t i = 0; i < elements.size(); ++i) {
        out << name(elements[i]);
        for (std::size_t j = 0; j < elements.size(); ++j) out << ',' << name(elements[table[i][j]]);
        out << '\n';
    }
    return out.str();
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

}  // namespace mubkit
