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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mubkit/cyclic.h"
#include "mubkit/errors.h"
#include "mubkit/mub.h"
#include "mubkit/pauli_group.h"
#include "mubkit/serialize.h"
#include "mubkit/verify.h"
#include "mubkit/weyl.h"

namespace {

using namespace mubkit;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUnsupported = 2;

/// Raised for arguments that parse but cannot be served.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int d = 2;
    int a = 0;
    int b = 0;
    int n_sites = 6;
    int d_max = 7;
    std::string r = "0";
    std::string mode = "exact";
    double tolerance = 1e-10;
    std::string format = "json";
    std::string out;
    std::uint64_t seed = 1;
    bool computational = false;
    bool cayley = false;
    std::vector<std::string> labels;
};

RealParameter parse_r(const std::string &text) {
    if (text.find_first_of(".eE") == std::string::npos) {
        try {
            return Rational::parse(text);
        } catch (const std::exception &e) {
            throw UsageError("--r: " + std::string(e.what()));
        }
    }
    std::size_t used = 0;
    double value = 0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != text.size()) throw UsageError("--r must be a rational p/q or a decimal, got '" + text + "'");
    return value;
}

Mode mode_of(const Options &opt) {
    try {
        return parse_mode(opt.mode);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
}

void require_format(const Options &opt, bool csv_allowed) {
    if (opt.format == "json") return;
    if (opt.format == "csv" && csv_allowed) return;
    throw UsageError("unsupported --format '" + opt.format + "' for this command");
}

void emit(const Options &opt, const std::string &text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + opt.out + " for writing");
    file << text;
    if (!file) throw std::runtime_error("failed writing " + opt.out);
}

void check_dim(int d) {
    if (d < 1) throw UsageError("--d must be >= 1");
}

int cmd_basis(const Options &opt) {
    check_dim(opt.d);
    require_format(opt, true);
    const Mode mode = mode_of(opt);
    if (opt.computational) {
        const Basis basis = computational_basis(opt.d);
        emit(opt, opt.format == "csv" ? basis_csv(to_approx(basis))
                  : mode == Mode::exact ? dump(to_json(basis))
                                        : dump(to_json(to_approx(basis))));
        return kExitOk;
    }
    if (opt.a < 0 || opt.a >= opt.d) throw UsageError("--a must lie in [0, d-1]");
    const RealParameter r = parse_r(opt.r);
    if (mode == Mode::exact) {
        const Basis basis = eigenbasis(opt.d, opt.a, r);
        emit(opt, opt.format == "csv" ? basis_csv(to_approx(basis)) : dump(to_json(basis)));
    } else {
        const ApproxBasis basis = eigenbasis_approx(opt.d, opt.a, r);
        emit(opt, opt.format == "csv" ? basis_csv(basis) : dump(to_json(basis)));
    }
    return kExitOk;
}

int cmd_mub(const Options &opt) {
    check_dim(opt.d);
    require_format(opt, true);
    const Mode mode = mode_of(opt);
    MubSet set;
    if (opt.d == 4) {
        set = mub_set_dim4();
    } else if (is_prime(opt.d)) {
        set = mub_set_prime(opt.d);
    } else {
        throw UnsupportedDimensionError("complete MUB sets are built only for prime d and d = 4, got d = " +
                                        std::to_string(opt.d));
    }
    if (opt.format == "csv") {
        std::vector<ApproxBasis> bases;
        for (const auto &b : set.bases) bases.push_back(to_approx(b));
        emit(opt, basis_csv(bases));
    } else if (mode == Mode::exact) {
        emit(opt, dump(to_json(set)));
    } else {
        Json j = to_json(set);
        Json bases = Json::array();
        for (const auto &b : set.bases) bases.push_back(to_json(to_approx(b)));
        j["bases"] = bases;
        emit(opt, dump(j));
    }
    if (!set.certified) std::cerr << "certification failed: " << set.diagnostic << '\n';
    return set.certified ? kExitOk : kExitFailure;
}

int cmd_pauli(const Options &opt) {
    check_dim(opt.d);
    require_format(opt, false);
    const ExactMatrix u = generalized_pauli(opt.d, {opt.a, opt.b});
    emit(opt, mode_of(opt) == Mode::exact ? dump(to_json(u)) : dump(to_json(to_approx(u))));
    return kExitOk;
}

int cmd_group(const Options &opt) {
    check_dim(opt.d);
    if (opt.cayley) {
        if (opt.d > 3) throw UsageError("the Cayley table is exported only for d <= 3");
        emit(opt, cayley_csv(*pauli_group(opt.d)));
        return kExitOk;
    }
    require_format(opt, false);
    if (opt.d > 7) throw UsageError("group enumeration is limited to d <= 7");
    const auto group = pauli_group(opt.d);
    const GroupReport report = verify_group(opt.d, 1000, opt.seed);
    Json j;
    j["dim"] = opt.d;
    j["order"] = group->order();
    Json elements = Json::array();
    for (const auto &e : group->elements()) elements.push_back(to_json(e));
    j["elements"] = elements;
    j["report"] = to_json(report);
    emit(opt, dump(j));
    return report.ok() ? kExitOk : kExitFailure;
}

int cmd_ring(const Options &opt) {
    if (opt.n_sites < 1) throw UsageError("--N must be >= 1");
    require_format(opt, true);
    RingSpec ring{opt.n_sites, opt.labels};
    if (!ring.site_labels.empty() && ring.site_labels.size() != static_cast<std::size_t>(opt.n_sites)) {
        throw UsageError("--labels needs exactly N names");
    }
    if (mode_of(opt) == Mode::approx) {
        const ApproxBasis basis = molecular_orbitals_approx(ring);
        emit(opt, opt.format == "csv" ? basis_csv(basis) : dump(to_json(basis)));
        return kExitOk;
    }
    const Basis basis = molecular_orbitals(ring);
    if (opt.format == "csv") {
        emit(opt, basis_csv(to_approx(basis)));
        return kExitOk;
    }
    const RingMatchReport match = match_to_eigenbasis(basis);
    Json j;
    j["orbitals"] = to_json(basis);
    j["eigenbasis_match"] = to_json(match);
    emit(opt, dump(j));
    return match.bijective ? kExitOk : kExitFailure;
}

int cmd_verify(const Options &opt) {
    require_format(opt, false);
    if (opt.d_max < 1) throw UsageError("--d-max must be >= 1");
    if (!(opt.tolerance > 0)) throw UsageError("--tolerance must be > 0");
    VerifyConfig cfg;
    cfg.d_max = opt.d_max;
    cfg.mode = mode_of(opt);
    cfg.tolerance = opt.tolerance;
    cfg.seed = opt.seed;
    const auto results = run_verification(cfg);
    emit(opt, format_summary(results));
    return all_passed(results) ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"mubkit: mutually unbiased bases, generalized Pauli operators and the Pauli group"};
    app.require_subcommand(1);
    Options opt;

    auto add_output = [&](CLI::App *sub, bool with_mode) {
        if (with_mode) {
            sub->add_option("--mode", opt.mode, "exact or approx")->check(CLI::IsMember({"exact", "approx"}));
        }
        sub->add_option("--format", opt.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", opt.out, "write to this file instead of stdout");
    };

    auto *basis = app.add_subcommand("basis", "eigenbasis of V(r,a), or the computational basis");
    basis->add_option("--d", opt.d, "dimension")->required();
    basis->add_option("--a", opt.a, "operator index a");
    basis->add_option("--r", opt.r, "real parameter r, as p/q (exact) or a decimal (approx only)");
    basis->add_flag("--computational", opt.computational, "emit the computational basis");
    add_output(basis, true);

    auto *mub = app.add_subcommand("mub", "complete MUB set with its certificate (prime d or d = 4)");
    mub->add_option("--d", opt.d, "dimension")->required();
    add_output(mub, true);

    auto *pauli = app.add_subcommand("pauli", "generalized Pauli matrix X^a Z^b");
    pauli->add_option("--d", opt.d, "dimension")->required();
    pauli->add_option("--a", opt.a, "shift power");
    pauli->add_option("--b", opt.b, "clock power");
    add_output(pauli, true);

    auto *group = app.add_subcommand("group", "Pauli group elements and axiom report");
    group->add_option("--d", opt.d, "dimension")->required();
    group->add_flag("--cayley", opt.cayley, "emit the Cayley table as CSV (d <= 3)");
    group->add_option("--seed", opt.seed, "seed for sampled associativity");
    add_output(group, false);

    auto *ring = app.add_subcommand("ring", "molecular orbitals of an N-site ring");
    ring->add_option("--N", opt.n_sites, "number of sites")->required();
    ring->add_option("--labels", opt.labels, "site names")->delimiter(',');
    add_output(ring, true);

    auto *verify = app.add_subcommand("verify", "run every invariant check up to d-max");
    verify->add_option("--d-max", opt.d_max, "largest dimension swept");
    verify->add_option("--tolerance", opt.tolerance, "absolute tolerance in approx mode");
    verify->add_option("--seed", opt.seed, "seed for randomized sweeps");
    add_output(verify, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUnsupported;
    }

    try {
        if (*basis) return cmd_basis(opt);
        if (*mub) return cmd_mub(opt);
        if (*pauli) return cmd_pauli(opt);
        if (*group) return cmd_group(opt);
        if (*ring) return cmd_ring(opt);
        if (*verify) return cmd_verify(opt);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUnsupported;
    } catch (const UnsupportedDimensionError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUnsupported;
    } catch (const ModeError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUnsupported;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUnsupported;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitFailure;
}
