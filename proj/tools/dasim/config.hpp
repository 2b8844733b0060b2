// Copyright 2026 The dasim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// YAML run configuration; the grammar is documented in README.md.

#include <yaml-cpp/yaml.h>

#include <optional>
#include <string>
#include <vector>

#include "dasim/fermion/hamiltonian.hpp"
#include "dasim/network/trotter.hpp"
#include "dasim/noise/sweep.hpp"
#include "dasim/topology/coupling_graph.hpp"
#include "dasim/topology/partition.hpp"

namespace dasim::cli {

/// Bad or missing configuration; maps to exit status 3.
class ConfigError : public Error {
  public:
    using Error::Error;
};

inline std::string where(const YAML::Node &n) {
    const auto m = n.Mark();
    if (m.line < 0) {
        return "";
    }
    return "line " + std::to_string(m.line + 1) + ", column " + std::to_string(m.column + 1) + ": ";
}

[[noreturn]] inline void fail(const YAML::Node &n, const std::string &field, const std::string &msg) {
    throw ConfigError(where(n) + "field '" + field + "': " + msg);
}

inline YAML::Node child(const YAML::Node &n, const std::string &key) {
    if (!n.IsMap()) {
        fail(n, key, "expected a mapping");
    }
    return n[key];
}

inline YAML::Node require(const YAML::Node &n, const std::string &key) {
    YAML::Node c = child(n, key);
    if (!c) {
        fail(n, key, "missing");
    }
    return c;
}

template <class T>
T as(const YAML::Node &n, const std::string &field) {
    try {
        return n.as<T>();
    } catch (const YAML::Exception &) {
        fail(n, field, "cannot read value '" + (n.IsScalar() ? n.Scalar() : std::string("<non-scalar>")) + "'");
    }
}

/// Real number; strings such as "pi/4" or "3/2" are accepted.
inline double real(const YAML::Node &n, const std::string &field) {
    if (!n.IsScalar()) {
        fail(n, field, "expected a number");
    }
    try {
        return parse_scalar<double>(n.Scalar());
    } catch (const Error &e) {
        fail(n, field, e.what());
    }
}

inline Rational rational(const YAML::Node &n, const std::string &field) {
    if (!n.IsScalar()) {
        fail(n, field, "expected a number");
    }
    try {
        return parse_scalar<Rational>(n.Scalar());
    } catch (const Error &e) {
        fail(n, field, e.what() + std::string(" (exact mode needs rational literals)"));
    }
}

template <class T>
T get_or(const YAML::Node &n, const std::string &key, T fallback) {
    const YAML::Node c = child(n, key);
    return c ? as<T>(c, key) : fallback;
}

inline double real_or(const YAML::Node &n, const std::string &key, double fallback) {
    const YAML::Node c = child(n, key);
    return c ? real(c, key) : fallback;
}

/// `topology:` section. Either a generator (kind + size) or explicit edges.
template <class S>
topology::BasicCouplingGraph<S> read_topology(const YAML::Node &root) {
    const YAML::Node t = require(root, "topology");
    auto num = [](const YAML::Node &n, const std::string &f) {
        if constexpr (is_exact_v<S>) {
            return rational(n, f);
        } else {
            return real(n, f);
        }
    };
    try {
        if (const YAML::Node edges = child(t, "edges")) {
            const int n = as<int>(require(t, "qubits"), "topology.qubits");
            topology::BasicCouplingGraph<S> g(n);
            for (const auto &e : edges) {
                if (!e.IsSequence() || e.size() != 3) {
                    fail(e, "topology.edges", "each edge is [p, q, alpha]");
                }
                g.add_edge(as<int>(e[0], "topology.edges"), as<int>(e[1], "topology.edges"),
                           num(e[2], "topology.edges"));
            }
            return g;
        }
        const std::string kind = as<std::string>(require(t, "kind"), "topology.kind");
        const YAML::Node a = child(t, "alpha");
        const S alpha = a ? num(a, "topology.alpha") : S(1);
        if (kind == "chain") {
            return topology::chain<S>(as<int>(require(t, "n"), "topology.n"), alpha);
        }
        if (kind == "complete" || kind == "all-to-all") {
            return topology::complete<S>(as<int>(require(t, "n"), "topology.n"), alpha);
        }
        if (kind == "ladder") {
            return topology::ladder<S>(as<int>(require(t, "sites"), "topology.sites"), alpha);
        }
        if (kind == "grid") {
            if (child(t, "rows")) {
                return topology::grid<S>(as<int>(t["rows"], "topology.rows"), as<int>(require(t, "cols"), "topology.cols"),
                                         alpha);
            }
            const auto [r, c] = topology::grid_shape_for(as<int>(require(t, "n"), "topology.n"));
            return topology::grid<S>(r, c, alpha);
        }
        fail(t["kind"], "topology.kind", "unknown kind '" + kind + "' (chain, ladder, grid, complete)");
    } catch (const DomainError &e) {
        fail(t, "topology", e.what());
    }
}

inline std::vector<std::pair<int, int>> read_pairs(const YAML::Node &root) {
    std::vector<std::pair<int, int>> out;
    const YAML::Node p = child(root, "pairs");
    if (!p) {
        return out;
    }
    if (!p.IsSequence()) {
        fail(p, "pairs", "expected a list of [p, q]");
    }
    for (const auto &e : p) {
        if (!e.IsSequence() || e.size() != 2) {
            fail(e, "pairs", "each pair is [p, q]");
        }
        out.emplace_back(as<int>(e[0], "pairs"), as<int>(e[1], "pairs"));
    }
    return out;
}

inline Eigen::MatrixXd read_matrix(const YAML::Node &n, const std::string &field, int dim) {
    if (!n.IsSequence() || static_cast<int>(n.size()) != dim) {
        fail(n, field, "expected " + std::to_string(dim) + " rows");
    }
    Eigen::MatrixXd m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        if (!n[i].IsSequence() || static_cast<int>(n[i].size()) != dim) {
            fail(n[i], field, "expected " + std::to_string(dim) + " entries per row");
        }
        for (int j = 0; j < dim; ++j) {
            m(i, j) = real(n[i][j], field);
        }
    }
    return m;
}

inline Eigen::VectorXd read_vector(const YAML::Node &n, const std::string &field, int dim) {
    if (!n.IsSequence() || static_cast<int>(n.size()) != dim) {
        fail(n, field, "expected " + std::to_string(dim) + " entries");
    }
    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; ++i) {
        v(i) = real(n[i], field);
    }
    return v;
}

struct HamiltonianSpec {
    bool spinful = false;
    fermion::FermionHamiltonian spinless;
    fermion::SpinfulHamiltonian spin;
};

/// `hamiltonian:` section; `seed_override` replaces random.seed.
inline HamiltonianSpec read_hamiltonian(const YAML::Node &root, std::optional<std::uint64_t> seed_override) {
    const YAML::Node h = require(root, "hamiltonian");
    HamiltonianSpec out;
    const std::string model = get_or<std::string>(h, "model", "spinless");
    if (model != "spinless" && model != "spinful") {
        fail(h["model"], "hamiltonian.model", "expected spinless or spinful");
    }
    out.spinful = model == "spinful";
    const std::string size_key = out.spinful ? "sites" : "modes";
    const int n = as<int>(require(h, size_key), "hamiltonian." + size_key);
    try {
        if (const YAML::Node r = child(h, "random")) {
            const double bound = real_or(r, "bound", 2.0);
            std::uint64_t seed = seed_override.value_or(0);
            if (!seed_override) {
                seed = as<std::uint64_t>(require(r, "seed"), "hamiltonian.random.seed");
            }
            if (out.spinful) {
                out.spin = fermion::random_spinful_hamiltonian(n, bound, seed);
            } else {
                out.spinless = fermion::random_hamiltonian(n, bound, seed);
            }
            return out;
        }
        if (out.spinful) {
            out.spin = fermion::SpinfulHamiltonian::zero(n);
            if (child(h, "T")) out.spin.T_up = read_matrix(h["T"], "hamiltonian.T", n);
            if (child(h, "U")) out.spin.U_down = read_matrix(h["U"], "hamiltonian.U", n);
            if (child(h, "V")) out.spin.V_onsite = read_vector(h["V"], "hamiltonian.V", n);
            out.spin.validate();
        } else {
            out.spinless = fermion::FermionHamiltonian::zero(n);
            if (child(h, "U")) out.spinless.U = read_vector(h["U"], "hamiltonian.U", n);
            if (child(h, "T")) out.spinless.T = read_matrix(h["T"], "hamiltonian.T", n);
            if (child(h, "V")) out.spinless.V = read_matrix(h["V"], "hamiltonian.V", n);
            out.spinless.validate();
        }
    } catch (const DomainError &e) {
        fail(h, "hamiltonian", e.what());
    }
    return out;
}

/// `sweep:` section. grid is a list or {start, stop, points}.
inline noise::SweepConfig read_sweep(const YAML::Node &root) {
    const YAML::Node s = require(root, "sweep");
    noise::SweepConfig c;
    try {
        c.variable = noise::parse_sweep_variable(as<std::string>(require(s, "variable"), "sweep.variable"));
    } catch (const DomainError &e) {
        fail(s["variable"], "sweep.variable", e.what());
    }
    c.n_qubits = get_or<int>(s, "n_qubits", c.n_qubits);
    c.n_states = get_or<int>(s, "n_states", c.n_states);
    c.seed = get_or<std::uint64_t>(s, "seed", c.seed);
    c.dt = real_or(s, "dt", c.dt);
    c.bound = real_or(s, "bound", c.bound);
    c.alpha = real_or(s, "alpha", c.alpha);
    if (const YAML::Node b = child(s, "backend")) {
        try {
            c.backend = network::parse_backend(as<std::string>(b, "sweep.backend"));
        } catch (const DomainError &e) {
            fail(b, "sweep.backend", e.what());
        }
    }
    const YAML::Node g = require(s, "grid");
    if (g.IsSequence()) {
        for (const auto &x : g) {
            c.grid.push_back(real(x, "sweep.grid"));
        }
    } else {
        const double a = real(require(g, "start"), "sweep.grid.start");
        const double b = real(require(g, "stop"), "sweep.grid.stop");
        const int k = as<int>(require(g, "points"), "sweep.grid.points");
        if (k < 2) {
            fail(g, "sweep.grid.points", "need at least 2 points");
        }
        for (int i = 0; i < k; ++i) {
            c.grid.push_back(a + (b - a) * i / (k - 1));
        }
    }
    return c;
}

inline YAML::Node load_config(const std::string &path) {
    try {
        return YAML::LoadFile(path);
    } catch (const YAML::BadFile &) {
        throw ConfigError("cannot open config file '" + path + "'");
    } catch (const YAML::ParserException &e) {
        throw ConfigError(path + ": line " + std::to_string(e.mark.line + 1) + ": " + e.msg);
    }
}

} // namespace dasim::cli
