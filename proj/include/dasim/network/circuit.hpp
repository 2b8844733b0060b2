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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dasim/qcore/error.hpp"
#include "dasim/qcore/linalg.hpp"
#include "dasim/topology/coupling_graph.hpp"

namespace dasim::network {

using topology::CouplingGraph;

enum class Gate1Kind { i, x, y, z, h, s, sdg, rx, ry, rz };
enum class Gate2Kind { cnot, cphase, fsg };

struct Gate1 {
    Gate1Kind kind;
    int qubit;
    double angle = 0.0;

    friend bool operator==(const Gate1 &, const Gate1 &) = default;
};

/// Ideal two-qubit gate (digital baseline). cnot: q0 controls q1.
/// cphase: a = phi. fsg: a = phi, b = theta.
struct Gate2 {
    Gate2Kind kind;
    int q0;
    int q1;
    double a = 0.0;
    double b = 0.0;

    friend bool operator==(const Gate2 &, const Gate2 &) = default;
};

/// Gates applied in listed order; the same qubit may appear repeatedly.
struct SingleQubitLayer {
    std::vector<Gate1> gates;
    friend bool operator==(const SingleQubitLayer &, const SingleQubitLayer &) = default;
};

/// exp(-i duration sum alpha_pq Z_p Z_q) over the device graph.
struct AnalogBlock {
    double duration;
    friend bool operator==(const AnalogBlock &, const AnalogBlock &) = default;
};

/// Simultaneous ideal gates on disjoint qubit pairs.
struct TwoQubitLayer {
    std::vector<Gate2> gates;
    friend bool operator==(const TwoQubitLayer &, const TwoQubitLayer &) = default;
};

using Element = std::variant<SingleQubitLayer, AnalogBlock, TwoQubitLayer>;

inline std::string_view gate1_name(Gate1Kind k) {
    static constexpr std::string_view names[] = {"i", "x", "y", "z", "h", "s", "sdg", "rx", "ry", "rz"};
    return names[static_cast<int>(k)];
}
inline bool gate1_has_angle(Gate1Kind k) { return k == Gate1Kind::rx || k == Gate1Kind::ry || k == Gate1Kind::rz; }

inline std::string_view gate2_name(Gate2Kind k) {
    static constexpr std::string_view names[] = {"cnot", "cphase", "fsg"};
    return names[static_cast<int>(k)];
}
inline int gate2_param_count(Gate2Kind k) { return k == Gate2Kind::cnot ? 0 : (k == Gate2Kind::cphase ? 1 : 2); }

inline qcore::Mat2 gate1_matrix(const Gate1 &g) {
    namespace G = qcore::gates;
    switch (g.kind) {
    case Gate1Kind::i: return G::identity();
    case Gate1Kind::x: return G::x();
    case Gate1Kind::y: return G::y();
    case Gate1Kind::z: return G::z();
    case Gate1Kind::h: return G::h();
    case Gate1Kind::s: return G::s();
    case Gate1Kind::sdg: return G::sdg();
    case Gate1Kind::rx: return G::rx(g.angle);
    case Gate1Kind::ry: return G::ry(g.angle);
    case Gate1Kind::rz: return G::rz(g.angle);
    }
    return G::identity();
}

/**
 * Ordered circuit over n qubits. Analog blocks evolve under the device
 * graph, which must be set before any block is added.
 */
class Circuit {
  public:
    Circuit() = default;
    explicit Circuit(int n_qubits) : n_(n_qubits) {
        if (n_qubits < 0) {
            throw DomainError("negative qubit count");
        }
    }
    Circuit(int n_qubits, CouplingGraph device) : Circuit(n_qubits) { set_device(std::move(device)); }

    int n_qubits() const noexcept { return n_; }
    const std::optional<CouplingGraph> &device() const noexcept { return device_; }
    const std::vector<Element> &elements() const noexcept { return elements_; }

    void set_device(CouplingGraph g) {
        if (g.n_qubits() != n_) {
            throw DomainError("device graph has " + std::to_string(g.n_qubits()) + " qubits, circuit has " +
                              std::to_string(n_));
        }
        device_ = std::move(g);
    }

    void add(SingleQubitLayer layer) {
        for (const auto &g : layer.gates) {
            check_qubit(g.qubit);
        }
        elements_.emplace_back(std::move(layer));
    }

    void add(AnalogBlock block) {
        if (!device_) {
            throw DomainError("analog block in a circuit without a device graph");
        }
        if (!(block.duration >= 0.0)) {
            throw DomainError("analog block duration must be non-negative");
        }
        elements_.emplace_back(block);
    }

    void add(TwoQubitLayer layer) {
        std::vector<char> used(static_cast<std::size_t>(n_), 0);
        for (const auto &g : layer.gates) {
            check_qubit(g.q0);
            check_qubit(g.q1);
            if (g.q0 == g.q1 || used[g.q0] || used[g.q1]) {
                throw DomainError("two-qubit layer gates must act on disjoint qubit pairs");
            }
            used[g.q0] = used[g.q1] = 1;
        }
        elements_.emplace_back(std::move(layer));
    }

    /// Appends `other`'s elements (device graphs must agree when both exist).
    void append(const Circuit &other) {
        if (other.n_ != n_) {
            throw DomainError("cannot append circuits of different widths");
        }
        if (other.device_ && !device_) {
            device_ = other.device_;
        }
        for (const auto &e : other.elements_) {
            std::visit([this](const auto &x) { add(x); }, e);
        }
    }

    std::size_t analog_block_count() const {
        std::size_t c = 0;
        for (const auto &e : elements_) {
            if (const auto *a = std::get_if<AnalogBlock>(&e); a && a->duration > 0.0) {
                ++c;
            }
        }
        return c;
    }

    std::size_t two_qubit_gate_count(Gate2Kind kind) const {
        std::size_t c = 0;
        for (const auto &e : elements_) {
            if (const auto *l = std::get_if<TwoQubitLayer>(&e)) {
                for (const auto &g : l->gates) {
                    c += g.kind == kind ? 1 : 0;
                }
            }
        }
        return c;
    }

    std::size_t two_qubit_layer_count() const {
        std::size_t c = 0;
        for (const auto &e : elements_) {
            c += std::holds_alternative<TwoQubitLayer>(e) ? 1 : 0;
        }
        return c;
    }

    /// Total analog time.
    double analog_duration() const {
        double t = 0.0;
        for (const auto &e : elements_) {
            if (const auto *a = std::get_if<AnalogBlock>(&e)) {
                t += a->duration;
            }
        }
        return t;
    }

    friend bool operator==(const Circuit &a, const Circuit &b) {
        if (a.n_ != b.n_ || a.elements_ != b.elements_ || a.device_.has_value() != b.device_.has_value()) {
            return false;
        }
        if (!a.device_) {
            return true;
        }
        const auto &ea = a.device_->edges();
        const auto &eb = b.device_->edges();
        if (ea.size() != eb.size()) {
            return false;
        }
        for (std::size_t i = 0; i < ea.size(); ++i) {
            if (ea[i].p != eb[i].p || ea[i].q != eb[i].q || ea[i].alpha != eb[i].alpha) {
                return false;
            }
        }
        return true;
    }

  private:
    void check_qubit(int q) const {
        if (q < 0 || q >= n_) {
            throw DomainError("qubit index " + std::to_string(q) + " outside [0, " + std::to_string(n_) + ")");
        }
    }

    int n_ = 0;
    std::optional<CouplingGraph> device_;
    std::vector<Element> elements_;
};

} // namespace dasim::network
