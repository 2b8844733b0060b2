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

/**
 * @file
 * Line-oriented circuit text format.
 *
 *     qubits 4
 *     edge 0 1 1          # device coupling p q alpha (optional)
 *     device              # closes the edge list
 *     layer               # opens a single-qubit layer
 *     h 1
 *     rz 0 0.39269908169872414
 *     zz 0.7853981633974483
 *     layer2              # opens a two-qubit layer
 *     cnot 0 1
 *     fsg 2 3 0.1 3.04
 *
 * Numbers are written in shortest round-trip form, so write/read is exact.
 */

#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "dasim/network/circuit.hpp"
#include "dasim/qcore/scalar.hpp"
#include "dasim/qcore/text.hpp"

namespace dasim::network {

inline void write_circuit(std::ostream &out, const Circuit &c) {
    out << "qubits " << c.n_qubits() << '\n';
    if (c.device()) {
        for (const auto &e : c.device()->edges()) {
            out << "edge " << e.p << ' ' << e.q << ' ' << format_scalar(e.alpha) << '\n';
        }
        out << "device\n";
    }
    for (const auto &el : c.elements()) {
        if (const auto *l = std::get_if<SingleQubitLayer>(&el)) {
            out << "layer\n";
            for (const auto &g : l->gates) {
                out << gate1_name(g.kind) << ' ' << g.qubit;
                if (gate1_has_angle(g.kind)) {
                    out << ' ' << format_scalar(g.angle);
                }
                out << '\n';
            }
        } else if (const auto *a = std::get_if<AnalogBlock>(&el)) {
            out << "zz " << format_scalar(a->duration) << '\n';
        } else {
            out << "layer2\n";
            for (const auto &g : std::get<TwoQubitLayer>(el).gates) {
                out << gate2_name(g.kind) << ' ' << g.q0 << ' ' << g.q1;
                const int np = gate2_param_count(g.kind);
                if (np >= 1) {
                    out << ' ' << format_scalar(g.a);
                }
                if (np >= 2) {
                    out << ' ' << format_scalar(g.b);
                }
                out << '\n';
            }
        }
    }
}

inline std::string circuit_to_string(const Circuit &c) {
    std::ostringstream s;
    write_circuit(s, c);
    return s.str();
}

inline Circuit read_circuit(std::istream &in) {
    std::optional<Circuit> c;
    std::optional<CouplingGraph> graph;
    enum class Open { none, one, two } open = Open::none;
    SingleQubitLayer l1;
    TwoQubitLayer l2;

    auto flush = [&] {
        if (open == Open::one) {
            c->add(std::move(l1));
        } else if (open == Open::two) {
            c->add(std::move(l2));
        }
        l1 = {};
        l2 = {};
        open = Open::none;
    };

    text::for_each_line(in, [&](const std::vector<std::string> &t, int line) {
        text::at_line(line, [&] {
            const std::string &kw = t[0];
            if (kw == "qubits") {
                if (c || t.size() != 2) {
                    throw ParseError("'qubits N' must appear once, first");
                }
                const int n = text::parse_int(t[1], line);
                c.emplace(n);
                graph.emplace(n);
                return;
            }
            if (!c) {
                throw ParseError("missing 'qubits N' header");
            }
            if (kw == "edge") {
                if (t.size() != 4 || !c->elements().empty() || open != Open::none) {
                    throw ParseError("'edge p q alpha' lines must precede all gates");
                }
                graph->add_edge(text::parse_int(t[1], line), text::parse_int(t[2], line), parse_scalar<double>(t[3]));
                return;
            }
            if (kw == "device") {
                if (t.size() != 1 || c->device()) {
                    throw ParseError("'device' must appear once, after the edges");
                }
                c->set_device(*graph);
                return;
            }
            if (!c->device() && graph->edge_count() > 0) {
                c->set_device(*graph);
            }
            if (kw == "layer" || kw == "layer2") {
                if (t.size() != 1) {
                    throw ParseError("'" + kw + "' takes no arguments");
                }
                flush();
                open = kw == "layer" ? Open::one : Open::two;
                return;
            }
            if (kw == "zz") {
                if (t.size() != 2) {
                    throw ParseError("expected 'zz duration'");
                }
                flush();
                if (!c->device()) {
                    c->set_device(*graph);
                }
                c->add(AnalogBlock{parse_scalar<double>(t[1])});
                return;
            }
            for (int k = 0; k <= static_cast<int>(Gate1Kind::rz); ++k) {
                const auto kind = static_cast<Gate1Kind>(k);
                if (kw != gate1_name(kind)) {
                    continue;
                }
                if (open != Open::one) {
                    throw ParseError("single-qubit gate outside a 'layer'");
                }
                const std::size_t want = gate1_has_angle(kind) ? 3 : 2;
                if (t.size() != want) {
                    throw ParseError("wrong argument count for '" + kw + "'");
                }
                l1.gates.push_back({kind, text::parse_int(t[1], line), want == 3 ? parse_scalar<double>(t[2]) : 0.0});
                return;
            }
            for (int k = 0; k <= static_cast<int>(Gate2Kind::fsg); ++k) {
                const auto kind = static_cast<Gate2Kind>(k);
                if (kw != gate2_name(kind)) {
                    continue;
                }
                if (open != Open::two) {
                    throw ParseError("two-qubit gate outside a 'layer2'");
                }
                const int np = gate2_param_count(kind);
                if (t.size() != static_cast<std::size_t>(3 + np)) {
                    throw ParseError("wrong argument count for '" + kw + "'");
                }
                Gate2 g{kind, text::parse_int(t[1], line), text::parse_int(t[2], line)};
                if (np >= 1) {
                    g.a = parse_scalar<double>(t[3]);
                }
                if (np >= 2) {
                    g.b = parse_scalar<double>(t[4]);
                }
                l2.gates.push_back(g);
                return;
            }
            throw ParseError("unknown keyword '" + kw + "'");
        });
    });
    if (!c) {
        throw ParseError("empty circuit file");
    }
    flush();
    if (!c->device() && graph->edge_count() > 0) {
        c->set_device(*graph);
    }
    return *c;
}

inline Circuit circuit_from_string(const std::string &s) {
    std::istringstream in(s);
    return read_circuit(in);
}

} // namespace dasim::network
