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
 * Schedule text format, one segment per line:
 *
 *     qubits 6
 *     t_i 1/8 parities 000000
 *     t_i 1/8 parities 001100
 *
 * The bitstring's first character is qubit 0. Durations are exact
 * rationals in exact mode and shortest round-trip decimals otherwise.
 */

#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "dasim/qcore/scalar.hpp"
#include "dasim/qcore/text.hpp"
#include "dasim/refocus/schedule.hpp"

namespace dasim::refocus {

template <class S>
void write_schedule(std::ostream &out, const RefocusSchedule<S> &s) {
    out << "qubits " << s.n_qubits() << '\n';
    for (const auto &seg : s.segments()) {
        out << "t_i " << format_scalar(seg.duration) << " parities ";
        for (auto b : seg.parity) {
            out << (b ? '1' : '0');
        }
        out << '\n';
    }
}

template <class S>
std::string schedule_to_string(const RefocusSchedule<S> &s) {
    std::ostringstream o;
    write_schedule(o, s);
    return o.str();
}

template <class S>
RefocusSchedule<S> read_schedule(std::istream &in) {
    std::optional<RefocusSchedule<S>> out;
    text::for_each_line(in, [&](const std::vector<std::string> &t, int line) {
        text::at_line(line, [&] {
            if (t[0] == "qubits") {
                if (out || t.size() != 2) {
                    throw ParseError("'qubits N' must appear once, first");
                }
                out.emplace(text::parse_int(t[1], line));
                return;
            }
            if (t[0] != "t_i" || t.size() != 4 || t[2] != "parities") {
                throw ParseError("expected 't_i <duration> parities <bits>'");
            }
            const std::string &bits = t[3];
            if (!out) {
                out.emplace(static_cast<int>(bits.size()));
            }
            Segment<S> seg{parse_scalar<S>(t[1]), {}};
            for (char ch : bits) {
                if (ch != '0' && ch != '1') {
                    throw ParseError("parity bitstring may only contain 0 and 1");
                }
                seg.parity.push_back(ch == '1' ? 1 : 0);
            }
            out->push_back(std::move(seg));
        });
    });
    if (!out) {
        throw ParseError("empty schedule file");
    }
    return *out;
}

template <class S>
RefocusSchedule<S> schedule_from_string(const std::string &s) {
    std::istringstream in(s);
    return read_schedule<S>(in);
}

} // namespace dasim::refocus
