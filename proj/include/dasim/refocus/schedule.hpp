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

#include <cstdint>
#include <string>
#include <vector>

#include "dasim/qcore/error.hpp"
#include "dasim/qcore/scalar.hpp"

namespace dasim::refocus {

/// One analog interval. parity[q] == 1 means qubit q sits in the odd
/// parity state (an X has been applied an odd number of times) throughout.
template <class S>
struct Segment {
    S duration;
    std::vector<std::uint8_t> parity;

    friend bool operator==(const Segment &, const Segment &) = default;
};

template <class S>
class RefocusSchedule {
  public:
    using scalar_type = S;

    RefocusSchedule() = default;
    explicit RefocusSchedule(int n_qubits) : n_(n_qubits) {}

    int n_qubits() const noexcept { return n_; }
    const std::vector<Segment<S>> &segments() const noexcept { return segments_; }
    std::size_t size() const noexcept { return segments_.size(); }
    bool empty() const noexcept { return segments_.empty(); }

    void push_back(Segment<S> seg) {
        if (static_cast<int>(seg.parity.size()) != n_) {
            throw DomainError("segment parity layer has " + std::to_string(seg.parity.size()) + " bits, expected " +
                              std::to_string(n_));
        }
        if (seg.duration < 0) {
            throw DomainError("negative segment duration");
        }
        for (auto b : seg.parity) {
            if (b > 1) {
                throw DomainError("parity bits must be 0 or 1");
            }
        }
        segments_.push_back(std::move(seg));
    }

    void append(const RefocusSchedule &other) {
        if (other.n_ != n_) {
            throw DomainError("cannot join schedules of different widths");
        }
        for (const auto &s : other.segments_) {
            segments_.push_back(s);
        }
    }

    S total_duration() const {
        S t(0);
        for (const auto &s : segments_) {
            t += s.duration;
        }
        return t;
    }

    /// Number of segments with nonzero duration (analog entangler uses).
    std::size_t active_segments() const {
        std::size_t c = 0;
        for (const auto &s : segments_) {
            c += is_zero(s.duration) ? 0 : 1;
        }
        return c;
    }

    friend bool operator==(const RefocusSchedule &, const RefocusSchedule &) = default;

  private:
    int n_ = 0;
    std::vector<Segment<S>> segments_;
};

/// +1 for even parity, -1 for odd.
inline int parity_sign(std::uint8_t bit) { return bit ? -1 : 1; }

} // namespace dasim::refocus
