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

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "dasim/qcore/scalar.hpp"
#include "dasim/refocus/schedule.hpp"
#include "dasim/topology/coupling_graph.hpp"
#include "dasim/topology/hadamard.hpp"
#include "dasim/topology/partition.hpp"
#include "dasim/topology/sequences.hpp"

namespace dasim::refocus {

using topology::BasicCouplingGraph;
using topology::EntityPartition;

/// Pairs plus the ZZ angle each pair should accumulate (aligned with
/// partition.pairs()). Every non-pair edge should accumulate zero.
template <class S>
struct CompileTarget {
    EntityPartition partition;
    std::vector<S> angles;
};

template <class S>
CompileTarget<S> uniform_target(const EntityPartition &part, const S &theta) {
    return {part, std::vector<S>(part.pairs().size(), theta)};
}

namespace detail {

/// m equal intervals of duration/m, qubit parity from column entries of H(m).
template <class S>
void compile_window(RefocusSchedule<S> &out, const BasicCouplingGraph<S> &g, const EntityPartition &part,
                    const S &duration, int min_order) {
    if (is_zero(duration)) {
        return;
    }
    const auto a = topology::assign_sequences(g, part, min_order);
    const auto h = topology::hadamard_matrix(a.order);
    const S t = duration / S(a.order);
    for (int i = 0; i < a.order; ++i) {
        Segment<S> seg{t, std::vector<std::uint8_t>(static_cast<std::size_t>(g.n_qubits()), 0)};
        for (int q = 0; q < g.n_qubits(); ++q) {
            seg.parity[q] = h(i, a.qubit_column[q]) < 0 ? 1 : 0;
        }
        out.push_back(std::move(seg));
    }
}

} // namespace detail

/**
 * Refocusing for equal couplings: total analog time T split into m equal
 * intervals, m = max(required sequences, min_sequences) rounded up to a
 * Hadamard order. Pairs accumulate alpha*T, all other edges cancel.
 */
template <class S>
RefocusSchedule<S> compile_uniform(const BasicCouplingGraph<S> &g, const EntityPartition &part, const S &total,
                                   int min_sequences = 1) {
    part.validate(g);
    if (!g.uniform_couplings()) {
        throw DomainError("compile_uniform needs equal couplings on every edge; use compile_spread");
    }
    if (total < 0) {
        throw DomainError("negative refocusing time");
    }
    RefocusSchedule<S> out(g.n_qubits());
    detail::compile_window(out, g, part, total, min_sequences);
    return out;
}

/// One window of a global refocusing operation.
template <class S>
struct SpreadWindow {
    S start;
    S duration;
    std::vector<std::pair<int, int>> destroyed;
    int order;
};

template <class S>
struct SpreadPlan {
    S total;
    std::vector<SpreadWindow<S>> windows;
    RefocusSchedule<S> schedule;
};

/**
 * Global refocusing for unequal couplings and/or unequal target angles.
 *
 * Pair p needs active time a_p = angle_p / alpha_p. With T = max a_p the
 * excess time is tau_p = T - a_p. The interval [0, T] is cut at the sorted
 * distinct tau values; in the window ending at cut c every pair with
 * tau_p >= c is split into two single entities, so the last window has all
 * pairs with nonzero angle active. Each window is an ordinary refocusing
 * operation with its own coloring. Zero-length windows are dropped.
 */
template <class S>
SpreadPlan<S> plan_spread(const BasicCouplingGraph<S> &g, const CompileTarget<S> &target, int min_sequences = 1) {
    const auto &part = target.partition;
    part.validate(g);
    const auto &pairs = part.pairs();
    if (target.angles.size() != pairs.size()) {
        throw DomainError("target angle list does not match the pair list");
    }
    SpreadPlan<S> plan{S(0), {}, RefocusSchedule<S>(g.n_qubits())};
    if (pairs.empty()) {
        return plan;
    }
    std::vector<S> active(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (target.angles[i] < 0) {
            throw DomainError("negative target angle on pair (" + std::to_string(pairs[i].first) + "," +
                              std::to_string(pairs[i].second) + ")");
        }
        active[i] = target.angles[i] / g.coupling(pairs[i].first, pairs[i].second);
    }
    const S total = *std::max_element(active.begin(), active.end());
    plan.total = total;
    if (is_zero(total)) {
        return plan;
    }
    std::vector<S> tau(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        tau[i] = total - active[i];
    }

    // Cut points: distinct tau in (0, T), then T itself.
    constexpr double kMerge = 1e-15;
    auto close = [](const S &a, const S &b) {
        if constexpr (is_exact_v<S>) {
            return a == b;
        } else {
            return std::abs(a - b) <= kMerge;
        }
    };
    std::vector<S> cuts;
    for (const S &t : tau) {
        if (t > 0 && t < total) {
            cuts.push_back(t);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<S> distinct;
    for (const S &c : cuts) {
        if (distinct.empty() ? !close(c, S(0)) : !close(c, distinct.back())) {
            distinct.push_back(c);
        }
    }
    if (!distinct.empty() && close(distinct.back(), total)) {
        distinct.pop_back();
    }
    distinct.push_back(total);

    S prev(0);
    for (const S &cut : distinct) {
        const S dur = cut - prev;
        SpreadWindow<S> w{prev, dur, {}, 1};
        std::vector<std::pair<int, int>> kept;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const bool destroyed = tau[i] >= cut || close(tau[i], cut);
            (destroyed ? w.destroyed : kept).push_back(pairs[i]);
        }
        const auto window_part = EntityPartition::from_pairs(g.n_qubits(), kept);
        const std::size_t before = plan.schedule.size();
        detail::compile_window(plan.schedule, g, window_part, dur, min_sequences);
        w.order = static_cast<int>(plan.schedule.size() - before);
        if (w.order > 0) {
            plan.windows.push_back(std::move(w));
        }
        prev = cut;
    }
    return plan;
}

template <class S>
RefocusSchedule<S> compile_spread(const BasicCouplingGraph<S> &g, const CompileTarget<S> &target,
                                  int min_sequences = 1) {
    return plan_spread(g, target, min_sequences).schedule;
}

/// Same target angle theta on every pair.
template <class S>
RefocusSchedule<S> compile_spread(const BasicCouplingGraph<S> &g, const EntityPartition &part, const S &theta,
                                  int min_sequences = 1) {
    if (theta < 0) {
        throw DomainError("negative target angle");
    }
    return compile_spread(g, uniform_target(part, theta), min_sequences);
}

/// C_pq = alpha_pq * sum_i s_p(i) s_q(i) t_i for every edge, in edge order.
template <class S>
std::vector<S> effective_coupling(const RefocusSchedule<S> &sched, const BasicCouplingGraph<S> &g) {
    if (sched.n_qubits() != g.n_qubits()) {
        throw DomainError("schedule and graph widths differ");
    }
    std::vector<S> c;
    c.reserve(g.edge_count());
    for (const auto &e : g.edges()) {
        S acc(0);
        for (const auto &seg : sched.segments()) {
            if (seg.parity[e.p] == seg.parity[e.q]) {
                acc += seg.duration;
            } else {
                acc -= seg.duration;
            }
        }
        c.push_back(e.alpha * acc);
    }
    return c;
}

} // namespace dasim::refocus
