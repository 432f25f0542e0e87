/*
 * Copyright 2026 The gbgame Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "game_graph.hpp"

namespace gbgame {

/** Conjunction of Buchi conditions over targets[0..k-1]. */
struct GenBuchiObjective {
    std::vector<VertexSet> targets;

    std::size_t k() const { return targets.size(); }
    friend bool operator==(const GenBuchiObjective&, const GenBuchiObjective&) = default;
};

/** Assumptions L_t imply guarantees U_l, both generalized Buchi. */
struct Gr1Objective {
    std::vector<VertexSet> assumptions;
    std::vector<VertexSet> guarantees;

    friend bool operator==(const Gr1Objective&, const Gr1Objective&) = default;
};

namespace detail {
inline void check_sets(const std::vector<VertexSet>& sets, std::size_t n, const char* what)
{
    if (sets.empty()) throw std::invalid_argument(std::string("objective needs at least one ") + what + " set");
    for (const auto& s : sets)
        if (s.size() != n)
            throw std::invalid_argument(std::string(what) + " set sized " + std::to_string(s.size()) +
                                        " for a game with " + std::to_string(n) + " vertices");
}
} // namespace detail

inline void require_valid(const GameGraph& g, const GenBuchiObjective& obj)
{
    require_valid(g);
    detail::check_sets(obj.targets, g.num_vertices(), "target");
}

inline void require_valid(const GameGraph& g, const Gr1Objective& obj)
{
    require_valid(g);
    detail::check_sets(obj.assumptions, g.num_vertices(), "assumption");
    detail::check_sets(obj.guarantees, g.num_vertices(), "guarantee");
}

enum class RecordKind : std::uint8_t { dominion, small_dominion, large_dominion, terminal };

/** One outer iteration: S was found, D = Attr_P2(S) was removed. */
struct IterationRecord {
    RecordKind kind = RecordKind::dominion;
    std::size_t witness = npos; // target (or guarantee) index avoided by S
    unsigned level = 0;         // decomposition level; 0 when none was used
    VertexSet dominion;         // S
    VertexSet removed;          // D

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

struct SolveResult {
    VertexSet w1;
    VertexSet w2;
    std::vector<IterationRecord> trace; // last record is the terminal one
};

} // namespace gbgame
