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

#include <algorithm>
#include <optional>
#include <vector>

#include "attractor.hpp"
#include "decomposition.hpp"
#include "objective.hpp"

namespace gbgame {

namespace detail {

inline SolveResult finish(const Arena& start, const Arena& rest, std::vector<IterationRecord> trace)
{
    SolveResult r;
    r.w1 = rest.members();
    r.w2 = start.members() - rest.members();
    r.trace = std::move(trace);
    return r;
}

inline IterationRecord terminal_record(std::size_t n, unsigned level)
{
    return {RecordKind::terminal, IterationRecord::npos, level, VertexSet(n), VertexSet(n)};
}

} // namespace detail

/**
 * Generalized Buchi winning sets in O(k * b_1 * m): repeatedly find a set S
 * avoiding some target that player 1 cannot leave, and remove its player-2
 * attractor. Targets are used in the given order.
 */
inline SolveResult solve_basic(const Arena& arena, const std::vector<VertexSet>& targets)
{
    const auto n = arena.id_bound();
    Arena cur = arena;
    std::vector<IterationRecord> trace;
    for (;;) {
        bool found = false;
        for (std::size_t l = 0; l < targets.size() && !found; ++l) {
            auto y = attractor(cur, Player::P1, targets[l] & cur.members()).members;
            VertexSet s = cur.members() - y;
            if (s.none()) continue;
            auto d = attractor(cur, Player::P2, s).members;
            trace.push_back({RecordKind::dominion, l, 0, std::move(s), d});
            cur.remove(d);
            found = true;
        }
        if (!found) {
            trace.push_back(detail::terminal_record(n, 0));
            break;
        }
    }
    return detail::finish(arena, cur, std::move(trace));
}

/**
 * Same result as solve_basic in O(k * n^2). Dominions are searched in the
 * level graphs G_1, G_2, ... so that a dominion whose attractor has about
 * 2^i vertices costs O(k * 2^i * n) to find. Player-2 attractors of found
 * sets are still taken in the full current arena.
 */
inline SolveResult solve_fast(const Arena& arena, const std::vector<VertexSet>& targets)
{
    const auto n = arena.id_bound();
    Arena cur = arena;
    Decomposition dec(arena);
    std::vector<IterationRecord> trace;
    for (;;) {
        if (cur.empty()) {
            trace.push_back(detail::terminal_record(n, 0));
            break;
        }
        const unsigned top = std::max(1u, ceil_log2(cur.size()));
        // once 2^i covers every live out-degree, G_i is the whole arena and Z
        // is empty, so that level and all above it coincide
        const unsigned full = std::max(1u, ceil_log2(cur.max_out_degree()));
        bool found = false;
        for (unsigned i = 1; i <= std::min(top, full) && !found; ++i) {
            std::optional<LevelGraph> lg;
            if (i < full) lg = dec.build_level(cur, i);
            const Arena la = lg ? lg->arena() : cur;
            for (std::size_t l = 0; l < targets.size() && !found; ++l) {
                VertexSet seed = targets[l] & cur.members();
                if (lg) seed |= lg->z;
                auto y = attractor(la, Player::P1, seed).members;
                VertexSet s = cur.members() - y;
                if (s.none()) continue;
                auto d = attractor(cur, Player::P2, s).members;
                trace.push_back({RecordKind::dominion, l, i, std::move(s), d});
                cur.remove(d);
                found = true;
            }
        }
        if (!found) {
            trace.push_back(detail::terminal_record(n, top));
            break;
        }
    }
    return detail::finish(arena, cur, std::move(trace));
}

inline SolveResult solve_basic(const GameGraph& g, const GenBuchiObjective& obj)
{
    require_valid(g, obj);
    return solve_basic(Arena(g), obj.targets);
}

inline SolveResult solve_fast(const GameGraph& g, const GenBuchiObjective& obj)
{
    require_valid(g, obj);
    return solve_fast(Arena(g), obj.targets);
}

/** Stable permutation putting smaller targets first; perm[new] = old. */
inline std::vector<std::size_t> targets_by_size(const GenBuchiObjective& obj)
{
    std::vector<std::size_t> perm(obj.k());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::stable_sort(perm.begin(), perm.end(),
                     [&](std::size_t a, std::size_t b) { return obj.targets[a].count() < obj.targets[b].count(); });
    return perm;
}

} // namespace gbgame
