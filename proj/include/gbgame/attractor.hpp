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
#include <limits>
#include <vector>

#include "arena.hpp"

namespace gbgame {

inline constexpr std::uint32_t kInfiniteRank = std::numeric_limits<std::uint32_t>::max();

struct AttractorResult {
    VertexSet members;
    std::vector<std::uint32_t> rank;  // kInfiniteRank outside members
    std::vector<VertexId> strategy;   // for attracting-player members of rank > 0
};

/**
 * Attr_p(arena, seed) by backward search, one BFS layer at a time.
 * Each layer is processed in ascending id order, so the strategy of a
 * p-owned vertex points at its lowest-rank successor, lowest id first.
 * Opponent vertices enter when their counter of outside successors hits 0.
 */
inline AttractorResult attractor(const Arena& arena, Player p, const VertexSet& seed)
{
    const auto n = arena.id_bound();
    AttractorResult r{VertexSet(n), std::vector<std::uint32_t>(n, kInfiniteRank), std::vector<VertexId>(n, kNoVertex)};
    std::vector<std::uint32_t> remaining(n, kInfiniteRank);

    std::vector<VertexId> layer, next;
    for_each_vertex(seed, [&](VertexId v) {
        if (!arena.contains(v)) return;
        r.members.set(v);
        r.rank[v] = 0;
        layer.push_back(v);
    });

    for (std::uint32_t depth = 1; !layer.empty(); ++depth) {
        next.clear();
        for (auto u : layer) {
            for (auto w : arena.predecessors(u)) {
                if (!arena.contains(w) || r.members.test(w)) continue;
                if (arena.owner(w) == p) {
                    r.strategy[w] = u;
                } else {
                    auto& c = remaining[w];
                    if (c == kInfiniteRank) c = static_cast<std::uint32_t>(arena.out_degree(w));
                    if (--c != 0) continue;
                }
                r.members.set(w);
                r.rank[w] = depth;
                next.push_back(w);
            }
        }
        std::sort(next.begin(), next.end());
        layer.swap(next);
    }
    return r;
}

/**
 * True iff p-owned members keep all arena successors inside `set` and
 * opponent members have at least one successor inside.
 */
inline bool is_closed(const Arena& arena, Player p, const VertexSet& set)
{
    bool ok = true;
    for_each_vertex(set, [&](VertexId v) {
        if (!ok) return;
        bool all = true, any = false;
        for (auto w : arena.successors(v)) {
            if (!arena.contains(w)) continue;
            if (set.test(w)) any = true;
            else all = false;
        }
        ok = arena.owner(v) == p ? all : any;
    });
    return ok;
}

} // namespace gbgame
