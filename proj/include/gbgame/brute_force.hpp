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
#include <vector>

#include "reductions.hpp"

namespace gbgame {

/** O(n^3) scan for a directed triangle over distinct vertices. */
inline bool brute_force_triangle(const TriangleInstance& t)
{
    std::vector<std::vector<bool>> adj(t.n, std::vector<bool>(t.n, false));
    for (const auto& e : t.edges) adj[e.from][e.to] = true;
    for (std::size_t a = 0; a < t.n; ++a)
        for (std::size_t b = 0; b < t.n; ++b)
            for (std::size_t c = 0; c < t.n; ++c)
                if (a != b && b != c && a != c && adj[a][b] && adj[b][c] && adj[c][a]) return true;
    return false;
}

/** O(N^2 d) scan for u in S1, v in S2 with u . v = 0. */
inline bool brute_force_ov(const OvInstance& inst)
{
    for (const auto& u : inst.s1)
        for (const auto& v : inst.s2)
            if (!u.intersects(v)) return true;
    return false;
}

/**
 * Every player-1 dominion with at most h vertices, by subset enumeration:
 * the subset must be player-2 closed and won by player 1 on its own.
 * Subsets come in increasing bitmask order. Refuses n > 12.
 */
inline std::vector<VertexSet> brute_force_small_dominions(const GameGraph& g, const GenBuchiObjective& obj,
                                                          std::size_t h)
{
    require_valid(g, obj);
    const auto n = g.num_vertices();
    if (n > 12) throw std::invalid_argument("dominion enumeration is limited to 12 vertices");
    Arena whole(g);
    std::vector<VertexSet> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        VertexSet d(n, mask);
        if (d.count() > h || !is_closed(whole, Player::P2, d)) continue;
        if (solve_basic(Arena(g, d), obj.targets).w1 == d) out.push_back(std::move(d));
    }
    return out;
}

} // namespace gbgame
