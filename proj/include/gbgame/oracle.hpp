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

#include "genbuchi.hpp"

namespace gbgame {

/** k-layer product turning k Buchi targets into one. Vertex (v, j) has id j*n + v. */
struct BuchiReduction {
    GameGraph graph;
    VertexSet target;
    std::size_t layers = 0;
    std::size_t base_vertices = 0;
    std::size_t target_layer = 0;

    VertexId copy(VertexId v, std::size_t layer) const { return static_cast<VertexId>(layer * base_vertices + v); }
};

/**
 * Layer j moves along edges and advances to layer j+1 (cyclically) when
 * leaving a vertex of T_j. The single target is the copy of the smallest
 * T_l inside layer l, lowest index on ties.
 */
inline BuchiReduction genbuchi_to_buchi(const GameGraph& g, const GenBuchiObjective& obj)
{
    require_valid(g, obj);
    const auto n = g.num_vertices();
    const auto k = obj.k();
    BuchiReduction r;
    r.layers = k;
    r.base_vertices = n;
    std::vector<Player> owners;
    owners.reserve(k * n);
    for (std::size_t j = 0; j < k; ++j) owners.insert(owners.end(), g.owners().begin(), g.owners().end());
    std::vector<Edge> edges;
    edges.reserve(k * g.num_edges());
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t nj = j + 1 == k ? 0 : j + 1;
        for (const auto& e : g.edges()) {
            const std::size_t to_layer = obj.targets[j].test(e.from) ? nj : j;
            edges.push_back({r.copy(e.from, j), r.copy(e.to, to_layer)});
        }
    }
    r.graph = GameGraph(k * n, std::move(owners), std::move(edges));
    std::size_t pick = 0;
    for (std::size_t l = 1; l < k; ++l)
        if (obj.targets[l].count() < obj.targets[pick].count()) pick = l;
    r.target_layer = pick;
    r.target = VertexSet(k * n);
    for_each_vertex(obj.targets[pick], [&](VertexId v) { r.target.set(r.copy(v, pick)); });
    return r;
}

/** Plain Buchi game: the basic solver with a single target. */
inline SolveResult solve_buchi(const GameGraph& g, const VertexSet& target)
{
    return solve_basic(g, GenBuchiObjective{{target}});
}

/**
 * Solve through the Buchi reduction and project layer 0 back. With
 * check_layers, all copies of a vertex must agree, else logic_error.
 */
inline SolveResult solve_via_buchi_reduction(const GameGraph& g, const GenBuchiObjective& obj,
                                             bool check_layers = false)
{
    auto red = genbuchi_to_buchi(g, obj);
    auto big = solve_buchi(red.graph, red.target);
    const auto n = g.num_vertices();
    SolveResult r{VertexSet(n), VertexSet(n), {}};
    for (VertexId v = 0; v < n; ++v) {
        const bool win = big.w1.test(red.copy(v, 0));
        if (check_layers)
            for (std::size_t j = 1; j < red.layers; ++j)
                if (big.w1.test(red.copy(v, j)) != win)
                    throw std::logic_error("layer copies of vertex " + std::to_string(v) + " disagree");
        (win ? r.w1 : r.w2).set(v);
    }
    return r;
}

} // namespace gbgame
