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
#include <vector>

#include "arena.hpp"

namespace gbgame {

/** G_i together with its exclusion set Z_i. */
struct LevelGraph {
    unsigned level = 0;
    GameGraph graph;    // same id space as the parent; owners as seen by the parent view
    VertexSet members;  // live vertices of the parent arena
    VertexSet z;

    Arena arena() const { return Arena(graph, members); }

    std::vector<Edge> sorted_edges() const
    {
        auto e = graph.edges();
        std::sort(e.begin(), e.end());
        return e;
    }
};

/**
 * Adjacency lists for building level graphs, cleaned lazily: an entry whose
 * endpoint has left the arena is unlinked the first time a scan meets it,
 * so the total cleanup cost over a whole solve is O(m). Predecessor lists
 * keep the P2-first order of the arena view they were built from, and
 * unlinking never reorders the survivors.
 */
class Decomposition {
public:
    explicit Decomposition(const Arena& a)
    {
        const auto n = a.id_bound();
        in_.init(n);
        out_.init(n);
        for_each_vertex(a.members(), [&](VertexId v) {
            out_.open(v);
            for (auto w : a.successors(v))
                if (a.contains(w)) out_.push(w);
        });
        for_each_vertex(a.members(), [&](VertexId v) {
            in_.open(v);
            for (auto side : {Player::P2, Player::P1})
                for (auto u : a.predecessors(v))
                    if (a.contains(u) && a.owner(u) == side) in_.push(u);
        });
        in_.close();
        out_.close();
    }

    /**
     * G_i for the live part of `current`, which must be the arena this
     * object was built from or a sub-arena of it.
     */
    LevelGraph build_level(const Arena& current, unsigned i)
    {
        const auto n = current.id_bound();
        const std::size_t bound = i >= 63 ? static_cast<std::size_t>(-1) : (std::size_t{1} << i);
        auto live = [&](VertexId u) { return current.contains(u); };

        std::vector<Edge> edges;
        for_each_vertex(current.members(), [&](VertexId v) {
            if (current.out_degree(v) <= bound)
                out_.scan(v, static_cast<std::size_t>(-1), live, [&](VertexId w) { edges.push_back({v, w}); });
        });
        for_each_vertex(current.members(), [&](VertexId w) {
            in_.scan(w, bound, live, [&](VertexId u) {
                if (current.out_degree(u) > bound) edges.push_back({u, w});
            });
        });

        std::vector<Player> owners(n, Player::P1);
        for (VertexId v = 0; v < n; ++v) owners[v] = current.owner(v);

        LevelGraph lg;
        lg.level = i;
        lg.graph = GameGraph(n, std::move(owners), std::move(edges));
        lg.members = current.members();
        lg.z = VertexSet(n);
        for_each_vertex(current.members(), [&](VertexId v) {
            bool excluded = current.owner(v) == Player::P2 ? lg.graph.out_degree(v) == 0
                                                           : current.out_degree(v) > bound;
            if (excluded) lg.z.set(v);
        });
        return lg;
    }

private:
    static constexpr std::uint32_t kEnd = static_cast<std::uint32_t>(-1);

    struct LazyLists {
        std::vector<VertexId> data;
        std::vector<std::uint32_t> next;
        std::vector<std::uint32_t> head;
        VertexId open_v = kNoVertex;
        std::uint32_t open_tail = kEnd;

        void init(std::size_t n) { head.assign(n, kEnd); }
        void open(VertexId v)
        {
            open_v = v;
            open_tail = kEnd;
        }
        void push(VertexId x)
        {
            auto idx = static_cast<std::uint32_t>(data.size());
            data.push_back(x);
            next.push_back(kEnd);
            if (open_tail == kEnd) head[open_v] = idx;
            else next[open_tail] = idx;
            open_tail = idx;
        }
        void close() { open_v = kNoVertex; }

        template <class Live, class F>
        void scan(VertexId v, std::size_t limit, Live&& live, F&& f)
        {
            std::uint32_t prev = kEnd;
            std::size_t taken = 0;
            for (auto cur = head[v]; cur != kEnd && taken < limit;) {
                auto nxt = next[cur];
                if (!live(data[cur])) {
                    if (prev == kEnd) head[v] = nxt;
                    else next[prev] = nxt;
                } else {
                    f(data[cur]);
                    ++taken;
                    prev = cur;
                }
                cur = nxt;
            }
        }
    };

    LazyLists in_, out_;
};

} // namespace gbgame
