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
#include <span>
#include <vector>

#include "game_graph.hpp"

namespace gbgame {

/**
 * A sub-arena: a graph, a member mask and the out-degree of every member
 * inside the mask. Owners can be flipped at view level.
 *
 * Adjacency spans are the graph's, so callers filter with contains().
 * The graph must outlive the arena.
 */
class Arena {
public:
    explicit Arena(const GameGraph& g) : g_(&g), members_(full_set(g.num_vertices())), size_(g.num_vertices())
    {
        outdeg_.resize(g.num_vertices());
        for (VertexId v = 0; v < g.num_vertices(); ++v) outdeg_[v] = static_cast<std::uint32_t>(g.out_degree(v));
    }

    Arena(const GameGraph& g, VertexSet members, bool swapped = false)
        : g_(&g), members_(std::move(members)), swapped_(swapped)
    {
        recount();
    }

    const GameGraph& graph() const { return *g_; }
    std::size_t id_bound() const { return g_->num_vertices(); }
    const VertexSet& members() const { return members_; }
    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    bool contains(VertexId v) const { return members_.test(v); }
    bool swapped() const { return swapped_; }

    Player owner(VertexId v) const { return swapped_ ? opponent(g_->owner(v)) : g_->owner(v); }
    std::span<const VertexId> successors(VertexId v) const { return g_->successors(v); }
    std::span<const VertexId> predecessors(VertexId v) const { return g_->predecessors(v); }
    std::size_t out_degree(VertexId v) const { return outdeg_[v]; }

    std::size_t max_out_degree() const
    {
        std::size_t d = 0;
        for_each_vertex(members_, [&](VertexId v) { d = std::max<std::size_t>(d, outdeg_[v]); });
        return d;
    }

    /** Same members, players exchanged. */
    Arena swap() const
    {
        Arena a(*this);
        a.swapped_ = !swapped_;
        return a;
    }

    /** Members intersected with keep; degrees recomputed. */
    Arena restrict(const VertexSet& keep) const { return Arena(*g_, members_ & keep, swapped_); }

    /** Drop vertices; cost is the in-degree of the dropped members. */
    void remove(const VertexSet& gone)
    {
        for_each_vertex(gone, [&](VertexId v) {
            if (!members_.test(v)) return;
            members_.reset(v);
            --size_;
            for (auto u : g_->predecessors(v))
                if (members_.test(u)) --outdeg_[u];
        });
    }

private:
    void recount()
    {
        outdeg_.assign(g_->num_vertices(), 0);
        size_ = 0;
        for_each_vertex(members_, [&](VertexId v) {
            ++size_;
            std::uint32_t d = 0;
            for (auto w : g_->successors(v)) d += members_.test(w);
            outdeg_[v] = d;
        });
    }

    const GameGraph* g_;
    VertexSet members_;
    std::vector<std::uint32_t> outdeg_;
    std::size_t size_ = 0;
    bool swapped_ = false;
};

} // namespace gbgame
