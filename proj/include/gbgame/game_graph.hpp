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
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "types.hpp"

namespace gbgame {

/**
 * Game graph with vertex ownership. Vertices are 0..n-1.
 *
 * Successor lists follow edge insertion order. Predecessor lists put
 * P2-owned sources first and P1-owned sources second, each group in edge
 * insertion order. The decomposition relies on that prefix order.
 *
 * The constructor accepts sinks and duplicate edges so that validate() can
 * report them; solvers refuse graphs that do not validate.
 */
class GameGraph {
public:
    GameGraph() = default;

    GameGraph(std::size_t n, std::vector<Player> owners, std::vector<Edge> edges)
        : n_(n), owners_(std::move(owners)), edges_(std::move(edges))
    {
        if (owners_.size() != n_) throw std::invalid_argument("owner vector size differs from vertex count");
        for (const auto& e : edges_) {
            if (e.from >= n_ || e.to >= n_)
                throw std::invalid_argument("edge " + std::to_string(e.from) + "->" + std::to_string(e.to) +
                                            " references a vertex >= n");
        }
        build();
    }

    std::size_t num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }
    Player owner(VertexId v) const { return owners_[v]; }
    const std::vector<Player>& owners() const { return owners_; }
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const VertexId> successors(VertexId v) const
    {
        return {out_.data() + out_off_[v], out_.data() + out_off_[v + 1]};
    }
    std::span<const VertexId> predecessors(VertexId v) const
    {
        return {in_.data() + in_off_[v], in_.data() + in_off_[v + 1]};
    }
    std::size_t out_degree(VertexId v) const { return out_off_[v + 1] - out_off_[v]; }
    std::size_t in_degree(VertexId v) const { return in_off_[v + 1] - in_off_[v]; }

    friend bool operator==(const GameGraph& a, const GameGraph& b)
    {
        return a.n_ == b.n_ && a.owners_ == b.owners_ && a.edges_ == b.edges_;
    }

private:
    void build()
    {
        out_off_.assign(n_ + 1, 0);
        in_off_.assign(n_ + 1, 0);
        for (const auto& e : edges_) {
            ++out_off_[e.from + 1];
            ++in_off_[e.to + 1];
        }
        for (std::size_t v = 0; v < n_; ++v) {
            out_off_[v + 1] += out_off_[v];
            in_off_[v + 1] += in_off_[v];
        }
        out_.resize(edges_.size());
        in_.resize(edges_.size());
        std::vector<std::size_t> pos(out_off_.begin(), out_off_.end() - 1);
        for (const auto& e : edges_) out_[pos[e.from]++] = e.to;
        // two stable passes give the P2-first order
        pos.assign(in_off_.begin(), in_off_.end() - 1);
        for (const auto& e : edges_)
            if (owners_[e.from] == Player::P2) in_[pos[e.to]++] = e.from;
        for (const auto& e : edges_)
            if (owners_[e.from] == Player::P1) in_[pos[e.to]++] = e.from;
    }

    std::size_t n_ = 0;
    std::vector<Player> owners_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> out_off_{0}, in_off_{0};
    std::vector<VertexId> out_, in_;
};

struct Violation {
    enum class Kind { sink, duplicate_edge, inconsistent_adjacency, in_order };
    Kind kind;
    VertexId vertex;
    VertexId other;
    std::string message;
};

/** Every violated structural invariant, in vertex order. Empty means valid. */
inline std::vector<Violation> validate(const GameGraph& g)
{
    std::vector<Violation> out;
    const auto n = g.num_vertices();
    for (VertexId v = 0; v < n; ++v) {
        if (g.out_degree(v) == 0)
            out.push_back({Violation::Kind::sink, v, kNoVertex, "vertex " + std::to_string(v) + " has out-degree 0"});
    }
    // duplicates, reported once per pair
    std::vector<VertexId> seen(n, kNoVertex), reported(n, kNoVertex);
    for (VertexId u = 0; u < n; ++u) {
        for (auto w : g.successors(u)) {
            if (seen[w] != u) {
                seen[w] = u;
            } else if (reported[w] != u) {
                reported[w] = u;
                out.push_back({Violation::Kind::duplicate_edge, u, w,
                               "duplicate edge " + std::to_string(u) + "->" + std::to_string(w)});
            }
        }
    }
    // predecessor lists must be the transpose of the successor lists
    std::vector<std::vector<VertexId>> transposed(n);
    for (VertexId u = 0; u < n; ++u)
        for (auto w : g.successors(u)) transposed[w].push_back(u);
    std::vector<std::int64_t> balance(n, 0);
    bool consistent = true;
    for (VertexId w = 0; w < n && consistent; ++w) {
        auto preds = g.predecessors(w);
        if (preds.size() != transposed[w].size()) {
            consistent = false;
            break;
        }
        for (auto u : preds) ++balance[u];
        for (auto u : transposed[w]) --balance[u];
        for (auto u : preds) {
            consistent = consistent && balance[u] == 0;
            balance[u] = 0;
        }
        for (auto u : transposed[w]) balance[u] = 0;
    }
    if (!consistent)
        out.push_back({Violation::Kind::inconsistent_adjacency, kNoVertex, kNoVertex,
                       "successor and predecessor lists disagree"});
    for (VertexId v = 0; v < n; ++v) {
        bool seen_p1 = false;
        for (auto u : g.predecessors(v)) {
            if (g.owner(u) == Player::P1) {
                seen_p1 = true;
            } else if (seen_p1) {
                out.push_back({Violation::Kind::in_order, v, u,
                               "vertex " + std::to_string(v) + " lists P2 predecessor " + std::to_string(u) +
                                   " after a P1 predecessor"});
                break;
            }
        }
    }
    return out;
}

/** Thrown when an operation needs a valid game and gets something else. */
class InvalidGame : public std::invalid_argument {
public:
    explicit InvalidGame(std::vector<Violation> violations)
        : std::invalid_argument(describe(violations)), violations_(std::move(violations))
    {
    }
    const std::vector<Violation>& violations() const { return violations_; }

private:
    static std::string describe(const std::vector<Violation>& vs)
    {
        std::string s = "invalid game";
        for (std::size_t i = 0; i < vs.size() && i < 5; ++i) s += (i ? "; " : ": ") + vs[i].message;
        if (vs.size() > 5) s += "; ...";
        return s;
    }
    std::vector<Violation> violations_;
};

inline void require_valid(const GameGraph& g)
{
    auto vs = validate(g);
    if (!vs.empty()) throw InvalidGame(std::move(vs));
}

inline GameGraph swap_players(const GameGraph& g)
{
    std::vector<Player> owners(g.owners());
    for (auto& p : owners) p = opponent(p);
    return GameGraph(g.num_vertices(), std::move(owners), g.edges());
}

struct Subgame {
    GameGraph graph;
    std::vector<VertexId> to_original; // local id -> original id
    std::vector<VertexId> to_local;    // original id -> local id or kNoVertex
};

/** Raised by induced_subgame when the kept set is not closed. */
class NotClosedError : public std::invalid_argument {
public:
    explicit NotClosedError(std::vector<VertexId> sinks)
        : std::invalid_argument(describe(sinks)), sinks_(std::move(sinks))
    {
    }
    const std::vector<VertexId>& sinks() const { return sinks_; }

private:
    static std::string describe(const std::vector<VertexId>& s)
    {
        std::string m = "kept set is not closed; vertices without kept successors:";
        for (auto v : s) m += " " + std::to_string(v);
        return m;
    }
    std::vector<VertexId> sinks_;
};

/**
 * Subgraph on `keep`. Edge insertion order is inherited, so the predecessor
 * order invariant holds again. Kept vertices left without successors are
 * reported (original ids) unless allow_sinks is set.
 */
inline Subgame induced_subgame(const GameGraph& g, const VertexSet& keep, bool allow_sinks = false)
{
    Subgame sub;
    sub.to_local.assign(g.num_vertices(), kNoVertex);
    std::vector<Player> owners;
    for_each_vertex(keep, [&](VertexId v) {
        sub.to_local[v] = static_cast<VertexId>(sub.to_original.size());
        sub.to_original.push_back(v);
        owners.push_back(g.owner(v));
    });
    std::vector<Edge> edges;
    std::vector<bool> has_succ(sub.to_original.size(), false);
    for (const auto& e : g.edges()) {
        if (keep.test(e.from) && keep.test(e.to)) {
            edges.push_back({sub.to_local[e.from], sub.to_local[e.to]});
            has_succ[sub.to_local[e.from]] = true;
        }
    }
    if (!allow_sinks) {
        std::vector<VertexId> sinks;
        for (std::size_t i = 0; i < has_succ.size(); ++i)
            if (!has_succ[i]) sinks.push_back(sub.to_original[i]);
        if (!sinks.empty()) throw NotClosedError(std::move(sinks));
    }
    sub.graph = GameGraph(sub.to_original.size(), std::move(owners), std::move(edges));
    return sub;
}

} // namespace gbgame
