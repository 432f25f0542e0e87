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
#include <unordered_set>
#include <vector>

#include "gr1.hpp"
#include "rng.hpp"

namespace gbgame {

/** Directed graph without ownership; no self-loops. */
struct TriangleInstance {
    std::size_t n = 0;
    std::vector<Edge> edges;
};

/** Two families of d-bit vectors. */
struct OvInstance {
    std::size_t d = 0;
    std::vector<VertexSet> s1;
    std::vector<VertexSet> s2;
};

/** A generated game plus the distinguished start vertex s. */
struct ReducedGame {
    GameGraph graph;
    GenBuchiObjective objective;
    VertexId source = kNoVertex;
};

/**
 * Four copies V1..V4 of the vertices, then s. Copy i of v has id
 * (i-1)*n + v and s has id 4n. All vertices belong to player 2, and
 * T_v = (V1 \ {v1}) u (V4 \ {v4}). Copies without successors are kept;
 * see prune_sinks.
 */
inline ReducedGame triangle_to_game(const TriangleInstance& t)
{
    const auto n = t.n;
    for (const auto& e : t.edges) {
        if (e.from >= n || e.to >= n) throw std::invalid_argument("triangle instance edge out of range");
        if (e.from == e.to) throw std::invalid_argument("triangle instance has a self-loop");
    }
    auto copy = [n](std::size_t layer, VertexId v) { return static_cast<VertexId>(layer * n + v); };
    const auto s = static_cast<VertexId>(4 * n);
    std::vector<Edge> edges;
    for (VertexId v = 0; v < n; ++v) edges.push_back({s, copy(0, v)});
    for (std::size_t layer = 0; layer < 3; ++layer)
        for (const auto& e : t.edges) edges.push_back({copy(layer, e.from), copy(layer + 1, e.to)});
    for (VertexId v = 0; v < n; ++v) edges.push_back({copy(3, v), s});

    ReducedGame r;
    r.graph = GameGraph(4 * n + 1, std::vector<Player>(4 * n + 1, Player::P2), std::move(edges));
    r.source = s;
    for (VertexId v = 0; v < n; ++v) {
        VertexSet tv(4 * n + 1);
        for (VertexId u = 0; u < n; ++u)
            if (u != v) {
                tv.set(copy(0, u));
                tv.set(copy(3, u));
            }
        r.objective.targets.push_back(std::move(tv));
    }
    return r;
}

struct PrunedGame {
    ReducedGame game;                  // source is kNoVertex if it was pruned
    std::vector<VertexId> to_original;
};

/**
 * Removes sinks until none are left. Only valid when player 2 owns every
 * vertex (or, more generally, when pruned vertices count as lost for
 * player 1): no infinite play passes through a pruned vertex.
 */
inline PrunedGame prune_sinks(const ReducedGame& r)
{
    const auto& g = r.graph;
    const auto n = g.num_vertices();
    VertexSet keep = full_set(n);
    std::vector<std::size_t> deg(n);
    std::vector<VertexId> queue;
    for (VertexId v = 0; v < n; ++v) {
        deg[v] = g.out_degree(v);
        if (deg[v] == 0) queue.push_back(v);
    }
    while (!queue.empty()) {
        auto v = queue.back();
        queue.pop_back();
        keep.reset(v);
        for (auto u : g.predecessors(v))
            if (keep.test(u) && --deg[u] == 0) queue.push_back(u);
    }
    auto sub = induced_subgame(g, keep);
    PrunedGame p;
    p.game.graph = std::move(sub.graph);
    p.to_original = std::move(sub.to_original);
    const auto m = p.to_original.size();
    p.game.source = r.source < n ? sub.to_local[r.source] : kNoVertex;
    for (const auto& t : r.objective.targets) {
        VertexSet local(m);
        for (std::size_t i = 0; i < m; ++i)
            if (t.test(p.to_original[i])) local.set(i);
        p.game.objective.targets.push_back(std::move(local));
    }
    return p;
}

/** A triangle exists iff the (pruned) game is nonempty and W1 is empty. */
inline bool decode_triangle(const SolveResult& r) { return r.w1.size() > 0 && r.w1.none(); }

/** Same decoding rule for the orthogonal-vectors game. */
inline bool decode_ov(const SolveResult& r) { return r.w1.size() > 0 && r.w1.none(); }

inline VertexSet all_ones(std::size_t d)
{
    VertexSet v(d);
    v.set();
    return v;
}

/** Adds the all-ones vector to S2 when missing; never creates a new answer. */
inline OvInstance with_all_ones(OvInstance inst)
{
    const auto ones = all_ones(inst.d);
    for (const auto& v : inst.s2)
        if (v == ones) return inst;
    inst.s2.push_back(ones);
    return inst;
}

/**
 * Vertex ids: s = 0, then S1, then coordinates c_1..c_d, then S2. s belongs
 * to player 2, everything else to player 1. One singleton target per S2
 * vector. Needs a nonempty S1 without zero vectors and the all-ones
 * vector in S2.
 */
inline ReducedGame ov_to_game(const OvInstance& inst)
{
    const auto d = inst.d;
    const auto n1 = inst.s1.size(), n2 = inst.s2.size();
    for (const auto* fam : {&inst.s1, &inst.s2})
        for (const auto& v : *fam)
            if (v.size() != d)
                throw std::invalid_argument("vector of dimension " + std::to_string(v.size()) + ", expected " +
                                            std::to_string(d));
    if (n1 == 0) throw std::invalid_argument("S1 is empty");
    for (const auto& v : inst.s1)
        if (v.none()) throw std::invalid_argument("S1 contains the zero vector");
    bool has_ones = false;
    for (const auto& v : inst.s2) has_ones = has_ones || v.all();
    if (!has_ones) throw std::invalid_argument("S2 lacks the all-ones vector");

    const VertexId s = 0;
    auto x_id = [](std::size_t i) { return static_cast<VertexId>(1 + i); };
    auto c_id = [n1](std::size_t i) { return static_cast<VertexId>(1 + n1 + i); };
    auto y_id = [n1, d](std::size_t i) { return static_cast<VertexId>(1 + n1 + d + i); };
    const std::size_t n = 1 + n1 + d + n2;

    std::vector<Player> owners(n, Player::P1);
    owners[s] = Player::P2;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n1; ++i) edges.push_back({s, x_id(i)});
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t b = 0; b < d; ++b)
            if (inst.s1[i].test(b)) edges.push_back({x_id(i), c_id(b)});
    for (std::size_t b = 0; b < d; ++b)
        for (std::size_t j = 0; j < n2; ++j)
            if (inst.s2[j].test(b)) edges.push_back({c_id(b), y_id(j)});
    for (std::size_t j = 0; j < n2; ++j) edges.push_back({y_id(j), s});

    ReducedGame r;
    r.graph = GameGraph(n, std::move(owners), std::move(edges));
    r.source = s;
    for (std::size_t j = 0; j < n2; ++j) {
        VertexSet t(n);
        t.set(y_id(j));
        r.objective.targets.push_back(std::move(t));
    }
    return r;
}

/** Reduce, prune, solve, decode. */
inline bool has_triangle_via_game(const TriangleInstance& t, GenBuchiAlgo algo = GenBuchiAlgo::fast)
{
    auto p = prune_sinks(triangle_to_game(t));
    if (p.game.graph.num_vertices() == 0) return false;
    auto r = algo == GenBuchiAlgo::fast ? solve_fast(p.game.graph, p.game.objective)
                                        : solve_basic(p.game.graph, p.game.objective);
    return decode_triangle(r);
}

/** Degenerate inputs are answered directly; the rest goes through the game. */
inline bool has_orthogonal_pair_via_game(const OvInstance& inst, GenBuchiAlgo algo = GenBuchiAlgo::fast)
{
    if (inst.s1.empty() || inst.s2.empty()) return false;
    for (const auto& v : inst.s1)
        if (v.none()) return true;
    auto r = ov_to_game(with_all_ones(inst));
    auto res = algo == GenBuchiAlgo::fast ? solve_fast(r.graph, r.objective) : solve_basic(r.graph, r.objective);
    return decode_ov(res);
}

// ---------------------------------------------------------------------------
// Generators. All take a seed and are deterministic across platforms.

inline TriangleInstance gen_random_triangle(std::size_t n, double edge_prob, std::uint64_t seed)
{
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) throw std::invalid_argument("edge probability outside [0, 1]");
    Rng rng(seed);
    TriangleInstance t{n, {}};
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v)
            if (u != v && rng.chance(edge_prob)) t.edges.push_back({u, v});
    return t;
}

/** S1 vectors are redrawn until nonzero; S2 gains the all-ones vector if absent. */
inline OvInstance gen_random_ov(std::size_t count, std::size_t d, double density, std::uint64_t seed)
{
    if (count == 0 || d == 0) throw std::invalid_argument("need at least one vector and one coordinate");
    if (!(density > 0.0 && density <= 1.0)) throw std::invalid_argument("density outside (0, 1]");
    Rng rng(seed);
    auto draw = [&] {
        VertexSet v(d);
        for (std::size_t b = 0; b < d; ++b)
            if (rng.chance(density)) v.set(b);
        return v;
    };
    OvInstance inst{d, {}, {}};
    for (std::size_t i = 0; i < count; ++i) {
        VertexSet v = draw();
        while (v.none()) v = draw();
        inst.s1.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < count; ++i) inst.s2.push_back(draw());
    return with_all_ones(std::move(inst));
}

namespace detail {

/** m distinct edges (Floyd's sampling), then one random out-edge per sink. */
inline std::vector<Edge> random_edges(std::size_t n, std::size_t m, Rng& rng)
{
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * n;
    if (m > pairs) throw std::invalid_argument("more edges requested than vertex pairs");
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(m * 2);
    std::vector<Edge> edges;
    edges.reserve(m + n);
    for (std::uint64_t j = pairs - m; j < pairs; ++j) {
        std::uint64_t t = rng.below(j + 1);
        if (chosen.count(t)) t = j;
        chosen.insert(t);
        edges.push_back({static_cast<VertexId>(t / n), static_cast<VertexId>(t % n)});
    }
    std::vector<bool> has_out(n, false);
    for (const auto& e : edges) has_out[e.from] = true;
    for (VertexId v = 0; v < n; ++v)
        if (!has_out[v]) edges.push_back({v, static_cast<VertexId>(rng.below(n))});
    return edges;
}

inline VertexSet random_set(std::size_t n, double density, Rng& rng)
{
    VertexSet s(n);
    for (std::size_t v = 0; v < n; ++v)
        if (rng.chance(density)) s.set(v);
    return s;
}

inline std::vector<Player> random_owners(std::size_t n, double p1_share, Rng& rng)
{
    std::vector<Player> owners(n);
    for (auto& o : owners) o = rng.chance(p1_share) ? Player::P1 : Player::P2;
    return owners;
}

inline void check_game_params(std::size_t n, double share, double density)
{
    if (n == 0) throw std::invalid_argument("need at least one vertex");
    if (!(share >= 0.0 && share <= 1.0)) throw std::invalid_argument("owner bias outside [0, 1]");
    if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("target density outside [0, 1]");
}

} // namespace detail

struct GeneratedGame {
    GameGraph graph;
    GenBuchiObjective objective;
};

struct GeneratedGr1 {
    GameGraph graph;
    Gr1Objective objective;
};

/** owner_bias = probability that a vertex belongs to player 1. */
inline GeneratedGame gen_random_game(std::size_t n, std::size_t m, std::size_t k, double owner_bias,
                                     std::uint64_t seed, double target_density = 0.25)
{
    detail::check_game_params(n, owner_bias, target_density);
    if (k == 0) throw std::invalid_argument("need at least one target");
    Rng rng(seed);
    auto owners = detail::random_owners(n, owner_bias, rng);
    auto edges = detail::random_edges(n, m, rng);
    GeneratedGame out{GameGraph(n, std::move(owners), std::move(edges)), {}};
    for (std::size_t l = 0; l < k; ++l) out.objective.targets.push_back(detail::random_set(n, target_density, rng));
    return out;
}

inline GeneratedGr1 gen_random_gr1(std::size_t n, std::size_t m, std::size_t k1, std::size_t k2, std::uint64_t seed,
                                   double owner_bias = 0.5, double density = 0.25)
{
    detail::check_game_params(n, owner_bias, density);
    if (k1 == 0 || k2 == 0) throw std::invalid_argument("need at least one assumption and one guarantee");
    Rng rng(seed);
    auto owners = detail::random_owners(n, owner_bias, rng);
    auto edges = detail::random_edges(n, m, rng);
    GeneratedGr1 out{GameGraph(n, std::move(owners), std::move(edges)), {}};
    for (std::size_t t = 0; t < k1; ++t) out.objective.assumptions.push_back(detail::random_set(n, density, rng));
    for (std::size_t l = 0; l < k2; ++l) out.objective.guarantees.push_back(detail::random_set(n, density, rng));
    return out;
}

} // namespace gbgame
