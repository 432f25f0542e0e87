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

// Shared builders and independent reference solvers for the tests.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gbgame.hpp>

namespace gbgame::testing {

inline std::string data_path(const std::string& name) { return std::string(GBGAME_DATA_DIR) + "/" + name; }

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline GameFile load_game(const std::string& name) { return parse_game(read_file(data_path(name))); }

// Ten-vertex example; a=0 .. j=9.
enum Fig1 : VertexId { a, b, c, d, e, f, g, h, i, j };

inline GameGraph figure1_graph()
{
    const auto P1 = Player::P1, P2 = Player::P2;
    std::vector<Player> owners{P2, P1, P1, P2, P2, P2, P2, P2, P1, P2};
    std::vector<Edge> edges{{a, b}, {b, a}, {b, f}, {c, g}, {c, i}, {d, c}, {d, e}, {e, d},
                            {e, j}, {f, a}, {f, g}, {g, b}, {g, h}, {h, b}, {h, c}, {i, h},
                            {i, d}, {j, d}, {j, e}, {c, h}, {c, d}, {f, b}, {c, b}};
    return GameGraph(10, std::move(owners), std::move(edges));
}

inline GenBuchiObjective figure1_objective() { return {{make_set(10, {a, e, i}), make_set(10, {b, d})}}; }

inline TriangleInstance figure2_instance()
{
    return {4, {{0, 1}, {1, 0}, {1, 2}, {2, 0}, {2, 3}, {3, 0}}};
}

inline VertexSet bits(std::string_view s)
{
    VertexSet v(s.size());
    for (std::size_t x = 0; x < s.size(); ++x)
        if (s[x] == '1') v.set(x);
    return v;
}

inline OvInstance figure3_instance()
{
    return {3, {bits("100"), bits("111"), bits("011")}, {bits("110"), bits("111"), bits("010"), bits("001")}};
}

/** Controllable predecessor for player p inside `arena` (restricted to members). */
inline VertexSet cpre(const GameGraph& gr, const VertexSet& arena, Player p, const VertexSet& x)
{
    VertexSet out(gr.num_vertices());
    for_each_vertex(arena, [&](VertexId v) {
        bool any = false, all = true;
        for (auto w : gr.successors(v)) {
            if (!arena.test(w)) continue;
            any = any || x.test(w);
            all = all && x.test(w);
        }
        if (gr.owner(v) == p ? any : all) out.set(v);
    });
    return out;
}

/**
 * Generalized Buchi winning set of player 1 inside `arena` (which must have
 * no sinks), by the textbook nested fixpoint
 *   nu Z. AND_l mu Y. CPre(Y) | (T_l & CPre(Z)).
 */
inline VertexSet fixpoint_genbuchi(const GameGraph& gr, const VertexSet& arena, const std::vector<VertexSet>& targets)
{
    VertexSet z = arena;
    for (;;) {
        VertexSet next = arena;
        const VertexSet cz = cpre(gr, arena, Player::P1, z);
        for (const auto& t : targets) {
            VertexSet y(gr.num_vertices());
            for (;;) {
                VertexSet ny = (cpre(gr, arena, Player::P1, y) | (t & cz)) & arena;
                if (ny == y) break;
                y = ny;
            }
            next &= y;
        }
        if (next == z) return z;
        z = next;
    }
}

inline VertexSet fixpoint_genbuchi(const GameGraph& gr, const std::vector<VertexSet>& targets)
{
    return fixpoint_genbuchi(gr, full_set(gr.num_vertices()), targets);
}

/**
 * GR(1) winning set of player 1 by the three-level fixpoint
 *   nu Z. AND_l mu Y. OR_t nu X. (U_l & CPre(Z)) | CPre(Y) | (~L_t & CPre(X)).
 */
inline VertexSet fixpoint_gr1(const GameGraph& gr, const Gr1Objective& obj)
{
    const auto n = gr.num_vertices();
    const VertexSet all = full_set(n);
    VertexSet z = all;
    for (;;) {
        VertexSet next = all;
        const VertexSet cz = cpre(gr, all, Player::P1, z);
        for (const auto& u : obj.guarantees) {
            VertexSet y(n);
            for (;;) {
                const VertexSet base = (u & cz) | cpre(gr, all, Player::P1, y);
                VertexSet ny(n);
                for (const auto& l : obj.assumptions) {
                    VertexSet x = all;
                    for (;;) {
                        VertexSet nx = base | (~l & cpre(gr, all, Player::P1, x));
                        if (nx == x) break;
                        x = nx;
                    }
                    ny |= x;
                }
                if (ny == y) break;
                y = ny;
            }
            next &= y;
        }
        if (next == z) return z;
        z = next;
    }
}

/**
 * Every nonempty player-1 dominion with at most h vertices: player 2 cannot
 * leave the set, player 1 can stay, and player 1 wins everywhere inside.
 */
inline std::vector<VertexSet> enumerate_dominions(const GameGraph& gr, const std::vector<VertexSet>& targets,
                                                  std::size_t h)
{
    const auto n = gr.num_vertices();
    std::vector<VertexSet> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        VertexSet s(n);
        for (VertexId v = 0; v < n; ++v)
            if (mask >> v & 1u) s.set(v);
        if (s.count() > h) continue;
        bool trapped = true;
        for_each_vertex(s, [&](VertexId v) {
            bool any = false, all = true;
            for (auto w : gr.successors(v)) {
                any = any || s.test(w);
                all = all && s.test(w);
            }
            trapped = trapped && (gr.owner(v) == Player::P1 ? any : all);
        });
        if (trapped && fixpoint_genbuchi(gr, s, targets) == s) out.push_back(s);
    }
    return out;
}

inline SolveResult solve_with(GenBuchiAlgo algo, const GameGraph& gr, const GenBuchiObjective& obj)
{
    return algo == GenBuchiAlgo::basic ? solve_basic(gr, obj) : solve_fast(gr, obj);
}

/** A vertex that is not a successor of v (kNoVertex if v reaches everything). */
inline VertexId non_successor(const GameGraph& gr, VertexId v, Rng& r)
{
    std::vector<VertexId> options;
    auto succ = gr.successors(v);
    for (VertexId u = 0; u < gr.num_vertices(); ++u)
        if (std::find(succ.begin(), succ.end(), u) == succ.end()) options.push_back(u);
    return options.empty() ? kNoVertex : options[r.below(options.size())];
}

/** Redirects one move of `owner` inside `region` to a vertex outside it, or to a non-successor. */
inline bool corrupt_move(std::vector<VertexId>& row, const GameGraph& gr, Player owner, const VertexSet& region,
                         Rng& r)
{
    std::vector<VertexId> at;
    for_each_vertex(region, [&](VertexId v) {
        if (gr.owner(v) == owner) at.push_back(v);
    });
    if (at.empty()) return false;
    const auto v = at[r.below(at.size())];
    std::vector<VertexId> outside;
    for (auto w : gr.successors(v))
        if (!region.test(w)) outside.push_back(w);
    row[v] = !outside.empty() && r.chance(0.5) ? outside[r.below(outside.size())] : non_successor(gr, v, r);
    if (row[v] == kNoVertex && !outside.empty()) row[v] = outside[0];
    return true;
}

/** Single corrupted move of player 1 at a winning vertex; false if there is none. */
inline bool mutate_p1(CounterStrategy& s, const GameGraph& gr, const VertexSet& w1, Rng& r)
{
    if (s.memory() == 0) return false;
    return corrupt_move(s.moves[r.below(s.memory())], gr, Player::P1, w1, r);
}

/**
 * Corrupts one field of one record: witness, removed set, a stay or inner
 * move, an attractor move, or drops the last record. Every variant breaks
 * a checked condition. Returns false when nothing applicable was found.
 */
inline bool mutate_p2(P2Certificate& cert, const GameGraph& gr, const std::vector<VertexSet>& witness_sets, Rng& r)
{
    if (cert.records.empty()) return false;
    auto& rec = cert.records[r.below(cert.records.size())];
    const auto n = gr.num_vertices();
    for (int attempt = 0; attempt < 20; ++attempt) {
        switch (r.below(5)) {
        case 0: {
            std::vector<std::size_t> bad;
            for (std::size_t l = 0; l < witness_sets.size(); ++l)
                if ((witness_sets[l] & rec.dominion).any()) bad.push_back(l);
            rec.witness = bad.empty() ? witness_sets.size() : bad[r.below(bad.size())];
            return true;
        }
        case 1:
            rec.removed.flip(r.below(n));
            return true;
        case 2:
            if (rec.inner) {
                auto& inner = *rec.inner;
                if (inner.memory() == 0) continue;
                // inside S player 2 plays the swapped player-1 role
                if (corrupt_move(inner.moves[r.below(inner.memory())], gr, Player::P2, rec.dominion, r)) return true;
                continue;
            }
            if (rec.stay.empty()) continue;
            {
                auto& m = rec.stay[r.below(rec.stay.size())];
                std::vector<VertexId> outside;
                for (auto w : gr.successors(m.from))
                    if (!rec.dominion.test(w)) outside.push_back(w);
                m.to = !outside.empty() ? outside[r.below(outside.size())] : non_successor(gr, m.from, r);
                if (m.to == kNoVertex) continue;
            }
            return true;
        case 3: {
            if (rec.attract.empty()) continue;
            auto& m = rec.attract[r.below(rec.attract.size())];
            auto u = non_successor(gr, m.from, r);
            if (u == kNoVertex) continue;
            m.to = u;
            return true;
        }
        default:
            cert.records.pop_back();
            return true;
        }
    }
    return false;
}

/** Seeded sizes for the random corpora. */
struct Shape {
    std::size_t n, m, k;
    double bias, density;
};

inline Shape random_shape(std::uint64_t seed, std::size_t max_n, std::size_t max_m, std::size_t max_k)
{
    Rng r(seed ^ 0x5eedULL);
    Shape s{};
    s.n = 1 + r.below(max_n);
    // sink repair may add up to n edges, so keep m + n within max_m
    const std::size_t cap = std::min(max_m - s.n, s.n * s.n);
    const std::size_t lo = std::min(s.n, cap);
    s.m = lo + r.below(cap - lo + 1);
    s.k = 1 + r.below(max_k);
    s.bias = 0.2 + 0.6 * r.unit();
    s.density = 0.1 + 0.4 * r.unit();
    return s;
}

/**
 * Random GR(1) game plus a planted player-2 cycle of `cycle` fresh vertices.
 * Only the first cycle vertex is in the assumption sets and none is in a
 * guarantee, so the smallest dominion inside the cycle is the whole cycle.
 * Some old vertices get an extra edge into the cycle.
 */
inline GeneratedGr1 planted_gr1(std::uint64_t seed, std::size_t n, std::size_t cycle)
{
    Rng r(seed ^ 0xc1c1eULL);
    auto base = gen_random_gr1(n, 2 * n, 1 + r.below(2), 1 + r.below(2), seed, 0.2 + 0.6 * r.unit(),
                               0.1 + 0.3 * r.unit());
    const auto total = n + cycle;
    auto owners = base.graph.owners();
    owners.resize(total, Player::P2);
    auto edges = base.graph.edges();
    for (std::size_t c = 0; c < cycle; ++c)
        edges.push_back({static_cast<VertexId>(n + c), static_cast<VertexId>(n + (c + 1) % cycle)});
    for (VertexId v = 0; v < n; ++v)
        if (r.chance(0.2)) edges.push_back({v, static_cast<VertexId>(n + r.below(cycle))});
    auto widen = [&](std::vector<VertexSet> sets, bool mark) {
        for (auto& st : sets) {
            st.resize(total);
            if (mark) st.set(n);
        }
        return sets;
    };
    GeneratedGr1 out;
    out.graph = GameGraph(total, std::move(owners), std::move(edges));
    out.objective = {widen(base.objective.assumptions, true), widen(base.objective.guarantees, false)};
    return out;
}

} // namespace gbgame::testing
