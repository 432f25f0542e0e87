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
#include <stdexcept>
#include <string>
#include <vector>

#include "gr1.hpp"

namespace gbgame {

/**
 * Player strategy with a cyclic counter as memory. At vertex v with
 * counter c, the counter first advances if v lies in the c-th advance set;
 * the owner then moves to moves[c'][v].
 */
struct CounterStrategy {
    std::vector<std::vector<VertexId>> moves; // moves[c][v], kNoVertex if unused

    std::size_t memory() const { return moves.size(); }
    friend bool operator==(const CounterStrategy&, const CounterStrategy&) = default;
};

struct Move {
    VertexId from;
    VertexId to;
    friend bool operator==(const Move&, const Move&) = default;
};

/**
 * One removal step: S avoids target `witness`, D = Attr_P2(S). Player 2
 * stays in S with `stay` (generalized Buchi) or wins the assumptions inside
 * S with `inner` (GR(1)), and reaches S from D \ S with `attract`.
 */
struct CertificateRecord {
    std::size_t witness = 0;
    VertexSet dominion;
    VertexSet removed;
    std::vector<Move> stay;
    std::optional<CounterStrategy> inner;
    std::vector<Move> attract;
    friend bool operator==(const CertificateRecord&, const CertificateRecord&) = default;
};

struct P2Certificate {
    std::vector<CertificateRecord> records;
    friend bool operator==(const P2Certificate&, const P2Certificate&) = default;
};

struct Certificates {
    CounterStrategy p1;
    P2Certificate p2;
};

/** Lasso-shaped witness of a rejection: a stem, then a repeating cycle. */
struct Counterexample {
    std::string reason;
    std::vector<VertexId> stem;
    std::vector<VertexId> cycle;
};

struct CheckResult {
    bool accepted = true;
    Counterexample counterexample;

    explicit operator bool() const { return accepted; }
    static CheckResult accept() { return {}; }
    static CheckResult reject(std::string why, std::vector<VertexId> stem = {}, std::vector<VertexId> cycle = {})
    {
        return {false, {std::move(why), std::move(stem), std::move(cycle)}};
    }
};

namespace detail {

/** Lowest-rank successor inside the arena, lowest id on ties. */
inline VertexId best_successor(const Arena& a, VertexId v, const std::vector<std::uint32_t>& rank)
{
    VertexId pick = kNoVertex;
    for (auto w : a.successors(v)) {
        if (!a.contains(w)) continue;
        if (pick == kNoVertex || rank[w] < rank[pick] || (rank[w] == rank[pick] && w < pick)) pick = w;
    }
    return pick;
}

/** Cycle through targets: attractor moves toward the current one. */
inline CounterStrategy counter_moves(const Arena& a, const std::vector<VertexSet>& targets)
{
    CounterStrategy s;
    for (const auto& t : targets) {
        auto attr = attractor(a, Player::P1, t & a.members());
        std::vector<VertexId> row(a.id_bound(), kNoVertex);
        for_each_vertex(a.members(), [&](VertexId v) {
            if (a.owner(v) != Player::P1) return;
            const auto r = attr.rank[v];
            row[v] = (r != 0 && r != kInfiniteRank) ? attr.strategy[v] : best_successor(a, v, attr.rank);
        });
        s.moves.push_back(std::move(row));
    }
    return s;
}

/** Stay and attractor moves for every removal record of a solve on `start`. */
inline std::vector<CertificateRecord> removal_records(const Arena& start, const SolveResult& r, bool with_stay)
{
    std::vector<CertificateRecord> out;
    Arena cur = start;
    for (const auto& rec : r.trace) {
        if (rec.kind == RecordKind::terminal) continue;
        CertificateRecord c{rec.witness, rec.dominion, rec.removed, {}, std::nullopt, {}};
        if (with_stay) {
            for_each_vertex(rec.dominion, [&](VertexId v) {
                if (cur.owner(v) != Player::P2) return;
                VertexId pick = kNoVertex;
                for (auto w : cur.successors(v))
                    if (rec.dominion.test(w) && cur.contains(w)) pick = std::min(pick, w);
                c.stay.push_back({v, pick});
            });
        }
        auto attr = attractor(cur, Player::P2, rec.dominion);
        for_each_vertex(attr.members - rec.dominion, [&](VertexId v) {
            if (cur.owner(v) == Player::P2) c.attract.push_back({v, attr.strategy[v]});
        });
        out.push_back(std::move(c));
        cur.remove(rec.removed);
    }
    return out;
}

/** Map from move list; nullopt on duplicates or out-of-range ids. */
inline std::optional<std::vector<VertexId>> move_table(std::size_t n, const std::vector<Move>& moves)
{
    std::vector<VertexId> t(n, kNoVertex);
    for (const auto& m : moves) {
        if (m.from >= n || m.to >= n || t[m.from] != kNoVertex) return std::nullopt;
        t[m.from] = m.to;
    }
    return t;
}

inline bool is_successor(const Arena& a, VertexId v, VertexId u)
{
    if (u == kNoVertex || !a.contains(u)) return false;
    for (auto w : a.successors(v))
        if (w == u) return true;
    return false;
}

/**
 * Counter strategy check on the product of `claimed` with the counter.
 * Rejects moves leaving `claimed`, then looks for a cycle that never
 * advances the counter and meets every fairness set. With no fairness sets
 * any such cycle is bad.
 */
inline CheckResult check_counter(const Arena& a, const VertexSet& claimed, const std::vector<VertexSet>& advance,
                                 const std::vector<VertexSet>& fairness, const CounterStrategy& s)
{
    const auto n = a.id_bound();
    const auto k = advance.size();
    if (claimed.size() != n) return CheckResult::reject("claimed set has wrong size");
    if (s.memory() != k)
        return CheckResult::reject("strategy has " + std::to_string(s.memory()) + " memory states, expected " +
                                   std::to_string(k));
    for (const auto& row : s.moves)
        if (row.size() != n) return CheckResult::reject("strategy table has wrong size");
    if (!claimed.is_subset_of(a.members())) return CheckResult::reject("claimed set contains removed vertices");

    CheckResult bad;
    for_each_vertex(claimed, [&](VertexId v) {
        if (!bad) return;
        if (a.owner(v) == Player::P1) {
            for (std::size_t c = 0; c < k; ++c) {
                const auto u = s.moves[c][v];
                if (!is_successor(a, v, u)) {
                    bad = CheckResult::reject("memory " + std::to_string(c) + ": vertex " + std::to_string(v) +
                                                  " has no legal move",
                                              {v});
                    return;
                }
                if (!claimed.test(u)) {
                    bad = CheckResult::reject("memory " + std::to_string(c) + ": move " + std::to_string(v) + "->" +
                                                  std::to_string(u) + " leaves the claimed region",
                                              {v, u});
                    return;
                }
            }
        } else {
            for (auto u : a.successors(v))
                if (a.contains(u) && !claimed.test(u)) {
                    bad = CheckResult::reject("opponent edge " + std::to_string(v) + "->" + std::to_string(u) +
                                                  " leaves the claimed region",
                                              {v, u});
                    return;
                }
        }
    });
    if (!bad) return bad;

    // product restricted to counter-preserving edges, node id = c * n + v
    const std::size_t total = k * n;
    std::vector<std::size_t> off(total + 1, 0);
    std::vector<std::size_t> adj;
    for (std::size_t c = 0; c < k; ++c) {
        for (VertexId v = 0; v < n; ++v) {
            const auto node = c * n + v;
            off[node] = adj.size();
            if (!claimed.test(v) || advance[c].test(v)) continue;
            if (a.owner(v) == Player::P1) {
                adj.push_back(c * n + s.moves[c][v]);
            } else {
                for (auto u : a.successors(v))
                    if (a.contains(u)) adj.push_back(c * n + u);
            }
        }
    }
    off[total] = adj.size();

    // iterative Tarjan
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(total, kUnset), low(total, 0), comp(total, kUnset);
    std::vector<bool> on_stack(total, false);
    std::vector<std::size_t> stack, call;
    std::vector<std::size_t> edge_pos(total, 0);
    std::size_t counter = 0, ncomp = 0;
    std::vector<std::vector<std::size_t>> comps;
    for (std::size_t root = 0; root < total; ++root) {
        if (index[root] != kUnset || off[root] == off[root + 1]) continue;
        call.push_back(root);
        while (!call.empty()) {
            const auto x = call.back();
            if (index[x] == kUnset) {
                index[x] = low[x] = counter++;
                stack.push_back(x);
                on_stack[x] = true;
                edge_pos[x] = off[x];
            }
            if (edge_pos[x] < off[x + 1]) {
                const auto y = adj[edge_pos[x]++];
                if (index[y] == kUnset) call.push_back(y);
                else if (on_stack[y]) low[x] = std::min(low[x], index[y]);
                continue;
            }
            call.pop_back();
            if (!call.empty()) low[call.back()] = std::min(low[call.back()], low[x]);
            if (low[x] == index[x]) {
                std::vector<std::size_t> members;
                std::size_t y;
                do {
                    y = stack.back();
                    stack.pop_back();
                    on_stack[y] = false;
                    comp[y] = ncomp;
                    members.push_back(y);
                } while (y != x);
                comps.push_back(std::move(members));
                ++ncomp;
            }
        }
    }

    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        const auto& members = comps[ci];
        const auto x = members.front();
        bool nontrivial = members.size() > 1;
        for (auto p = off[x]; p < off[x + 1] && !nontrivial; ++p) nontrivial = adj[p] == x;
        if (!nontrivial) continue;
        bool meets_all = true;
        for (const auto& f : fairness) {
            bool hit = false;
            for (auto y : members) hit = hit || f.test(static_cast<VertexId>(y % n));
            meets_all = meets_all && hit;
        }
        if (!meets_all) continue;
        // shortest cycle through x inside the component
        std::vector<std::size_t> parent(total, kUnset);
        std::vector<std::size_t> queue{x};
        bool closed = false;
        std::size_t last = x;
        for (std::size_t qi = 0; qi < queue.size() && !closed; ++qi) {
            const auto y = queue[qi];
            for (auto p = off[y]; p < off[y + 1]; ++p) {
                const auto z = adj[p];
                if (comp[z] != ci) continue;
                if (z == x) {
                    last = y;
                    closed = true;
                    break;
                }
                if (parent[z] == kUnset) {
                    parent[z] = y;
                    queue.push_back(z);
                }
            }
        }
        std::vector<VertexId> cycle;
        for (auto y = last; y != x; y = parent[y]) cycle.push_back(static_cast<VertexId>(y % n));
        cycle.push_back(static_cast<VertexId>(x % n));
        std::reverse(cycle.begin(), cycle.end());
        return CheckResult::reject("cycle at memory " + std::to_string(x / n) +
                                       (fairness.empty() ? " never reaches its target"
                                                         : " meets every assumption but never the guarantee"),
                                   {}, std::move(cycle));
    }
    return CheckResult::accept();
}

/** Moves of player 2 inside D \ S must reach S: no cycle, no exit from D. */
inline CheckResult check_attract(const Arena& cur, const VertexSet& s, const VertexSet& d,
                                 const std::vector<VertexId>& table)
{
    const auto n = cur.id_bound();
    const VertexSet rest = d - s;
    std::vector<std::uint32_t> indeg(n, 0);
    std::vector<std::vector<VertexId>> out(n);
    CheckResult bad;
    for_each_vertex(rest, [&](VertexId v) {
        if (!bad) return;
        if (cur.owner(v) == Player::P2) {
            const auto u = table[v];
            if (!is_successor(cur, v, u) || !d.test(u)) {
                bad = CheckResult::reject("attractor move at " + std::to_string(v) + " is missing or leaves D", {v});
                return;
            }
            out[v].push_back(u);
        } else {
            for (auto u : cur.successors(v)) {
                if (!cur.contains(u)) continue;
                if (!d.test(u)) {
                    bad = CheckResult::reject("player-1 vertex " + std::to_string(v) + " escapes D", {v, u});
                    return;
                }
                out[v].push_back(u);
            }
        }
    });
    if (!bad) return bad;
    for_each_vertex(rest, [&](VertexId v) {
        for (auto u : out[v])
            if (rest.test(u)) ++indeg[u];
    });
    std::vector<VertexId> ready;
    for_each_vertex(rest, [&](VertexId v) {
        if (indeg[v] == 0) ready.push_back(v);
    });
    std::size_t done = 0;
    while (!ready.empty()) {
        auto v = ready.back();
        ready.pop_back();
        ++done;
        for (auto u : out[v])
            if (rest.test(u) && --indeg[u] == 0) ready.push_back(u);
    }
    if (done != rest.count()) {
        // walk inside the leftover part until a vertex repeats
        std::vector<std::size_t> seen(n, static_cast<std::size_t>(-1));
        std::vector<VertexId> path;
        VertexId v = kNoVertex;
        for_each_vertex(rest, [&](VertexId x) {
            if (v == kNoVertex && indeg[x] > 0) v = x;
        });
        while (seen[v] == static_cast<std::size_t>(-1)) {
            seen[v] = path.size();
            path.push_back(v);
            for (auto u : out[v])
                if (rest.test(u) && indeg[u] > 0) {
                    v = u;
                    break;
                }
        }
        std::vector<VertexId> stem(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(seen[v]));
        std::vector<VertexId> cycle(path.begin() + static_cast<std::ptrdiff_t>(seen[v]), path.end());
        return CheckResult::reject("attractor moves admit a cycle avoiding S", std::move(stem), std::move(cycle));
    }
    return CheckResult::accept();
}

/**
 * Replays a player-2 certificate. `witness_sets` are the sets each S must
 * avoid; `assumptions` is empty for generalized Buchi (stay moves are then
 * checked) and holds L_1..L_k1 for GR(1) (inner strategies are checked).
 */
inline CheckResult check_p2(const GameGraph& g, const std::vector<VertexSet>& witness_sets,
                            const std::vector<VertexSet>& assumptions, bool gr1, const P2Certificate& cert,
                            const VertexSet& claimed_w2)
{
    const auto n = g.num_vertices();
    if (claimed_w2.size() != n) return CheckResult::reject("claimed set has wrong size");
    Arena cur(g);
    VertexSet covered(n);
    for (std::size_t j = 0; j < cert.records.size(); ++j) {
        const auto& rec = cert.records[j];
        const std::string at = "record " + std::to_string(j) + ": ";
        if (rec.dominion.size() != n || rec.removed.size() != n) return CheckResult::reject(at + "set has wrong size");
        const auto& s = rec.dominion;
        if (s.none()) return CheckResult::reject(at + "empty dominion");
        if (!s.is_subset_of(cur.members())) return CheckResult::reject(at + "dominion uses removed vertices");
        if (rec.witness >= witness_sets.size()) return CheckResult::reject(at + "witness index out of range");
        const auto hit = (s & witness_sets[rec.witness]).find_first();
        if (hit != VertexSet::npos)
            return CheckResult::reject(at + "dominion meets its witness set at vertex " + std::to_string(hit),
                                       {static_cast<VertexId>(hit)});

        CheckResult bad;
        for_each_vertex(s, [&](VertexId v) {
            if (!bad || cur.owner(v) != Player::P1) return;
            for (auto u : cur.successors(v))
                if (cur.contains(u) && !s.test(u)) {
                    bad = CheckResult::reject(at + "player 1 leaves the dominion", {v, u});
                    return;
                }
        });
        if (!bad) return bad;

        if (gr1) {
            if (!rec.inner || !rec.stay.empty()) return CheckResult::reject(at + "malformed GR(1) record");
            Arena inside = cur.restrict(s).swap();
            auto r = check_counter(inside, s, assumptions, {}, *rec.inner);
            if (!r) {
                r.counterexample.reason = at + "inner strategy: " + r.counterexample.reason;
                return r;
            }
        } else {
            if (rec.inner) return CheckResult::reject(at + "unexpected inner strategy");
            auto table = move_table(n, rec.stay);
            if (!table) return CheckResult::reject(at + "stay moves malformed");
            for (const auto& m : rec.stay)
                if (!s.test(m.from) || cur.owner(m.from) != Player::P2)
                    return CheckResult::reject(at + "stay move at a vertex player 2 does not control in S",
                                               {m.from});
            for_each_vertex(s, [&](VertexId v) {
                if (!bad || cur.owner(v) != Player::P2) return;
                const auto u = (*table)[v];
                if (!is_successor(cur, v, u) || !s.test(u))
                    bad = CheckResult::reject(at + "stay move at " + std::to_string(v) + " is missing or leaves S",
                                              u == kNoVertex ? std::vector<VertexId>{v} : std::vector<VertexId>{v, u});
            });
            if (!bad) return bad;
        }

        auto attr = attractor(cur, Player::P2, s).members;
        if (attr != rec.removed) {
            const auto diff = (attr ^ rec.removed).find_first();
            return CheckResult::reject(at + "removed set differs from the player-2 attractor at vertex " +
                                           std::to_string(diff),
                                       {static_cast<VertexId>(diff)});
        }
        auto table = move_table(n, rec.attract);
        if (!table) return CheckResult::reject(at + "attractor moves malformed");
        for (const auto& m : rec.attract)
            if (!rec.removed.test(m.from) || s.test(m.from) || cur.owner(m.from) != Player::P2)
                return CheckResult::reject(at + "attractor move at an unexpected vertex", {m.from});
        auto r = check_attract(cur, s, rec.removed, *table);
        if (!r) {
            r.counterexample.reason = at + r.counterexample.reason;
            return r;
        }
        covered |= rec.removed;
        cur.remove(rec.removed);
    }
    if (covered != claimed_w2) return CheckResult::reject("records do not cover exactly the claimed player-2 region");
    return CheckResult::accept();
}

inline void require_trace(const SolveResult& r)
{
    if (r.trace.empty()) throw std::invalid_argument("result carries no trace; solve with basic or fast");
}

} // namespace detail

/** Counter strategy for player 1 on W1 and removal records for player 2. */
inline Certificates extract_genbuchi_strategies(const GameGraph& g, const GenBuchiObjective& obj,
                                                const SolveResult& r)
{
    detail::require_trace(r);
    Certificates c;
    c.p1 = detail::counter_moves(Arena(g, r.w1), obj.targets);
    c.p2.records = detail::removal_records(Arena(g), r, true);
    return c;
}

inline CheckResult check_p1_genbuchi(const CounterStrategy& s, const GameGraph& g, const GenBuchiObjective& obj,
                                     const VertexSet& claimed_w1)
{
    return detail::check_counter(Arena(g), claimed_w1, obj.targets, {}, s);
}

inline CheckResult check_p2_genbuchi(const P2Certificate& cert, const GameGraph& g, const GenBuchiObjective& obj,
                                     const VertexSet& claimed_w2)
{
    return detail::check_p2(g, obj.targets, {}, false, cert, claimed_w2);
}

/**
 * GR(1) strategies. Player 1 keeps a counter over the guarantees: inside
 * Attr_P1(U_c) it attracts to U_c, elsewhere it plays the memoryless
 * co-Buchi strategy read off the sub-game of the final arena. Player-2
 * records carry an inner counter strategy winning the assumptions in S.
 */
inline Certificates extract_gr1_strategies(const GameGraph& g, const Gr1Objective& obj, const SolveResult& r,
                                           GenBuchiAlgo algo = GenBuchiAlgo::fast)
{
    detail::require_trace(r);
    const auto n = g.num_vertices();
    Certificates c;
    Arena w(g, r.w1);
    for (const auto& u : obj.guarantees) {
        std::vector<VertexId> row(n, kNoVertex);
        auto y = attractor(w, Player::P1, u & r.w1);
        Arena rest = w.restrict(~y.members);
        if (!rest.empty()) {
            Arena swapped = rest.swap();
            auto sub = detail::solve_genbuchi(swapped, obj.assumptions, algo);
            for (const auto& rec : detail::removal_records(swapped, sub, true)) {
                for (const auto& m : rec.stay) row[m.from] = m.to;
                for (const auto& m : rec.attract) row[m.from] = m.to;
            }
        }
        for_each_vertex(y.members, [&](VertexId v) {
            if (g.owner(v) != Player::P1) return;
            const auto rk = y.rank[v];
            row[v] = rk != 0 ? y.strategy[v] : detail::best_successor(w, v, y.rank);
        });
        c.p1.moves.push_back(std::move(row));
    }
    Arena cur(g);
    for (const auto& rec : r.trace) {
        if (rec.kind == RecordKind::terminal) continue;
        Arena inside = cur.restrict(rec.dominion).swap();
        CertificateRecord cr{rec.witness, rec.dominion, rec.removed, {}, std::nullopt, {}};
        cr.inner = detail::counter_moves(inside, obj.assumptions);
        auto attr = attractor(cur, Player::P2, rec.dominion);
        for_each_vertex(attr.members - rec.dominion, [&](VertexId v) {
            if (cur.owner(v) == Player::P2) cr.attract.push_back({v, attr.strategy[v]});
        });
        c.p2.records.push_back(std::move(cr));
        cur.remove(rec.removed);
    }
    return c;
}

/** Exact check: no counter-preserving cycle meets all assumptions. */
inline CheckResult check_p1_gr1(const CounterStrategy& s, const GameGraph& g, const Gr1Objective& obj,
                                const VertexSet& claimed_w1)
{
    return detail::check_counter(Arena(g), claimed_w1, obj.guarantees, obj.assumptions, s);
}

inline CheckResult check_p2_gr1(const P2Certificate& cert, const GameGraph& g, const Gr1Objective& obj,
                                const VertexSet& claimed_w2)
{
    return detail::check_p2(g, obj.guarantees, obj.assumptions, true, cert, claimed_w2);
}

} // namespace gbgame
