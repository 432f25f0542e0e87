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

#include <deque>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "arena.hpp"
#include "objective.hpp"

namespace gbgame {

enum class WorklistOrder { fifo, lifo };

struct LiftOptions {
    WorklistOrder order = WorklistOrder::fifo;
    bool check_counts = false; // recompute C after every step, throw on drift
};

/**
 * Progress measure rho_l(v) in {0..cap_l, inf} for generalized Buchi with
 * caps cap_l = min(h-1, |V \ T_l|), computed by lifting from all-zero.
 * Rows are target indices 0..k-1; "next" and "prev" wrap around.
 */
class ProgressMeasure {
public:
    using Value = std::uint32_t;
    static constexpr Value kInf = std::numeric_limits<Value>::max();

    ProgressMeasure(const Arena& arena, const std::vector<VertexSet>& targets, std::size_t h, LiftOptions opts = {})
        : a_(arena), t_(targets), k_(targets.size()), n_(arena.id_bound()), opts_(opts)
    {
        if (k_ == 0) throw std::invalid_argument("progress measure needs at least one target");
        if (h < 1 || h > arena.size())
            throw std::invalid_argument("dominion bound h=" + std::to_string(h) + " outside [1, " +
                                        std::to_string(arena.size()) + "]");
        for (std::size_t l = 0; l < k_; ++l) {
            std::size_t outside = (arena.members() - t_[l]).count();
            cap_.push_back(static_cast<Value>(std::min(h - 1, outside)));
        }
        rho_.assign(k_ * n_, 0);
        best_.assign(k_ * n_, 0);
        cnt_.assign(k_ * n_, 0);
        queued_.resize(k_ * n_);
        for (std::size_t l = 0; l < k_; ++l) {
            for_each_vertex(arena.members(), [&](VertexId v) {
                if (a_.owner(v) == Player::P1) cnt_[idx(v, l)] = static_cast<std::uint32_t>(a_.out_degree(v));
                if (!in_target(v, l)) enqueue(v, l);
            });
        }
    }

    std::size_t k() const { return k_; }
    Value cap(std::size_t l) const { return cap_[l]; }
    Value rho(VertexId v, std::size_t l) const { return rho_[idx(v, l)]; }
    /** Overwrites one entry; meant for probing best() and incr() in tests. */
    void set_rho(VertexId v, std::size_t l, Value x) { rho_[idx(v, l)] = x; }

    /** Best successor value: min for P1, max for P2; row l+1 when v is in T_l. */
    Value best(VertexId v, std::size_t l) const
    {
        const std::size_t row = in_target(v, l) ? next(l) : l;
        const bool p1 = a_.owner(v) == Player::P1;
        Value b = p1 ? kInf : 0;
        for (auto w : a_.successors(v)) {
            if (!a_.contains(w)) continue;
            Value x = rho_[idx(w, row)];
            b = p1 ? std::min(b, x) : std::max(b, x);
        }
        return b;
    }

    Value incr(VertexId v, std::size_t l, Value x) const
    {
        if (in_target(v, l) && x != kInf) return 0;
        return x < cap_[l] ? x + 1 : kInf;
    }

    /** Successors attaining the cached best (finite ones when v is in T_l). */
    std::uint32_t count(VertexId v, std::size_t l) const
    {
        std::uint32_t c = 0;
        const bool in_t = in_target(v, l);
        const Value b = best_[idx(v, l)];
        for (auto w : a_.successors(v)) {
            if (!a_.contains(w)) continue;
            c += in_t ? rho_[idx(w, next(l))] != kInf : rho_[idx(w, l)] == b;
        }
        return c;
    }

    void run()
    {
        while (!work_.empty()) {
            std::size_t p;
            if (opts_.order == WorklistOrder::fifo) {
                p = work_.front();
                work_.pop_front();
            } else {
                p = work_.back();
                work_.pop_back();
            }
            queued_.reset(p);
            const auto v = static_cast<VertexId>(p % n_);
            const auto l = p / n_;
            lift(v, l);
            if (opts_.check_counts) audit(v);
        }
    }

    /** Vertices with a finite value in some row. */
    VertexSet dominion() const
    {
        VertexSet d(n_);
        for_each_vertex(a_.members(), [&](VertexId v) {
            for (std::size_t l = 0; l < k_; ++l)
                if (rho_[idx(v, l)] != kInf) {
                    d.set(v);
                    break;
                }
        });
        return d;
    }

    /** True iff rho_l(v) = incr(best(v)) for every live pair. */
    bool at_fixed_point() const
    {
        bool ok = true;
        for_each_vertex(a_.members(), [&](VertexId v) {
            for (std::size_t l = 0; l < k_; ++l) ok = ok && rho_[idx(v, l)] == incr(v, l, best(v, l));
        });
        return ok;
    }

private:
    std::size_t idx(VertexId v, std::size_t l) const { return l * n_ + v; }
    std::size_t next(std::size_t l) const { return l + 1 == k_ ? 0 : l + 1; }
    std::size_t prev(std::size_t l) const { return l == 0 ? k_ - 1 : l - 1; }
    bool in_target(VertexId v, std::size_t l) const { return t_[l].test(v); }

    void enqueue(VertexId v, std::size_t l)
    {
        auto p = idx(v, l);
        if (queued_.test(p)) return;
        queued_.set(p);
        work_.push_back(p);
    }

    void lift(VertexId v, std::size_t l)
    {
        const auto p = idx(v, l);
        const Value old = rho_[p];
        best_[p] = best(v, l);
        if (a_.owner(v) == Player::P1) cnt_[p] = count(v, l);
        rho_[p] = incr(v, l, best_[p]);
        const Value now = rho_[p];

        for (auto w : a_.predecessors(v)) {
            if (!a_.contains(w) || in_target(w, l)) continue;
            const auto q = idx(w, l);
            if (queued_.test(q) || rho_[q] == kInf) continue;
            if (a_.owner(w) == Player::P1) {
                if (old == best_[q] && --cnt_[q] == 0) enqueue(w, l);
            } else if (now > best_[q]) {
                enqueue(w, l);
            }
        }
        if (now != kInf) return;
        const auto pl = prev(l);
        for (auto w : a_.predecessors(v)) {
            if (!a_.contains(w) || !in_target(w, pl)) continue;
            const auto q = idx(w, pl);
            if (queued_.test(q) || rho_[q] == kInf) continue;
            if (a_.owner(w) == Player::P1) {
                if (--cnt_[q] == 0) enqueue(w, pl);
            } else {
                enqueue(w, pl);
            }
        }
    }

    void audit(VertexId v) const
    {
        for (auto w : a_.predecessors(v)) {
            if (!a_.contains(w) || a_.owner(w) != Player::P1) continue;
            for (std::size_t l = 0; l < k_; ++l) {
                const auto q = idx(w, l);
                if (queued_.test(q) || rho_[q] == kInf) continue;
                if (cnt_[q] != count(w, l))
                    throw std::logic_error("count cache drift at vertex " + std::to_string(w) + ", row " +
                                           std::to_string(l));
            }
        }
    }

    const Arena& a_;
    const std::vector<VertexSet>& t_;
    std::size_t k_, n_;
    LiftOptions opts_;
    std::vector<Value> cap_;
    std::vector<Value> rho_, best_;
    std::vector<std::uint32_t> cnt_;
    VertexSet queued_;
    std::deque<std::size_t> work_;
};

struct LiftResult {
    VertexSet dominion;
    std::size_t n = 0;
    std::vector<std::vector<ProgressMeasure::Value>> rho; // rho[l][v]
};

/**
 * Player-1 dominion containing every player-1 dominion with at most h
 * vertices, or the empty set. With h = |arena| it is the winning set.
 */
inline LiftResult lift_dominion(const Arena& arena, const std::vector<VertexSet>& targets, std::size_t h,
                                LiftOptions opts = {})
{
    ProgressMeasure pm(arena, targets, h, opts);
    pm.run();
    LiftResult r{pm.dominion(), arena.id_bound(), {}};
    r.rho.resize(targets.size(), std::vector<ProgressMeasure::Value>(arena.id_bound(), ProgressMeasure::kInf));
    for (std::size_t l = 0; l < targets.size(); ++l)
        for_each_vertex(arena.members(), [&](VertexId v) { r.rho[l][v] = pm.rho(v, l); });
    return r;
}

inline LiftResult lift_dominion(const GameGraph& g, const GenBuchiObjective& obj, std::size_t h,
                                LiftOptions opts = {})
{
    require_valid(g, obj);
    return lift_dominion(Arena(g), obj.targets, h, opts);
}

} // namespace gbgame
