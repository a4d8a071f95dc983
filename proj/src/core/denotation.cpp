#include "core/denotation.hpp"

#include <algorithm>

namespace orv {

bool conflict(const Trace& t, LifelineId l, LifelineSet r) {
    if (r.contains(l)) return false;
    for (const CommAction& a : t) {
        if (a.lifeline == l) return true;
    }
    return false;
}

namespace {

void cond_seq_rec(const Trace& t1, std::size_t i1, const Trace& t2, std::size_t i2, LifelineSet r,
                  Trace& acc, TraceSet& out) {
    if (i1 == t1.size()) {
        acc.insert(acc.end(), t2.begin() + static_cast<std::ptrdiff_t>(i2), t2.end());
        out.insert(acc);
        acc.resize(acc.size() - (t2.size() - i2));
        return;
    }
    if (i2 == t2.size()) {
        acc.insert(acc.end(), t1.begin() + static_cast<std::ptrdiff_t>(i1), t1.end());
        out.insert(acc);
        acc.resize(acc.size() - (t1.size() - i1));
        return;
    }
    acc.push_back(t1[i1]);
    cond_seq_rec(t1, i1 + 1, t2, i2, r, acc, out);
    acc.pop_back();
    // The right head may move first only without a conflict against the
    // whole left remainder.
    LifelineId l2 = t2[i2].lifeline;
    bool blocked = false;
    if (!r.contains(l2)) {
        for (std::size_t k = i1; k < t1.size(); ++k) {
            if (t1[k].lifeline == l2) {
                blocked = true;
                break;
            }
        }
    }
    if (!blocked) {
        acc.push_back(t2[i2]);
        cond_seq_rec(t1, i1, t2, i2 + 1, r, acc, out);
        acc.pop_back();
    }
}

}  // namespace

TraceSet cond_seq(const Trace& t1, const Trace& t2, LifelineSet r) {
    TraceSet out;
    Trace acc;
    acc.reserve(t1.size() + t2.size());
    cond_seq_rec(t1, 0, t2, 0, r, acc, out);
    return out;
}

TraceSet combine(const TraceSet& a, const TraceSet& b, SeqOp op) {
    TraceSet out;
    for (const Trace& t1 : a) {
        for (const Trace& t2 : b) {
            if (op.kind == SeqOp::Kind::Strict) {
                Trace t = t1;
                t.insert(t.end(), t2.begin(), t2.end());
                out.insert(std::move(t));
            } else {
                TraceSet mix = cond_seq(t1, t2, op.region);
                out.insert(mix.begin(), mix.end());
            }
        }
    }
    return out;
}

TraceSet kleene(const TraceSet& t, SeqOp op, int max_power) {
    TraceSet out;
    out.insert(Trace{});
    TraceSet power = out;
    for (int j = 1; j <= max_power; ++j) {
        power = combine(t, power, op);
        std::size_t before = out.size();
        out.insert(power.begin(), power.end());
        if (out.size() == before) break;  // fixpoint
    }
    return out;
}

namespace {

void merge_min(CostedTraces& into, const Trace& t, int cost) {
    auto [it, inserted] = into.emplace(t, cost);
    if (!inserted && cost < it->second) it->second = cost;
}

void check_cap(const CostedTraces& s, const RhoLimits& limits) {
    if (s.size() > limits.size_cap) {
        throw Error("denotational trace set exceeds the size cap");
    }
}

CostedTraces combine_costed(const CostedTraces& a, const CostedTraces& b, SeqOp op,
                            const RhoLimits& limits) {
    CostedTraces out;
    for (const auto& [t1, c1] : a) {
        for (const auto& [t2, c2] : b) {
            int cost = c1 + c2;
            if (cost > limits.loop_budget) continue;
            if (op.kind == SeqOp::Kind::Strict) {
                Trace t = t1;
                t.insert(t.end(), t2.begin(), t2.end());
                merge_min(out, t, cost);
            } else {
                for (const Trace& t : cond_seq(t1, t2, op.region)) {
                    merge_min(out, t, cost);
                }
            }
            check_cap(out, limits);
        }
    }
    return out;
}

// Closure of non-empty instances under op; every instance used costs one on
// top of its own cost. Empty instances never lower a cost, so they are
// skipped.
CostedTraces kleene_costed(const CostedTraces& body, SeqOp op, const RhoLimits& limits) {
    CostedTraces out;
    out.emplace(Trace{}, 0);
    CostedTraces frontier = out;
    while (!frontier.empty()) {
        CostedTraces next;
        for (const auto& [acc, cacc] : frontier) {
            for (const auto& [inst, cinst] : body) {
                if (inst.empty()) continue;
                int cost = cacc + cinst + 1;
                if (cost > limits.loop_budget) continue;
                if (op.kind == SeqOp::Kind::Strict) {
                    Trace t = acc;
                    t.insert(t.end(), inst.begin(), inst.end());
                    auto it = out.find(t);
                    if (it == out.end() || cost < it->second) merge_min(next, t, cost);
                } else {
                    for (const Trace& t : cond_seq(acc, inst, op.region)) {
                        auto it = out.find(t);
                        if (it == out.end() || cost < it->second) merge_min(next, t, cost);
                    }
                }
            }
        }
        for (const auto& [t, c] : next) merge_min(out, t, c);
        check_cap(out, limits);
        frontier = std::move(next);
    }
    return out;
}

}  // namespace

CostedTraces rho_costed(const InterPtr& i, const RhoLimits& limits) {
    switch (i->kind()) {
        case NodeKind::Empty:
            return {{Trace{}, 0}};
        case NodeKind::Action:
            return {{Trace{i->act()}, 0}};
        case NodeKind::Alt: {
            CostedTraces out = rho_costed(i->left(), limits);
            for (const auto& [t, c] : rho_costed(i->right(), limits)) merge_min(out, t, c);
            check_cap(out, limits);
            return out;
        }
        case NodeKind::Strict:
            return combine_costed(rho_costed(i->left(), limits), rho_costed(i->right(), limits),
                                  SeqOp::strict_op(), limits);
        case NodeKind::Coreg:
            return combine_costed(rho_costed(i->left(), limits), rho_costed(i->right(), limits),
                                  SeqOp::cond_seq_op(i->region()), limits);
        case NodeKind::LoopS:
            return kleene_costed(rho_costed(i->child(), limits), SeqOp::strict_op(), limits);
        case NodeKind::LoopC:
            return kleene_costed(rho_costed(i->child(), limits), SeqOp::cond_seq_op(i->region()),
                                 limits);
    }
    return {};
}

TraceSet rho(const InterPtr& i, int loop_bound) {
    RhoLimits limits;
    limits.loop_budget = loop_bound;
    TraceSet out;
    for (const auto& [t, c] : rho_costed(i, limits)) out.insert(t);
    return out;
}

bool oracle_slice_membership(const InterPtr& i, const MultiTrace& mu, int loop_bound) {
    for (const Trace& t : rho(i, loop_bound)) {
        if (is_slice(mu, project_global(t, mu.partition_ptr()))) return true;
    }
    return false;
}

bool oracle_membership(const InterPtr& i, const MultiTrace& mu, int loop_bound) {
    for (const Trace& t : rho(i, loop_bound)) {
        if (project_global(t, mu.partition_ptr()) == mu) return true;
    }
    return false;
}

}  // namespace orv
