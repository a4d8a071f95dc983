#include "core/engine.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <unordered_map>

#include "core/scheduler.hpp"

namespace orv {

std::string to_string(RuleTag r) {
    switch (r) {
        case RuleTag::Rp:
            return "Rp";
        case RuleTag::Re:
            return "Re";
        case RuleTag::Rs:
            return "Rs";
        case RuleTag::Rf:
            return "Rf";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass:
            return "Pass";
        case Verdict::WeakPass:
            return "WeakPass";
        case Verdict::WeakFail:
            return "WeakFail";
    }
    return "?";
}

std::string to_string(Omega v) { return v == Omega::Pass ? "Pass" : "Inconc"; }

std::vector<SuccEdge> successors(const AnalysisVertex& v, const MeasurePolicy& policy,
                                 const MeasureContext& ctx, const SuccessorGates& gates) {
    std::vector<SuccEdge> out;
    if (v.mu.is_empty()) {
        SuccEdge e;
        e.rule = (!gates.gate_ok || accepts_empty(v.term)) ? RuleTag::Rp : RuleTag::Rf;
        out.push_back(std::move(e));
        return out;
    }
    std::vector<FrontierEntry> entries = frontier(v.term);
    for (const FrontierEntry& fe : entries) {
        std::size_t k = v.mu.partition().coloc_of(fe.action);
        const Trace& comp = v.mu.component(k);
        if (!comp.empty() && comp.front() == fe.action) {
            SuccEdge e;
            e.rule = RuleTag::Re;
            e.action = fe.action;
            e.position = fe.position;
            e.loop_depth = loop_depth_at(v.term, fe.position);
            AnalysisVertex t;
            t.term = fe.follow_up;
            t.mu = v.mu.drop_head(k);
            t.started = v.started | (std::uint64_t{1} << k);
            t.measure = gates.reset_on_execute ? policy.init(fe.follow_up, ctx) : v.measure;
            e.target = std::move(t);
            out.push_back(std::move(e));
        }
    }
    if (gates.allow_rs) {
        // Simulation after the end of observation first, then before its
        // start; each class in lexicographic position order.
        for (int pass = 0; pass < 2; ++pass) {
            for (const FrontierEntry& fe : entries) {
                std::size_t k = v.mu.partition().coloc_of(fe.action);
                bool ended = v.mu.component(k).empty();
                bool not_started = (v.started & (std::uint64_t{1} << k)) == 0;
                bool allowed = ended || (gates.simulate_before_start && not_started);
                if (!allowed) continue;
                if ((pass == 0) != ended) continue;
                auto next = policy.decrement(v.measure, v.term, fe.position, fe.follow_up);
                if (!next) continue;
                SuccEdge e;
                e.rule = RuleTag::Rs;
                e.action = fe.action;
                e.position = fe.position;
                e.loop_depth = loop_depth_at(v.term, fe.position);
                e.after_end = ended;
                AnalysisVertex t;
                t.term = fe.follow_up;
                t.mu = v.mu;
                t.started = v.started;
                t.measure = *next;
                e.target = std::move(t);
                out.push_back(std::move(e));
            }
        }
    }
    if (out.empty()) {
        SuccEdge e;
        e.rule = RuleTag::Rf;
        out.push_back(std::move(e));
    }
    return out;
}

namespace {

struct SearchNode {
    AnalysisVertex v;
    std::size_t parent = static_cast<std::size_t>(-1);
    RuleTag via_rule = RuleTag::Re;
    CommAction via_action;
    Position via_position;
    int via_loop_depth = 0;
    int depth = 0;
    std::vector<int> sim_before;
    std::vector<int> sim_after;
};

void term_key(const InterPtr& i, std::string& out) {
    out.push_back(static_cast<char>(i->kind()));
    switch (i->kind()) {
        case NodeKind::Empty:
            return;
        case NodeKind::Action: {
            const CommAction& a = i->act();
            out.push_back(static_cast<char>(a.lifeline));
            out.push_back(a.kind == ActionKind::Emit ? '!' : '?');
            out.push_back(static_cast<char>(a.message & 0xff));
            out.push_back(static_cast<char>(a.message >> 8));
            return;
        }
        case NodeKind::Coreg:
        case NodeKind::LoopC: {
            std::uint64_t bits = i->region().bits();
            for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((bits >> (8 * b)) & 0xff));
            break;
        }
        default:
            break;
    }
    term_key(i->left(), out);
    if (i->is_binary()) term_key(i->right(), out);
}

// Identical vertices have identical sub-graphs, so revisiting one can never
// change Ok-reachability.
std::string vertex_key(const AnalysisVertex& v) {
    std::string key;
    term_key(v.term, key);
    key.push_back('|');
    // Components only ever shrink from the front, so the remaining suffix is
    // determined by its length.
    for (std::size_t k = 0; k < v.mu.component_count(); ++k) {
        std::size_t n = v.mu.component(k).size();
        key.push_back(static_cast<char>(n & 0xff));
        key.push_back(static_cast<char>((n >> 8) & 0xff));
    }
    for (int b = 0; b < 8; ++b) key.push_back(static_cast<char>((v.started >> (8 * b)) & 0xff));
    key += std::to_string(v.measure.lambda);
    key.push_back(',');
    key += std::to_string(v.measure.alpha);
    return key;
}

// A vertex from which some remaining observed action no longer occurs in the
// term can never empty the multi-trace: execution only consumes existing
// action leaves and follow-ups never introduce new ones.
bool consumable(const AnalysisVertex& v) {
    std::set<CommAction> leaves;
    std::function<void(const InterPtr&)> collect = [&](const InterPtr& i) {
        if (i->kind() == NodeKind::Action) {
            leaves.insert(i->act());
        } else if (i->is_loop()) {
            collect(i->child());
        } else if (i->is_binary()) {
            collect(i->left());
            collect(i->right());
        }
    };
    collect(v.term);
    for (std::size_t k = 0; k < v.mu.component_count(); ++k) {
        for (const CommAction& a : v.mu.component(k)) {
            if (!leaves.count(a)) return false;
        }
    }
    return true;
}

struct PhaseResult {
    bool found_ok = false;
    std::size_t ok_node = 0;
    std::vector<SearchNode> nodes;
    std::size_t expanded = 0;
    bool hit_cap = false;
};

PhaseResult run_phase(int phase, const std::string& phase_name, const AnalysisVertex& root,
                      const MeasurePolicy& policy, const MeasureContext& ctx,
                      const SuccessorGates& gates, const AnalysisConfig& cfg,
                      std::size_t cap_left, AnalysisLogger* logger) {
    PhaseResult res;
    if (logger) logger->on_phase(phase, phase_name);
    Scheduler sched(cfg.strategy);
    std::mt19937_64 shuffle_rng(cfg.priorities.seed);
    std::unordered_map<std::string, std::size_t> visited;

    res.nodes.push_back(SearchNode{root,
                                   static_cast<std::size_t>(-1),
                                   RuleTag::Re,
                                   CommAction{},
                                   Position{},
                                   0,
                                   0,
                                   std::vector<int>(root.mu.component_count(), 0),
                                   std::vector<int>(root.mu.component_count(), 0)});
    visited.emplace(vertex_key(root), 0);
    if (logger) logger->on_node(phase, 0, root, res.nodes[0].sim_before, res.nodes[0].sim_after);
    bool root_hopeful = consumable(root);
    sched.push(0, Scheduler::kNoParent, 0);
    sched.finish_group();
    if (!root_hopeful) return res;  // some observed action can never occur

    while (!sched.empty()) {
        if (res.expanded >= cap_left) {
            res.hit_cap = true;
            break;
        }
        std::size_t id = sched.pop();
        ++res.expanded;
        SearchNode node = res.nodes[id];

        std::vector<SuccEdge> edges = successors(node.v, policy, ctx, gates);
        if (cfg.priorities.mode == Priorities::Mode::Random) {
            std::shuffle(edges.begin(), edges.end(), shuffle_rng);
        }
        std::stable_sort(edges.begin(), edges.end(), [&](const SuccEdge& a, const SuccEdge& b) {
            auto score = [&](const SuccEdge& e) {
                if (e.rule == RuleTag::Rp || e.rule == RuleTag::Rf) return long{0};
                long s = e.action.kind == ActionKind::Emit ? cfg.priorities.emission
                                                           : cfg.priorities.reception;
                if (e.loop_depth > 0) s += cfg.priorities.loop;
                if (e.rule == RuleTag::Rs) s += cfg.priorities.simu;
                return s;
            };
            return score(a) > score(b);
        });

        bool terminal = true;
        for (const SuccEdge& e : edges) {
            if (e.rule == RuleTag::Rp) {
                if (logger) logger->on_sink(phase, id, RuleTag::Rp);
                res.found_ok = true;
                res.ok_node = id;
                return res;
            }
            if (e.rule == RuleTag::Rf) {
                if (logger) logger->on_sink(phase, id, RuleTag::Rf);
                continue;
            }
            std::string key = vertex_key(*e.target);
            auto seen = visited.find(key);
            if (seen != visited.end()) {
                // The sub-graph below an identical vertex was (or will be)
                // explored once; only record the extra edge.
                if (logger) logger->on_edge(phase, id, seen->second, e);
                terminal = false;
                continue;
            }
            std::size_t child = res.nodes.size();
            SearchNode cn;
            cn.v = *e.target;
            cn.parent = id;
            cn.via_rule = e.rule;
            cn.via_action = e.action;
            cn.via_position = e.position;
            cn.via_loop_depth = e.loop_depth;
            cn.depth = node.depth + 1;
            cn.sim_before = node.sim_before;
            cn.sim_after = node.sim_after;
            if (e.rule == RuleTag::Rs) {
                std::size_t k = node.v.mu.partition().coloc_of(e.action);
                if (e.after_end) {
                    cn.sim_after[k]++;
                } else {
                    cn.sim_before[k]++;
                }
            }
            visited.emplace(std::move(key), child);
            res.nodes.push_back(std::move(cn));
            if (logger) {
                logger->on_node(phase, child, res.nodes[child].v, res.nodes[child].sim_before,
                                res.nodes[child].sim_after);
                logger->on_edge(phase, id, child, e);
            }
            if (consumable(res.nodes[child].v)) {
                sched.push(child, id, node.depth + 1);
            }
            terminal = false;
        }
        sched.finish_group();
        if (terminal) sched.mark_terminal(id);
    }
    return res;
}

std::vector<WitnessStep> witness_of(const PhaseResult& res) {
    std::vector<WitnessStep> steps;
    for (std::size_t cur = res.ok_node; res.nodes[cur].parent != static_cast<std::size_t>(-1);
         cur = res.nodes[cur].parent) {
        const SearchNode& n = res.nodes[cur];
        WitnessStep s;
        s.rule = n.via_rule;
        s.action = n.via_action;
        s.position = n.via_position;
        s.loop_depth = n.via_loop_depth;
        s.measure_after = n.v.measure;
        steps.push_back(std::move(s));
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
}

}  // namespace

AnalysisReport analyze(const InterPtr& i, const MultiTrace& mu, const AnalysisConfig& cfg,
                       AnalysisLogger* logger) {
    auto t0 = std::chrono::steady_clock::now();
    AnalysisReport report;

    LoopActPolicy policy(cfg.measure);
    MeasureContext ctx{mu.total_length()};
    AnalysisVertex root;
    root.term = i;
    root.mu = mu;
    root.started = 0;
    root.measure = policy.init(i, ctx);
    report.initial_measure = root.measure;

    // Pass detection: a pure-execution path to Ok. Accept and prefix judge
    // Pass by strict acceptance (the consumed multi-trace is exactly
    // accepted); the simulation graph itself passes on any full consumption.
    SuccessorGates pass_gates;
    pass_gates.allow_rs = false;
    pass_gates.simulate_before_start = false;
    pass_gates.reset_on_execute = cfg.measure.reset_on_execute;
    pass_gates.gate_ok = cfg.kind == AnalysisKind::Prefix;

    PhaseResult pass_phase = run_phase(0, "pass", root, policy, ctx, pass_gates, cfg,
                                       cfg.node_cap, logger);
    report.nodes_expanded += pass_phase.expanded;
    report.hit_node_cap = report.hit_node_cap || pass_phase.hit_cap;
    const PhaseResult* winner = nullptr;
    PhaseResult weak_phase;
    if (pass_phase.found_ok) {
        report.verdict = Verdict::Pass;
        winner = &pass_phase;
    } else if (cfg.kind != AnalysisKind::Accept) {
        // Weak acceptance: prefix re-runs with the unconditional Ok rule,
        // simulate brings in the Rs rule under the configured measure.
        SuccessorGates weak_gates;
        weak_gates.allow_rs = cfg.kind == AnalysisKind::Simulate;
        weak_gates.simulate_before_start = cfg.measure.simulate_before_start;
        weak_gates.reset_on_execute = cfg.measure.reset_on_execute;
        weak_gates.gate_ok = false;
        std::size_t cap_left =
            cfg.node_cap > report.nodes_expanded ? cfg.node_cap - report.nodes_expanded : 0;
        weak_phase = run_phase(1, "weak", root, policy, ctx, weak_gates, cfg, cap_left, logger);
        report.nodes_expanded += weak_phase.expanded;
        report.hit_node_cap = report.hit_node_cap || weak_phase.hit_cap;
        if (weak_phase.found_ok) {
            report.verdict = Verdict::WeakPass;
            winner = &weak_phase;
        }
    }

    if (winner) {
        report.witness = witness_of(*winner);
        for (const WitnessStep& s : report.witness) {
            if (s.rule == RuleTag::Re) ++report.re_steps;
            if (s.rule == RuleTag::Rs) ++report.rs_steps;
            report.witness_loop_cost += s.loop_depth;
        }
    } else {
        report.verdict = Verdict::WeakFail;
    }
    report.omega = omega_of(report.verdict);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

Trace replay_witness(const InterPtr& i, const MultiTrace& mu, const AnalysisConfig& cfg,
                     const std::vector<WitnessStep>& witness) {
    LoopActPolicy policy(cfg.measure);
    MeasureContext ctx{mu.total_length()};
    AnalysisVertex v;
    v.term = i;
    v.mu = mu;
    v.started = 0;
    v.measure = policy.init(i, ctx);
    Trace global;
    for (const WitnessStep& s : witness) {
        auto [action, follow] = execute(v.term, s.position);
        if (!(action == s.action)) throw Error("witness replay: action mismatch");
        std::size_t k = v.mu.partition().coloc_of(action);
        if (s.rule == RuleTag::Re) {
            const Trace& comp = v.mu.component(k);
            if (comp.empty() || !(comp.front() == action)) {
                throw Error("witness replay: execution step does not match component head");
            }
            v.mu = v.mu.drop_head(k);
            v.started |= std::uint64_t{1} << k;
            v.measure = cfg.measure.reset_on_execute ? policy.init(follow, ctx) : v.measure;
        } else {
            bool ended = v.mu.component(k).empty();
            bool not_started = (v.started & (std::uint64_t{1} << k)) == 0;
            if (!(ended || (cfg.measure.simulate_before_start && not_started))) {
                throw Error("witness replay: simulation inside the observation window");
            }
            auto next = policy.decrement(v.measure, v.term, s.position, follow);
            if (!next) throw Error("witness replay: measure does not allow this simulation");
            if (!(*next < v.measure)) throw Error("witness replay: measure did not decrease");
            v.measure = *next;
        }
        v.term = follow;
        global.push_back(action);
    }
    if (!v.mu.is_empty()) throw Error("witness replay: multi-trace not fully consumed");
    return global;
}

}  // namespace orv
