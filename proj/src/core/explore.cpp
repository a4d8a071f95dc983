#include "core/explore.hpp"

#include <algorithm>
#include <random>

#include "core/scheduler.hpp"

namespace orv {

std::string to_string(CutReason r) {
    switch (r) {
        case CutReason::MaxDepth:
            return "max_depth";
        case CutReason::MaxLoopInsts:
            return "max_loop_depth";
        case CutReason::MaxNodeNumber:
            return "max_node_number";
    }
    return "?";
}

namespace {

struct Node {
    InterPtr term;
    int depth = 0;
    long loop_insts = 0;
};

struct Candidate {
    FrontierEntry entry;
    int loop_depth = 0;
    long score = 0;
};

}  // namespace

ExploreReport explore(const InterPtr& i, const ExploreConfig& cfg,
                      const std::vector<ExploreLogger*>& loggers) {
    ExploreReport report;
    std::vector<Node> nodes;
    Scheduler sched(cfg.strategy);
    std::mt19937_64 shuffle_rng(cfg.priorities.seed);

    auto notify_node = [&](std::size_t id, std::size_t parent) {
        ExploreNodeInfo info;
        info.id = id;
        info.parent = parent;
        info.term = nodes[id].term;
        info.depth = nodes[id].depth;
        info.loop_insts = nodes[id].loop_insts;
        info.accepting = accepts_empty(nodes[id].term);
        if (info.accepting) ++report.accepting_count;
        for (auto* l : loggers) l->on_node(info);
    };

    nodes.push_back(Node{i, 0, 0});
    report.node_count = 1;
    notify_node(0, Scheduler::kNoParent);
    sched.push(0, Scheduler::kNoParent, 0);
    sched.finish_group();

    while (!sched.empty()) {
        std::size_t id = sched.pop();
        // Copy: expanding may reallocate the arena.
        Node node = nodes[id];

        std::vector<Candidate> cands;
        for (FrontierEntry& e : frontier(node.term)) {
            Candidate c;
            c.loop_depth = loop_depth_at(node.term, e.position);
            c.entry = std::move(e);
            c.score = (c.entry.action.kind == ActionKind::Emit ? cfg.priorities.emission
                                                               : cfg.priorities.reception) +
                      (c.loop_depth > 0 ? cfg.priorities.loop : 0);
            cands.push_back(std::move(c));
        }
        if (cfg.priorities.mode == Priorities::Mode::Random) {
            std::shuffle(cands.begin(), cands.end(), shuffle_rng);
        }
        std::stable_sort(cands.begin(), cands.end(),
                         [](const Candidate& a, const Candidate& b) { return a.score > b.score; });

        std::size_t children = 0;
        for (const Candidate& c : cands) {
            if (cfg.filters.max_depth && node.depth + 1 > *cfg.filters.max_depth) {
                report.cuts[CutReason::MaxDepth]++;
                for (auto* l : loggers) l->on_cut(id, CutReason::MaxDepth);
                continue;
            }
            long insts = node.loop_insts + c.loop_depth;
            if (cfg.filters.max_loop_insts && insts > *cfg.filters.max_loop_insts) {
                report.cuts[CutReason::MaxLoopInsts]++;
                for (auto* l : loggers) l->on_cut(id, CutReason::MaxLoopInsts);
                continue;
            }
            if (cfg.filters.max_node_number && report.node_count >= *cfg.filters.max_node_number) {
                report.cuts[CutReason::MaxNodeNumber]++;
                for (auto* l : loggers) l->on_cut(id, CutReason::MaxNodeNumber);
                continue;
            }
            std::size_t child = nodes.size();
            nodes.push_back(Node{c.entry.follow_up, node.depth + 1, insts});
            ++report.node_count;
            notify_node(child, id);
            for (auto* l : loggers) l->on_edge(id, child, c.entry.action, c.entry.position);
            sched.push(child, id, node.depth + 1);
            ++children;
        }
        sched.finish_group();
        if (children == 0) sched.mark_terminal(id);
        for (auto* l : loggers) l->on_closed(id, children);
    }
    return report;
}

TracegenCollector::TracegenCollector(PartitionPtr partition, GenMode mode)
    : partition_(std::move(partition)), mode_(mode) {}

void TracegenCollector::on_node(const ExploreNodeInfo& node) {
    if (node.parent == static_cast<std::size_t>(-1)) {
        paths_.emplace(node.id, MultiTrace::empty(partition_));
    }
    accepting_[node.id] = node.accepting;
    if (node.parent == static_cast<std::size_t>(-1)) {
        if (mode_ == GenMode::Prefix || (mode_ == GenMode::Exact && node.accepting)) {
            emit(node.id, paths_.at(node.id));
        }
    }
}

void TracegenCollector::on_edge(std::size_t parent, std::size_t child, const CommAction& action,
                                const Position&) {
    auto [it, _] = paths_.emplace(child, paths_.at(parent).append(action));
    if (mode_ == GenMode::Prefix || (mode_ == GenMode::Exact && accepting_.at(child))) {
        emit(child, it->second);
    }
}

void TracegenCollector::on_closed(std::size_t id, std::size_t child_count) {
    if (mode_ == GenMode::Terminal && child_count == 0) {
        emit(id, paths_.at(id));
    }
}

void TracegenCollector::emit(std::size_t, const MultiTrace& mu) { result_.insert(mu); }

std::set<MultiTrace> generate_accepted(const InterPtr& i, PartitionPtr partition,
                                       const ExploreConfig& cfg, GenMode mode) {
    TracegenCollector collector(std::move(partition), mode);
    std::vector<ExploreLogger*> loggers{&collector};
    explore(i, cfg, loggers);
    return collector.result();
}

}  // namespace orv
