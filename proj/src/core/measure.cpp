#include "core/measure.hpp"

namespace orv {

std::string to_string(const Measure& m) {
    return "(" + std::to_string(m.lambda) + "," + std::to_string(m.alpha) + ")";
}

Measure LoopActPolicy::init(const InterPtr& i, const MeasureContext& ctx) const {
    Measure m;
    switch (opts_.loop_source) {
        case LoopBudgetSource::MaxNestedDepth:
            m.lambda = max_loop_depth(i);
            break;
        case LoopBudgetSource::TotalLoopCount:
            m.lambda = loop_node_count(i);
            break;
        case LoopBudgetSource::Fixed:
            m.lambda = opts_.loop_fixed;
            break;
    }
    switch (opts_.act_source) {
        case ActBudgetSource::ActionsOutsideLoops:
            m.alpha = actions_outside_loops(i);
            break;
        case ActBudgetSource::Fixed:
            m.alpha = opts_.act_fixed;
            break;
    }
    if (opts_.multiply_by_mt_length) {
        auto len = static_cast<long>(ctx.multitrace_length);
        m.lambda *= len;
        m.alpha *= len;
    }
    return m;
}

std::optional<Measure> decrement_loopact(const Measure& j, const InterPtr& i, const Position& p,
                                         const InterPtr& follow_up) {
    int depth = loop_depth_at(i, p);
    if (depth > 0) {
        if (j.lambda < depth) return std::nullopt;
        return Measure{j.lambda - depth, actions_outside_loops(follow_up)};
    }
    // Outside loops the action count must strictly decrease for the measure
    // to stay well-founded.
    long next_alpha = actions_outside_loops(follow_up);
    if (j.alpha < 1 || next_alpha >= j.alpha) return std::nullopt;
    return Measure{j.lambda, next_alpha};
}

std::optional<Measure> LoopActPolicy::decrement(const Measure& j, const InterPtr& i,
                                                const Position& p,
                                                const InterPtr& follow_up) const {
    return decrement_loopact(j, i, p, follow_up);
}

}  // namespace orv
