#include "core/semantics.hpp"

namespace orv {

std::optional<InterPtr> prune(const InterPtr& i, LifelineSet avoid) {
    switch (i->kind()) {
        case NodeKind::Empty:
            return i;
        case NodeKind::Action:
            if (avoid.contains(i->act().lifeline)) return std::nullopt;
            return i;
        case NodeKind::Alt: {
            auto l = prune(i->left(), avoid);
            auto r = prune(i->right(), avoid);
            if (l && r) {
                if (*l == i->left() && *r == i->right()) return i;
                return Interaction::alt(*l, *r);
            }
            if (l) return *l;
            if (r) return *r;
            return std::nullopt;
        }
        case NodeKind::Strict:
        case NodeKind::Coreg: {
            auto l = prune(i->left(), avoid);
            if (!l) return std::nullopt;
            auto r = prune(i->right(), avoid);
            if (!r) return std::nullopt;
            if (*l == i->left() && *r == i->right()) return i;
            if (i->kind() == NodeKind::Strict) return Interaction::strict(*l, *r);
            return Interaction::coreg(i->region(), *l, *r);
        }
        case NodeKind::LoopS:
        case NodeKind::LoopC: {
            auto c = prune(i->child(), avoid);
            if (!c) return Interaction::empty();
            if (*c == i->child()) return i;
            if (i->kind() == NodeKind::LoopS) return Interaction::loop_s(*c);
            return Interaction::loop_c(i->region(), *c);
        }
    }
    return std::nullopt;
}

bool accepts_empty(const InterPtr& i) {
    return prune(i, LifelineSet::universe()).has_value();
}

namespace {

void collect_frontier(const InterPtr& i, Position& prefix, std::vector<FrontierEntry>& out) {
    switch (i->kind()) {
        case NodeKind::Empty:
            return;
        case NodeKind::Action:
            out.push_back(FrontierEntry{i->act(), prefix, Interaction::empty()});
            return;
        case NodeKind::Alt: {
            // Executing within a branch commits the choice.
            prefix.push_back('1');
            collect_frontier(i->left(), prefix, out);
            prefix.back() = '2';
            collect_frontier(i->right(), prefix, out);
            prefix.pop_back();
            return;
        }
        case NodeKind::Strict: {
            std::size_t from = out.size();
            prefix.push_back('1');
            collect_frontier(i->left(), prefix, out);
            prefix.pop_back();
            for (std::size_t k = from; k < out.size(); ++k) {
                out[k].follow_up = Interaction::strict(out[k].follow_up, i->right());
            }
            // The right operand can start only once the left can be skipped
            // entirely.
            if (accepts_empty(i->left())) {
                prefix.push_back('2');
                collect_frontier(i->right(), prefix, out);
                prefix.pop_back();
            }
            return;
        }
        case NodeKind::Coreg: {
            std::size_t from = out.size();
            prefix.push_back('1');
            collect_frontier(i->left(), prefix, out);
            prefix.pop_back();
            for (std::size_t k = from; k < out.size(); ++k) {
                out[k].follow_up = Interaction::coreg(i->region(), out[k].follow_up, i->right());
            }
            // A right action may fire first if the left side can drop every
            // behavior touching its lifeline (unless that lifeline is in the
            // concurrent region, where no constraint applies).
            std::size_t right_from = out.size();
            prefix.push_back('2');
            collect_frontier(i->right(), prefix, out);
            prefix.pop_back();
            std::size_t keep = right_from;
            for (std::size_t k = right_from; k < out.size(); ++k) {
                LifelineSet avoid = LifelineSet::single(out[k].action.lifeline).minus(i->region());
                auto pruned_left = prune(i->left(), avoid);
                if (!pruned_left) continue;
                out[keep] = out[k];
                out[keep].follow_up = Interaction::coreg(i->region(), *pruned_left, out[keep].follow_up);
                ++keep;
            }
            out.resize(keep);
            return;
        }
        case NodeKind::LoopS: {
            std::size_t from = out.size();
            prefix.push_back('1');
            collect_frontier(i->child(), prefix, out);
            prefix.pop_back();
            for (std::size_t k = from; k < out.size(); ++k) {
                out[k].follow_up = Interaction::strict(out[k].follow_up, i);
            }
            return;
        }
        case NodeKind::LoopC: {
            // The executed action may belong to a later instance; earlier
            // instances survive as a pruned copy of the loop placed in front.
            std::size_t from = out.size();
            prefix.push_back('1');
            collect_frontier(i->child(), prefix, out);
            prefix.pop_back();
            for (std::size_t k = from; k < out.size(); ++k) {
                LifelineSet avoid = LifelineSet::single(out[k].action.lifeline).minus(i->region());
                auto pruned_loop = prune(i, avoid);
                out[k].follow_up = Interaction::coreg(
                    i->region(), *pruned_loop,
                    Interaction::coreg(i->region(), out[k].follow_up, i));
            }
            return;
        }
    }
}

}  // namespace

std::vector<FrontierEntry> frontier(const InterPtr& i) {
    std::vector<FrontierEntry> out;
    Position prefix;
    collect_frontier(i, prefix, out);
    return out;
}

std::pair<CommAction, InterPtr> execute(const InterPtr& i, const Position& p) {
    for (const FrontierEntry& e : frontier(i)) {
        if (e.position == p) return {e.action, e.follow_up};
    }
    throw Error("not executable at position '" + p + "'");
}

namespace {
bool membership_search(const InterPtr& i, const MultiTrace& mu) {
    if (mu.is_empty()) return accepts_empty(i);
    for (const FrontierEntry& e : frontier(i)) {
        std::size_t k = mu.partition().coloc_of(e.action);
        const Trace& comp = mu.component(k);
        if (comp.empty() || !(comp.front() == e.action)) continue;
        if (membership_search(e.follow_up, mu.drop_head(k))) return true;
    }
    return false;
}
}  // namespace

bool membership(const InterPtr& i, const MultiTrace& mu) {
    return membership_search(i, mu);
}

std::vector<CommAction> complete_greedily(const InterPtr& i) {
    // Executing an action outside all loops strictly decreases the number of
    // actions outside loops, and a term without such actions accepts empty.
    std::vector<CommAction> out;
    InterPtr cur = i;
    while (!accepts_empty(cur)) {
        bool advanced = false;
        for (const FrontierEntry& e : frontier(cur)) {
            if (loop_depth_at(cur, e.position) == 0) {
                out.push_back(e.action);
                cur = e.follow_up;
                advanced = true;
                break;
            }
        }
        if (!advanced) throw Error("no loop-free completion step found");
    }
    return out;
}

}  // namespace orv
