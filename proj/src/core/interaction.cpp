#include "core/interaction.hpp"

#include <algorithm>

namespace orv {

InterPtr Interaction::empty() {
    static const InterPtr node(new Interaction(NodeKind::Empty, CommAction{}, LifelineSet{}, nullptr, nullptr));
    return node;
}

InterPtr Interaction::action(CommAction a) {
    return InterPtr(new Interaction(NodeKind::Action, a, LifelineSet{}, nullptr, nullptr));
}

InterPtr Interaction::strict(InterPtr left, InterPtr right) {
    return InterPtr(new Interaction(NodeKind::Strict, CommAction{}, LifelineSet{}, std::move(left), std::move(right)));
}

InterPtr Interaction::alt(InterPtr left, InterPtr right) {
    return InterPtr(new Interaction(NodeKind::Alt, CommAction{}, LifelineSet{}, std::move(left), std::move(right)));
}

InterPtr Interaction::coreg(LifelineSet region, InterPtr left, InterPtr right) {
    return InterPtr(new Interaction(NodeKind::Coreg, CommAction{}, region, std::move(left), std::move(right)));
}

InterPtr Interaction::loop_s(InterPtr child) {
    return InterPtr(new Interaction(NodeKind::LoopS, CommAction{}, LifelineSet{}, std::move(child), nullptr));
}

InterPtr Interaction::loop_c(LifelineSet region, InterPtr child) {
    return InterPtr(new Interaction(NodeKind::LoopC, CommAction{}, region, std::move(child), nullptr));
}

bool structurally_equal(const InterPtr& a, const InterPtr& b) {
    if (a.get() == b.get()) return true;
    if (a->kind() != b->kind()) return false;
    switch (a->kind()) {
        case NodeKind::Empty:
            return true;
        case NodeKind::Action:
            return a->act() == b->act();
        case NodeKind::Strict:
        case NodeKind::Alt:
            return structurally_equal(a->left(), b->left()) && structurally_equal(a->right(), b->right());
        case NodeKind::Coreg:
            return a->region() == b->region() && structurally_equal(a->left(), b->left()) &&
                   structurally_equal(a->right(), b->right());
        case NodeKind::LoopS:
            return structurally_equal(a->child(), b->child());
        case NodeKind::LoopC:
            return a->region() == b->region() && structurally_equal(a->child(), b->child());
    }
    return false;
}

namespace {
void collect_positions(const InterPtr& i, Position& prefix, std::vector<Position>& out) {
    out.push_back(prefix);
    if (i->is_binary()) {
        prefix.push_back('1');
        collect_positions(i->left(), prefix, out);
        prefix.back() = '2';
        collect_positions(i->right(), prefix, out);
        prefix.pop_back();
    } else if (i->is_loop()) {
        prefix.push_back('1');
        collect_positions(i->child(), prefix, out);
        prefix.pop_back();
    }
}
}  // namespace

std::vector<Position> positions_of(const InterPtr& i) {
    std::vector<Position> out;
    Position prefix;
    collect_positions(i, prefix, out);
    return out;
}

InterPtr sub_at(const InterPtr& i, const Position& p) {
    InterPtr cur = i;
    for (char d : p) {
        if (d == '1' && (cur->is_binary() || cur->is_loop())) {
            cur = cur->left();
        } else if (d == '2' && cur->is_binary()) {
            cur = cur->right();
        } else {
            throw Error("invalid position '" + p + "'");
        }
    }
    return cur;
}

int loop_depth_at(const InterPtr& i, const Position& p) {
    InterPtr cur = i;
    int depth = 0;
    for (char d : p) {
        if (cur->is_loop()) {
            if (d != '1') throw Error("invalid position '" + p + "'");
            ++depth;
            cur = cur->child();
        } else if (cur->is_binary()) {
            if (d == '1') {
                cur = cur->left();
            } else if (d == '2') {
                cur = cur->right();
            } else {
                throw Error("invalid position '" + p + "'");
            }
        } else {
            throw Error("invalid position '" + p + "'");
        }
    }
    return depth;
}

int max_loop_depth(const InterPtr& i) {
    switch (i->kind()) {
        case NodeKind::Empty:
        case NodeKind::Action:
            return 0;
        case NodeKind::Strict:
        case NodeKind::Alt:
        case NodeKind::Coreg:
            return std::max(max_loop_depth(i->left()), max_loop_depth(i->right()));
        case NodeKind::LoopS:
        case NodeKind::LoopC:
            return 1 + max_loop_depth(i->child());
    }
    return 0;
}

int actions_outside_loops(const InterPtr& i) {
    switch (i->kind()) {
        case NodeKind::Empty:
            return 0;
        case NodeKind::Action:
            return 1;
        case NodeKind::Strict:
        case NodeKind::Coreg:
            return actions_outside_loops(i->left()) + actions_outside_loops(i->right());
        case NodeKind::Alt:
            return std::max(actions_outside_loops(i->left()), actions_outside_loops(i->right()));
        case NodeKind::LoopS:
        case NodeKind::LoopC:
            return 0;
    }
    return 0;
}

int total_action_count(const InterPtr& i) {
    switch (i->kind()) {
        case NodeKind::Empty:
            return 0;
        case NodeKind::Action:
            return 1;
        case NodeKind::Strict:
        case NodeKind::Alt:
        case NodeKind::Coreg:
            return total_action_count(i->left()) + total_action_count(i->right());
        case NodeKind::LoopS:
        case NodeKind::LoopC:
            return total_action_count(i->child());
    }
    return 0;
}

int loop_node_count(const InterPtr& i) {
    switch (i->kind()) {
        case NodeKind::Empty:
        case NodeKind::Action:
            return 0;
        case NodeKind::Strict:
        case NodeKind::Alt:
        case NodeKind::Coreg:
            return loop_node_count(i->left()) + loop_node_count(i->right());
        case NodeKind::LoopS:
        case NodeKind::LoopC:
            return 1 + loop_node_count(i->child());
    }
    return 0;
}

int term_size(const InterPtr& i) {
    if (i->is_leaf()) return 1;
    if (i->is_loop()) return 1 + term_size(i->child());
    return 1 + term_size(i->left()) + term_size(i->right());
}

}  // namespace orv
