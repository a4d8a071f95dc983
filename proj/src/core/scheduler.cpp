#include "core/scheduler.hpp"

#include <algorithm>

namespace orv {

void Scheduler::push(std::size_t id, std::size_t parent, int depth) {
    if (meta_.size() <= id) meta_.resize(id + 1);
    meta_[id] = Meta{parent, depth, false};
    pending_.push_back(id);
}

void Scheduler::finish_group() {
    switch (strategy_) {
        case Strategy::DFS:
            // Reverse so the first-pushed (highest priority) child pops first.
            stack_.insert(stack_.end(), pending_.rbegin(), pending_.rend());
            break;
        case Strategy::BFS:
            queue_.insert(queue_.end(), pending_.begin(), pending_.end());
            break;
        case Strategy::HCS:
            open_.insert(open_.end(), pending_.begin(), pending_.end());
            break;
    }
    pending_.clear();
}

bool Scheduler::empty() const {
    switch (strategy_) {
        case Strategy::DFS:
            return stack_.empty();
        case Strategy::BFS:
            return queue_.empty();
        case Strategy::HCS:
            return open_.empty();
    }
    return true;
}

std::size_t Scheduler::pop() {
    switch (strategy_) {
        case Strategy::DFS: {
            std::size_t id = stack_.back();
            stack_.pop_back();
            return id;
        }
        case Strategy::BFS: {
            std::size_t id = queue_.front();
            queue_.pop_front();
            return id;
        }
        case Strategy::HCS: {
            std::size_t best_pos = 0;
            int best_score = coverage_score(open_[0]);
            for (std::size_t k = 1; k < open_.size(); ++k) {
                int score = coverage_score(open_[k]);
                if (score < best_score || (score == best_score && open_[k] < open_[best_pos])) {
                    best_score = score;
                    best_pos = k;
                }
            }
            std::size_t id = open_[best_pos];
            open_.erase(open_.begin() + static_cast<std::ptrdiff_t>(best_pos));
            return id;
        }
    }
    return kNoParent;
}

void Scheduler::mark_terminal(std::size_t id) {
    for (std::size_t cur = id; cur != kNoParent; cur = meta_[cur].parent) {
        if (meta_[cur].on_terminated_path) break;
        meta_[cur].on_terminated_path = true;
    }
}

int Scheduler::coverage_score(std::size_t id) const {
    // Length of the longest common prefix between this node's path and any
    // terminated path: the depth of its deepest ancestor lying on one.
    for (std::size_t cur = meta_[id].parent; cur != kNoParent; cur = meta_[cur].parent) {
        if (meta_[cur].on_terminated_path) return meta_[cur].depth;
    }
    return -1;
}

}  // namespace orv
