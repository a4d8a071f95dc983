#ifndef ORV_CORE_SCHEDULER_HPP_
#define ORV_CORE_SCHEDULER_HPP_

#include <cstddef>
#include <deque>
#include <vector>

#include "core/config.hpp"

namespace orv {

// Open-node scheduling shared by tree exploration and analysis search.
// Children of one expansion are pushed in priority order and popped in that
// order under both BFS and DFS. HCS ("high coverage search") prefers the
// open node whose path to the root diverges earliest from every already
// terminated path, so the search spreads across subtrees; ties break on the
// lowest node id.
class Scheduler {
  public:
    explicit Scheduler(Strategy strategy) : strategy_(strategy) {}

    static constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

    void push(std::size_t id, std::size_t parent, int depth);
    void finish_group();

    bool empty() const;
    std::size_t pop();

    // Marks a closed node that ended up with no children.
    void mark_terminal(std::size_t id);

  private:
    struct Meta {
        std::size_t parent = kNoParent;
        int depth = 0;
        bool on_terminated_path = false;
    };

    int coverage_score(std::size_t id) const;

    Strategy strategy_;
    std::vector<Meta> meta_;
    std::vector<std::size_t> pending_;
    std::vector<std::size_t> stack_;
    std::deque<std::size_t> queue_;
    std::vector<std::size_t> open_;
};

}  // namespace orv

#endif  // ORV_CORE_SCHEDULER_HPP_
