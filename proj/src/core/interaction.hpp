#ifndef ORV_CORE_INTERACTION_HPP_
#define ORV_CORE_INTERACTION_HPP_

#include <memory>
#include <string>
#include <vector>

#include "core/ids.hpp"

namespace orv {

// Interaction terms. The canonical constructor set is Empty, Act, Strict,
// Alt, Coreg(r), LoopS and LoopC(r). seq/par/loopW/loopP are aliases:
//   seq = Coreg(empty region), par = Coreg(all lifelines),
//   loopW = LoopC(empty region), loopP = LoopC(all lifelines).
// Terms are immutable and shared; all semantic operations build fresh terms.
enum class NodeKind : std::uint8_t { Empty, Action, Strict, Alt, Coreg, LoopS, LoopC };

class Interaction;
using InterPtr = std::shared_ptr<const Interaction>;

class Interaction {
  public:
    static InterPtr empty();
    static InterPtr action(CommAction a);
    static InterPtr strict(InterPtr left, InterPtr right);
    static InterPtr alt(InterPtr left, InterPtr right);
    static InterPtr coreg(LifelineSet region, InterPtr left, InterPtr right);
    static InterPtr loop_s(InterPtr child);
    static InterPtr loop_c(LifelineSet region, InterPtr child);

    NodeKind kind() const { return kind_; }
    const CommAction& act() const { return act_; }
    LifelineSet region() const { return region_; }
    const InterPtr& left() const { return left_; }
    const InterPtr& right() const { return right_; }
    const InterPtr& child() const { return left_; }

    bool is_binary() const {
        return kind_ == NodeKind::Strict || kind_ == NodeKind::Alt || kind_ == NodeKind::Coreg;
    }
    bool is_loop() const { return kind_ == NodeKind::LoopS || kind_ == NodeKind::LoopC; }
    bool is_leaf() const { return kind_ == NodeKind::Empty || kind_ == NodeKind::Action; }

  private:
    Interaction(NodeKind kind, CommAction act, LifelineSet region, InterPtr left, InterPtr right)
        : kind_(kind), act_(act), region_(region), left_(std::move(left)), right_(std::move(right)) {}

    NodeKind kind_;
    CommAction act_;
    LifelineSet region_;
    InterPtr left_;
    InterPtr right_;
};

bool structurally_equal(const InterPtr& a, const InterPtr& b);

// A position is a word over {1,2}; the empty word addresses the root.
using Position = std::string;

std::vector<Position> positions_of(const InterPtr& i);
InterPtr sub_at(const InterPtr& i, const Position& p);

// Number of loop nodes strictly above position p.
int loop_depth_at(const InterPtr& i, const Position& p);
// Maximum nested loop depth over all positions.
int max_loop_depth(const InterPtr& i);
// Number of actions occurring outside loops (sum under scheduling operators,
// max under alt, zero under loops).
int actions_outside_loops(const InterPtr& i);
// Total number of action leaves.
int total_action_count(const InterPtr& i);
// Total number of loop nodes.
int loop_node_count(const InterPtr& i);
// Total number of term nodes.
int term_size(const InterPtr& i);

}  // namespace orv

#endif  // ORV_CORE_INTERACTION_HPP_
