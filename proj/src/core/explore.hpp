#ifndef ORV_CORE_EXPLORE_HPP_
#define ORV_CORE_EXPLORE_HPP_

#include <map>
#include <set>

#include "core/config.hpp"
#include "core/semantics.hpp"

namespace orv {

enum class CutReason : std::uint8_t { MaxDepth, MaxLoopInsts, MaxNodeNumber };

std::string to_string(CutReason r);

struct ExploreNodeInfo {
    std::size_t id = 0;
    std::size_t parent = static_cast<std::size_t>(-1);
    InterPtr term;
    int depth = 0;
    long loop_insts = 0;  // cumulative loop instantiations along the path
    bool accepting = false;
};

// Observers of the exploration. Events arrive in expansion order: on_node
// for every created node, on_edge for its incoming edge, on_cut for every
// pruned child edge, on_closed once a node's expansion finished.
class ExploreLogger {
  public:
    virtual ~ExploreLogger() = default;
    virtual void on_node(const ExploreNodeInfo& /*node*/) {}
    virtual void on_edge(std::size_t /*parent*/, std::size_t /*child*/, const CommAction& /*action*/,
                         const Position& /*position*/) {}
    virtual void on_cut(std::size_t /*parent*/, CutReason /*reason*/) {}
    virtual void on_closed(std::size_t /*id*/, std::size_t /*child_count*/) {}
};

struct ExploreReport {
    std::size_t node_count = 0;
    std::size_t accepting_count = 0;
    std::map<CutReason, std::size_t> cuts;
};

struct ExploreConfig {
    Strategy strategy = Strategy::BFS;
    ExploreFilters filters;
    Priorities priorities;
};

ExploreReport explore(const InterPtr& i, const ExploreConfig& cfg,
                      const std::vector<ExploreLogger*>& loggers);

// Multi-traces of root-to-node paths, per generation mode:
//   Exact    at every node whose term accepts empty,
//   Prefix   at every node,
//   Terminal at every node that received no children.
class TracegenCollector : public ExploreLogger {
  public:
    TracegenCollector(PartitionPtr partition, GenMode mode);

    void on_node(const ExploreNodeInfo& node) override;
    void on_edge(std::size_t parent, std::size_t child, const CommAction& action,
                 const Position& position) override;
    void on_closed(std::size_t id, std::size_t child_count) override;

    const std::set<MultiTrace>& result() const { return result_; }
    // Multi-trace of one node's path, for file-writing subclasses.
    const MultiTrace& path_multitrace(std::size_t id) const { return paths_.at(id); }

  protected:
    virtual void emit(std::size_t id, const MultiTrace& mu);

  private:
    PartitionPtr partition_;
    GenMode mode_;
    std::map<std::size_t, MultiTrace> paths_;
    std::map<std::size_t, bool> accepting_;
    std::set<MultiTrace> result_;
};

std::set<MultiTrace> generate_accepted(const InterPtr& i, PartitionPtr partition,
                                       const ExploreConfig& cfg, GenMode mode);

}  // namespace orv

#endif  // ORV_CORE_EXPLORE_HPP_
