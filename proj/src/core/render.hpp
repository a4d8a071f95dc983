#ifndef ORV_CORE_RENDER_HPP_
#define ORV_CORE_RENDER_HPP_

#include <sstream>
#include <string>

#include "core/engine.hpp"
#include "core/explore.hpp"
#include "core/formats.hpp"

namespace orv {

// DOT rendering of the term tree: one node per operator or action leaf.
std::string interaction_to_dot(const InterPtr& i, const Signature& sig, bool vertical = true);

// Plain-text sketch of the diagram: lifelines as columns, message arrows as
// rows, operators as bracketed regions.
std::string interaction_to_ascii(const InterPtr& i, const Signature& sig);

// Single-line rendering of a multi-trace, for labels and reports.
std::string multitrace_text(const MultiTrace& mu, const Signature& sig);

// Collects the explored execution tree as a DOT graph.
class ExploreDotLogger final : public ExploreLogger {
  public:
    ExploreDotLogger(const Signature& sig, bool vertical = true);
    void on_node(const ExploreNodeInfo& node) override;
    void on_edge(std::size_t parent, std::size_t child, const CommAction& action,
                 const Position& position) override;
    void on_cut(std::size_t parent, CutReason reason) override;
    std::string str() const;

  private:
    const Signature& sig_;
    bool vertical_;
    std::ostringstream body_;
    std::size_t cut_marks_ = 0;
};

// Collects the analysis search graph as a DOT graph; both search phases of
// one analysis appear as separate clusters.
class AnalysisDotLogger final : public AnalysisLogger {
  public:
    AnalysisDotLogger(const Signature& sig, bool vertical = true);
    void on_phase(int phase, const std::string& name) override;
    void on_node(int phase, std::size_t id, const AnalysisVertex& v,
                 const std::vector<int>& sim_before, const std::vector<int>& sim_after) override;
    void on_edge(int phase, std::size_t from, std::size_t to, const SuccEdge& e) override;
    void on_sink(int phase, std::size_t from, RuleTag rule) override;
    std::string str() const;

  private:
    std::string node_name(int phase, std::size_t id) const;

    const Signature& sig_;
    bool vertical_;
    std::ostringstream body_;
    int open_phase_ = -1;
    std::size_t sink_count_ = 0;
};

std::string dot_escape(const std::string& s);

}  // namespace orv

#endif  // ORV_CORE_RENDER_HPP_
