#ifndef ORV_CORE_ENGINE_HPP_
#define ORV_CORE_ENGINE_HPP_

#include <optional>
#include <vector>

#include "core/config.hpp"
#include "core/semantics.hpp"

namespace orv {

enum class RuleTag : std::uint8_t { Rp, Re, Rs, Rf };

std::string to_string(RuleTag r);

// A vertex of the analysis graph: interaction, remaining multi-trace,
// observation-started flags (one bit per co-localization) and the measure.
struct AnalysisVertex {
    InterPtr term;
    MultiTrace mu;
    std::uint64_t started = 0;
    Measure measure;
};

struct SuccEdge {
    RuleTag rule = RuleTag::Rf;
    CommAction action;
    Position position;
    int loop_depth = 0;
    bool after_end = false;  // Rs past the end of observation on its component
    std::optional<AnalysisVertex> target;  // absent for verdict sinks Rp/Rf
};

struct SuccessorGates {
    bool allow_rs = true;
    bool simulate_before_start = true;
    bool reset_on_execute = true;
    // Require the term to accept empty for the Ok edge (strict-acceptance
    // phases); the generic graph fires Rp on any empty multi-trace.
    bool gate_ok = false;
};

// All edges out of v: a single Rp (or gated Rf) when the multi-trace is
// empty, otherwise Re edges, Rs edges, and a final Rf when neither exists.
std::vector<SuccEdge> successors(const AnalysisVertex& v, const MeasurePolicy& policy,
                                 const MeasureContext& ctx, const SuccessorGates& gates);

struct AnalysisConfig {
    AnalysisKind kind = AnalysisKind::Simulate;
    MeasureOptions measure;
    Strategy strategy = Strategy::DFS;
    Priorities priorities;
    Verdict goal = Verdict::WeakPass;
    std::size_t node_cap = 1000000;
};

struct WitnessStep {
    RuleTag rule = RuleTag::Re;
    CommAction action;
    Position position;
    int loop_depth = 0;
    Measure measure_after;
};

struct AnalysisReport {
    Verdict verdict = Verdict::WeakFail;
    Omega omega = Omega::Inconc;
    Measure initial_measure;
    std::vector<WitnessStep> witness;  // present for Pass / WeakPass
    std::size_t nodes_expanded = 0;
    int re_steps = 0;
    int rs_steps = 0;
    // Loop instantiations along the witness; a matching oracle bound.
    long witness_loop_cost = 0;
    double seconds = 0.0;
    bool hit_node_cap = false;
};

// Observer for the analysis graph search (DOT emission).
class AnalysisLogger {
  public:
    virtual ~AnalysisLogger() = default;
    virtual void on_phase(int /*phase*/, const std::string& /*name*/) {}
    virtual void on_node(int /*phase*/, std::size_t /*id*/, const AnalysisVertex& /*v*/,
                         const std::vector<int>& /*sim_before*/, const std::vector<int>& /*sim_after*/) {}
    virtual void on_edge(int /*phase*/, std::size_t /*from*/, std::size_t /*to*/, const SuccEdge& /*e*/) {}
    virtual void on_sink(int /*phase*/, std::size_t /*from*/, RuleTag /*rule*/) {}
};

AnalysisReport analyze(const InterPtr& i, const MultiTrace& mu, const AnalysisConfig& cfg,
                       AnalysisLogger* logger = nullptr);

// Replays a witness from (i, mu): checks every step is derivable, that the
// multi-trace is consumed entirely, and returns the reconstructed global
// trace (execution order of all witness actions).
Trace replay_witness(const InterPtr& i, const MultiTrace& mu, const AnalysisConfig& cfg,
                     const std::vector<WitnessStep>& witness);

}  // namespace orv

#endif  // ORV_CORE_ENGINE_HPP_
