#ifndef ORV_CORE_EXPERIMENT_HPP_
#define ORV_CORE_EXPERIMENT_HPP_

#include "core/engine.hpp"
#include "core/explore.hpp"
#include "core/mutate.hpp"

namespace orv {

// Batch pipeline: generate accepted multi-traces, derive slices and three
// mutant families, analyze everything and tabulate the outcomes.

struct ExperimentOptions {
    enum class SliceMode : std::uint8_t { Exhaustive, Wide };
    SliceMode slice_mode = SliceMode::Exhaustive;
    double wide_fraction = 1.0 / 3.0;  // minimum kept fraction of a component
    std::size_t wide_per_trace = 10;   // random wide slices drawn per accepted trace
    int repetitions = 5;               // timing repetitions per analysis
    std::uint64_t seed = 0;
};

struct ExperimentRow {
    ExperimentRow(std::string set_name, std::size_t idx, MultiTrace multitrace)
        : set(std::move(set_name)), index(idx), mu(std::move(multitrace)) {}

    std::string set;
    std::size_t index;
    MultiTrace mu;
    std::size_t length = 0;
    Verdict verdict = Verdict::WeakFail;
    double median_seconds = 0.0;
    std::size_t nodes = 0;
    int re_steps = 0;
    int rs_steps = 0;
};

struct ExperimentResult {
    std::vector<ExperimentRow> rows;
};

ExperimentResult run_experiment(const Signature& sig, const InterPtr& i, PartitionPtr partition,
                                const ExploreConfig& explore_cfg, GenMode gen_mode,
                                const AnalysisConfig& analysis_cfg,
                                const ExperimentOptions& opts);

// Stable schema: set,index,length,verdict,median_seconds,nodes,re_steps,rs_steps
std::string experiment_csv(const ExperimentResult& result);

}  // namespace orv

#endif  // ORV_CORE_EXPERIMENT_HPP_
