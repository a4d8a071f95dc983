#include "core/experiment.hpp"

#include <algorithm>
#include <sstream>

namespace orv {

namespace {

ExperimentRow analyze_row(const std::string& set, std::size_t index, const InterPtr& i,
                          const MultiTrace& mu, const AnalysisConfig& cfg, int repetitions) {
    ExperimentRow row(set, index, mu);
    row.length = mu.total_length();
    std::vector<double> times;
    AnalysisReport rep;
    for (int r = 0; r < std::max(repetitions, 1); ++r) {
        rep = analyze(i, mu, cfg);
        times.push_back(rep.seconds);
    }
    std::sort(times.begin(), times.end());
    row.median_seconds = times[times.size() / 2];
    row.verdict = rep.verdict;
    row.nodes = rep.nodes_expanded;
    row.re_steps = rep.re_steps;
    row.rs_steps = rep.rs_steps;
    return row;
}

}  // namespace

ExperimentResult run_experiment(const Signature& sig, const InterPtr& i, PartitionPtr partition,
                                const ExploreConfig& explore_cfg, GenMode gen_mode,
                                const AnalysisConfig& analysis_cfg,
                                const ExperimentOptions& opts) {
    Rng rng(opts.seed);
    ExperimentResult result;

    std::set<MultiTrace> accepted = generate_accepted(i, partition, explore_cfg, gen_mode);
    std::vector<MultiTrace> t_set(accepted.begin(), accepted.end());

    std::set<MultiTrace> slice_set;
    if (opts.slice_mode == ExperimentOptions::SliceMode::Exhaustive) {
        for (const MultiTrace& mu : t_set) {
            std::set<MultiTrace> s = slices_of(mu);
            slice_set.insert(s.begin(), s.end());
        }
    } else {
        for (const MultiTrace& mu : t_set) {
            for (std::size_t k = 0; k < opts.wide_per_trace; ++k) {
                slice_set.insert(random_wide_slice(mu, rng, opts.wide_fraction));
            }
        }
    }
    std::vector<MultiTrace> s_set(slice_set.begin(), slice_set.end());

    std::vector<MultiTrace> m_sa;
    std::vector<MultiTrace> m_sc;
    std::vector<MultiTrace> m_ia;
    for (std::size_t n = 0; n < s_set.size(); ++n) {
        const MultiTrace& mu = s_set[n];
        bool swappable = false;
        for (std::size_t k = 0; k < mu.component_count(); ++k) {
            if (mu.component(k).size() >= 2) swappable = true;
        }
        if (swappable) m_sa.push_back(mutate_swap_actions(mu, rng));
        if (s_set.size() >= 2) {
            std::size_t other =
                std::uniform_int_distribution<std::size_t>(0, s_set.size() - 2)(rng);
            if (other >= n) ++other;
            std::size_t coloc =
                std::uniform_int_distribution<std::size_t>(0, mu.component_count() - 1)(rng);
            m_sc.push_back(mutate_swap_components(mu, s_set[other], coloc));
        }
        m_ia.push_back(mutate_insert_action(mu, rng, sig));
    }

    auto run_set = [&](const std::string& name, const std::vector<MultiTrace>& mus) {
        for (std::size_t k = 0; k < mus.size(); ++k) {
            result.rows.push_back(analyze_row(name, k, i, mus[k], analysis_cfg, opts.repetitions));
        }
    };
    run_set("T", t_set);
    run_set("S", s_set);
    run_set("Msa", m_sa);
    run_set("Msc", m_sc);
    run_set("Mia", m_ia);
    return result;
}

std::string experiment_csv(const ExperimentResult& result) {
    std::ostringstream os;
    os << "set,index,length,verdict,median_seconds,nodes,re_steps,rs_steps\n";
    for (const ExperimentRow& row : result.rows) {
        os << row.set << "," << row.index << "," << row.length << "," << to_string(row.verdict)
           << "," << row.median_seconds << "," << row.nodes << "," << row.re_steps << ","
           << row.rs_steps << "\n";
    }
    return os.str();
}

}  // namespace orv
