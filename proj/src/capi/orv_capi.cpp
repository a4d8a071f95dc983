#include "orv/orv.h"

#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include "core/experiment.hpp"
#include "core/render.hpp"

namespace fs = std::filesystem;

struct orv_context {
    std::string last_error;
};

struct orv_signature {
    orv::Signature sig;
};

struct orv_interaction {
    orv::InterPtr term;
};

struct orv_multitrace {
    orv::MultiTrace mu;
};

struct orv_config {
    orv::ConfigFile cfg;
};

namespace {

struct IoFailure {
    std::string message;
};

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
orv_status guarded(orv_context* ctx, F&& f) {
    try {
        ctx->last_error.clear();
        return f();
    } catch (const orv::ParseError& e) {
        ctx->last_error = e.what();
        return ORV_ERR_PARSE;
    } catch (const IoFailure& e) {
        ctx->last_error = e.message;
        return ORV_ERR_IO;
    } catch (const orv::Error& e) {
        ctx->last_error = e.what();
        return ORV_ERR_INVALID;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return ORV_ERR_INVALID;
    }
}

orv::ExploreOptions explore_options(const orv_config* cfg) {
    orv::ExploreOptions opts;
    if (cfg && cfg->cfg.explore) opts = *cfg->cfg.explore;
    // Loops make an unconstrained exploration infinite; apply a node bound
    // when the configuration sets no filter at all.
    if (!opts.filters.max_depth && !opts.filters.max_loop_insts &&
        !opts.filters.max_node_number) {
        opts.filters.max_node_number = 1000;
    }
    return opts;
}

orv::AnalyzeOptions analyze_options(const orv_config* cfg) {
    if (cfg && cfg->cfg.analyze) return *cfg->cfg.analyze;
    return orv::AnalyzeOptions{};
}

orv::AnalysisConfig analysis_config(const orv::AnalyzeOptions& opts) {
    orv::AnalysisConfig cfg;
    cfg.kind = opts.kind;
    cfg.measure = opts.measure;
    cfg.strategy = opts.strategy;
    cfg.priorities = opts.priorities;
    cfg.goal = opts.goal;
    return cfg;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure{"cannot write " + path.string()};
    out << content;
}

// Tracegen logger that also writes one .htf file per generated multi-trace,
// named by the index of the node whose path produced it.
class TracegenFileLogger final : public orv::TracegenCollector {
  public:
    TracegenFileLogger(orv::PartitionPtr partition, orv::GenMode mode, const orv::Signature& sig,
                       fs::path dir)
        : orv::TracegenCollector(std::move(partition), mode), sig_(sig), dir_(std::move(dir)) {}

    std::size_t written = 0;

  protected:
    void emit(std::size_t id, const orv::MultiTrace& mu) override {
        orv::TracegenCollector::emit(id, mu);
        write_file(dir_ / ("mu" + std::to_string(id) + ".htf"), serialize_htf(mu, sig_));
        ++written;
    }

  private:
    const orv::Signature& sig_;
    fs::path dir_;
};

}  // namespace

extern "C" {

const char* orv_version(void) { return "0.1.0"; }

orv_context* orv_context_new(void) { return new (std::nothrow) orv_context(); }

void orv_context_free(orv_context* ctx) { delete ctx; }

const char* orv_last_error(const orv_context* ctx) {
    return ctx ? ctx->last_error.c_str() : "";
}

orv_signature* orv_signature_parse(orv_context* ctx, const char* text) {
    orv_signature* out = nullptr;
    guarded(ctx, [&] {
        out = new orv_signature{orv::parse_hsf(text ? text : "")};
        return ORV_OK;
    });
    return out;
}

orv_interaction* orv_interaction_parse(orv_context* ctx, const orv_signature* sig,
                                       const char* text) {
    orv_interaction* out = nullptr;
    guarded(ctx, [&] {
        out = new orv_interaction{orv::parse_hif(text ? text : "", sig->sig)};
        return ORV_OK;
    });
    return out;
}

orv_multitrace* orv_multitrace_parse(orv_context* ctx, const orv_signature* sig,
                                     const char* text) {
    orv_multitrace* out = nullptr;
    guarded(ctx, [&] {
        out = new orv_multitrace{orv::parse_htf(text ? text : "", sig->sig)};
        return ORV_OK;
    });
    return out;
}

orv_config* orv_config_parse(orv_context* ctx, const char* text) {
    orv_config* out = nullptr;
    guarded(ctx, [&] {
        out = new orv_config{orv::parse_hcf(text ? text : "")};
        return ORV_OK;
    });
    return out;
}

orv_config* orv_config_default(orv_context* ctx) {
    (void)ctx;
    return new (std::nothrow) orv_config();
}

void orv_signature_free(orv_signature* sig) { delete sig; }
void orv_interaction_free(orv_interaction* i) { delete i; }
void orv_multitrace_free(orv_multitrace* mu) { delete mu; }
void orv_config_free(orv_config* cfg) { delete cfg; }

void orv_string_free(char* s) { std::free(s); }

char* orv_signature_text(orv_context* ctx, const orv_signature* sig) {
    char* out = nullptr;
    guarded(ctx, [&] {
        out = dup_string(orv::serialize_hsf(sig->sig));
        return ORV_OK;
    });
    return out;
}

char* orv_interaction_text(orv_context* ctx, const orv_signature* sig, const orv_interaction* i) {
    char* out = nullptr;
    guarded(ctx, [&] {
        out = dup_string(orv::serialize_hif(i->term, sig->sig));
        return ORV_OK;
    });
    return out;
}

char* orv_multitrace_text(orv_context* ctx, const orv_signature* sig, const orv_multitrace* mu) {
    char* out = nullptr;
    guarded(ctx, [&] {
        out = dup_string(orv::serialize_htf(mu->mu, sig->sig));
        return ORV_OK;
    });
    return out;
}

char* orv_interaction_to_dot(orv_context* ctx, const orv_signature* sig, const orv_interaction* i,
                             int vertical) {
    char* out = nullptr;
    guarded(ctx, [&] {
        out = dup_string(orv::interaction_to_dot(i->term, sig->sig, vertical != 0));
        return ORV_OK;
    });
    return out;
}

char* orv_interaction_to_ascii(orv_context* ctx, const orv_signature* sig,
                               const orv_interaction* i) {
    char* out = nullptr;
    guarded(ctx, [&] {
        out = dup_string(orv::interaction_to_ascii(i->term, sig->sig));
        return ORV_OK;
    });
    return out;
}

orv_status orv_explore_run(orv_context* ctx, const orv_signature* sig, const orv_interaction* i,
                           const orv_config* cfg, const char* out_dir, orv_explore_stats* stats) {
    return guarded(ctx, [&] {
        orv::ExploreOptions opts = explore_options(cfg);
        orv::ExploreConfig ecfg;
        ecfg.strategy = opts.strategy;
        ecfg.filters = opts.filters;
        ecfg.priorities = opts.priorities;

        std::vector<std::unique_ptr<orv::ExploreLogger>> owned;
        std::vector<orv::ExploreLogger*> loggers;
        orv::ExploreDotLogger* dot = nullptr;
        std::size_t traces_written = 0;
        fs::path dir;
        if (!opts.loggers.empty()) {
            if (!out_dir) throw orv::Error("an output directory is required by the loggers");
            dir = out_dir;
            fs::create_directories(dir);
        }
        for (const orv::LoggerSpec& spec : opts.loggers) {
            if (spec.type == orv::LoggerSpec::Type::Graphic) {
                auto logger = std::make_unique<orv::ExploreDotLogger>(sig->sig,
                                                                      spec.graphic.vertical);
                dot = logger.get();
                owned.push_back(std::move(logger));
            } else {
                auto partition = std::make_shared<orv::Partition>(
                    orv::resolve_partition(spec.tracegen.partition, sig->sig));
                owned.push_back(std::make_unique<TracegenFileLogger>(
                    std::move(partition), spec.tracegen.mode, sig->sig, dir));
            }
            loggers.push_back(owned.back().get());
        }

        orv::ExploreReport report = orv::explore(i->term, ecfg, loggers);
        if (dot) write_file(dir / "exploration.dot", dot->str());
        for (const auto& logger : owned) {
            if (auto* tg = dynamic_cast<TracegenFileLogger*>(logger.get())) {
                traces_written += tg->written;
            }
        }
        if (stats) {
            stats->nodes = report.node_count;
            stats->accepting = report.accepting_count;
            auto count = [&](orv::CutReason r) -> uint64_t {
                auto it = report.cuts.find(r);
                return it == report.cuts.end() ? 0 : it->second;
            };
            stats->cut_max_depth = count(orv::CutReason::MaxDepth);
            stats->cut_max_loop = count(orv::CutReason::MaxLoopInsts);
            stats->cut_max_nodes = count(orv::CutReason::MaxNodeNumber);
            stats->traces_written = traces_written;
        }
        return ORV_OK;
    });
}

orv_status orv_analyze_run(orv_context* ctx, const orv_signature* sig, const orv_interaction* i,
                           const orv_multitrace* mu, const orv_config* cfg, const char* out_dir,
                           orv_analysis_report* report, char** witness_text) {
    return guarded(ctx, [&] {
        orv::AnalyzeOptions opts = analyze_options(cfg);
        orv::AnalysisConfig acfg = analysis_config(opts);

        std::unique_ptr<orv::AnalysisDotLogger> dot;
        for (const orv::LoggerSpec& spec : opts.loggers) {
            if (spec.type == orv::LoggerSpec::Type::Graphic && !dot) {
                dot = std::make_unique<orv::AnalysisDotLogger>(sig->sig, spec.graphic.vertical);
            }
        }
        orv::AnalysisReport rep = orv::analyze(i->term, mu->mu, acfg, dot.get());
        if (dot) {
            if (!out_dir) throw orv::Error("an output directory is required by the loggers");
            fs::path dir(out_dir);
            fs::create_directories(dir);
            write_file(dir / "analysis.dot", dot->str());
        }
        if (report) {
            report->verdict = static_cast<orv_verdict>(rep.verdict);
            report->omega_pass = rep.omega == orv::Omega::Pass ? 1 : 0;
            report->nodes_expanded = rep.nodes_expanded;
            report->re_steps = static_cast<uint32_t>(rep.re_steps);
            report->rs_steps = static_cast<uint32_t>(rep.rs_steps);
            report->seconds = rep.seconds;
            report->hit_node_cap = rep.hit_node_cap ? 1 : 0;
        }
        if (witness_text) {
            std::string text;
            for (const orv::WitnessStep& s : rep.witness) {
                if (!text.empty()) text += "\n";
                text += to_string(s.rule) + " " + sig->sig.action_text(s.action) + "@" +
                        (s.position.empty() ? "eps" : s.position) + " -> " +
                        to_string(s.measure_after);
            }
            *witness_text = dup_string(text);
        }
        return ORV_OK;
    });
}

orv_status orv_experiment_run(orv_context* ctx, const orv_signature* sig,
                              const orv_interaction* i, const orv_config* cfg,
                              const orv_experiment_options* exp_opts, const char* out_dir,
                              orv_experiment_stats* stats) {
    return guarded(ctx, [&] {
        if (!out_dir) throw orv::Error("the experiment command requires an output directory");
        orv::ExploreOptions eopts = explore_options(cfg);
        orv::ExploreConfig ecfg;
        ecfg.strategy = eopts.strategy;
        ecfg.filters = eopts.filters;
        ecfg.priorities = eopts.priorities;

        // The generation partition comes from the tracegen logger spec when
        // present, the discrete partition otherwise.
        orv::PartitionSpec pspec;
        orv::GenMode gen_mode = orv::GenMode::Exact;
        for (const orv::LoggerSpec& spec : eopts.loggers) {
            if (spec.type == orv::LoggerSpec::Type::Tracegen) {
                pspec = spec.tracegen.partition;
                gen_mode = spec.tracegen.mode;
            }
        }
        auto partition =
            std::make_shared<orv::Partition>(orv::resolve_partition(pspec, sig->sig));

        orv::AnalysisConfig acfg = analysis_config(analyze_options(cfg));

        orv::ExperimentOptions opts;
        if (exp_opts) {
            opts.seed = exp_opts->seed;
            opts.slice_mode = exp_opts->exhaustive_slices
                                  ? orv::ExperimentOptions::SliceMode::Exhaustive
                                  : orv::ExperimentOptions::SliceMode::Wide;
            if (exp_opts->wide_fraction > 0) opts.wide_fraction = exp_opts->wide_fraction;
            if (exp_opts->wide_per_trace > 0) opts.wide_per_trace = exp_opts->wide_per_trace;
            if (exp_opts->repetitions > 0) opts.repetitions = static_cast<int>(exp_opts->repetitions);
        }

        orv::ExperimentResult result =
            orv::run_experiment(sig->sig, i->term, partition, ecfg, gen_mode, acfg, opts);
        fs::path dir(out_dir);
        fs::create_directories(dir);
        write_file(dir / "experiment.csv", orv::experiment_csv(result));
        if (stats) {
            stats->rows = result.rows.size();
            stats->pass = stats->weak_pass = stats->weak_fail = 0;
            for (const orv::ExperimentRow& row : result.rows) {
                if (row.verdict == orv::Verdict::Pass) ++stats->pass;
                if (row.verdict == orv::Verdict::WeakPass) ++stats->weak_pass;
                if (row.verdict == orv::Verdict::WeakFail) ++stats->weak_fail;
            }
        }
        return ORV_OK;
    });
}

}  // extern "C"
