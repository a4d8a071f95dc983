// Command-line front end. Links the C interface of the orv shared library.

#include <cstdio>
#include <filesystem>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "orv/orv.h"

namespace {

int log_level() {
    const char* env = std::getenv("ORV_LOG");
    if (!env) return 0;
    std::string v(env);
    if (v == "debug") return 2;
    if (v == "info") return 1;
    return 0;
}

void log_info(const std::string& msg) {
    if (log_level() >= 1) std::cerr << "[orv] " << msg << "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CLI::ValidationError("cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Ctx {
    Ctx() : ptr(orv_context_new()) {}
    ~Ctx() { orv_context_free(ptr); }
    orv_context* ptr;
};

[[noreturn]] void die(const Ctx& ctx, const std::string& where) {
    std::cerr << "error: " << where << ": " << orv_last_error(ctx.ptr) << "\n";
    std::exit(2);
}

struct Handles {
    orv_signature* sig = nullptr;
    orv_interaction* inter = nullptr;
    orv_multitrace* mu = nullptr;
    orv_config* cfg = nullptr;

    ~Handles() {
        orv_signature_free(sig);
        orv_interaction_free(inter);
        orv_multitrace_free(mu);
        orv_config_free(cfg);
    }
};

void load_common(const Ctx& ctx, Handles& h, const std::string& hsf, const std::string& hif,
                 const std::string& hcf) {
    h.sig = orv_signature_parse(ctx.ptr, read_file(hsf).c_str());
    if (!h.sig) die(ctx, hsf);
    h.inter = orv_interaction_parse(ctx.ptr, h.sig, read_file(hif).c_str());
    if (!h.inter) die(ctx, hif);
    if (!hcf.empty()) {
        h.cfg = orv_config_parse(ctx.ptr, read_file(hcf).c_str());
        if (!h.cfg) die(ctx, hcf);
    } else {
        h.cfg = orv_config_default(ctx.ptr);
    }
}

void write_output(const std::string& dir, const std::string& name, const char* content) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::string path = dir + "/" + name;
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        std::exit(2);
    }
    out << content;
    std::cout << "wrote " << path << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"offline runtime verification of multi-traces against interaction models"};
    app.require_subcommand(1);

    std::string hsf, hif, htf, hcf, out_dir = ".";
    std::uint64_t seed = 0;
    std::string slices = "exhaustive";
    double wide_fraction = 1.0 / 3.0;
    std::uint64_t wide_per_trace = 10;
    std::uint32_t repetitions = 5;

    auto* draw = app.add_subcommand("draw", "render an interaction as DOT and text");
    draw->add_option("hsf", hsf, "signature file")->required();
    draw->add_option("hif", hif, "interaction file")->required();
    draw->add_option("-o,--output", out_dir, "output directory");

    auto* explore = app.add_subcommand("explore", "explore the execution tree of an interaction");
    explore->add_option("hsf", hsf, "signature file")->required();
    explore->add_option("hif", hif, "interaction file")->required();
    explore->add_option("hcf", hcf, "configuration file");
    explore->add_option("-o,--output", out_dir, "output directory");

    auto* analyze = app.add_subcommand("analyze", "analyze a multi-trace against an interaction");
    analyze->add_option("hsf", hsf, "signature file")->required();
    analyze->add_option("hif", hif, "interaction file")->required();
    analyze->add_option("htf", htf, "multi-trace file")->required();
    analyze->add_option("hcf", hcf, "configuration file");
    analyze->add_option("-o,--output", out_dir, "output directory");

    auto* experiment = app.add_subcommand("experiment", "generate, slice, mutate and analyze");
    experiment->add_option("hsf", hsf, "signature file")->required();
    experiment->add_option("hif", hif, "interaction file")->required();
    experiment->add_option("hcf", hcf, "configuration file")->required();
    experiment->add_option("--seed", seed, "random seed");
    experiment->add_option("-o,--output", out_dir, "output directory")->required();
    experiment->add_option("--slices", slices, "exhaustive|wide")
        ->check(CLI::IsMember({"exhaustive", "wide"}));
    experiment->add_option("--wide-fraction", wide_fraction, "minimum kept fraction for wide slices");
    experiment->add_option("--wide-per-trace", wide_per_trace, "wide slices per accepted trace");
    experiment->add_option("--repetitions", repetitions, "timing repetitions per analysis");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Ctx ctx;
    Handles h;
    try {
        if (draw->parsed()) {
            load_common(ctx, h, hsf, hif, "");
            char* dot = orv_interaction_to_dot(ctx.ptr, h.sig, h.inter, 1);
            if (!dot) die(ctx, "draw");
            char* ascii = orv_interaction_to_ascii(ctx.ptr, h.sig, h.inter);
            if (!ascii) die(ctx, "draw");
            write_output(out_dir, "interaction.dot", dot);
            write_output(out_dir, "interaction.txt", ascii);
            if (log_level() >= 1) std::cerr << ascii;
            orv_string_free(dot);
            orv_string_free(ascii);
            return 0;
        }
        if (explore->parsed()) {
            load_common(ctx, h, hsf, hif, hcf);
            orv_explore_stats stats{};
            log_info("exploring " + hif);
            if (orv_explore_run(ctx.ptr, h.sig, h.inter, h.cfg, out_dir.c_str(), &stats) != ORV_OK) {
                die(ctx, "explore");
            }
            std::cout << "nodes: " << stats.nodes << "\n"
                      << "accepting nodes: " << stats.accepting << "\n"
                      << "cuts: max_depth=" << stats.cut_max_depth
                      << " max_loop_depth=" << stats.cut_max_loop
                      << " max_node_number=" << stats.cut_max_nodes << "\n";
            if (stats.traces_written) {
                std::cout << "generated multi-traces: " << stats.traces_written << "\n";
            }
            return 0;
        }
        if (analyze->parsed()) {
            load_common(ctx, h, hsf, hif, hcf);
            h.mu = orv_multitrace_parse(ctx.ptr, h.sig, read_file(htf).c_str());
            if (!h.mu) die(ctx, htf);
            orv_analysis_report report{};
            char* witness = nullptr;
            log_info("analyzing " + htf + " against " + hif);
            if (orv_analyze_run(ctx.ptr, h.sig, h.inter, h.mu, h.cfg, out_dir.c_str(), &report,
                                &witness) != ORV_OK) {
                die(ctx, "analyze");
            }
            const char* verdict = report.verdict == ORV_VERDICT_PASS        ? "Pass"
                                  : report.verdict == ORV_VERDICT_WEAK_PASS ? "WeakPass"
                                                                            : "WeakFail";
            std::cout << "verdict: " << verdict << " (omega: "
                      << (report.omega_pass ? "Pass" : "Inconc") << ")\n"
                      << "execution steps: " << report.re_steps
                      << ", simulation steps: " << report.rs_steps << "\n"
                      << "nodes expanded: " << report.nodes_expanded << "\n"
                      << "elapsed: " << report.seconds << " s\n";
            if (witness && witness[0] != '\0' && log_level() >= 1) {
                std::cerr << "witness:\n" << witness << "\n";
            }
            orv_string_free(witness);
            return report.verdict == ORV_VERDICT_WEAK_FAIL ? 1 : 0;
        }
        if (experiment->parsed()) {
            load_common(ctx, h, hsf, hif, hcf);
            orv_experiment_options opts{};
            opts.seed = seed;
            opts.exhaustive_slices = slices == "exhaustive" ? 1 : 0;
            opts.wide_fraction = wide_fraction;
            opts.wide_per_trace = wide_per_trace;
            opts.repetitions = repetitions;
            orv_experiment_stats stats{};
            log_info("running experiment pipeline");
            if (orv_experiment_run(ctx.ptr, h.sig, h.inter, h.cfg, &opts, out_dir.c_str(),
                                   &stats) != ORV_OK) {
                die(ctx, "experiment");
            }
            std::cout << "rows: " << stats.rows << " (Pass " << stats.pass << ", WeakPass "
                      << stats.weak_pass << ", WeakFail " << stats.weak_fail << ")\n"
                      << "wrote " << out_dir << "/experiment.csv\n";
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
