#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "orv/orv.h"
#include "support/fixtures.hpp"

namespace fs = std::filesystem;
using orv::test::kAnalyzeHcf;
using orv::test::kExploreHcf;
using orv::test::kRunningHif;
using orv::test::kRunningHsf;
using orv::test::kRunningHtf;

namespace {

struct Ctx {
    Ctx() : ptr(orv_context_new()) {}
    ~Ctx() { orv_context_free(ptr); }
    orv_context* ptr;
};

fs::path fresh_dir(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / ("orv_capi_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("parse and analyze through the C interface") {
    Ctx ctx;
    orv_signature* sig = orv_signature_parse(ctx.ptr, kRunningHsf);
    REQUIRE(sig != nullptr);
    orv_interaction* inter = orv_interaction_parse(ctx.ptr, sig, kRunningHif);
    REQUIRE(inter != nullptr);
    orv_multitrace* mu = orv_multitrace_parse(ctx.ptr, sig, kRunningHtf);
    REQUIRE(mu != nullptr);
    orv_config* cfg = orv_config_default(ctx.ptr);
    REQUIRE(cfg != nullptr);

    orv_analysis_report report{};
    char* witness = nullptr;
    REQUIRE(orv_analyze_run(ctx.ptr, sig, inter, mu, cfg, nullptr, &report, &witness) == ORV_OK);
    CHECK(report.verdict == ORV_VERDICT_PASS);
    CHECK(report.omega_pass == 1);
    CHECK(report.re_steps == 5);
    CHECK(report.rs_steps == 0);
    REQUIRE(witness != nullptr);
    CHECK(std::strlen(witness) > 0);
    orv_string_free(witness);

    orv_config_free(cfg);
    orv_multitrace_free(mu);
    orv_interaction_free(inter);
    orv_signature_free(sig);
}

TEST_CASE("errors are reported with a message") {
    Ctx ctx;
    orv_signature* sig = orv_signature_parse(ctx.ptr, "@lifeline{l1;l1}");
    CHECK(sig == nullptr);
    CHECK(std::strlen(orv_last_error(ctx.ptr)) > 0);

    orv_signature* good = orv_signature_parse(ctx.ptr, kRunningHsf);
    REQUIRE(good != nullptr);
    CHECK(orv_interaction_parse(ctx.ptr, good, "seq(") == nullptr);
    CHECK(std::strlen(orv_last_error(ctx.ptr)) > 0);
    CHECK(orv_multitrace_parse(ctx.ptr, good, "[l3] l1!m1") == nullptr);
    orv_signature_free(good);
}

TEST_CASE("rendering through the C interface") {
    Ctx ctx;
    orv_signature* sig = orv_signature_parse(ctx.ptr, kRunningHsf);
    orv_interaction* inter = orv_interaction_parse(ctx.ptr, sig, kRunningHif);
    REQUIRE(inter != nullptr);

    char* dot = orv_interaction_to_dot(ctx.ptr, sig, inter, 1);
    REQUIRE(dot != nullptr);
    CHECK(std::string(dot).find("digraph") == 0);
    orv_string_free(dot);

    char* ascii = orv_interaction_to_ascii(ctx.ptr, sig, inter);
    REQUIRE(ascii != nullptr);
    CHECK(std::string(ascii).find("l1") != std::string::npos);
    orv_string_free(ascii);

    char* text = orv_interaction_text(ctx.ptr, sig, inter);
    REQUIRE(text != nullptr);
    orv_interaction* again = orv_interaction_parse(ctx.ptr, sig, text);
    CHECK(again != nullptr);
    orv_interaction_free(again);
    orv_string_free(text);

    orv_interaction_free(inter);
    orv_signature_free(sig);
}

TEST_CASE("exploration writes artifacts") {
    Ctx ctx;
    orv_signature* sig = orv_signature_parse(ctx.ptr, kRunningHsf);
    orv_interaction* inter = orv_interaction_parse(ctx.ptr, sig, kRunningHif);
    orv_config* cfg = orv_config_parse(ctx.ptr, kExploreHcf);
    REQUIRE(cfg != nullptr);

    fs::path dir = fresh_dir("explore");
    orv_explore_stats stats{};
    REQUIRE(orv_explore_run(ctx.ptr, sig, inter, cfg, dir.string().c_str(), &stats) == ORV_OK);
    CHECK(stats.nodes > 0);
    CHECK(stats.nodes <= 250);
    CHECK(stats.traces_written > 0);
    CHECK(fs::exists(dir / "exploration.dot"));

    // Every generated .htf file reparses against the signature.
    std::size_t htf_files = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() != ".htf") continue;
        std::ifstream in(entry.path());
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        orv_multitrace* mu = orv_multitrace_parse(ctx.ptr, sig, text.c_str());
        CHECK(mu != nullptr);
        orv_multitrace_free(mu);
        ++htf_files;
    }
    CHECK(htf_files == stats.traces_written);

    orv_config_free(cfg);
    orv_interaction_free(inter);
    orv_signature_free(sig);
}

TEST_CASE("analysis writes the graph when configured") {
    Ctx ctx;
    orv_signature* sig = orv_signature_parse(ctx.ptr, kRunningHsf);
    orv_interaction* inter = orv_interaction_parse(ctx.ptr, sig, kRunningHif);
    orv_multitrace* mu = orv_multitrace_parse(ctx.ptr, sig, "[l1,l2] l2?m4;\n[l3] l3?m1");
    orv_config* cfg = orv_config_parse(ctx.ptr, kAnalyzeHcf);
    REQUIRE(mu != nullptr);
    REQUIRE(cfg != nullptr);

    fs::path dir = fresh_dir("analyze");
    orv_analysis_report report{};
    REQUIRE(orv_analyze_run(ctx.ptr, sig, inter, mu, cfg, dir.string().c_str(), &report,
                            nullptr) == ORV_OK);
    CHECK(report.verdict == ORV_VERDICT_WEAK_PASS);
    CHECK(fs::exists(dir / "analysis.dot"));

    orv_config_free(cfg);
    orv_multitrace_free(mu);
    orv_interaction_free(inter);
    orv_signature_free(sig);
}
