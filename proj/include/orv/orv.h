/*
 * orv - offline runtime verification of distributed multi-traces against
 * interaction models.
 *
 * C interface of the shared library. All objects are opaque handles created
 * and destroyed through this API; functions that can fail return an
 * orv_status (or NULL for constructors) and leave a message retrievable via
 * orv_last_error on the context. Handles must not be shared across threads
 * without external synchronization, except for read-only use of parsed
 * signatures, interactions and multi-traces.
 */

#ifndef ORV_ORV_H_
#define ORV_ORV_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum orv_status {
    ORV_OK = 0,
    ORV_ERR_PARSE = 1,
    ORV_ERR_INVALID = 2,
    ORV_ERR_LIMIT = 3,
    ORV_ERR_IO = 4
} orv_status;

typedef enum orv_verdict {
    ORV_VERDICT_PASS = 0,
    ORV_VERDICT_WEAK_PASS = 1,
    ORV_VERDICT_WEAK_FAIL = 2
} orv_verdict;

typedef struct orv_context orv_context;
typedef struct orv_signature orv_signature;
typedef struct orv_interaction orv_interaction;
typedef struct orv_multitrace orv_multitrace;
typedef struct orv_config orv_config;

const char* orv_version(void);

orv_context* orv_context_new(void);
void orv_context_free(orv_context* ctx);
/* Message of the last failed call on this context; empty string if none. */
const char* orv_last_error(const orv_context* ctx);

/* Parsing. Input is the UTF-8 text of the corresponding file format
 * (.hsf / .hif / .htf / .hcf). NULL on error. */
orv_signature* orv_signature_parse(orv_context* ctx, const char* text);
orv_interaction* orv_interaction_parse(orv_context* ctx, const orv_signature* sig,
                                       const char* text);
orv_multitrace* orv_multitrace_parse(orv_context* ctx, const orv_signature* sig,
                                     const char* text);
orv_config* orv_config_parse(orv_context* ctx, const char* text);
/* Configuration with all defaults, as if parsed from an empty file. */
orv_config* orv_config_default(orv_context* ctx);

void orv_signature_free(orv_signature* sig);
void orv_interaction_free(orv_interaction* i);
void orv_multitrace_free(orv_multitrace* mu);
void orv_config_free(orv_config* cfg);

/* Strings returned by orv_* functions are heap-allocated; release them with
 * orv_string_free. */
void orv_string_free(char* s);

/* Canonical textual forms. */
char* orv_signature_text(orv_context* ctx, const orv_signature* sig);
char* orv_interaction_text(orv_context* ctx, const orv_signature* sig,
                           const orv_interaction* i);
char* orv_multitrace_text(orv_context* ctx, const orv_signature* sig,
                          const orv_multitrace* mu);

/* Rendering. */
char* orv_interaction_to_dot(orv_context* ctx, const orv_signature* sig,
                             const orv_interaction* i, int vertical);
char* orv_interaction_to_ascii(orv_context* ctx, const orv_signature* sig,
                               const orv_interaction* i);

typedef struct orv_explore_stats {
    uint64_t nodes;
    uint64_t accepting;
    uint64_t cut_max_depth;
    uint64_t cut_max_loop;
    uint64_t cut_max_nodes;
    uint64_t traces_written;
} orv_explore_stats;

/* Explores the execution tree of i under the @explore_option section of cfg
 * (defaults if absent). Loggers write into out_dir: the graphic logger emits
 * exploration.dot, the tracegen logger one .htf file per generated
 * multi-trace. out_dir may be NULL when no logger is configured. */
orv_status orv_explore_run(orv_context* ctx, const orv_signature* sig,
                           const orv_interaction* i, const orv_config* cfg,
                           const char* out_dir, orv_explore_stats* stats);

typedef struct orv_analysis_report {
    orv_verdict verdict;
    int omega_pass; /* 1 when the two-valued verdict is Pass, 0 for Inconc */
    uint64_t nodes_expanded;
    uint32_t re_steps;
    uint32_t rs_steps;
    double seconds;
    int hit_node_cap;
} orv_analysis_report;

/* Analyzes mu against i under the @analyze_option section of cfg (defaults
 * if absent). When a graphic logger is configured, writes analysis.dot into
 * out_dir. witness_text, when non-NULL, receives a printable step list for
 * Pass/WeakPass verdicts (release with orv_string_free). */
orv_status orv_analyze_run(orv_context* ctx, const orv_signature* sig,
                           const orv_interaction* i, const orv_multitrace* mu,
                           const orv_config* cfg, const char* out_dir,
                           orv_analysis_report* report, char** witness_text);

typedef struct orv_experiment_options {
    uint64_t seed;
    int exhaustive_slices;  /* 1: all slices; 0: random wide slices */
    double wide_fraction;   /* minimum kept fraction for wide slices */
    uint64_t wide_per_trace;
    uint32_t repetitions;
} orv_experiment_options;

typedef struct orv_experiment_stats {
    uint64_t rows;
    uint64_t pass;
    uint64_t weak_pass;
    uint64_t weak_fail;
} orv_experiment_stats;

/* Runs the generation + slicing + mutation + analysis pipeline and writes
 * experiment.csv into out_dir. Exploration and analysis are configured by
 * cfg as for orv_explore_run / orv_analyze_run. */
orv_status orv_experiment_run(orv_context* ctx, const orv_signature* sig,
                              const orv_interaction* i, const orv_config* cfg,
                              const orv_experiment_options* opts, const char* out_dir,
                              orv_experiment_stats* stats);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ORV_ORV_H_ */
