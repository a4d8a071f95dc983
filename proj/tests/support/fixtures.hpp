#ifndef ORV_TESTS_SUPPORT_FIXTURES_HPP_
#define ORV_TESTS_SUPPORT_FIXTURES_HPP_

#include "core/formats.hpp"
#include "core/interaction.hpp"
#include "core/signature.hpp"
#include "core/trace.hpp"

namespace orv::test {

// The running example used across the suite: three lifelines l1..l3 and five
// messages m1..m5; a broadcast of m1 under an alternative, a weak loop
// exchanging m2/m3 under a co-region on l2, then a parallel loop exchanging
// m4/m5.
struct RunningExample {
    Signature sig;
    InterPtr term;               // built by hand, independent of the parser
    PartitionPtr pair_partition; // {{l1,l2},{l3}}
    PartitionPtr discrete;
    PartitionPtr trivial;
    MultiTrace mu_full;          // ([l1,l2] l1!m1.l2?m1.l2?m4 ; [l3] l3?m1.l3!m4)
    MultiTrace mu_slice;         // ([l1,l2] l2?m4 ; [l3] l3?m1)
    MultiTrace mu_discrete;      // the same execution on the discrete partition
    Trace global;                // l1!m1.l3?m1.l2?m1.l3!m4.l2?m4
};

RunningExample running_example();

// Verbatim file texts of the running example and configurations.
extern const char* const kRunningHsf;
extern const char* const kRunningHif;
extern const char* const kRunningHtf;
extern const char* const kExploreHcf;
extern const char* const kAnalyzeHcf;

// The three scenarios where the default budget cannot recognize a valid
// slice: a parallel loop, a weak loop over one co-localization, and a
// co-region over two weak loops.
struct ScenarioFixture {
    Signature sig;
    InterPtr term;
    MultiTrace mu;
};

ScenarioFixture par_loop_scenario();
ScenarioFixture weak_loop_coloc_scenario();
ScenarioFixture coregion_two_loops_scenario();

}  // namespace orv::test

#endif  // ORV_TESTS_SUPPORT_FIXTURES_HPP_
