#ifndef ORV_TESTS_SUPPORT_RANDOM_GEN_HPP_
#define ORV_TESTS_SUPPORT_RANDOM_GEN_HPP_

#include <random>

#include "core/interaction.hpp"
#include "core/signature.hpp"
#include "core/trace.hpp"

namespace orv::test {

using Rng = std::mt19937_64;

// A signature l1..ln / m1..mk.
Signature small_signature(int lifelines, int messages);

struct GenParams {
    int max_actions = 6;
    int max_loops = 2;
    int max_depth = 4;
};

// A random well-typed interaction term within the given budgets.
InterPtr random_interaction(Rng& rng, const Signature& sig, const GenParams& params = {});

// A random partition of the signature's lifelines.
PartitionPtr random_partition(Rng& rng, const Signature& sig);

// A random multi-trace with component lengths up to max_per_component.
MultiTrace random_multitrace(Rng& rng, const Signature& sig, PartitionPtr partition,
                             std::size_t max_per_component);

// A random contiguous-subword slice of mu.
MultiTrace random_slice(Rng& rng, const MultiTrace& mu);

// A random global trace over the signature.
Trace random_trace(Rng& rng, const Signature& sig, std::size_t max_len);

}  // namespace orv::test

#endif  // ORV_TESTS_SUPPORT_RANDOM_GEN_HPP_
