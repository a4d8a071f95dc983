#ifndef ORV_CORE_MUTATE_HPP_
#define ORV_CORE_MUTATE_HPP_

#include <random>

#include "core/trace.hpp"

namespace orv {

using Rng = std::mt19937_64;

// Mutant families used by the experiment pipeline. All generators take an
// explicit RNG so runs are reproducible from a seed.

// Exchange two action positions within one randomly chosen component.
// Throws if no component holds at least two actions.
MultiTrace mutate_swap_actions(const MultiTrace& mu, Rng& rng);

// Replace component `coloc` of mu1 by the corresponding component of mu2.
MultiTrace mutate_swap_components(const MultiTrace& mu1, const MultiTrace& mu2, std::size_t coloc);

// Insert one random well-typed action at a random position of a random
// component.
MultiTrace mutate_insert_action(const MultiTrace& mu, Rng& rng, const Signature& sig);

// A random slice whose components keep at least ceil(fraction * len) of the
// original component length.
MultiTrace random_wide_slice(const MultiTrace& mu, Rng& rng, double min_fraction);

}  // namespace orv

#endif  // ORV_CORE_MUTATE_HPP_
