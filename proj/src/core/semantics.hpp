#ifndef ORV_CORE_SEMANTICS_HPP_
#define ORV_CORE_SEMANTICS_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "core/interaction.hpp"
#include "core/trace.hpp"

namespace orv {

// Pruning removes every behavior that involves an action on a lifeline of
// `avoid`, rebuilding the term bottom-up. The two relations of the semantics
// are mutually exclusive and exhaustive, so this is a total function; an
// empty optional encodes "not prunable" (every behavior touches `avoid`).
std::optional<InterPtr> prune(const InterPtr& i, LifelineSet avoid);

// True iff the empty multi-trace is accepted, i.e. i prunes w.r.t. all
// lifelines.
bool accepts_empty(const InterPtr& i);

// One immediately executable action, its position, and the follow-up term.
struct FrontierEntry {
    CommAction action;
    Position position;
    InterPtr follow_up;
};

// All entries (a, p, i') with i --a@p--> i', in lexicographic position order.
std::vector<FrontierEntry> frontier(const InterPtr& i);

// The unique execution step at position p; throws if p is not executable.
std::pair<CommAction, InterPtr> execute(const InterPtr& i, const Position& p);

// mu is accepted by i: mu can be consumed entirely by matching frontier
// actions against component heads, ending in a term that accepts empty.
bool membership(const InterPtr& i, const MultiTrace& mu);

// A sequence of execution steps that drives i into a term accepting empty,
// using only actions outside loops. Such a completion always exists and is
// found greedily; used to extend a partial run into an accepted one.
std::vector<CommAction> complete_greedily(const InterPtr& i);

}  // namespace orv

#endif  // ORV_CORE_SEMANTICS_HPP_
