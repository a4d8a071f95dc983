#ifndef ORV_CORE_DENOTATION_HPP_
#define ORV_CORE_DENOTATION_HPP_

#include <map>
#include <set>

#include "core/interaction.hpp"
#include "core/trace.hpp"

namespace orv {

// Brute-force denotational semantics over global traces, used as the ground
// truth for property testing. Not a production analyzer: sets are
// materialized eagerly and a size guard refuses runaway inputs.

using TraceSet = std::set<Trace>;

// True iff t contains an action on lifeline l with l outside the concurrent
// region r.
bool conflict(const Trace& t, LifelineId l, LifelineSet r);

// Conditional sequencing of two traces: the left head is always eligible,
// the right head only when the left remainder has no conflict with its
// lifeline w.r.t. r.
TraceSet cond_seq(const Trace& t1, const Trace& t2, LifelineSet r);

inline TraceSet interleave(const Trace& t1, const Trace& t2) {
    return cond_seq(t1, t2, LifelineSet::universe());
}
inline TraceSet weak_seq(const Trace& t1, const Trace& t2) {
    return cond_seq(t1, t2, LifelineSet::empty_set());
}

// Scheduling operator used to combine instances of a repetition.
struct SeqOp {
    enum class Kind { Strict, CondSeq } kind;
    LifelineSet region;  // only for CondSeq

    static SeqOp strict_op() { return SeqOp{Kind::Strict, LifelineSet{}}; }
    static SeqOp cond_seq_op(LifelineSet r) { return SeqOp{Kind::CondSeq, r}; }
};

TraceSet combine(const TraceSet& a, const TraceSet& b, SeqOp op);

// Union of the powers T^0 .. T^maxPower under op, with T^0 = {empty}.
TraceSet kleene(const TraceSet& t, SeqOp op, int max_power);

// Traces annotated with the minimal number of loop instances needed to
// produce them. This mirrors the loop-instantiation accounting of bounded
// exploration: each non-empty instance of a repetition costs one.
using CostedTraces = std::map<Trace, int>;

struct RhoLimits {
    int loop_budget = 0;
    std::size_t size_cap = 1000000;
};

CostedTraces rho_costed(const InterPtr& i, const RhoLimits& limits);

// All global traces of i producible with at most loopBound loop instances in
// total. Exact (no truncation takes effect) when i is loop-free.
TraceSet rho(const InterPtr& i, int loop_bound);

// True iff some trace of rho(i, loopBound), projected onto mu's partition,
// has mu as a slice.
bool oracle_slice_membership(const InterPtr& i, const MultiTrace& mu, int loop_bound);

// True iff mu is exactly the projection of some trace of rho(i, loopBound).
bool oracle_membership(const InterPtr& i, const MultiTrace& mu, int loop_bound);

}  // namespace orv

#endif  // ORV_CORE_DENOTATION_HPP_
