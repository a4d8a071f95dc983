#ifndef ORV_CORE_MEASURE_HPP_
#define ORV_CORE_MEASURE_HPP_

#include <memory>
#include <optional>
#include <string>

#include "core/interaction.hpp"

namespace orv {

// Simulation budget. The concrete criterion is a (lambda, alpha) pair under
// lexicographic order: loop instances remaining, then actions outside loops
// remaining.
struct Measure {
    long lambda = 0;
    long alpha = 0;

    friend bool operator==(const Measure& a, const Measure& b) {
        return a.lambda == b.lambda && a.alpha == b.alpha;
    }
    friend bool operator<(const Measure& a, const Measure& b) {
        return a.lambda != b.lambda ? a.lambda < b.lambda : a.alpha < b.alpha;
    }
};

std::string to_string(const Measure& m);

enum class LoopBudgetSource : std::uint8_t { MaxNestedDepth, TotalLoopCount, Fixed };
enum class ActBudgetSource : std::uint8_t { ActionsOutsideLoops, Fixed };

struct MeasureOptions {
    LoopBudgetSource loop_source = LoopBudgetSource::MaxNestedDepth;
    long loop_fixed = 0;
    ActBudgetSource act_source = ActBudgetSource::ActionsOutsideLoops;
    long act_fixed = 0;
    // Scale the initial budgets by the total length of the analyzed
    // multi-trace (the liberal criterion).
    bool multiply_by_mt_length = false;
    // Re-initialize the measure after every execution step.
    bool reset_on_execute = true;
    // Allow simulation before the start of observation on a component (in
    // addition to after its end). Without it only multi-prefixes can be
    // recognized.
    bool simulate_before_start = true;
};

// Context made available to measure initialization beyond the interaction.
struct MeasureContext {
    std::size_t multitrace_length = 0;
};

// Pluggable well-founded budget: init gives kappa(i), decrement either
// yields a strictly smaller measure or refuses (simulation blocked).
class MeasurePolicy {
  public:
    virtual ~MeasurePolicy() = default;
    virtual Measure init(const InterPtr& i, const MeasureContext& ctx) const = 0;
    virtual std::optional<Measure> decrement(const Measure& j, const InterPtr& i, const Position& p,
                                             const InterPtr& follow_up) const = 0;
};

class LoopActPolicy final : public MeasurePolicy {
  public:
    explicit LoopActPolicy(MeasureOptions opts) : opts_(opts) {}

    Measure init(const InterPtr& i, const MeasureContext& ctx) const override;
    std::optional<Measure> decrement(const Measure& j, const InterPtr& i, const Position& p,
                                     const InterPtr& follow_up) const override;

    const MeasureOptions& options() const { return opts_; }

  private:
    MeasureOptions opts_;
};

// Standalone form of the concrete decrement, handy for direct checks.
std::optional<Measure> decrement_loopact(const Measure& j, const InterPtr& i, const Position& p,
                                         const InterPtr& follow_up);

}  // namespace orv

#endif  // ORV_CORE_MEASURE_HPP_
