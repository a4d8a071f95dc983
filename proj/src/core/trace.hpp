#ifndef ORV_CORE_TRACE_HPP_
#define ORV_CORE_TRACE_HPP_

#include <memory>
#include <set>
#include <vector>

#include "core/ids.hpp"
#include "core/signature.hpp"

namespace orv {

// A local trace: a finite sequence of actions.
using Trace = std::vector<CommAction>;

// A partition of the lifelines into co-localizations. Co-localizations are
// kept in canonical order (ascending lowest lifeline) so that equal
// partitions compare equal regardless of declaration order.
class Partition {
  public:
    explicit Partition(std::vector<LifelineSet> colocs, LifelineSet all);

    static Partition trivial(const Signature& sig);
    static Partition discrete(const Signature& sig);

    std::size_t size() const { return colocs_.size(); }
    LifelineSet coloc(std::size_t k) const { return colocs_.at(k); }
    LifelineSet all_lifelines() const { return all_; }

    // Index of the unique co-localization containing l.
    std::size_t coloc_of(LifelineId l) const;
    std::size_t coloc_of(const CommAction& a) const { return coloc_of(a.lifeline); }

    // Every co-localization of this partition is included in one of c.
    bool refines(const Partition& coarser) const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.colocs_ == b.colocs_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

  private:
    std::vector<LifelineSet> colocs_;
    LifelineSet all_;
};

using PartitionPtr = std::shared_ptr<const Partition>;

// One local trace per co-localization of a partition.
class MultiTrace {
  public:
    // Placeholder without a partition; assign a real multi-trace before use.
    MultiTrace() = default;
    explicit MultiTrace(PartitionPtr partition);
    MultiTrace(PartitionPtr partition, std::vector<Trace> components);

    static MultiTrace empty(PartitionPtr partition) { return MultiTrace(std::move(partition)); }

    const Partition& partition() const { return *partition_; }
    const PartitionPtr& partition_ptr() const { return partition_; }
    std::size_t component_count() const { return components_.size(); }
    const Trace& component(std::size_t k) const { return components_.at(k); }
    const std::vector<Trace>& components() const { return components_; }

    bool is_empty() const;
    std::size_t total_length() const;

    // a (.) mu: prepend a to the component on which it occurs.
    MultiTrace prepend(const CommAction& a) const;
    // Append at the tail of a's component; folding a1 (.) ... (.) an (.) eps
    // equals appending the actions in order.
    MultiTrace append(const CommAction& a) const;
    // Drop the head of component k (which must be non-empty).
    MultiTrace drop_head(std::size_t k) const;

    friend bool operator==(const MultiTrace& a, const MultiTrace& b) {
        return *a.partition_ == *b.partition_ && a.components_ == b.components_;
    }
    friend bool operator!=(const MultiTrace& a, const MultiTrace& b) { return !(a == b); }
    friend bool operator<(const MultiTrace& a, const MultiTrace& b) {
        return a.components_ < b.components_;
    }

  private:
    PartitionPtr partition_;
    std::vector<Trace> components_;
};

// Order-preserving projection of a multi-trace onto a refinement of its
// partition. A global trace is the special case of the trivial partition.
MultiTrace project(const MultiTrace& mu, PartitionPtr finer);
MultiTrace project_global(const Trace& t, PartitionPtr partition);

// Contiguous-subword slices.
bool is_slice(const MultiTrace& candidate, const MultiTrace& mu);
std::set<MultiTrace> slices_of(const MultiTrace& mu);

}  // namespace orv

#endif  // ORV_CORE_TRACE_HPP_
