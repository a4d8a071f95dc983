#include "core/trace.hpp"

#include <algorithm>
#include <functional>

namespace orv {

namespace {
std::uint64_t lowest_bit(LifelineSet s) { return s.bits() & (~s.bits() + 1); }
}  // namespace

Partition::Partition(std::vector<LifelineSet> colocs, LifelineSet all) : colocs_(std::move(colocs)), all_(all) {
    LifelineSet seen;
    for (LifelineSet c : colocs_) {
        if (c.empty()) throw Error("partition contains an empty co-localization");
        if (!c.subset_of(all)) throw Error("co-localization references an undeclared lifeline");
        if (!seen.intersect(c).empty()) throw Error("overlapping co-localizations in partition");
        seen = seen.unite(c);
    }
    if (seen != all) throw Error("partition does not cover all lifelines");
    std::sort(colocs_.begin(), colocs_.end(),
              [](LifelineSet a, LifelineSet b) { return lowest_bit(a) < lowest_bit(b); });
}

Partition Partition::trivial(const Signature& sig) {
    return Partition({sig.all_lifelines()}, sig.all_lifelines());
}

Partition Partition::discrete(const Signature& sig) {
    std::vector<LifelineSet> colocs;
    for (LifelineId l = 0; l < sig.lifeline_count(); ++l) colocs.push_back(LifelineSet::single(l));
    return Partition(std::move(colocs), sig.all_lifelines());
}

std::size_t Partition::coloc_of(LifelineId l) const {
    for (std::size_t k = 0; k < colocs_.size(); ++k) {
        if (colocs_[k].contains(l)) return k;
    }
    throw Error("lifeline not covered by partition");
}

bool Partition::refines(const Partition& coarser) const {
    for (LifelineSet fine : colocs_) {
        bool covered = false;
        for (LifelineSet coarse : coarser.colocs_) {
            if (fine.subset_of(coarse)) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

MultiTrace::MultiTrace(PartitionPtr partition)
    : partition_(std::move(partition)), components_(partition_->size()) {}

MultiTrace::MultiTrace(PartitionPtr partition, std::vector<Trace> components)
    : partition_(std::move(partition)), components_(std::move(components)) {
    if (components_.size() != partition_->size()) {
        throw Error("multi-trace component count does not match partition");
    }
    for (std::size_t k = 0; k < components_.size(); ++k) {
        for (const CommAction& a : components_[k]) {
            if (!partition_->coloc(k).contains(a.lifeline)) {
                throw Error("action on a lifeline outside its co-localization");
            }
        }
    }
}

bool MultiTrace::is_empty() const {
    for (const Trace& t : components_) {
        if (!t.empty()) return false;
    }
    return true;
}

std::size_t MultiTrace::total_length() const {
    std::size_t n = 0;
    for (const Trace& t : components_) n += t.size();
    return n;
}

MultiTrace MultiTrace::prepend(const CommAction& a) const {
    MultiTrace out = *this;
    Trace& t = out.components_[partition_->coloc_of(a)];
    t.insert(t.begin(), a);
    return out;
}

MultiTrace MultiTrace::append(const CommAction& a) const {
    MultiTrace out = *this;
    out.components_[partition_->coloc_of(a)].push_back(a);
    return out;
}

MultiTrace MultiTrace::drop_head(std::size_t k) const {
    if (components_.at(k).empty()) throw Error("drop_head on empty component");
    MultiTrace out = *this;
    out.components_[k].erase(out.components_[k].begin());
    return out;
}

MultiTrace project(const MultiTrace& mu, PartitionPtr finer) {
    if (!finer->refines(mu.partition())) throw Error("target partition is not a refinement");
    std::vector<Trace> comps(finer->size());
    for (std::size_t k = 0; k < mu.component_count(); ++k) {
        for (const CommAction& a : mu.component(k)) {
            comps[finer->coloc_of(a)].push_back(a);
        }
    }
    return MultiTrace(std::move(finer), std::move(comps));
}

MultiTrace project_global(const Trace& t, PartitionPtr partition) {
    std::vector<Trace> comps(partition->size());
    for (const CommAction& a : t) comps[partition->coloc_of(a)].push_back(a);
    return MultiTrace(std::move(partition), std::move(comps));
}

bool is_slice(const MultiTrace& candidate, const MultiTrace& mu) {
    if (candidate.partition() != mu.partition()) throw Error("is_slice: partition mismatch");
    for (std::size_t k = 0; k < mu.component_count(); ++k) {
        const Trace& sub = candidate.component(k);
        const Trace& full = mu.component(k);
        if (sub.empty()) continue;
        if (sub.size() > full.size()) return false;
        bool found = false;
        for (std::size_t off = 0; off + sub.size() <= full.size(); ++off) {
            if (std::equal(sub.begin(), sub.end(), full.begin() + off)) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

std::set<MultiTrace> slices_of(const MultiTrace& mu) {
    // Per-component contiguous subwords (distinct cut points may repeat a
    // subword; the set collapses them), then the cartesian product.
    std::vector<std::vector<Trace>> choices;
    for (std::size_t k = 0; k < mu.component_count(); ++k) {
        std::set<Trace> subs;
        const Trace& t = mu.component(k);
        subs.insert(Trace{});
        for (std::size_t from = 0; from < t.size(); ++from) {
            for (std::size_t len = 1; from + len <= t.size(); ++len) {
                subs.insert(Trace(t.begin() + from, t.begin() + from + len));
            }
        }
        choices.emplace_back(subs.begin(), subs.end());
    }
    std::set<MultiTrace> out;
    std::vector<Trace> cur(mu.component_count());
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == choices.size()) {
            out.insert(MultiTrace(mu.partition_ptr(), cur));
            return;
        }
        for (const Trace& t : choices[k]) {
            cur[k] = t;
            rec(k + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace orv
