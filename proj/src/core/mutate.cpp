#include "core/mutate.hpp"

#include <algorithm>
#include <cmath>

namespace orv {

namespace {
std::size_t pick(Rng& rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}
}  // namespace

MultiTrace mutate_swap_actions(const MultiTrace& mu, Rng& rng) {
    std::vector<std::size_t> eligible;
    for (std::size_t k = 0; k < mu.component_count(); ++k) {
        if (mu.component(k).size() >= 2) eligible.push_back(k);
    }
    if (eligible.empty()) throw Error("mutate_swap_actions: no component with two actions");
    std::size_t k = eligible[pick(rng, eligible.size())];
    std::vector<Trace> comps = mu.components();
    Trace& t = comps[k];
    std::size_t a = pick(rng, t.size());
    std::size_t b = pick(rng, t.size() - 1);
    if (b >= a) ++b;
    std::swap(t[a], t[b]);
    return MultiTrace(mu.partition_ptr(), std::move(comps));
}

MultiTrace mutate_swap_components(const MultiTrace& mu1, const MultiTrace& mu2, std::size_t coloc) {
    if (mu1.partition() != mu2.partition()) throw Error("mutate_swap_components: partition mismatch");
    std::vector<Trace> comps = mu1.components();
    comps.at(coloc) = mu2.component(coloc);
    return MultiTrace(mu1.partition_ptr(), std::move(comps));
}

MultiTrace mutate_insert_action(const MultiTrace& mu, Rng& rng, const Signature& sig) {
    std::size_t k = pick(rng, mu.component_count());
    LifelineSet coloc = mu.partition().coloc(k);
    std::vector<LifelineId> lifelines;
    for (LifelineId l = 0; l < sig.lifeline_count(); ++l) {
        if (coloc.contains(l)) lifelines.push_back(l);
    }
    CommAction a;
    a.lifeline = lifelines[pick(rng, lifelines.size())];
    a.kind = pick(rng, 2) == 0 ? ActionKind::Emit : ActionKind::Receive;
    a.message = static_cast<MessageId>(pick(rng, sig.message_count()));
    std::vector<Trace> comps = mu.components();
    Trace& t = comps[k];
    t.insert(t.begin() + static_cast<std::ptrdiff_t>(pick(rng, t.size() + 1)), a);
    return MultiTrace(mu.partition_ptr(), std::move(comps));
}

MultiTrace random_wide_slice(const MultiTrace& mu, Rng& rng, double min_fraction) {
    std::vector<Trace> comps(mu.component_count());
    for (std::size_t k = 0; k < mu.component_count(); ++k) {
        const Trace& t = mu.component(k);
        if (t.empty()) continue;
        auto min_len = static_cast<std::size_t>(std::ceil(min_fraction * static_cast<double>(t.size())));
        min_len = std::max<std::size_t>(min_len, 1);
        std::size_t len = min_len + pick(rng, t.size() - min_len + 1);
        std::size_t from = pick(rng, t.size() - len + 1);
        comps[k] = Trace(t.begin() + static_cast<std::ptrdiff_t>(from),
                         t.begin() + static_cast<std::ptrdiff_t>(from + len));
    }
    return MultiTrace(mu.partition_ptr(), std::move(comps));
}

}  // namespace orv
