#include "support/random_gen.hpp"

#include <algorithm>

namespace orv::test {

namespace {
std::size_t pick(Rng& rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

CommAction random_action(Rng& rng, const Signature& sig) {
    CommAction a;
    a.lifeline = static_cast<LifelineId>(pick(rng, sig.lifeline_count()));
    a.kind = pick(rng, 2) == 0 ? ActionKind::Emit : ActionKind::Receive;
    a.message = static_cast<MessageId>(pick(rng, sig.message_count()));
    return a;
}

LifelineSet random_region(Rng& rng, const Signature& sig) {
    switch (pick(rng, 3)) {
        case 0:
            return LifelineSet::empty_set();
        case 1:
            return sig.all_lifelines();
        default: {
            LifelineSet r;
            for (LifelineId l = 0; l < sig.lifeline_count(); ++l) {
                if (pick(rng, 2) == 0) r = r.with(l);
            }
            return r;
        }
    }
}

InterPtr gen(Rng& rng, const Signature& sig, int depth_left, int& actions_left, int& loops_left) {
    bool leaf_only = depth_left <= 0;
    // Weighted choice among the constructors that still fit the budgets.
    std::vector<int> choices;  // 0 empty, 1 action, 2 strict, 3 alt, 4 coreg, 5 loopS, 6 loopC
    auto add = [&](int what, int weight) {
        for (int k = 0; k < weight; ++k) choices.push_back(what);
    };
    add(0, 1);
    if (actions_left > 0) add(1, 5);
    if (!leaf_only && actions_left > 0) {
        add(2, 2);
        add(3, 2);
        add(4, 3);
        if (loops_left > 0) {
            add(5, 1);
            add(6, 2);
        }
    }
    switch (choices[pick(rng, choices.size())]) {
        case 0:
            return Interaction::empty();
        case 1:
            --actions_left;
            return Interaction::action(random_action(rng, sig));
        case 2: {
            InterPtr l = gen(rng, sig, depth_left - 1, actions_left, loops_left);
            InterPtr r = gen(rng, sig, depth_left - 1, actions_left, loops_left);
            return Interaction::strict(l, r);
        }
        case 3: {
            InterPtr l = gen(rng, sig, depth_left - 1, actions_left, loops_left);
            InterPtr r = gen(rng, sig, depth_left - 1, actions_left, loops_left);
            return Interaction::alt(l, r);
        }
        case 4: {
            LifelineSet region = random_region(rng, sig);
            InterPtr l = gen(rng, sig, depth_left - 1, actions_left, loops_left);
            InterPtr r = gen(rng, sig, depth_left - 1, actions_left, loops_left);
            return Interaction::coreg(region, l, r);
        }
        case 5: {
            --loops_left;
            InterPtr c = gen(rng, sig, depth_left - 1, actions_left, loops_left);
            return Interaction::loop_s(c);
        }
        default: {
            --loops_left;
            LifelineSet region = random_region(rng, sig);
            InterPtr c = gen(rng, sig, depth_left - 1, actions_left, loops_left);
            return Interaction::loop_c(region, c);
        }
    }
}

}  // namespace

Signature small_signature(int lifelines, int messages) {
    Signature sig;
    for (int l = 1; l <= lifelines; ++l) sig.add_lifeline("l" + std::to_string(l));
    for (int m = 1; m <= messages; ++m) sig.add_message("m" + std::to_string(m));
    return sig;
}

InterPtr random_interaction(Rng& rng, const Signature& sig, const GenParams& params) {
    int actions = 1 + static_cast<int>(pick(rng, static_cast<std::size_t>(params.max_actions)));
    int loops = static_cast<int>(pick(rng, static_cast<std::size_t>(params.max_loops) + 1));
    return gen(rng, sig, params.max_depth, actions, loops);
}

PartitionPtr random_partition(Rng& rng, const Signature& sig) {
    std::size_t n = sig.lifeline_count();
    std::vector<std::size_t> group_of(n);
    std::size_t groups = 1 + pick(rng, n);
    for (std::size_t l = 0; l < n; ++l) group_of[l] = pick(rng, groups);
    std::vector<LifelineSet> colocs;
    for (std::size_t g = 0; g < groups; ++g) {
        LifelineSet c;
        for (std::size_t l = 0; l < n; ++l) {
            if (group_of[l] == g) c = c.with(static_cast<LifelineId>(l));
        }
        if (!c.empty()) colocs.push_back(c);
    }
    return std::make_shared<Partition>(std::move(colocs), sig.all_lifelines());
}

MultiTrace random_multitrace(Rng& rng, const Signature& sig, PartitionPtr partition,
                             std::size_t max_per_component) {
    std::vector<Trace> comps(partition->size());
    for (std::size_t k = 0; k < partition->size(); ++k) {
        std::size_t len = pick(rng, max_per_component + 1);
        for (std::size_t n = 0; n < len; ++n) {
            CommAction a = random_action(rng, sig);
            while (!partition->coloc(k).contains(a.lifeline)) a = random_action(rng, sig);
            comps[k].push_back(a);
        }
    }
    return MultiTrace(std::move(partition), std::move(comps));
}

MultiTrace random_slice(Rng& rng, const MultiTrace& mu) {
    std::vector<Trace> comps(mu.component_count());
    for (std::size_t k = 0; k < mu.component_count(); ++k) {
        const Trace& t = mu.component(k);
        if (t.empty()) continue;
        std::size_t len = pick(rng, t.size() + 1);
        std::size_t from = pick(rng, t.size() - len + 1);
        comps[k] = Trace(t.begin() + static_cast<std::ptrdiff_t>(from),
                         t.begin() + static_cast<std::ptrdiff_t>(from + len));
    }
    return MultiTrace(mu.partition_ptr(), std::move(comps));
}

Trace random_trace(Rng& rng, const Signature& sig, std::size_t max_len) {
    Trace t;
    std::size_t len = pick(rng, max_len + 1);
    for (std::size_t k = 0; k < len; ++k) t.push_back(random_action(rng, sig));
    return t;
}

}  // namespace orv::test
