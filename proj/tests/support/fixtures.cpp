#include "support/fixtures.hpp"

namespace orv::test {

const char* const kRunningHsf = R"(@message{
	m1;m2;m3;m4;m5
}
@lifeline{
	l1;l2;l3
}
)";

const char* const kRunningHif = R"(seq(
  coreg(l2)(
    alt(
      l1 -- m1 -> (l2,l3),
      o
    ),
    loopW(
      alt(
        l1 -- m2 -> l2,
        l2 -- m3 -> l3
    ) )
  ),
  loopP(
    seq(
      l3 -- m4 -> l2,
      l2 -- m5 -> l3
) ) )
)";

const char* const kRunningHtf = R"([#any] l1!m1.l2?m1.l2?m4;
[l3] l3?m1.l3!m4
)";

const char* const kExploreHcf = R"(@explore_option{
  loggers = [graphic[svg,vertical],
             tracegen[generation = exact,
               partition={(l1,l2),(l3)}]
            ];
  strategy = HCS;
  filters = [max_depth = 35,
             max_loop_depth = 4,
             max_node_number = 250];
  priorities = random
}
)";

const char* const kAnalyzeHcf = R"(@analyze_option{
  loggers = [graphic[svg]];
  analysis_kind = simulate
                     [before = true,
                      loop max depth,
                      reset = true,
                      multiply = false,
                      act num = 10];
  strategy = DFS;
  priorities = [simu = -1];
  goal = WeakPass
}
)";

RunningExample running_example() {
    RunningExample ex;
    LifelineId l1 = ex.sig.add_lifeline("l1");
    LifelineId l2 = ex.sig.add_lifeline("l2");
    LifelineId l3 = ex.sig.add_lifeline("l3");
    MessageId m1 = ex.sig.add_message("m1");
    MessageId m2 = ex.sig.add_message("m2");
    MessageId m3 = ex.sig.add_message("m3");
    MessageId m4 = ex.sig.add_message("m4");
    MessageId m5 = ex.sig.add_message("m5");

    auto act = [](CommAction a) { return Interaction::action(a); };
    LifelineSet none = LifelineSet::empty_set();
    LifelineSet all = ex.sig.all_lifelines();

    InterPtr broadcast = Interaction::strict(
        act(emit(l1, m1)),
        Interaction::coreg(none, act(receive(l2, m1)), act(receive(l3, m1))));
    InterPtr weak_loop = Interaction::loop_c(
        none,
        Interaction::alt(Interaction::strict(act(emit(l1, m2)), act(receive(l2, m2))),
                         Interaction::strict(act(emit(l2, m3)), act(receive(l3, m3)))));
    InterPtr par_loop = Interaction::loop_c(
        all,
        Interaction::coreg(none,
                           Interaction::strict(act(emit(l3, m4)), act(receive(l2, m4))),
                           Interaction::strict(act(emit(l2, m5)), act(receive(l3, m5)))));
    ex.term = Interaction::coreg(
        none,
        Interaction::coreg(LifelineSet::single(l2),
                           Interaction::alt(broadcast, Interaction::empty()), weak_loop),
        par_loop);

    ex.pair_partition = std::make_shared<Partition>(
        std::vector<LifelineSet>{LifelineSet::single(l1).with(l2), LifelineSet::single(l3)},
        all);
    ex.discrete = std::make_shared<Partition>(Partition::discrete(ex.sig));
    ex.trivial = std::make_shared<Partition>(Partition::trivial(ex.sig));

    ex.global = Trace{emit(l1, m1), receive(l3, m1), receive(l2, m1), emit(l3, m4),
                      receive(l2, m4)};
    ex.mu_full = project_global(ex.global, ex.pair_partition);
    ex.mu_discrete = project_global(ex.global, ex.discrete);
    ex.mu_slice = MultiTrace(ex.pair_partition,
                             {Trace{receive(l2, m4)}, Trace{receive(l3, m1)}});
    return ex;
}

ScenarioFixture par_loop_scenario() {
    ScenarioFixture f;
    LifelineId l = f.sig.add_lifeline("l");
    MessageId m1 = f.sig.add_message("m1");
    MessageId m2 = f.sig.add_message("m2");
    f.term = Interaction::loop_c(
        f.sig.all_lifelines(),
        Interaction::coreg(LifelineSet::empty_set(), Interaction::action(emit(l, m1)),
                           Interaction::action(receive(l, m2))));
    auto partition = std::make_shared<Partition>(Partition::trivial(f.sig));
    f.mu = MultiTrace(partition, {Trace{receive(l, m2), receive(l, m2), receive(l, m2)}});
    return f;
}

ScenarioFixture weak_loop_coloc_scenario() {
    ScenarioFixture f;
    LifelineId l1 = f.sig.add_lifeline("l1");
    LifelineId l2 = f.sig.add_lifeline("l2");
    MessageId m = f.sig.add_message("m");
    f.term = Interaction::loop_c(
        LifelineSet::empty_set(),
        Interaction::strict(Interaction::action(emit(l1, m)),
                            Interaction::action(receive(l2, m))));
    auto partition = std::make_shared<Partition>(Partition::trivial(f.sig));
    f.mu = MultiTrace(partition, {Trace{receive(l2, m), receive(l2, m)}});
    return f;
}

ScenarioFixture coregion_two_loops_scenario() {
    ScenarioFixture f;
    LifelineId l1 = f.sig.add_lifeline("l1");
    LifelineId l2 = f.sig.add_lifeline("l2");
    MessageId m1 = f.sig.add_message("m1");
    MessageId m2 = f.sig.add_message("m2");
    auto pass = [&](MessageId m) {
        return Interaction::loop_c(
            LifelineSet::empty_set(),
            Interaction::strict(Interaction::action(emit(l1, m)),
                                Interaction::action(receive(l2, m))));
    };
    f.term = Interaction::coreg(LifelineSet::single(l2), pass(m1), pass(m2));
    auto partition = std::make_shared<Partition>(Partition::discrete(f.sig));
    f.mu = MultiTrace(partition, {Trace{}, Trace{receive(l2, m2), receive(l2, m1)}});
    return f;
}

}  // namespace orv::test
