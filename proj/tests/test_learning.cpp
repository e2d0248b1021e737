#include "support.hpp"

#include <ams/generate.hpp>
#include <ams/learning.hpp>

#include <doctest.h>

using namespace ams;
using namespace ams::test;

namespace {

LearnedEdgeSet batch(const ModularSystem& a, std::initializer_list<const char*> edges,
                     Provenance p = Provenance::External) {
    LearnedEdgeSet e;
    e.provenance = p;
    for (const auto* text : edges) e.edges.push_back(parseEdge(text, a.vocabulary()));
    return e;
}

} // namespace

TEST_CASE("augmenting the choice module with the entailed edge gives the saturated one") {
    auto s = figureModule("fig3b");
    auto derived = deriveEntailedEdges(s, {}, set(s, "b"));
    std::vector<std::string> texts;
    for (const auto& e : derived) texts.push_back(render(e, s.vocabulary()));
    CHECK(texts == std::vector<std::string>{"b => -a"});
    auto aug = augment(s, derived);
    CHECK(edgeTexts(aug) == edgeTexts(figureModule("fig2")));
    CHECK(isModuleSafe(s, derived));
    CHECK(deriveEntailedEdges(aug, {}, set(s, "b")).empty());
}

TEST_CASE("module safety") {
    auto s = figureModule("fig2");
    CHECK(isModuleSafe(s, {}));
    CHECK_FALSE(isModuleSafe(s, {edge(s, "{} => BOT")}));
    CHECK_FALSE(isModuleSafe(s, {edge(s, "{} => a")}));
    CHECK(isModuleSafe(s, {edge(s, "a b => BOT")}));
}

TEST_CASE("system safety") {
    auto a = composite();
    CHECK(isSystemSafe(a, batch(a, {})));
    // Sound for the system, but adding it to S2 alone breaks S2's own soundness.
    CHECK_FALSE(isSystemSafe(a, batch(a, {"{} => -b"})));
    CHECK(isSystemSafe(a, batch(a, {"{} => -b", "-a b => BOT"})));
    auto f2 = single(figureModule("fig2"));
    CHECK_FALSE(isSystemSafe(f2, batch(f2, {"{} => BOT"})));
}

TEST_CASE("learn global then propagate") {
    auto a = composite();
    auto state = AugmentedState::initial(a);
    learnGlobal(a, state, batch(a, {"{} => -b", "-a b => BOT"}));
    auto aug = augment(a, state.stores());
    auto ts = applicableTransitions(aug, SolverState(state.trail()));
    CHECK(std::any_of(ts.begin(), ts.end(), [&](const Transition& t) { return render(t.label, aug) == "Propagate@S2 -b"; }));
    CHECK_THROWS_AS(learnGlobal(a, state, batch(a, {"{} => b"})), SafetyViolation);
}

TEST_CASE("learn local") {
    auto a = composite();
    auto state = AugmentedState::initial(a);
    CHECK_THROWS_AS(learnLocal(a, state, 0, batch(a, {"b => a"})), Error);
    CHECK_THROWS_AS(learnLocal(a, state, 1, batch(a, {"{} => a"})), SafetyViolation);
    learnLocal(a, state, 1, batch(a, {"b => -a"}));
    CHECK(state.stores()[1].size() == 1);
    CHECK(state.stores()[0].empty());
    CHECK(renderLearned(a, state.stores()) == "S2: b => -a\n");
    // Above the cap only derived batches go through.
    CHECK_THROWS_AS(learnLocal(a, state, 1, batch(a, {"a b => BOT"}), 1), SafetyViolation);
    learnLocal(a, state, 1, batch(a, {"a b => BOT"}, Provenance::Derived), 1);
    CHECK(state.stores()[1].size() == 2);
}

TEST_CASE("solving with learning on a conflict") {
    auto a = composite();
    Strategy s;
    s.decisionOrder = {"a"};
    s.polarity = {{"a", false}};
    s.priority = {{RuleFamily::Decide}, {RuleFamily::Conflict}, {RuleFamily::Propagate}};
    for (auto mode : {LearningPolicy::Mode::Local, LearningPolicy::Mode::Global}) {
        LearningPolicy policy;
        policy.mode = mode;
        auto r = solveWithLearning(a, s, policy);
        CHECK(renderOutcome(r.result) == "MODEL: a");
        CHECK(auditLearning(a, r));
        CHECK(replayTrace(augment(a, r.stores), r.result) == (r.batches.empty()));
    }
    LearningPolicy off;
    off.mode = LearningPolicy::Mode::Off;
    auto r = solveWithLearning(a, s, off);
    CHECK(r.batches.empty());
    CHECK(r.result.stats.learnLocal + r.result.stats.learnGlobal == 0);
}

TEST_CASE("learning keeps outcomes and the transition bound on random systems") {
    Rng rng(33);
    for (int i = 0; i < 150; ++i) {
        auto sys = randomSystem(rng);
        auto plain = solve(sys.system);
        auto learned = solveWithLearning(sys.system);
        CHECK_MESSAGE(plain.outcome == learned.result.outcome, sys.description);
        CHECK(auditLearning(sys.system, learned));
        const auto m = stateCount(sys.system.vocabulary().size());
        CHECK(learned.result.stats.total() <= 2 * m + 1);
        CHECK(learned.result.stats.learnLocal + learned.result.stats.learnGlobal <= learned.result.stats.basic());
    }
}
