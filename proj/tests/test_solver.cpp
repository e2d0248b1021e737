#include "support.hpp"

#include <ams/generate.hpp>

#include <doctest.h>

using namespace ams;
using namespace ams::test;

namespace {

SolverState stateOf(const ModularSystem& a, std::initializer_list<std::pair<const char*, bool>> entries) {
    Trail t(a.vocabulary().size());
    for (const auto& [lit, decision] : entries) t.push(*a.vocabulary().parseLiteral(lit), decision);
    return SolverState(std::move(t));
}

bool hasTransition(const std::vector<Transition>& ts, const ModularSystem& a, const std::string& label, const SolverState& target) {
    return std::any_of(ts.begin(), ts.end(), [&](const Transition& t) { return render(t.label, a) == label && t.target == target; });
}

} // namespace

TEST_CASE("trail operations") {
    Trail t(3);
    t.push(Literal::positive(0), false);
    t.push(Literal::negative(1), true);
    t.push(Literal::positive(2), false);
    CHECK(t.hasDecision());
    CHECK(t.lastDecision() == 1u);
    CHECK_THROWS_AS(t.push(Literal::negative(0), false), Error);
    auto b = t.backtracked();
    REQUIRE(b.size() == 2);
    CHECK(b.entries()[1] == TrailEntry{Literal::positive(1), false});
    CHECK(t.decisionFreePrefix() == LiteralSet{Literal::positive(0)});
    CHECK(t.complete());
    CHECK_THROWS_AS(Trail(1).backtracked(), Error);
}

TEST_CASE("state rendering and rule names") {
    auto a = composite();
    CHECK(render(stateOf(a, {{"-a", true}, {"b", false}}), a.vocabulary()) == "-a^ b");
    CHECK(render(SolverState(Trail(2)), a.vocabulary()) == "{}");
    CHECK(render(SolverState::bottom(), a.vocabulary()) == "BOT");
    for (auto r : {TransitionRule::Propagate, TransitionRule::AllRulesCancelled, TransitionRule::LearnGlobal}) {
        CHECK((parseRule(toString(r)) == r));
    }
    CHECK(std::string(toString(TransitionRule::AllRulesCancelled)) == "ARC");
    CHECK((familyOf(TransitionRule::Unfounded) == RuleFamily::Propagate));
}

TEST_CASE("applicable transitions") {
    auto fig2 = single(figureModule("fig2"));
    auto ts = applicableTransitions(fig2, stateOf(fig2, {{"b", true}}));
    CHECK(hasTransition(ts, fig2, "Propagate@S -a", stateOf(fig2, {{"b", true}, {"-a", false}})));

    auto a = composite();
    auto at = applicableTransitions(a, stateOf(a, {{"-a", true}, {"b", false}}));
    CHECK(hasTransition(at, a, "Backtrack@S1 a", stateOf(a, {{"a", false}})));
    CHECK(render(at.front().label, a) == "Backtrack@S1 a");

    auto one = single(figureModule("fig1a"));
    CHECK(applicableTransitions(one, stateOf(one, {{"a", false}})).empty());
    CHECK_THROWS_AS(applicableTransitions(one, SolverState::bottom()), Error);

    auto fail = applicableTransitions(one, stateOf(one, {{"-a", false}}));
    REQUIRE(fail.size() == 1);
    CHECK(fail[0].target.isBottom());
}

TEST_CASE("deciding b first on the saturated module") {
    auto a = single(figureModule("fig2"));
    Strategy s;
    s.decisionOrder = {"b"};
    auto r = solve(a, s);
    CHECK(traceLines(r, a) == std::vector<std::string>{"1 Decide b | b^", "2 Propagate@S -a | b^ -a", "MODEL: b"});
    CHECK(replayTrace(a, r));
    CHECK(auditPriority(a, s, r));
    CHECK(r.stats.decisions == 1);
    CHECK(r.stats.propagations == 1);
}

TEST_CASE("decisions ranked above propagation") {
    auto a = single(figureModule("fig2"));
    Strategy s;
    s.priority = {{RuleFamily::Decide}, {RuleFamily::Conflict}, {RuleFamily::Propagate}};
    s.polarity = {{"a", false}, {"b", true}};
    auto r = solve(a, s);
    CHECK(traceLines(r, a) == std::vector<std::string>{"1 Decide -a | -a^", "2 Decide b | -a^ b^", "MODEL: b"});
    CHECK(auditPriority(a, s, r));
    CHECK_FALSE(auditPriority(a, Strategy{}, r));
}

TEST_CASE("modular path with a scripted prefix") {
    auto a = composite();
    Strategy s;
    s.script = {{TransitionRule::Decide, "", "-a"},
                {TransitionRule::Propagate, "S2", "b"},
                {TransitionRule::Backtrack, "S1", "a"},
                {TransitionRule::Decide, "", "-b"}};
    auto r = solve(a, s);
    CHECK(traceLines(r, a) == std::vector<std::string>{"1 Decide -a | -a^", "2 Propagate@S2 b | -a^ b", "3 Backtrack@S1 a | a",
                                                       "4 Decide -b | a -b^", "MODEL: a"});
    CHECK(replayTrace(a, r));

    Strategy bad;
    bad.script = {{TransitionRule::Backtrack, "", ""}};
    CHECK_THROWS_AS(solve(a, bad), Error);
}

TEST_CASE("default strategy results") {
    auto a = composite();
    auto r = solve(a);
    CHECK(renderOutcome(r) == "MODEL: a");
    CHECK(auditPriority(a, Strategy{}, r));

    auto unsat = solveModule(unitPropagateModule(parseDimacs("p cnf 1 1\n0\n")));
    CHECK(unsat.outcome == Outcome::Unsat);
    CHECK(unsat.stats.fails == 1);
    CHECK(renderOutcome(unsat) == "UNSAT");

    auto f1 = solveModule(unitPropagateModule(theoryA()));
    CHECK(renderOutcome(f1) == "MODEL: a");
    CHECK(solveModule(saturate(entailmentModule(parseDimacs("p cnf 1 2\n1 0\n-1 0\n")))).outcome == Outcome::Unsat);

    Strategy unknown;
    unknown.decisionOrder = {"zz"};
    CHECK_THROWS_AS(solve(a, unknown), Error);
}

TEST_CASE("solver agrees with system models on random systems") {
    Rng rng(9);
    for (int i = 0; i < 200; ++i) {
        auto sys = randomSystem(rng);
        auto models = systemModels(sys.system);
        Strategy pos, neg;
        neg.positiveFirst = false;
        for (const auto* s : {&pos, &neg}) {
            auto r = solve(sys.system, *s);
            CHECK_MESSAGE((r.outcome == Outcome::Unsat) == models.empty(), sys.description);
            if (r.model) CHECK(std::find(models.begin(), models.end(), *r.model) != models.end());
            CHECK(replayTrace(sys.system, r));
            CHECK(auditPriority(sys.system, *s, r));
        }
    }
}

TEST_CASE("state counts") {
    CHECK(stateCount(0) == 2);
    CHECK(stateCount(1) == 6);
    CHECK(stateCount(2) == 1 + 1 + 8 + 32);
    CHECK(enumerateStates(2).size() == stateCount(2));
    CHECK(enumerateStates(3).size() == stateCount(3));
    CHECK(stateCount(40) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("DP graph of the single clause") {
    auto g = dpGraph(theoryA());
    CHECK(g.states.size() == 6);
    CHECK(renderGraphEdges(g) == figure4Edges());
    CHECK(g.isAcyclic());
    CHECK(g.terminalStates().size() == 2);
    auto dot = toDot(g);
    CHECK(std::count(dot.begin(), dot.end(), '>') == 5);
    CHECK_THROWS_AS(dpGraph(theoryA(), 0), CapExceeded);
}

TEST_CASE("program graphs") {
    auto g = asGraph(programChoice());
    std::vector<std::string> terminal;
    for (auto t : g.terminalStates()) {
        terminal.push_back(render(Interpretation::fromPositive(g.states[t].trail().literals(), g.vocabulary)));
    }
    std::sort(terminal.begin(), terminal.end());
    terminal.erase(std::unique(terminal.begin(), terminal.end()), terminal.end());
    CHECK(terminal == std::vector<std::string>{"a", "b"});
    CHECK(g.isAcyclic());
    CHECK(smGraph(programChoice()).edges.size() > g.edges.size());

    auto unsat = asGraph(parseProgram("a :- not a."));
    CHECK(unsat.reachableFrom(TransitionGraph::kEmpty)[TransitionGraph::kBottom]);
}

TEST_CASE("serial and parallel graph enumeration agree") {
    Rng rng(4);
    for (int i = 0; i < 5; ++i) {
        auto sys = randomSystem(rng);
        auto s = enumerateTransitionGraphSerial(sys.system);
        auto p = enumerateTransitionGraphParallel(sys.system);
        CHECK(s.edges == p.edges);
        CHECK(s.states == p.states);
    }
}
