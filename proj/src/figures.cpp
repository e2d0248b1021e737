#include <ams/learning.hpp>
#include <ams/oracle.hpp>

#include <algorithm>
#include <map>

namespace ams {

namespace {

struct Golden {
    std::vector<std::string> atoms;
    std::vector<std::string> edges;
};

const std::map<std::string, Golden, std::less<>>& goldens() {
    static const std::map<std::string, Golden, std::less<>> g{
        {"fig1a", {{"a"}, {"{} => a", "-a => BOT"}}},
        {"fig1b", {{"a"}, {"-a => BOT"}}},
        {"fig1c", {{"a"}, {"{} => -a", "-a => BOT"}}},
        {"fig2", {{"a", "b"}, {"a => -b", "-a => b", "b => -a", "-b => a", "a b => BOT", "-a -b => BOT"}}},
        {"fig3a", {{"a", "b"}, {"-a => b", "-a -b => BOT"}}},
        {"fig3b", {{"a", "b"}, {"a => -b", "-a => b", "-b => a", "a b => BOT", "-a -b => BOT"}}},
    };
    return g;
}

// Collects named checks; the figure passes if all hold.
struct Checks {
    std::vector<std::string> failed;
    void operator()(bool ok, const char* what) {
        if (!ok) failed.push_back(what);
    }
};

std::vector<ModuleEdge> edgesOf(const AbstractModule& s) { return s.materialize().edges(); }

std::vector<ModuleEdge> parseEdges(const std::vector<std::string>& text, const Vocabulary& v) {
    std::vector<ModuleEdge> out;
    for (const auto& t : text) out.push_back(parseEdge(t, v));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<std::string> figureNames() { return {"fig1a", "fig1b", "fig1c", "fig2", "fig3a", "fig3b", "fig4"}; }

AbstractModule figureModule(std::string_view name) {
    auto it = goldens().find(name);
    if (it == goldens().end()) throw Error("unknown figure '" + std::string(name) + "'");
    Vocabulary v(it->second.atoms);
    return AbstractModule::fromEdges(v, parseEdges(it->second.edges, v), std::string(name));
}

std::vector<std::string> figure4Edges() {
    std::vector<std::string> e{
        "{} -> a UnitPropagate", "{} -> a^ Decide", "{} -> -a^ Decide", "-a -> BOT Fail", "-a^ -> a Backtrack",
    };
    std::sort(e.begin(), e.end());
    return e;
}

std::vector<std::string> renderGraphEdges(const TransitionGraph& g) {
    std::vector<std::string> out;
    for (const auto& e : g.edges) {
        out.push_back(render(g.states[e.from], g.vocabulary) + " -> " + render(g.states[e.to], g.vocabulary) + " " +
                      std::string(toString(e.label.rule)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

CnfTheory theoryA() { return CnfTheory{Vocabulary{"a"}, {Clause({Literal::positive(0)})}}; }

CnfTheory theoryAorB() {
    return CnfTheory{Vocabulary{"a", "b"},
                     {Clause({Literal::positive(0), Literal::positive(1)}), Clause({Literal::negative(0), Literal::negative(1)})}};
}

Program programChoice() { return parseProgram("{a}.\nb :- not a.\n"); }

Report verifyFigure(std::string_view name) {
    Checks check;
    if (name == "fig4") {
        auto g = dpGraph(theoryA());
        check(g.states.size() == 6, "six states");
        check(renderGraphEdges(g) == figure4Edges(), "dp graph edges");
    } else {
        auto fig = figureModule(name);
        const auto golden = edgesOf(fig);
        auto same = [&](const AbstractModule& m) { return edgesOf(m) == golden; };
        auto fig1a = figureModule("fig1a");
        auto fig2 = figureModule("fig2");
        if (name == "fig1a") {
            check(same(entailmentModule(theoryA())), "entailment module");
            check(same(unitPropagateModule(theoryA())), "unit propagate module");
            check(same(asModule(parseProgram("a."))), "as module of the fact");
            check(isSound(fig) && isSaturated(fig), "sound and saturated");
        } else if (name == "fig1b") {
            check(isSound(fig) && !isSaturated(fig), "sound, not saturated");
            check(equivalentlyContained(fig, fig1a), "contained in fig1a");
            check(edgesOf(saturate(fig)) == edgesOf(fig1a), "saturates to fig1a");
            check(criticalEdges(fig) == criticalEdges(fig1a), "critical edges");
        } else if (name == "fig1c") {
            check(!isSound(fig) && !isSaturated(fig), "unsound");
            check(equivalent(fig, fig1a), "equivalent to fig1a");
            check(criticalEdges(fig) == criticalEdges(fig1a), "critical edges");
        } else if (name == "fig2") {
            check(golden.size() == 6, "six edges");
            check(same(entailmentModule(theoryAorB())), "entailment module");
            check(same(unitPropagateModule(theoryAorB())), "unit propagate module");
            check(same(smModule(programChoice())), "sm module");
            check(same(programEntailmentModule(programChoice())), "program entailment module");
            check(isSaturated(fig), "saturated");
        } else if (name == "fig3a") {
            check(golden.size() == 2, "two edges");
            check(same(forwardChainingModule(programChoice())), "forward chaining module");
            check(!equivalent(fig, fig2), "not equivalent to fig2");
        } else if (name == "fig3b") {
            check(golden.size() == 5, "five edges");
            check(same(asModule(programChoice())), "as module");
            check(equivalentlyContained(fig, fig2), "contained in fig2");
            EdgeStore learned{parseEdge("b => -a", fig.vocabulary())};
            check(edgesOf(augment(fig, learned)) == edgesOf(fig2), "learning b => -a gives fig2");
        }
    }
    Report r;
    std::string detail;
    for (const auto& f : check.failed) detail += (detail.empty() ? "" : "; ") + f;
    r.add(check.failed.empty(), std::string(name), detail);
    return r;
}

Report verifyFigures() {
    Report r;
    for (const auto& n : figureNames()) r.append(verifyFigure(n));
    return r;
}

} // namespace ams
