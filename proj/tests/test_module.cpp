#include "support.hpp"

#include <ams/generate.hpp>

#include <doctest.h>

using namespace ams;
using namespace ams::test;

TEST_CASE("out-edges of the clause-a module") {
    auto s = figureModule("fig1a");
    auto e = s.outEdges(LiteralSet{});
    REQUIRE(e.size() == 1);
    CHECK(e[0].target == EdgeTarget::to(Literal::positive(0)));
    auto n = s.outEdges(set(s, "-a"));
    REQUIRE(n.size() == 1);
    CHECK(n[0].target.isBottom());
    CHECK(s.isTerminal(set(s, "a")));
    CHECK_THROWS_AS(s.outEdges(LiteralSet{Literal::positive(4)}), Error);
}

TEST_CASE("edge text round trip") {
    auto s = figureModule("fig2");
    for (const auto& text : edgeTexts(s)) CHECK(render(edge(s, text), s.vocabulary()) == text);
    CHECK_THROWS_AS(edge(s, "a => a"), ParseError);
    CHECK_THROWS_AS(edge(s, "a -b"), ParseError);
}

TEST_CASE("model nodes and models") {
    auto fig2 = figureModule("fig2");
    auto nodes = modelNodes(fig2);
    REQUIRE(nodes.size() == 2);
    CHECK(render(nodes[0], fig2.vocabulary()) == "a -b");
    CHECK(render(nodes[1], fig2.vocabulary()) == "-a b");
    CHECK(modelNodes(figureModule("fig1b")).size() == 1);
    AbstractModule empty(Vocabulary{}, [](const LiteralSet&) { return std::vector<OutEdge>{}; });
    CHECK(modelNodes(empty).size() == 1);

    Vocabulary ab{"a", "b"};
    CHECK(modelTexts(fig2, ab) == std::vector<std::string>{"a", "b"});
    CHECK(modelTexts(figureModule("fig1a"), ab) == std::vector<std::string>{"a", "a b"});
    auto fc = modelTexts(figureModule("fig3a"), ab);
    CHECK(std::find(fc.begin(), fc.end(), "a b") != fc.end());
    CHECK_THROWS_AS(models(fig2, Vocabulary{"a"}), Error);
}

TEST_CASE("entailment") {
    auto c = figureModule("fig1c");
    CHECK_FALSE(entailsWrt(c, LiteralSet{}, Formula::literal(Literal::negative(0))));
    CHECK(entails(figureModule("fig1a"), Formula::literal(Literal::positive(0))));
    CHECK(entails(c, Formula::clause({Literal::positive(0), Literal::negative(0)})));
}

TEST_CASE("soundness and critical edges") {
    CHECK_FALSE(isSoundEdge(figureModule("fig1c"), edge(figureModule("fig1c"), "{} => -a")));
    CHECK(isSoundEdge(figureModule("fig2"), edge(figureModule("fig2"), "a b => BOT")));
    CHECK_FALSE(isSoundEdge(figureModule("fig2"), edge(figureModule("fig2"), "a -b => BOT")));
    CHECK(isSound(figureModule("fig1a")));
    CHECK(isSound(figureModule("fig1b")));
    CHECK_FALSE(isSound(figureModule("fig1c")));
    CHECK(isSound(AbstractModule::fromEdges(Vocabulary{"a"}, {})));

    for (const char* name : {"fig1a", "fig1b", "fig1c"}) {
        auto s = figureModule(name);
        auto crit = criticalEdges(s);
        REQUIRE(crit.size() == 1);
        CHECK(render(crit[0], s.vocabulary()) == "-a => BOT");
    }
    auto fig2 = figureModule("fig2");
    std::vector<std::string> crit;
    for (const auto& e : criticalEdges(fig2)) crit.push_back(render(e, fig2.vocabulary()));
    CHECK(crit == std::vector<std::string>{"a b => BOT", "-a -b => BOT"});
    CHECK(criticalEdges(AbstractModule::fromEdges(Vocabulary{"a"}, {})).empty());
}

TEST_CASE("saturation, equivalence, containment") {
    auto a = figureModule("fig1a"), b = figureModule("fig1b"), c = figureModule("fig1c");
    auto fig2 = figureModule("fig2"), fig3a = figureModule("fig3a"), fig3b = figureModule("fig3b");
    CHECK(isSaturated(a));
    CHECK_FALSE(isSaturated(b));
    CHECK_FALSE(isSaturated(c));
    CHECK(isSaturated(fig2));
    CHECK(equivalent(a, c));
    CHECK(equivalent(a, a));
    CHECK_FALSE(equivalent(fig3a, fig2));
    CHECK_FALSE(equivalent(a, fig2));
    CHECK(equivalentlyContained(b, a));
    CHECK(equivalentlyContained(fig3b, fig2));
    CHECK_FALSE(equivalentlyContained(a, b));
    CHECK(sameEdges(saturate(b), a));
    CHECK(sameEdges(saturate(fig3b), fig2));
    CHECK(sameEdges(saturate(fig2), fig2));
}

TEST_CASE("saturation properties on random sound modules") {
    Rng rng(3);
    for (int i = 0; i < 40; ++i) {
        auto f = randomCnf(rng, CnfShape{3, 5, 3, 0.05});
        auto s = unitPropagateModule(f);
        auto sat = saturate(s);
        CHECK(isSaturated(sat));
        CHECK(isSound(sat));
        CHECK(equivalentlyContained(s, sat));
        CHECK(sameEdges(saturate(sat), sat));
        CHECK(criticalEdges(sat) == criticalEdges(entailmentModule(f)));
    }
}

TEST_CASE("serial and parallel materialization agree") {
    Rng rng(5);
    for (int i = 0; i < 10; ++i) {
        auto f = randomCnf(rng, CnfShape{6, 10, 3, 0.0});
        auto s = unitPropagateModule(f);
        CHECK(materializeSerial(s).edges() == materializeParallel(s).edges());
    }
    CHECK_THROWS_AS(figureModule("fig2").materialize(1), CapExceeded);
}

TEST_CASE("system models") {
    auto a = composite();
    CHECK(a.vocabulary().names() == std::vector<std::string>{"a", "b"});
    CHECK(modelTexts(systemModels(a)) == std::vector<std::string>{"a"});

    ModularSystem empty(Vocabulary{"a"});
    CHECK(modelTexts(systemModels(empty)) == std::vector<std::string>{"", "a"});

    ModularSystem twice;
    twice.add("x", figureModule("fig2")).add("y", figureModule("fig2"));
    CHECK(modelTexts(systemModels(twice)) == std::vector<std::string>{"a", "b"});
    CHECK_THROWS_AS(twice.add("x", figureModule("fig1a")), Error);
}

TEST_CASE("module DOT export") {
    auto dot = toDot(figureModule("fig2"), "fig2");
    CHECK(dot.find("digraph fig2") != std::string::npos);
    CHECK(std::count(dot.begin(), dot.end(), '>') == 6);
    CHECK(dot.find("doublecircle") != std::string::npos);
    auto empty = toDot(AbstractModule::fromEdges(Vocabulary{"a"}, {}), "m");
    CHECK(std::count(empty.begin(), empty.end(), '>') == 0);
    CHECK(toDot(figureModule("fig2"), "fig2") == dot);
}
