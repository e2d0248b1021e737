#include "support.hpp"

#include <ams/generate.hpp>

#include <doctest.h>

using namespace ams;
using namespace ams::test;

namespace {

std::vector<std::string> names(const std::vector<Var>& atoms, const Vocabulary& v) {
    std::vector<std::string> out;
    for (Var a : atoms) out.push_back(v.name(a));
    return out;
}

std::vector<std::string> clauseTexts(const CnfTheory& t) {
    std::vector<std::string> out;
    for (const auto& c : t.clauses) {
        std::string s;
        for (Literal l : c.literals) s += (s.empty() ? "" : " | ") + t.vocabulary.render(l);
        out.push_back(s);
    }
    return out;
}

} // namespace

TEST_CASE("dimacs parsing") {
    auto f1 = parseDimacs("p cnf 1 1\n1 0\n");
    CHECK(f1.vocabulary.names() == std::vector<std::string>{"v1"});
    REQUIRE(f1.clauses.size() == 1);
    CHECK(f1.clauses[0].literals == std::vector<Literal>{Literal::positive(0)});

    auto t = parseDimacs("c theory\np cnf 2 2\n1 2 0\n-1 -2 0\n");
    CHECK(clauseTexts(t) == std::vector<std::string>{"v1 | v2", "-v1 | -v2"});
    auto empty = parseDimacs("p cnf 1 0\n");
    CHECK(empty.clauses.empty());
    CHECK(empty.vocabulary.size() == 1);

    auto named = parseDimacs("c var 2 q\np cnf 2 1\n1 -2\n0\n%\n0\n");
    CHECK(named.vocabulary.names() == std::vector<std::string>{"v1", "q"});
    CHECK(named.clauses.size() == 1);
    CHECK(parseDimacs(renderDimacs(named)) == named);
    CHECK(parseDimacs("p cnf 1 1\n0\n").clauses[0].literals.empty());
}

TEST_CASE("dimacs errors carry positions") {
    auto lineOf = [](const char* text) {
        try {
            parseDimacs(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return std::size_t{0};
    };
    CHECK(lineOf("p cnf x 1\n") == 1);
    CHECK(lineOf("p cnf 1 1\n2 0\n") == 2);
    CHECK(lineOf("p cnf 1 1\n1\n") == 2);
    CHECK(lineOf("1 0\n") == 1);
    CHECK(lineOf("p cnf 1 1\np cnf 1 1\n") == 2);
    CHECK(lineOf("p cnf 1 1\n1 z 0\n") == 2);
    CHECK(lineOf("c nothing\n") == 1);
}

TEST_CASE("program parsing") {
    auto p = programChoice();
    CHECK(p.vocabulary.names() == std::vector<std::string>{"a", "b"});
    REQUIRE(p.rules.size() == 2);
    CHECK(p.rules[0].kind == RuleKind::Choice);
    CHECK(p.rules[0].body.empty());
    CHECK(p.rules[1].body == std::vector<BodyLiteral>{{0, BodyForm::Negated}});

    auto r = parseProgram("b :- a, not c. % trailing\n");
    REQUIRE(r.rules.size() == 1);
    CHECK(r.rules[0].body == std::vector<BodyLiteral>{{1, BodyForm::Positive}, {2, BodyForm::Negated}});
    CHECK(parseProgram("a.").rules.size() == 1);
    CHECK(parseProgram(renderProgram(p)) == p);
    CHECK(parseProgram("a :- b, b.").rules[0].body.size() == 1);
}

TEST_CASE("program parse errors") {
    auto where = [](const char* text) {
        try {
            parseProgram(text);
        } catch (const ParseError& e) {
            return std::make_pair(e.line(), e.column());
        }
        return std::make_pair(std::size_t{0}, std::size_t{0});
    };
    CHECK(where("a :- B.").first == 1);
    CHECK(where("a.\nb :- a").first == 2);
    CHECK(where("a.\n\n{b :- a.") == std::make_pair(std::size_t{3}, std::size_t{4}));
    CHECK(where("a :- not not.").first == 1);
    CHECK(where("a ;").first == 1);
}

TEST_CASE("clausify") {
    CHECK(clauseTexts(clausify(programChoice())) == std::vector<std::string>{"a | -a", "a | b"});
    CHECK(clauseTexts(clausify(parseProgram("a."))) == std::vector<std::string>{"a"});
    CHECK(clauseTexts(clausify(parseProgram("b :- a."))) == std::vector<std::string>{"b | -a"});
    auto impl = clausify(parseProgram("b :- a."));
    CHECK(impl.clauses[0].literals == std::vector<Literal>{Literal::positive(0), Literal::negative(1)});
}

TEST_CASE("entailment and unit propagation modules") {
    CHECK(edgeTexts(entailmentModule(theoryA())) == edgeTexts(figureModule("fig1a")));
    CHECK(edgeTexts(entailmentModule(theoryAorB())) == edgeTexts(figureModule("fig2")));
    CHECK(edgeTexts(entailmentModule(CnfTheory{Vocabulary{"a"}, {}})).empty());
    CHECK(edgeTexts(unitPropagateModule(theoryA())) == edgeTexts(figureModule("fig1a")));
    CHECK(edgeTexts(unitPropagateModule(theoryAorB())) == edgeTexts(figureModule("fig2")));

    auto bottom = unitPropagateModule(parseDimacs("p cnf 1 1\n0\n"));
    for (const auto& m : enumerateLiteralSets(1)) {
        auto e = bottom.outEdges(m);
        CHECK(std::any_of(e.begin(), e.end(), [](const OutEdge& x) { return x.target.isBottom(); }));
    }
}

TEST_CASE("bodies and cancellation") {
    auto p = programChoice();
    auto a = bodies(p, 0);
    REQUIRE(a.size() == 1);
    CHECK(a[0] == std::vector<BodyLiteral>{{0, BodyForm::DoubleNegated}});
    CHECK(bodies(p, 1) == std::vector<std::vector<BodyLiteral>>{{{0, BodyForm::Negated}}});
    CHECK(bodies(parseProgram("a."), 0) == std::vector<std::vector<BodyLiteral>>{{}});
    CHECK(isCancelled(a[0], parseLiteralSet("-a", p.vocabulary)));
    CHECK_FALSE(isCancelled(a[0], parseLiteralSet("a", p.vocabulary)));
}

TEST_CASE("greatest unfounded sets") {
    auto p = programChoice();
    const auto& v = p.vocabulary;
    CHECK(names(greatestUnfounded(parseLiteralSet("a", v), p), v) == std::vector<std::string>{"b"});
    CHECK(names(greatestUnfounded(parseLiteralSet("a b", v), p), v) == std::vector<std::string>{"b"});
    CHECK(greatestUnfounded(LiteralSet{}, p).empty());
    auto loop = parseProgram("a :- b.\nb :- a.\nc.");
    CHECK(names(greatestUnfounded(LiteralSet{}, loop), loop.vocabulary) == std::vector<std::string>{"a", "b"});
}

TEST_CASE("program modules against the figures") {
    auto p = programChoice();
    CHECK(edgeTexts(asModule(p)) == edgeTexts(figureModule("fig3b")));
    auto as = asModule(p);
    auto outB = as.outEdges(set(as, "b"));
    CHECK(outB.empty());
    CHECK(edgeTexts(asModule(parseProgram("a."))) == edgeTexts(figureModule("fig1a")));
    CHECK(edgeTexts(smModule(p)) == edgeTexts(figureModule("fig2")));
    auto sm = smModule(p);
    auto fromB = sm.outEdges(set(sm, "b"));
    REQUIRE(fromB.size() == 1);
    CHECK((fromB[0].reason == Reason::BackchainTrue));
    auto fromA = sm.outEdges(set(sm, "a"));
    CHECK(fromA.size() == 1);
    CHECK(edgeTexts(forwardChainingModule(p)) == edgeTexts(figureModule("fig3a")));
    CHECK(edgeTexts(forwardChainingModule(Program{Vocabulary{"a"}, {}})).empty());
}

TEST_CASE("answer sets") {
    CHECK(modelTexts(answerSets(programChoice())) == std::vector<std::string>{"a", "b"});
    CHECK(modelTexts(answerSets(parseProgram("a."))) == std::vector<std::string>{"a"});
    CHECK(modelTexts(answerSets(parseProgram("a :- a."))) == std::vector<std::string>{""});
}

TEST_CASE("ablation: each asModule family is needed") {
    auto p = programChoice();
    auto full = asModule(p);
    CHECK(equivalent(full, programEntailmentModule(p)));
    CHECK_FALSE(equivalent(asModule(p, AsOptions{true, false}), full));
    CHECK_FALSE(equivalent(asModule(p, AsOptions{false, true}), full));
}

TEST_CASE("random program and theory properties") {
    Rng rng(21);
    for (int i = 0; i < 100; ++i) {
        auto f = randomCnf(rng);
        auto up = unitPropagateModule(f);
        CHECK(isSound(up));
        CHECK(equivalent(up, entailmentModule(f)));

        auto p = randomProgram(rng);
        auto as = asModule(p);
        CHECK(isSound(as));
        CHECK(equivalentlyContained(as, smModule(p)));
        CHECK(modelTexts(as, p.vocabulary) == modelTexts(answerSets(p)));

        Program normal{p.vocabulary, {}};
        for (const auto& r : p.rules) {
            if (r.kind == RuleKind::Normal) normal.rules.push_back(r);
        }
        auto fc = forwardChainingModule(normal).materialize().edges();
        auto unit = unitPropagateModule(clausify(normal)).materialize().edges();
        CHECK(std::includes(unit.begin(), unit.end(), fc.begin(), fc.end()));
    }
}
