#include "support.hpp"

#include <ams/generate.hpp>

#include <doctest.h>

using namespace ams;
using namespace ams::test;

TEST_CASE("cnf model enumeration") {
    CHECK(modelTexts(enumerateCnfModels(theoryAorB())) == std::vector<std::string>{"a", "b"});
    CHECK(enumerateCnfModels(parseDimacs("p cnf 1 1\n0\n")).empty());
    CHECK(enumerateCnfModelsSerial(theoryA()) == enumerateCnfModelsParallel(theoryA()));
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        auto f = randomCnf(rng);
        CHECK(enumerateCnfModelsSerial(f) == enumerateCnfModelsParallel(f));
    }
    CHECK_THROWS_AS(enumerateCnfModels(CnfTheory{letters(21), {}}), CapExceeded);
}

TEST_CASE("reduct check") {
    auto p = programChoice();
    const Var a = *p.vocabulary.find("a");
    const Var b = *p.vocabulary.find("b");
    CHECK(reductCheck(p, {a}));
    CHECK(reductCheck(p, {b}));
    CHECK_FALSE(reductCheck(p, {}));
    CHECK_FALSE(reductCheck(p, {a, b}));
    auto loop = parseProgram("a :- b.\nb :- a.\n");
    CHECK_FALSE(reductCheck(loop, {0, 1}));
    CHECK(reductCheck(loop, {}));
}

TEST_CASE("brute-force unfounded sets") {
    auto loop = parseProgram("a :- b.\nb :- a.\n");
    CHECK(bruteForceUnfounded(LiteralSet{}, loop) == std::vector<Var>{0, 1});
    auto p = programChoice();
    const Var a = *p.vocabulary.find("a");
    const Var b = *p.vocabulary.find("b");
    CHECK(bruteForceUnfounded(LiteralSet{Literal::positive(a)}, p) == std::vector<Var>{b});
    CHECK(bruteForceUnfounded(LiteralSet{Literal::negative(a)}, p) == std::vector<Var>{a});
}

TEST_CASE("theorem checks") {
    auto r = checkTheorem1(figureModule("fig2"));
    CHECK(r.passed());
    CHECK(r.lines.size() == 3);
    CHECK(checkTheorem2(composite()).passed());
    CHECK(checkTheorem1(unitPropagateModule(parseDimacs("p cnf 1 1\n0\n"))).passed());

    // The unsound module reaches bottom although {a} is a model.
    auto unsound = checkTheorem1(figureModule("fig1c"));
    CHECK_FALSE(unsound.passed());
    CHECK(unsound.render().find("FAIL (c)") != std::string::npos);
    CHECK_THROWS_AS(checkTheorem1(unitPropagateModule(CnfTheory{letters(4), {}})), CapExceeded);
}

TEST_CASE("figures and the property suite") {
    auto figs = verifyFigures();
    CHECK(figs.passed());
    CHECK(figs.lines.size() == figureNames().size());
    auto props = runPropertySuite(5, 100);
    CHECK(props.passed());
    CHECK(props.lines.size() == 6);
}
