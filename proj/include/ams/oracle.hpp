#pragma once

// Brute-force ground truth. Everything here enumerates assignments or atom
// subsets directly and shares no code paths with the module constructors.

#include <ams/core.hpp>
#include <ams/exec.hpp>
#include <ams/logics.hpp>
#include <ams/module.hpp>
#include <ams/solver.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ams {

inline constexpr std::size_t kOracleCnfCap = 20;
inline constexpr std::size_t kOracleSubsetCap = 12;
inline constexpr std::size_t kTheoremCap = 3;

// All satisfying assignments, sorted.
std::vector<Interpretation> enumerateCnfModels(const CnfTheory& f, Exec exec = Exec::Parallel);
std::vector<Interpretation> enumerateCnfModelsSerial(const CnfTheory& f);
std::vector<Interpretation> enumerateCnfModelsParallel(const CnfTheory& f);

// X is the minimal model of the reduct of the program relative to X.
bool reductCheck(const Program& p, const std::vector<Var>& x);
// Answer sets by running reductCheck on every subset, sorted.
std::vector<Interpretation> bruteForceAnswerSets(const Program& p);

// Union of every atom set U such that each rule with head in U has a body
// false in M or a positive body atom in U.
std::vector<Var> bruteForceUnfounded(const LiteralSet& m, const Program& p);

struct ReportLine {
    bool pass = true;
    std::string clause;
    std::string detail;
};

struct Report {
    std::vector<ReportLine> lines;

    bool passed() const;
    void add(bool pass, std::string clause, std::string detail = {});
    void append(const Report& other);
    // `PASS|FAIL <clause> [detail]` per line.
    std::string render() const;
};

// (a) acyclic, (b) every terminal non-bottom state is a model, (c) bottom is
// reachable from the empty state iff there are no models.
Report checkTheorem1(const AbstractModule& s, std::size_t cap = kTheoremCap);
Report checkTheorem2(const ModularSystem& a, std::size_t cap = kTheoremCap);

// Golden modules: fig1a, fig1b, fig1c, fig2,
// fig3a, fig3b (all over a, b or a).
std::vector<std::string> figureNames();
AbstractModule figureModule(std::string_view name);
// Golden transition edges of the DP graph of the clause a, as
// `<from> -> <to> <rule>` lines.
std::vector<std::string> figure4Edges();
std::vector<std::string> renderGraphEdges(const TransitionGraph& g);

// The clause theory and two-rule program used by the figures.
CnfTheory theoryAorB();
CnfTheory theoryA();
Program programChoice();

// Checks the named figure (or "fig4") against the constructions.
Report verifyFigure(std::string_view name);
Report verifyFigures();

// Randomized agreement checks between the constructions and the oracle.
Report runPropertySuite(std::uint64_t seed, std::size_t count);

} // namespace ams
