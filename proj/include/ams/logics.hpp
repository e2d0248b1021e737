#pragma once

// Front-ends turning CNF theories and answer-set programs into abstract
// modules. Each constructor captures one inference mechanism: classical
// entailment, unit propagation, unfoundedness, all-rules-cancelled,
// backchain-true and forward chaining.

#include <ams/core.hpp>
#include <ams/module.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace ams {

// --- CNF -------------------------------------------------------------------------

struct Clause {
    // Sorted, duplicates removed. Tautologies are kept.
    std::vector<Literal> literals;

    Clause() = default;
    explicit Clause(std::vector<Literal> lits);
    friend bool operator==(const Clause&, const Clause&) = default;
};

struct CnfTheory {
    Vocabulary vocabulary;
    std::vector<Clause> clauses;

    friend bool operator==(const CnfTheory&, const CnfTheory&) = default;
};

// Standard DIMACS CNF. Atoms are named v1..vn unless a comment line
// `c var <index> <name>` renames them.
CnfTheory parseDimacs(std::string_view text);
std::string renderDimacs(const CnfTheory& theory);

// Truth of a clause under a complete literal set.
bool satisfiesClause(const LiteralSet& complete, const Clause& c);

// (M,Ml) iff T u M |= l; (M,bot) iff no model of T is consistent with M.
// Models of T are enumerated once at construction.
AbstractModule entailmentModule(const CnfTheory& theory, std::size_t cap = kDefaultEnumerationCap);
// (M,Ml) when some clause has l unassigned and all other literals false in M;
// (M,bot) when some clause is false in M.
AbstractModule unitPropagateModule(const CnfTheory& theory);

// --- programs ----------------------------------------------------------------------

enum class BodyForm : std::uint8_t { Positive, Negated, DoubleNegated };

struct BodyLiteral {
    Var atom = 0;
    BodyForm form = BodyForm::Positive;

    // The literal that holds when this body literal is true:
    // b -> b, not b -> -b, not not a -> a.
    Literal asLiteral() const { return Literal(atom, form == BodyForm::Negated); }
    auto operator<=>(const BodyLiteral&) const = default;
};

enum class RuleKind : std::uint8_t { Normal, Choice };

struct Rule {
    Var head = 0;
    // As written; choice rules do not carry their internal marker here.
    std::vector<BodyLiteral> body;
    RuleKind kind = RuleKind::Normal;

    // The body used by the semantics: choice rules {a} :- B become
    // a :- B, not not a.
    std::vector<BodyLiteral> effectiveBody() const;
    friend bool operator==(const Rule&, const Rule&) = default;
};

struct Program {
    Vocabulary vocabulary;
    std::vector<Rule> rules;

    friend bool operator==(const Program&, const Program&) = default;
};

// One rule per line: `h.`, `h :- l1, ..., lk.`, `{h}.`, `{h} :- ...`; body
// literals `a` or `not a`; `%` starts a comment. Atoms are added to the
// vocabulary in order of first appearance.
Program parseProgram(std::string_view text);
std::string renderProgram(const Program& program);

// Clause a v ~B for each rule (choice rules include a v -a).
CnfTheory clausify(const Program& program);

// Effective bodies of the rules with head `atom`, in rule order.
std::vector<std::vector<BodyLiteral>> bodies(const Program& program, Var atom);

// Some literal of the body is false in M.
bool isCancelled(const std::vector<BodyLiteral>& body, const LiteralSet& m);

// Greatest unfounded set of the program on M, sorted.
std::vector<Var> greatestUnfounded(const LiteralSet& m, const Program& program);

struct AsOptions {
    bool unitPropagate = true;
    bool unfounded = true;
};

// Unit propagation on the clausified program plus the Unfounded inference:
// (M,M-a) for unfounded a with -a unassigned, (M,bot) for unfounded a in M.
AbstractModule asModule(const Program& program, AsOptions options = {});
// asModule plus All Rules Cancelled and Backchain True (with their bottom edges).
AbstractModule smModule(const Program& program);
// Derives the head of a normal rule whose body holds in M.
AbstractModule forwardChainingModule(const Program& program);
// Entailment with respect to the answer sets (saturated module).
AbstractModule programEntailmentModule(const Program& program, std::size_t cap = kDefaultEnumerationCap);

// Answer sets by Gelfond-Lifschitz reduct and least-model fixpoint.
std::vector<Interpretation> answerSets(const Program& program, std::size_t cap = kDefaultEnumerationCap);

} // namespace ams
