#pragma once

// Transition-system solver over abstract modular systems.
//
// A state is either bottom or an ordered trail of literals, some marked as
// decisions. From a trail M the rules are
//   Propagate_S  M -> M l       if S has an edge M|sigma(S) -> (M l)|sigma(S)
//   Fail_S       M -> bottom    if S has an edge M|sigma(S) -> bottom, no decisions in M
//   Backtrack_S  P l^ Q -> P -l if S has an edge (P l Q)|sigma(S) -> bottom, no decisions in Q
//   Decide       M -> M l^      if l is unassigned
// A single module is the one-member system.

#include <ams/core.hpp>
#include <ams/exec.hpp>
#include <ams/module.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ams {

enum class TransitionRule : std::uint8_t {
    Propagate,
    UnitPropagate,
    Unfounded,
    AllRulesCancelled,
    BackchainTrue,
    Fail,
    Backtrack,
    Decide,
    LearnLocal,
    LearnGlobal,
};

enum class RuleFamily : std::uint8_t { Conflict, Propagate, Decide, Learn };

RuleFamily familyOf(TransitionRule r);
std::string_view toString(TransitionRule r);
std::optional<TransitionRule> parseRule(std::string_view name);
// Label used for a propagation justified by an edge with this reason.
TransitionRule propagateRuleFor(Reason reason);

struct TransitionLabel {
    TransitionRule rule = TransitionRule::Decide;
    std::optional<std::size_t> module;
    std::optional<Literal> literal;

    friend bool operator==(const TransitionLabel&, const TransitionLabel&) = default;
};

struct TrailEntry {
    Literal literal;
    bool decision = false;

    friend bool operator==(const TrailEntry&, const TrailEntry&) = default;
};

// Ordered consistent sequence of literals over a vocabulary of `atoms` atoms.
class Trail {
public:
    explicit Trail(std::size_t atoms = 0) : values_(atoms, 0) {}

    // Throws if the atom is already assigned.
    void push(Literal l, bool decision);
    bool assigns(Var atom) const { return values_.at(atom) != 0; }
    bool contains(Literal l) const { return values_.at(l.atom()) == (l.isPositive() ? 1 : -1); }
    bool hasDecision() const;
    // Index of the most recent decision.
    std::optional<std::size_t> lastDecision() const;
    // P l^ Q -> P -l, where l^ is the most recent decision.
    Trail backtracked() const;
    // Literals before the first decision.
    LiteralSet decisionFreePrefix() const;
    LiteralSet literals() const;
    bool complete() const { return entries_.size() == values_.size(); }

    std::size_t atoms() const { return values_.size(); }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const std::vector<TrailEntry>& entries() const { return entries_; }

    friend bool operator==(const Trail& a, const Trail& b) { return a.entries_ == b.entries_ && a.atoms() == b.atoms(); }

private:
    std::vector<TrailEntry> entries_;
    std::vector<std::int8_t> values_;
};

class SolverState {
public:
    static SolverState bottom() { return SolverState(); }
    explicit SolverState(Trail trail) : trail_(std::move(trail)) {}

    bool isBottom() const { return !trail_.has_value(); }
    const Trail& trail() const { return trail_.value(); }

    friend bool operator==(const SolverState&, const SolverState&) = default;

private:
    SolverState() = default;
    std::optional<Trail> trail_;
};

// `a^ -b` with decisions marked `^`; `{}` for the empty trail; `BOT` for bottom.
std::string render(const SolverState& s, const Vocabulary& v);
// `TransitionRule[@module] [literal]`
std::string render(const TransitionLabel& label, const ModularSystem& a);

struct Transition {
    TransitionLabel label;
    SolverState target;
};

// Every rule instance applicable at `s`, canonically ordered: Fail/Backtrack
// per module, then Propagate per module in edge order, then Decide per literal.
// Throws on bottom.
std::vector<Transition> applicableTransitions(const ModularSystem& a, const SolverState& s);

// One step of a scripted path. `module` and `literal` are names; empty matches
// anything. TransitionRule::Propagate matches every propagation reason.
struct ScriptStep {
    TransitionRule rule = TransitionRule::Decide;
    std::string module;
    std::string literal;
};

struct Strategy {
    // Tiers from highest to lowest priority.
    std::vector<std::vector<RuleFamily>> priority{{RuleFamily::Conflict}, {RuleFamily::Propagate}, {RuleFamily::Decide}};
    // Atoms decided first, in this order; the rest by atom id.
    std::vector<std::string> decisionOrder;
    bool positiveFirst = true;
    // Per-atom polarity override: true = decide positive.
    std::map<std::string, bool> polarity;
    // Followed before the priorities take over.
    std::vector<ScriptStep> script;
};

struct Statistics {
    std::size_t decisions = 0;
    std::size_t propagations = 0;
    std::size_t backtracks = 0;
    std::size_t fails = 0;
    std::size_t learnLocal = 0;
    std::size_t learnGlobal = 0;

    std::size_t basic() const { return decisions + propagations + backtracks + fails; }
    std::size_t total() const { return basic() + learnLocal + learnGlobal; }
    void count(TransitionRule r);
};

enum class Outcome { Model, Unsat };

struct TraceStep {
    TransitionLabel label;
    SolverState state;
};

struct SolveResult {
    Outcome outcome = Outcome::Unsat;
    // Positive part of the final trail, over the system vocabulary.
    std::optional<Interpretation> model;
    SolverState finalState = SolverState::bottom();
    std::vector<TraceStep> trace;
    Statistics stats;
};

struct SolveOptions {
    bool recordTrace = true;
};

namespace detail {
// The transition the strategy takes at `trail` on step `step`; nullopt when terminal.
std::optional<Transition> chooseTransition(const ModularSystem& a, const Trail& trail, const Strategy& strategy, std::size_t step);
} // namespace detail

SolveResult solve(const ModularSystem& a, const Strategy& strategy = {}, SolveOptions options = {});
SolveResult solveModule(const AbstractModule& s, const Strategy& strategy = {}, SolveOptions options = {});

// Trace lines `<step> <rule>[@<module>] [<literal>] | <trail>` and a final
// `MODEL: <atoms>` or `UNSAT` line.
std::string renderTrace(const SolveResult& r, const ModularSystem& a);
std::string renderOutcome(const SolveResult& r);

// Every step's label is applicable at its source and yields the recorded state.
bool replayTrace(const ModularSystem& a, const SolveResult& r);
// No step used a lower tier while a higher tier was applicable (script steps exempt).
bool auditPriority(const ModularSystem& a, const Strategy& strategy, const SolveResult& r);

// --- transition graphs ------------------------------------------------------------

inline constexpr std::size_t kDefaultGraphCap = 4;

struct TransitionGraph {
    struct Edge {
        std::size_t from = 0;
        std::size_t to = 0;
        TransitionLabel label;
        friend bool operator==(const Edge&, const Edge&) = default;
    };

    Vocabulary vocabulary;
    std::vector<std::string> moduleNames;
    // states[0] is bottom, states[1] the empty trail.
    std::vector<SolverState> states;
    std::vector<Edge> edges;

    static constexpr std::size_t kBottom = 0;
    static constexpr std::size_t kEmpty = 1;

    std::optional<std::size_t> indexOf(const SolverState& s) const;
    std::vector<std::vector<std::size_t>> adjacency() const;
    bool isAcyclic() const;
    std::vector<bool> reachableFrom(std::size_t start) const;
    std::vector<std::size_t> terminalStates() const;
};

// Number of states relative to a vocabulary of n atoms, bottom included
// (saturates at UINT64_MAX).
std::uint64_t stateCount(std::size_t atoms);
// All trails over n atoms: every ordering, polarity and decision marking.
std::vector<SolverState> enumerateStates(std::size_t atoms);

TransitionGraph enumerateTransitionGraph(const ModularSystem& a, std::size_t cap = kDefaultGraphCap, Exec exec = Exec::Parallel);
TransitionGraph enumerateTransitionGraphSerial(const ModularSystem& a, std::size_t cap = kDefaultGraphCap);
TransitionGraph enumerateTransitionGraphParallel(const ModularSystem& a, std::size_t cap = kDefaultGraphCap);

struct CnfTheory;
struct Program;
TransitionGraph dpGraph(const CnfTheory& f, std::size_t cap = kDefaultGraphCap);
TransitionGraph asGraph(const Program& p, std::size_t cap = kDefaultGraphCap);
TransitionGraph smGraph(const Program& p, std::size_t cap = kDefaultGraphCap);

std::string toDot(const TransitionGraph& g, std::string_view graphName = "transitions");

} // namespace ams
