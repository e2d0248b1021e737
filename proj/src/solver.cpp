#include <ams/solver.hpp>

#include <algorithm>
#include <array>
#include <sstream>

namespace ams {

namespace {

constexpr std::array<std::pair<TransitionRule, std::string_view>, 10> kRuleNames{{
    {TransitionRule::Propagate, "Propagate"},
    {TransitionRule::UnitPropagate, "UnitPropagate"},
    {TransitionRule::Unfounded, "Unfounded"},
    {TransitionRule::AllRulesCancelled, "ARC"},
    {TransitionRule::BackchainTrue, "BackchainTrue"},
    {TransitionRule::Fail, "Fail"},
    {TransitionRule::Backtrack, "Backtrack"},
    {TransitionRule::Decide, "Decide"},
    {TransitionRule::LearnLocal, "LearnLocal"},
    {TransitionRule::LearnGlobal, "LearnGlobal"},
}};

} // namespace

RuleFamily familyOf(TransitionRule r) {
    switch (r) {
    case TransitionRule::Fail:
    case TransitionRule::Backtrack: return RuleFamily::Conflict;
    case TransitionRule::Decide: return RuleFamily::Decide;
    case TransitionRule::LearnLocal:
    case TransitionRule::LearnGlobal: return RuleFamily::Learn;
    default: return RuleFamily::Propagate;
    }
}

std::string_view toString(TransitionRule r) {
    for (const auto& [rule, name] : kRuleNames) {
        if (rule == r) return name;
    }
    return "?";
}

std::optional<TransitionRule> parseRule(std::string_view name) {
    for (const auto& [rule, n] : kRuleNames) {
        if (n == name) return rule;
    }
    return std::nullopt;
}

TransitionRule propagateRuleFor(Reason reason) {
    switch (reason) {
    case Reason::UnitPropagate: return TransitionRule::UnitPropagate;
    case Reason::Unfounded: return TransitionRule::Unfounded;
    case Reason::AllRulesCancelled: return TransitionRule::AllRulesCancelled;
    case Reason::BackchainTrue: return TransitionRule::BackchainTrue;
    default: return TransitionRule::Propagate;
    }
}

void Trail::push(Literal l, bool decision) {
    if (assigns(l.atom())) throw Error("trail already assigns the atom of the pushed literal");
    values_[l.atom()] = l.isPositive() ? 1 : -1;
    entries_.push_back({l, decision});
}

bool Trail::hasDecision() const {
    return std::any_of(entries_.begin(), entries_.end(), [](const TrailEntry& e) { return e.decision; });
}

std::optional<std::size_t> Trail::lastDecision() const {
    for (std::size_t i = entries_.size(); i-- > 0;) {
        if (entries_[i].decision) return i;
    }
    return std::nullopt;
}

Trail Trail::backtracked() const {
    auto d = lastDecision();
    if (!d) throw Error("backtrack without a decision literal");
    Trail t(atoms());
    for (std::size_t i = 0; i < *d; ++i) t.push(entries_[i].literal, entries_[i].decision);
    t.push(entries_[*d].literal.complement(), false);
    return t;
}

LiteralSet Trail::decisionFreePrefix() const {
    std::vector<Literal> lits;
    for (const auto& e : entries_) {
        if (e.decision) break;
        lits.push_back(e.literal);
    }
    return *LiteralSet::tryMake(std::move(lits));
}

LiteralSet Trail::literals() const {
    std::vector<Literal> lits;
    lits.reserve(entries_.size());
    for (const auto& e : entries_) lits.push_back(e.literal);
    return *LiteralSet::tryMake(std::move(lits));
}

std::string render(const SolverState& s, const Vocabulary& v) {
    if (s.isBottom()) return "BOT";
    if (s.trail().empty()) return "{}";
    std::string out;
    for (const auto& e : s.trail().entries()) {
        if (!out.empty()) out += ' ';
        out += v.render(e.literal);
        if (e.decision) out += '^';
    }
    return out;
}

namespace {

std::string renderLabel(const TransitionLabel& label, const std::vector<std::string>& moduleNames, const Vocabulary& v) {
    std::string out(toString(label.rule));
    if (label.module) out += "@" + moduleNames.at(*label.module);
    if (label.literal) out += " " + v.render(*label.literal);
    return out;
}

std::vector<std::string> namesOf(const ModularSystem& a) {
    std::vector<std::string> names;
    for (const auto& m : a.members()) names.push_back(m.name);
    return names;
}

// Out-edges of every member at the restriction of the current trail.
struct StepView {
    const ModularSystem& system;
    const Trail& trail;
    std::vector<std::vector<OutEdge>> edges;

    StepView(const ModularSystem& a, const Trail& t) : system(a), trail(t) {
        auto m = t.literals();
        edges.reserve(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) edges.push_back(a[i].module.outEdges(a.toMember(i).map(m)));
    }

    bool hasConflict(std::size_t i) const {
        return std::any_of(edges[i].begin(), edges[i].end(), [](const OutEdge& e) { return e.target.isBottom(); });
    }

    Transition conflict(std::size_t i) const {
        if (!trail.hasDecision()) return {{TransitionRule::Fail, i, std::nullopt}, SolverState::bottom()};
        auto t = trail.backtracked();
        Literal flipped = t.entries().back().literal;
        return {{TransitionRule::Backtrack, i, flipped}, SolverState(std::move(t))};
    }

    Transition propagate(std::size_t i, const OutEdge& e) const {
        Literal l = *system.fromMember(i).map(e.target.literal());
        Trail t = trail;
        t.push(l, false);
        return {{propagateRuleFor(e.reason), i, l}, SolverState(std::move(t))};
    }

    Transition decide(Literal l) const {
        Trail t = trail;
        t.push(l, true);
        return {{TransitionRule::Decide, std::nullopt, l}, SolverState(std::move(t))};
    }

    std::optional<Transition> firstConflict() const {
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (hasConflict(i)) return conflict(i);
        }
        return std::nullopt;
    }

    std::optional<Transition> firstPropagation() const {
        for (std::size_t i = 0; i < edges.size(); ++i) {
            for (const auto& e : edges[i]) {
                if (!e.target.isBottom()) return propagate(i, e);
            }
        }
        return std::nullopt;
    }

    std::vector<Transition> all() const {
        std::vector<Transition> out;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (hasConflict(i)) out.push_back(conflict(i));
        }
        for (std::size_t i = 0; i < edges.size(); ++i) {
            for (const auto& e : edges[i]) {
                if (!e.target.isBottom()) out.push_back(propagate(i, e));
            }
        }
        for (Var v = 0; v < trail.atoms(); ++v) {
            if (trail.assigns(v)) continue;
            out.push_back(decide(Literal::positive(v)));
            out.push_back(decide(Literal::negative(v)));
        }
        return out;
    }
};

// Priority tiers with any unlisted family appended as a final tier.
std::vector<std::vector<RuleFamily>> normalizedTiers(const Strategy& s) {
    auto tiers = s.priority;
    for (RuleFamily f : {RuleFamily::Conflict, RuleFamily::Propagate, RuleFamily::Decide}) {
        bool listed = std::any_of(tiers.begin(), tiers.end(), [&](const auto& tier) {
            return std::find(tier.begin(), tier.end(), f) != tier.end();
        });
        if (!listed) tiers.push_back({f});
    }
    return tiers;
}

std::optional<std::size_t> tierOf(const std::vector<std::vector<RuleFamily>>& tiers, RuleFamily f) {
    for (std::size_t i = 0; i < tiers.size(); ++i) {
        if (std::find(tiers[i].begin(), tiers[i].end(), f) != tiers[i].end()) return i;
    }
    return std::nullopt;
}

// Atom order and polarity for Decide, resolved against a system vocabulary.
struct DecisionHeuristic {
    std::vector<Var> order;
    std::vector<bool> positive;

    DecisionHeuristic(const Strategy& s, const Vocabulary& v) : positive(v.size(), s.positiveFirst) {
        std::vector<bool> seen(v.size(), false);
        for (const auto& name : s.decisionOrder) {
            auto atom = v.find(name);
            if (!atom) throw Error("decision order names unknown atom '" + name + "'");
            if (!seen[*atom]) order.push_back(*atom);
            seen[*atom] = true;
        }
        for (Var a = 0; a < v.size(); ++a) {
            if (!seen[a]) order.push_back(a);
        }
        for (const auto& [name, pos] : s.polarity) {
            auto atom = v.find(name);
            if (!atom) throw Error("polarity names unknown atom '" + name + "'");
            positive[*atom] = pos;
        }
    }

    std::optional<Literal> pick(const Trail& t) const {
        for (Var a : order) {
            if (!t.assigns(a)) return Literal(a, !positive[a]);
        }
        return std::nullopt;
    }
};

bool matches(const ScriptStep& step, const TransitionLabel& label, const ModularSystem& a) {
    if (step.rule == TransitionRule::Propagate) {
        if (familyOf(label.rule) != RuleFamily::Propagate) return false;
    } else if (step.rule != label.rule) {
        return false;
    }
    if (!step.module.empty() && (!label.module || a[*label.module].name != step.module)) return false;
    if (!step.literal.empty()) {
        auto l = a.vocabulary().parseLiteral(step.literal);
        if (!l) throw Error("script names unknown literal '" + step.literal + "'");
        if (!label.literal || *label.literal != *l) return false;
    }
    return true;
}

} // namespace

std::string render(const TransitionLabel& label, const ModularSystem& a) {
    return renderLabel(label, namesOf(a), a.vocabulary());
}

std::vector<Transition> applicableTransitions(const ModularSystem& a, const SolverState& s) {
    if (s.isBottom()) throw Error("no transitions leave the bottom state");
    return StepView(a, s.trail()).all();
}

void Statistics::count(TransitionRule r) {
    switch (r) {
    case TransitionRule::Fail: ++fails; break;
    case TransitionRule::Backtrack: ++backtracks; break;
    case TransitionRule::Decide: ++decisions; break;
    case TransitionRule::LearnLocal: ++learnLocal; break;
    case TransitionRule::LearnGlobal: ++learnGlobal; break;
    default: ++propagations; break;
    }
}

namespace detail {

// Shared by solve() and the learning solver: the transition the strategy
// takes at `trail`, or nullopt at a terminal state.
std::optional<Transition> chooseTransition(const ModularSystem& a, const Trail& trail, const Strategy& strategy, std::size_t step) {
    StepView view(a, trail);
    if (step < strategy.script.size()) {
        const auto& want = strategy.script[step];
        for (auto& t : view.all()) {
            if (matches(want, t.label, a)) return std::move(t);
        }
        throw Error("scripted step " + std::to_string(step + 1) + " (" + std::string(toString(want.rule)) + ") is not applicable");
    }
    DecisionHeuristic heuristic(strategy, a.vocabulary());
    for (const auto& tier : normalizedTiers(strategy)) {
        for (RuleFamily f : tier) {
            std::optional<Transition> t;
            switch (f) {
            case RuleFamily::Conflict: t = view.firstConflict(); break;
            case RuleFamily::Propagate: t = view.firstPropagation(); break;
            case RuleFamily::Decide:
                if (auto l = heuristic.pick(trail)) t = view.decide(*l);
                break;
            case RuleFamily::Learn: break;
            }
            if (t) return t;
        }
    }
    return std::nullopt;
}

} // namespace detail

SolveResult solve(const ModularSystem& a, const Strategy& strategy, SolveOptions options) {
    SolveResult r;
    SolverState state{Trail(a.vocabulary().size())};
    for (std::size_t step = 0;; ++step) {
        auto t = detail::chooseTransition(a, state.trail(), strategy, step);
        if (!t) break;
        r.stats.count(t->label.rule);
        state = std::move(t->target);
        if (options.recordTrace) r.trace.push_back({t->label, state});
        if (state.isBottom()) break;
    }
    r.finalState = state;
    if (state.isBottom()) {
        r.outcome = Outcome::Unsat;
    } else {
        r.outcome = Outcome::Model;
        r.model = Interpretation::fromPositive(state.trail().literals(), a.vocabulary());
    }
    return r;
}

SolveResult solveModule(const AbstractModule& s, const Strategy& strategy, SolveOptions options) {
    ModularSystem a;
    a.add("S", s);
    return solve(a, strategy, options);
}

std::string renderOutcome(const SolveResult& r) {
    if (r.outcome == Outcome::Unsat) return "UNSAT";
    auto atoms = render(*r.model);
    return atoms.empty() ? "MODEL:" : "MODEL: " + atoms;
}

std::string renderTrace(const SolveResult& r, const ModularSystem& a) {
    std::ostringstream os;
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
        os << i + 1 << ' ' << render(r.trace[i].label, a) << " | " << render(r.trace[i].state, a.vocabulary()) << '\n';
    }
    os << renderOutcome(r) << '\n';
    return os.str();
}

bool replayTrace(const ModularSystem& a, const SolveResult& r) {
    SolverState state{Trail(a.vocabulary().size())};
    for (const auto& step : r.trace) {
        if (state.isBottom()) return false;
        auto options = applicableTransitions(a, state);
        bool found = std::any_of(options.begin(), options.end(), [&](const Transition& t) {
            return t.label == step.label && t.target == step.state;
        });
        if (!found) return false;
        state = step.state;
    }
    return state == r.finalState;
}

bool auditPriority(const ModularSystem& a, const Strategy& strategy, const SolveResult& r) {
    auto tiers = normalizedTiers(strategy);
    SolverState state{Trail(a.vocabulary().size())};
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
        const auto& step = r.trace[i];
        if (i >= strategy.script.size() && familyOf(step.label.rule) != RuleFamily::Learn) {
            auto taken = tierOf(tiers, familyOf(step.label.rule));
            for (const auto& t : applicableTransitions(a, state)) {
                auto tier = tierOf(tiers, familyOf(t.label.rule));
                if (tier && taken && *tier < *taken) return false;
            }
        }
        state = step.state;
    }
    return true;
}

} // namespace ams
