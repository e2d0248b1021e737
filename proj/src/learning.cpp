#include <ams/learning.hpp>

#include <algorithm>
#include <memory>
#include <sstream>

namespace ams {

AbstractModule augment(const AbstractModule& s, const EdgeStore& gamma) {
    if (gamma.empty()) return s;
    auto extra = std::make_shared<std::map<LiteralSet, std::vector<OutEdge>>>();
    for (const auto& e : gamma) (*extra)[e.from].push_back({e.to, Reason::Learned});
    return AbstractModule(
        s.vocabulary(),
        [s, extra](const LiteralSet& m) {
            auto out = s.outEdges(m);
            if (auto it = extra->find(m); it != extra->end()) out.insert(out.end(), it->second.begin(), it->second.end());
            return out;
        },
        s.description() + "+learned");
}

ModularSystem augment(const ModularSystem& a, const std::vector<EdgeStore>& stores) {
    if (stores.size() != a.size()) throw Error("one edge store per member expected");
    ModularSystem out(a.vocabulary());
    for (std::size_t i = 0; i < a.size(); ++i) out.add(a[i].name, augment(a[i].module, stores[i]));
    return out;
}

namespace {

std::optional<ModuleEdge> mapEdge(const VarMap& map, const ModuleEdge& e) {
    std::vector<Literal> from;
    for (Literal l : e.from) {
        auto m = map.map(l);
        if (!m) return std::nullopt;
        from.push_back(*m);
    }
    EdgeTarget to = EdgeTarget::bottom();
    if (!e.to.isBottom()) {
        auto m = map.map(e.to.literal());
        if (!m) return std::nullopt;
        to = EdgeTarget::to(*m);
    }
    return ModuleEdge{*LiteralSet::tryMake(std::move(from)), to};
}

} // namespace

EdgeStore restrictTo(const ModularSystem& a, std::size_t i, const LearnedEdgeSet& e) {
    EdgeStore out;
    for (const auto& edge : e.edges) {
        if (auto m = mapEdge(a.toMember(i), edge)) out.insert(*m);
    }
    return out;
}

bool isModuleSafe(const AbstractModule& s, const EdgeStore& e, std::size_t cap) {
    auto augmented = augment(s, e);
    return isSound(augmented, cap) && equivalent(augmented, s, cap);
}

bool isSystemSafe(const ModularSystem& a, const LearnedEdgeSet& e, std::size_t cap) {
    std::vector<EdgeStore> stores;
    for (std::size_t i = 0; i < a.size(); ++i) stores.push_back(restrictTo(a, i, e));
    auto augmented = augment(a, stores);
    if (systemModels(augmented, cap) != systemModels(a, cap)) return false;
    for (const auto& m : augmented.members()) {
        if (!isSound(m.module, cap)) return false;
    }
    return true;
}

void learnLocal(const ModularSystem& a, AugmentedState& state, std::size_t i, const LearnedEdgeSet& e, std::size_t cap) {
    if (state.isBottom()) throw Error("cannot learn in the bottom state");
    EdgeStore local;
    for (const auto& edge : e.edges) {
        auto m = mapEdge(a.toMember(i), edge);
        if (!m) throw Error("learned edge leaves the vocabulary of module '" + a[i].name + "'");
        local.insert(*m);
    }
    const auto& base = a[i].module;
    if (base.vocabulary().size() > cap) {
        if (e.provenance != Provenance::Derived) throw SafetyViolation("safety cannot be checked above the enumeration cap");
    } else if (!isModuleSafe(augment(base, state.stores()[i]), local, cap)) {
        throw SafetyViolation("learned edges are not safe for module '" + a[i].name + "'");
    }
    state.stores()[i].insert(local.begin(), local.end());
}

void learnGlobal(const ModularSystem& a, AugmentedState& state, const LearnedEdgeSet& e, std::size_t cap) {
    if (state.isBottom()) throw Error("cannot learn in the bottom state");
    if (a.vocabulary().size() > cap) throw SafetyViolation("global learning is disabled above the enumeration cap");
    if (!isSystemSafe(augment(a, state.stores()), e, cap)) throw SafetyViolation("learned edges are not safe for the system");
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto r = restrictTo(a, i, e);
        state.stores()[i].insert(r.begin(), r.end());
    }
}

EdgeStore deriveEntailedEdges(const AbstractModule& s, const EdgeStore& gamma, const LiteralSet& prefix, std::size_t cap) {
    ModelIndex index(s, cap);
    auto present = augment(s, gamma).outEdges(prefix);
    EdgeStore out;
    for (const auto& e : index.saturatedEdges(prefix, Reason::Learned)) {
        bool have = std::any_of(present.begin(), present.end(), [&](const OutEdge& p) { return p.target == e.target; });
        if (!have) out.insert({prefix, e.target});
    }
    return out;
}

LearnedEdgeSet deriveEntailedEdges(const ModularSystem& a, std::size_t i, const EdgeStore& gamma, const Trail& trail,
                                   std::size_t cap) {
    auto prefix = a.toMember(i).map(trail.decisionFreePrefix());
    LearnedEdgeSet out{{}, Provenance::Derived};
    for (const auto& e : deriveEntailedEdges(a[i].module, gamma, prefix, cap)) out.edges.push_back(*mapEdge(a.fromMember(i), e));
    return out;
}

namespace {

// One learning step at the current trail; false if nothing new was learned.
bool learnStep(const ModularSystem& a, AugmentedState& state, const LearningPolicy& policy, LearningResult& r) {
    auto before = state.stores();
    if (policy.mode == LearningPolicy::Mode::Local) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].module.vocabulary().size() > policy.cap) continue;
            auto e = deriveEntailedEdges(a, i, state.stores()[i], state.trail(), policy.cap);
            if (e.edges.empty()) continue;
            learnLocal(a, state, i, e, policy.cap);
            r.batches.push_back({i, std::move(e), std::move(before)});
            return true;
        }
        return false;
    }
    if (a.vocabulary().size() > policy.cap) return false;
    LearnedEdgeSet batch{{}, Provenance::Derived};
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto e = deriveEntailedEdges(a, i, state.stores()[i], state.trail(), policy.cap);
        batch.edges.insert(batch.edges.end(), e.edges.begin(), e.edges.end());
    }
    std::sort(batch.edges.begin(), batch.edges.end());
    batch.edges.erase(std::unique(batch.edges.begin(), batch.edges.end()), batch.edges.end());
    if (batch.edges.empty()) return false;
    try {
        learnGlobal(a, state, batch, policy.cap);
    } catch (const SafetyViolation&) {
        return false;
    }
    r.batches.push_back({std::nullopt, std::move(batch), std::move(before)});
    return true;
}

} // namespace

LearningResult solveWithLearning(const ModularSystem& a, const Strategy& strategy, const LearningPolicy& policy) {
    LearningResult r;
    auto state = AugmentedState::initial(a);
    std::size_t basic = 0;
    bool learnedSinceBasic = false;
    while (true) {
        auto current = augment(a, state.stores());
        auto t = detail::chooseTransition(current, state.trail(), strategy, basic);
        if (t && !learnedSinceBasic && policy.mode != LearningPolicy::Mode::Off) {
            auto family = familyOf(t->label.rule);
            bool trigger = (family == RuleFamily::Conflict && policy.onConflict) || (family == RuleFamily::Decide && policy.onDecision);
            if (trigger && learnStep(a, state, policy, r)) {
                learnedSinceBasic = true;
                auto rule = policy.mode == LearningPolicy::Mode::Local ? TransitionRule::LearnLocal : TransitionRule::LearnGlobal;
                r.result.stats.count(rule);
                r.result.trace.push_back({{rule, r.batches.back().module, std::nullopt}, SolverState(state.trail())});
                continue;
            }
        }
        if (!t) break;
        ++basic;
        learnedSinceBasic = false;
        r.result.stats.count(t->label.rule);
        r.result.trace.push_back({t->label, t->target});
        if (t->target.isBottom()) {
            state.setBottom();
            break;
        }
        state.trail() = t->target.trail();
    }
    if (state.isBottom()) {
        r.result.outcome = Outcome::Unsat;
        r.result.finalState = SolverState::bottom();
    } else {
        r.result.outcome = Outcome::Model;
        r.result.finalState = SolverState(state.trail());
        r.result.model = Interpretation::fromPositive(state.trail().literals(), a.vocabulary());
    }
    r.stores = state.stores();
    return r;
}

std::string renderLearned(const ModularSystem& a, const std::vector<EdgeStore>& stores) {
    std::ostringstream os;
    for (std::size_t i = 0; i < a.size() && i < stores.size(); ++i) {
        for (const auto& e : stores[i]) os << a[i].name << ": " << render(e, a[i].module.vocabulary()) << '\n';
    }
    return os.str();
}

bool auditLearning(const ModularSystem& a, const LearningResult& r, std::size_t cap) {
    for (const auto& b : r.batches) {
        if (b.module) {
            const auto& base = a[*b.module].module;
            if (!isModuleSafe(augment(base, b.storesBefore[*b.module]), restrictTo(a, *b.module, b.edges), cap)) return false;
        } else if (!isSystemSafe(augment(a, b.storesBefore), b.edges, cap)) {
            return false;
        }
    }
    return true;
}

} // namespace ams
