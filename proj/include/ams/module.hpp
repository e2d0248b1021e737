#pragma once

// Abstract modules: directed graphs whose nodes are the consistent literal
// sets over a vocabulary plus a distinguished bottom node. An edge leaves a
// set M either towards bottom or towards M extended with one unassigned
// literal. Modules are represented lazily by an edge oracle; materialize()
// builds the explicit graph for small vocabularies.

#include <ams/core.hpp>
#include <ams/exec.hpp>

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ams {

// Which inference produced an edge. Not part of edge identity.
enum class Reason : std::uint8_t {
    None,
    Entailment,
    UnitPropagate,
    Unfounded,
    AllRulesCancelled,
    BackchainTrue,
    ForwardChaining,
    Learned,
};

std::string_view toString(Reason r);

class EdgeTarget {
public:
    static constexpr EdgeTarget bottom() { return EdgeTarget(true, Literal()); }
    static constexpr EdgeTarget to(Literal l) { return EdgeTarget(false, l); }

    constexpr bool isBottom() const { return bottom_; }
    constexpr Literal literal() const { return lit_; }

    // Literal targets before bottom, literals by code.
    constexpr auto operator<=>(const EdgeTarget&) const = default;

private:
    constexpr EdgeTarget(bool bottom, Literal l) : bottom_(bottom), lit_(l) {}
    bool bottom_ = false;
    Literal lit_;
};

struct OutEdge {
    EdgeTarget target;
    Reason reason = Reason::None;
};

struct ModuleEdge {
    LiteralSet from;
    EdgeTarget to;

    friend bool operator==(const ModuleEdge&, const ModuleEdge&) = default;
    friend auto operator<=>(const ModuleEdge& a, const ModuleEdge& b) {
        if (auto c = a.from <=> b.from; c != 0) return c;
        return a.to <=> b.to;
    }
};

// `<from> => <literal|BOT>`
std::string render(const ModuleEdge& e, const Vocabulary& v);
ModuleEdge parseEdge(std::string_view text, const Vocabulary& v);

struct ExplicitModule;

class AbstractModule {
public:
    // Out-edges of a node. Must be pure and safe to call concurrently.
    using Oracle = std::function<std::vector<OutEdge>(const LiteralSet&)>;

    AbstractModule(Vocabulary vocabulary, Oracle oracle, std::string description = {});
    // Module with exactly the given edges.
    static AbstractModule fromEdges(Vocabulary vocabulary, const std::vector<ModuleEdge>& edges,
                                    std::string description = {});

    const Vocabulary& vocabulary() const { return vocabulary_; }
    const std::string& description() const { return description_; }

    // Deduplicated, canonically ordered out-edges of `m`. Rejects atoms outside
    // the vocabulary and oracle edges that violate the edge shape.
    std::vector<OutEdge> outEdges(const LiteralSet& m) const;
    bool isTerminal(const LiteralSet& m) const { return outEdges(m).empty(); }

    // Explicit graph over all 3^n nodes, computed once and cached.
    const ExplicitModule& materialize(std::size_t cap = kDefaultEnumerationCap, Exec exec = Exec::Parallel) const;

private:
    struct Cache;

    Vocabulary vocabulary_;
    Oracle oracle_;
    std::string description_;
    std::shared_ptr<Cache> cache_;
};

struct ExplicitModule {
    Vocabulary vocabulary;
    // All consistent literal sets, in enumerateLiteralSets order.
    std::vector<LiteralSet> nodes;
    // Out-edges per node, parallel to `nodes`.
    std::vector<std::vector<OutEdge>> out;

    std::size_t edgeCount() const;
    // Every edge, sorted.
    std::vector<ModuleEdge> edges() const;
};

// Materialization kernels. Both produce the same ExplicitModule.
ExplicitModule materializeSerial(const AbstractModule& s, std::size_t cap = kDefaultEnumerationCap);
ExplicitModule materializeParallel(const AbstractModule& s, std::size_t cap = kDefaultEnumerationCap);

// Edge sets equal (reasons ignored); vocabularies must have the same atoms.
bool sameEdges(const AbstractModule& a, const AbstractModule& b, std::size_t cap = kDefaultEnumerationCap);

// --- semantics ---------------------------------------------------------------

struct Formula {
    enum class Kind { Clause, Conjunction };
    Kind kind = Kind::Conjunction;
    std::vector<Literal> literals;

    static Formula clause(std::vector<Literal> lits) { return {Kind::Clause, std::move(lits)}; }
    static Formula conjunction(std::vector<Literal> lits) { return {Kind::Conjunction, std::move(lits)}; }
    static Formula literal(Literal l) { return {Kind::Conjunction, {l}}; }

    // Truth under a complete literal set.
    bool holdsIn(const LiteralSet& complete) const;
};

// Complete consistent terminal nodes.
std::vector<LiteralSet> modelNodes(const AbstractModule& s, std::size_t cap = kDefaultEnumerationCap);
// All X subset of `over` with X n sigma(S) = Y+ for some model node Y.
std::vector<Interpretation> models(const AbstractModule& s, const Vocabulary& over, std::size_t cap = kDefaultEnumerationCap);

// Model nodes of a module, indexed for entailment queries.
class ModelIndex {
public:
    explicit ModelIndex(const AbstractModule& s, std::size_t cap = kDefaultEnumerationCap);
    ModelIndex(std::size_t atoms, const std::vector<LiteralSet>& modelNodes);

    const std::vector<LiteralSet>& modelNodes() const { return nodes_; }
    // Some model node contains M.
    bool anyConsistent(const LiteralSet& m) const;
    // Every model node containing M satisfies phi.
    bool entails(const LiteralSet& m, const Formula& phi) const;
    bool entails(const LiteralSet& m, Literal l) const;
    // The sound out-edges a saturated module has at M.
    std::vector<OutEdge> saturatedEdges(const LiteralSet& m, Reason reason) const;

private:
    std::size_t atoms_ = 0;
    std::vector<LiteralSet> nodes_;
    std::vector<std::uint64_t> masks_;
};

bool entailsWrt(const AbstractModule& s, const LiteralSet& m, const Formula& phi, std::size_t cap = kDefaultEnumerationCap);
inline bool entails(const AbstractModule& s, const Formula& phi, std::size_t cap = kDefaultEnumerationCap) {
    return entailsWrt(s, LiteralSet{}, phi, cap);
}

bool isSoundEdge(const AbstractModule& s, const ModuleEdge& e, std::size_t cap = kDefaultEnumerationCap);
bool isSound(const AbstractModule& s, std::size_t cap = kDefaultEnumerationCap);
std::vector<ModuleEdge> criticalEdges(const AbstractModule& s, std::size_t cap = kDefaultEnumerationCap);
// Sound, and closed under entailed edges: (M,Ml) for every unassigned l with
// S |=_M l, and (M,bot) whenever no model is consistent with M.
bool isSaturated(const AbstractModule& s, std::size_t cap = kDefaultEnumerationCap);
// Same model nodes. Modules over different atom sets are never equivalent.
bool equivalent(const AbstractModule& a, const AbstractModule& b, std::size_t cap = kDefaultEnumerationCap);
// a is equivalent to b and every edge of a is an edge of b.
bool equivalentlyContained(const AbstractModule& a, const AbstractModule& b, std::size_t cap = kDefaultEnumerationCap);
// The saturated module with the same models as S (explicit).
AbstractModule saturate(const AbstractModule& s, std::size_t cap = kDefaultEnumerationCap);

// --- modular systems -----------------------------------------------------------

class ModularSystem {
public:
    struct Member {
        std::string name;
        AbstractModule module;
    };

    ModularSystem() = default;
    // `declared` atoms come first in the system vocabulary.
    explicit ModularSystem(Vocabulary declared);

    ModularSystem& add(std::string name, AbstractModule module);

    const Vocabulary& vocabulary() const { return vocabulary_; }
    const std::vector<Member>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    const Member& operator[](std::size_t i) const { return members_.at(i); }
    // Maps from the system vocabulary into member i's vocabulary and back.
    const VarMap& toMember(std::size_t i) const { return toMember_.at(i); }
    const VarMap& fromMember(std::size_t i) const { return fromMember_.at(i); }

private:
    Vocabulary vocabulary_;
    std::vector<Member> members_;
    std::vector<VarMap> toMember_;
    std::vector<VarMap> fromMember_;
};

std::vector<Interpretation> systemModels(const ModularSystem& a, std::size_t cap = kDefaultEnumerationCap);

// Graphviz rendering of the explicit module. Model nodes are double circles.
std::string toDot(const AbstractModule& s, std::string_view graphName = "module", std::size_t cap = kDefaultEnumerationCap);

} // namespace ams
