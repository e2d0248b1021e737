#pragma once

// Learning on top of the modular solver. Each member carries a store of
// learned edges; Propagate/Fail/Backtrack consult the augmented members.
// Learn Local adds a batch to one member if it is safe for that member;
// Learn Global adds a batch over the system vocabulary to every member
// (restricted to the member's atoms) if it is safe for the system.

#include <ams/core.hpp>
#include <ams/module.hpp>
#include <ams/solver.hpp>

#include <set>
#include <string>
#include <vector>

namespace ams {

// Learned edges of one member, in that member's vocabulary.
using EdgeStore = std::set<ModuleEdge>;

enum class Provenance { Derived, External };

// A batch of edges over the system vocabulary.
struct LearnedEdgeSet {
    std::vector<ModuleEdge> edges;
    Provenance provenance = Provenance::External;
};

class AugmentedState {
public:
    static AugmentedState bottom(std::size_t modules) { return AugmentedState(std::nullopt, modules); }
    static AugmentedState initial(const ModularSystem& a) { return AugmentedState(Trail(a.vocabulary().size()), a.size()); }

    bool isBottom() const { return !trail_.has_value(); }
    const Trail& trail() const { return trail_.value(); }
    Trail& trail() { return trail_.value(); }
    const std::vector<EdgeStore>& stores() const { return stores_; }
    std::vector<EdgeStore>& stores() { return stores_; }
    void setBottom() { trail_.reset(); }

private:
    AugmentedState(std::optional<Trail> trail, std::size_t modules) : trail_(std::move(trail)), stores_(modules) {}
    std::optional<Trail> trail_;
    std::vector<EdgeStore> stores_;
};

// S with the store's edges added (reason Learned).
AbstractModule augment(const AbstractModule& s, const EdgeStore& gamma);
// The system whose members are augmented with their stores.
ModularSystem augment(const ModularSystem& a, const std::vector<EdgeStore>& stores);

// Edges of E whose atoms all lie in member i's vocabulary, mapped into it.
EdgeStore restrictTo(const ModularSystem& a, std::size_t i, const LearnedEdgeSet& e);

// E is given in S's vocabulary.
bool isModuleSafe(const AbstractModule& s, const EdgeStore& e, std::size_t cap = kDefaultEnumerationCap);
bool isSystemSafe(const ModularSystem& a, const LearnedEdgeSet& e, std::size_t cap = kDefaultEnumerationCap);

// Throws SafetyViolation if E is not safe for member i (relative to its
// current store), or Error if an edge leaves the member's vocabulary.
// Above the cap only Derived batches are accepted.
void learnLocal(const ModularSystem& a, AugmentedState& state, std::size_t i, const LearnedEdgeSet& e,
                std::size_t cap = kDefaultEnumerationCap);
// Throws SafetyViolation if E is not safe for the augmented system; always
// throws above the cap.
void learnGlobal(const ModularSystem& a, AugmentedState& state, const LearnedEdgeSet& e,
                 std::size_t cap = kDefaultEnumerationCap);

// Sound edges of S at the trail's decision-free prefix (restricted to S)
// that S^gamma lacks. Result is in S's vocabulary.
EdgeStore deriveEntailedEdges(const AbstractModule& s, const EdgeStore& gamma, const LiteralSet& prefix,
                              std::size_t cap = kDefaultEnumerationCap);
// The same for member i, mapped to the system vocabulary.
LearnedEdgeSet deriveEntailedEdges(const ModularSystem& a, std::size_t i, const EdgeStore& gamma, const Trail& trail,
                                   std::size_t cap = kDefaultEnumerationCap);

struct LearningPolicy {
    enum class Mode { Off, Local, Global };
    Mode mode = Mode::Local;
    bool onConflict = true;
    bool onDecision = false;
    std::size_t cap = kDefaultEnumerationCap;
};

struct LearnedBatch {
    // Member index for local batches; nullopt for global ones.
    std::optional<std::size_t> module;
    LearnedEdgeSet edges;
    // Stores just before the batch was added.
    std::vector<EdgeStore> storesBefore;
};

struct LearningResult {
    SolveResult result;
    std::vector<EdgeStore> stores;
    std::vector<LearnedBatch> batches;
};

LearningResult solveWithLearning(const ModularSystem& a, const Strategy& strategy = {}, const LearningPolicy& policy = {});

// `<module>: <from> => <lit|BOT>` per stored edge, members in order.
std::string renderLearned(const ModularSystem& a, const std::vector<EdgeStore>& stores);

// Every local batch is safe for its member and every global batch for the
// system, each against the stores at the time it was added.
bool auditLearning(const ModularSystem& a, const LearningResult& r, std::size_t cap = kDefaultEnumerationCap);

} // namespace ams
