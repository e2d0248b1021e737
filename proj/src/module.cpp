#include <ams/module.hpp>

#include <algorithm>
#include <mutex>
#include <sstream>

namespace ams {

std::string_view toString(Reason r) {
    switch (r) {
    case Reason::None: return "none";
    case Reason::Entailment: return "entailment";
    case Reason::UnitPropagate: return "unitpropagate";
    case Reason::Unfounded: return "unfounded";
    case Reason::AllRulesCancelled: return "arc";
    case Reason::BackchainTrue: return "backchaintrue";
    case Reason::ForwardChaining: return "forwardchaining";
    case Reason::Learned: return "learned";
    }
    return "none";
}

std::string render(const ModuleEdge& e, const Vocabulary& v) {
    return render(e.from, v) + " => " + (e.to.isBottom() ? std::string("BOT") : v.render(e.to.literal()));
}

ModuleEdge parseEdge(std::string_view text, const Vocabulary& v) {
    auto arrow = text.find("=>");
    if (arrow == std::string_view::npos) {
        throw ParseError(1, 1, "expected '=>' in edge '" + std::string(text) + "'");
    }
    auto from = parseLiteralSet(text.substr(0, arrow), v);
    auto rhs = text.substr(arrow + 2);
    while (!rhs.empty() && rhs.front() == ' ') rhs.remove_prefix(1);
    while (!rhs.empty() && (rhs.back() == ' ' || rhs.back() == '\r')) rhs.remove_suffix(1);
    if (rhs == "BOT") {
        return {from, EdgeTarget::bottom()};
    }
    auto l = v.parseLiteral(rhs);
    if (!l || from.assigns(l->atom())) {
        throw ParseError(1, arrow + 3, "bad edge target '" + std::string(rhs) + "'");
    }
    return {from, EdgeTarget::to(*l)};
}

struct AbstractModule::Cache {
    std::once_flag once;
    std::unique_ptr<ExplicitModule> data;
};

AbstractModule::AbstractModule(Vocabulary vocabulary, Oracle oracle, std::string description)
    : vocabulary_(std::move(vocabulary))
    , oracle_(std::move(oracle))
    , description_(std::move(description))
    , cache_(std::make_shared<Cache>()) {}

AbstractModule AbstractModule::fromEdges(Vocabulary vocabulary, const std::vector<ModuleEdge>& edges, std::string description) {
    auto adjacency = std::make_shared<std::map<LiteralSet, std::vector<OutEdge>>>();
    for (const auto& e : edges) {
        for (Literal l : e.from) {
            if (l.atom() >= vocabulary.size()) throw Error("edge source outside module vocabulary");
        }
        if (!e.to.isBottom() && (e.to.literal().atom() >= vocabulary.size() || e.from.assigns(e.to.literal().atom()))) {
            throw Error("edge target is not a consistent extension of its source");
        }
        (*adjacency)[e.from].push_back({e.to, Reason::None});
    }
    return AbstractModule(
        std::move(vocabulary),
        [adjacency](const LiteralSet& m) {
            auto it = adjacency->find(m);
            return it == adjacency->end() ? std::vector<OutEdge>{} : it->second;
        },
        std::move(description));
}

std::vector<OutEdge> AbstractModule::outEdges(const LiteralSet& m) const {
    for (Literal l : m) {
        if (l.atom() >= vocabulary_.size()) {
            throw Error("node has atoms outside the module vocabulary");
        }
    }
    auto edges = oracle_(m);
    for (const auto& e : edges) {
        if (e.target.isBottom()) continue;
        Literal l = e.target.literal();
        if (l.atom() >= vocabulary_.size() || m.assigns(l.atom())) {
            throw std::logic_error("edge oracle produced an edge to an inconsistent or repeated node");
        }
    }
    std::stable_sort(edges.begin(), edges.end(), [](const OutEdge& a, const OutEdge& b) { return a.target < b.target; });
    edges.erase(std::unique(edges.begin(), edges.end(), [](const OutEdge& a, const OutEdge& b) { return a.target == b.target; }),
                edges.end());
    return edges;
}

const ExplicitModule& AbstractModule::materialize(std::size_t cap, Exec exec) const {
    if (vocabulary_.size() > cap) {
        throw CapExceeded(vocabulary_.size(), cap);
    }
    std::call_once(cache_->once, [&] {
        cache_->data = std::make_unique<ExplicitModule>(exec == Exec::Serial ? materializeSerial(*this, cap)
                                                                              : materializeParallel(*this, cap));
    });
    return *cache_->data;
}

std::size_t ExplicitModule::edgeCount() const {
    std::size_t n = 0;
    for (const auto& o : out) n += o.size();
    return n;
}

std::vector<ModuleEdge> ExplicitModule::edges() const {
    std::vector<ModuleEdge> all;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (const auto& e : out[i]) all.push_back({nodes[i], e.target});
    }
    std::sort(all.begin(), all.end());
    return all;
}

ExplicitModule materializeSerial(const AbstractModule& s, std::size_t cap) {
    const auto n = s.vocabulary().size();
    if (n > cap) throw CapExceeded(n, cap);
    ExplicitModule x{s.vocabulary(), enumerateLiteralSets(n), {}};
    x.out.resize(x.nodes.size());
    for (std::size_t i = 0; i < x.nodes.size(); ++i) {
        x.out[i] = s.outEdges(x.nodes[i]);
    }
    return x;
}

ExplicitModule materializeParallel(const AbstractModule& s, std::size_t cap) {
    const auto n = s.vocabulary().size();
    if (n > cap) throw CapExceeded(n, cap);
    ExplicitModule x{s.vocabulary(), enumerateLiteralSets(n), {}};
    x.out.resize(x.nodes.size());
    const auto total = static_cast<std::int64_t>(x.nodes.size());
    // Exceptions must not escape an OpenMP region; park the first one.
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < total; ++i) {
        try {
            x.out[i] = s.outEdges(x.nodes[i]);
        } catch (...) {
#pragma omp critical(ams_materialize_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return x;
}

namespace {

std::vector<ModuleEdge> edgesOver(const AbstractModule& s, const Vocabulary& target, std::size_t cap) {
    auto edges = s.materialize(cap).edges();
    if (s.vocabulary() == target) return edges;
    VarMap map(s.vocabulary(), target);
    for (auto& e : edges) {
        e.from = map.map(e.from);
        if (!e.to.isBottom()) e.to = EdgeTarget::to(*map.map(e.to.literal()));
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::vector<LiteralSet> modelNodesOver(const AbstractModule& s, const Vocabulary& target, std::size_t cap) {
    auto nodes = modelNodes(s, cap);
    if (s.vocabulary() == target) return nodes;
    VarMap map(s.vocabulary(), target);
    for (auto& m : nodes) m = map.map(m);
    std::sort(nodes.begin(), nodes.end());
    return nodes;
}

LiteralSet completeFromMask(std::uint64_t mask, std::size_t atoms) {
    std::vector<Literal> lits;
    lits.reserve(atoms);
    for (Var v = 0; v < atoms; ++v) lits.emplace_back(v, ((mask >> v) & 1u) == 0);
    return *LiteralSet::tryMake(std::move(lits));
}

constexpr std::size_t kMaskBits = 62;

void checkCap(std::size_t atoms, std::size_t cap) {
    if (atoms > cap || atoms > kMaskBits) throw CapExceeded(atoms, std::min(cap, kMaskBits));
}

} // namespace

bool sameEdges(const AbstractModule& a, const AbstractModule& b, std::size_t cap) {
    if (!a.vocabulary().sameAtoms(b.vocabulary())) return false;
    return edgesOver(a, a.vocabulary(), cap) == edgesOver(b, a.vocabulary(), cap);
}

bool Formula::holdsIn(const LiteralSet& complete) const {
    if (kind == Kind::Clause) {
        return std::any_of(literals.begin(), literals.end(), [&](Literal l) { return complete.contains(l); });
    }
    return std::all_of(literals.begin(), literals.end(), [&](Literal l) { return complete.contains(l); });
}

std::vector<LiteralSet> modelNodes(const AbstractModule& s, std::size_t cap) {
    const auto n = s.vocabulary().size();
    checkCap(n, cap);
    std::vector<LiteralSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        auto node = completeFromMask(mask, n);
        if (s.isTerminal(node)) out.push_back(std::move(node));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Interpretation> models(const AbstractModule& s, const Vocabulary& over, std::size_t cap) {
    if (!s.vocabulary().subsetOf(over)) {
        throw Error("module vocabulary is not contained in the interpretation vocabulary");
    }
    checkCap(over.size(), cap);
    auto nodes = modelNodes(s, cap);
    VarMap toModule(over, s.vocabulary());
    std::vector<Interpretation> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << over.size()); ++mask) {
        auto full = completeFromMask(mask, over.size());
        if (std::binary_search(nodes.begin(), nodes.end(), toModule.map(full))) {
            out.push_back(Interpretation::fromPositive(full, over));
        }
    }
    return out;
}

ModelIndex::ModelIndex(const AbstractModule& s, std::size_t cap) : ModelIndex(s.vocabulary().size(), ams::modelNodes(s, cap)) {}

ModelIndex::ModelIndex(std::size_t atoms, const std::vector<LiteralSet>& modelNodes) : atoms_(atoms), nodes_(modelNodes) {
    checkCap(atoms, kMaskBits);
    masks_.reserve(nodes_.size());
    for (const auto& y : nodes_) {
        std::uint64_t mask = 0;
        for (Var v : y.positiveAtoms()) mask |= std::uint64_t{1} << v;
        masks_.push_back(mask);
    }
}

namespace {
struct SetMasks {
    std::uint64_t pos = 0;
    std::uint64_t neg = 0;
};
SetMasks masksOf(const LiteralSet& m) {
    SetMasks s;
    for (Literal l : m) (l.isPositive() ? s.pos : s.neg) |= std::uint64_t{1} << l.atom();
    return s;
}
bool consistentWith(std::uint64_t model, SetMasks m) { return (model & m.neg) == 0 && (m.pos & ~model) == 0; }
} // namespace

bool ModelIndex::anyConsistent(const LiteralSet& m) const {
    auto mm = masksOf(m);
    return std::any_of(masks_.begin(), masks_.end(), [&](std::uint64_t y) { return consistentWith(y, mm); });
}

bool ModelIndex::entails(const LiteralSet& m, const Formula& phi) const {
    auto mm = masksOf(m);
    for (std::size_t i = 0; i < masks_.size(); ++i) {
        if (consistentWith(masks_[i], mm) && !phi.holdsIn(nodes_[i])) return false;
    }
    return true;
}

bool ModelIndex::entails(const LiteralSet& m, Literal l) const {
    auto mm = masksOf(m);
    const std::uint64_t bit = std::uint64_t{1} << l.atom();
    for (std::uint64_t y : masks_) {
        if (consistentWith(y, mm) && ((y & bit) != 0) != l.isPositive()) return false;
    }
    return true;
}

std::vector<OutEdge> ModelIndex::saturatedEdges(const LiteralSet& m, Reason reason) const {
    std::vector<OutEdge> out;
    for (Var v = 0; v < atoms_; ++v) {
        if (m.assigns(v)) continue;
        for (Literal l : {Literal::positive(v), Literal::negative(v)}) {
            if (entails(m, l)) out.push_back({EdgeTarget::to(l), reason});
        }
    }
    if (!anyConsistent(m)) out.push_back({EdgeTarget::bottom(), reason});
    return out;
}

bool entailsWrt(const AbstractModule& s, const LiteralSet& m, const Formula& phi, std::size_t cap) {
    return ModelIndex(s, cap).entails(m, phi);
}

bool isSoundEdge(const AbstractModule& s, const ModuleEdge& e, std::size_t cap) {
    ModelIndex index(s, cap);
    return e.to.isBottom() ? !index.anyConsistent(e.from) : index.entails(e.from, e.to.literal());
}

namespace {
bool soundUnder(const ExplicitModule& x, const ModelIndex& index) {
    for (std::size_t i = 0; i < x.nodes.size(); ++i) {
        for (const auto& e : x.out[i]) {
            bool ok = e.target.isBottom() ? !index.anyConsistent(x.nodes[i]) : index.entails(x.nodes[i], e.target.literal());
            if (!ok) return false;
        }
    }
    return true;
}
} // namespace

bool isSound(const AbstractModule& s, std::size_t cap) {
    ModelIndex index(s, cap);
    return soundUnder(s.materialize(cap), index);
}

std::vector<ModuleEdge> criticalEdges(const AbstractModule& s, std::size_t cap) {
    const auto& x = s.materialize(cap);
    std::vector<ModuleEdge> out;
    for (std::size_t i = 0; i < x.nodes.size(); ++i) {
        if (!isComplete(x.nodes[i], x.vocabulary.size())) continue;
        for (const auto& e : x.out[i]) {
            if (e.target.isBottom()) out.push_back({x.nodes[i], e.target});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool isSaturated(const AbstractModule& s, std::size_t cap) {
    ModelIndex index(s, cap);
    const auto& x = s.materialize(cap);
    if (!soundUnder(x, index)) return false;
    for (std::size_t i = 0; i < x.nodes.size(); ++i) {
        for (const auto& want : index.saturatedEdges(x.nodes[i], Reason::Entailment)) {
            bool present = std::any_of(x.out[i].begin(), x.out[i].end(), [&](const OutEdge& e) { return e.target == want.target; });
            if (!present) return false;
        }
    }
    return true;
}

bool equivalent(const AbstractModule& a, const AbstractModule& b, std::size_t cap) {
    if (!a.vocabulary().sameAtoms(b.vocabulary())) return false;
    return modelNodesOver(a, a.vocabulary(), cap) == modelNodesOver(b, a.vocabulary(), cap);
}

bool equivalentlyContained(const AbstractModule& a, const AbstractModule& b, std::size_t cap) {
    if (!equivalent(a, b, cap)) return false;
    auto ea = edgesOver(a, a.vocabulary(), cap);
    auto eb = edgesOver(b, a.vocabulary(), cap);
    return std::includes(eb.begin(), eb.end(), ea.begin(), ea.end());
}

AbstractModule saturate(const AbstractModule& s, std::size_t cap) {
    checkCap(s.vocabulary().size(), cap);
    auto index = std::make_shared<const ModelIndex>(s, cap);
    auto desc = s.description().empty() ? std::string("saturated") : "saturated(" + s.description() + ")";
    return AbstractModule(
        s.vocabulary(), [index](const LiteralSet& m) { return index->saturatedEdges(m, Reason::Entailment); }, std::move(desc));
}

ModularSystem::ModularSystem(Vocabulary declared) : vocabulary_(std::move(declared)) {}

ModularSystem& ModularSystem::add(std::string name, AbstractModule module) {
    for (const auto& m : members_) {
        if (m.name == name) throw Error("duplicate module name '" + name + "'");
    }
    vocabulary_ = vocabulary_.unionWith(module.vocabulary());
    members_.push_back({std::move(name), std::move(module)});
    // Earlier maps stay valid: the union only appends atoms.
    toMember_.clear();
    fromMember_.clear();
    for (const auto& m : members_) {
        toMember_.emplace_back(vocabulary_, m.module.vocabulary());
        fromMember_.emplace_back(m.module.vocabulary(), vocabulary_);
    }
    return *this;
}

std::vector<Interpretation> systemModels(const ModularSystem& a, std::size_t cap) {
    const auto n = a.vocabulary().size();
    checkCap(n, cap);
    std::vector<std::vector<LiteralSet>> nodes;
    for (const auto& m : a.members()) nodes.push_back(modelNodes(m.module, cap));
    std::vector<Interpretation> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        auto full = completeFromMask(mask, n);
        bool ok = true;
        for (std::size_t i = 0; ok && i < a.size(); ++i) {
            ok = std::binary_search(nodes[i].begin(), nodes[i].end(), a.toMember(i).map(full));
        }
        if (ok) out.push_back(Interpretation::fromPositive(full, a.vocabulary()));
    }
    return out;
}

namespace {
std::string escapeDot(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}
} // namespace

std::string toDot(const AbstractModule& s, std::string_view graphName, std::size_t cap) {
    const auto& x = s.materialize(cap);
    auto modelSet = modelNodes(s, cap);
    std::ostringstream os;
    os << "digraph " << graphName << " {\n";
    os << "  rankdir=BT;\n";
    for (std::size_t i = 0; i < x.nodes.size(); ++i) {
        bool model = std::binary_search(modelSet.begin(), modelSet.end(), x.nodes[i]);
        os << "  n" << i << " [label=\"" << escapeDot(render(x.nodes[i], x.vocabulary)) << "\", shape="
           << (model ? "doublecircle" : "ellipse") << "];\n";
    }
    os << "  bot [label=\"⊥\", shape=box];\n";
    for (std::size_t i = 0; i < x.nodes.size(); ++i) {
        for (const auto& e : x.out[i]) {
            os << "  n" << i << " -> ";
            if (e.target.isBottom()) {
                os << "bot";
            } else {
                auto idx = literalSetIndex(x.nodes[i].with(e.target.literal()));
                os << "n" << idx;
            }
            os << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

} // namespace ams
