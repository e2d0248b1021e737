#include <ams/logics.hpp>
#include <ams/solver.hpp>

#include <deque>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace ams {

namespace {

std::string stateKey(const SolverState& s) {
    if (s.isBottom()) return "B";
    std::string key;
    key.reserve(2 * s.trail().size());
    for (const auto& e : s.trail().entries()) {
        std::uint32_t code = 2 * e.literal.code() + (e.decision ? 1u : 0u);
        key.push_back(static_cast<char>(code & 0xff));
        key.push_back(static_cast<char>(code >> 8));
    }
    return key;
}

std::uint64_t saturatingAdd(std::uint64_t a, std::uint64_t b) {
    return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

std::uint64_t saturatingMul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

struct Skeleton {
    TransitionGraph graph;
    std::unordered_map<std::string, std::size_t> index;
};

Skeleton skeleton(const ModularSystem& a, std::size_t cap) {
    const auto n = a.vocabulary().size();
    if (n > cap) throw CapExceeded(n, cap);
    Skeleton s;
    s.graph.vocabulary = a.vocabulary();
    for (const auto& m : a.members()) s.graph.moduleNames.push_back(m.name);
    s.graph.states = enumerateStates(n);
    s.index.reserve(s.graph.states.size());
    for (std::size_t i = 0; i < s.graph.states.size(); ++i) s.index.emplace(stateKey(s.graph.states[i]), i);
    return s;
}

std::vector<TransitionGraph::Edge> edgesFrom(const ModularSystem& a, const Skeleton& s, std::size_t from) {
    std::vector<TransitionGraph::Edge> out;
    for (auto& t : applicableTransitions(a, s.graph.states[from])) {
        out.push_back({from, s.index.at(stateKey(t.target)), t.label});
    }
    return out;
}

TransitionGraph single(std::string name, AbstractModule m, std::size_t cap) {
    ModularSystem a;
    a.add(std::move(name), std::move(m));
    return enumerateTransitionGraph(a, cap);
}

} // namespace

std::uint64_t stateCount(std::size_t atoms) {
    // 1 + sum_k n!/(n-k)! * 4^k
    std::uint64_t total = 1;
    std::uint64_t term = 1;
    for (std::size_t k = 0; k <= atoms; ++k) {
        total = saturatingAdd(total, term);
        term = saturatingMul(saturatingMul(term, atoms - k), 4);
    }
    return total;
}

std::vector<SolverState> enumerateStates(std::size_t atoms) {
    std::vector<SolverState> out{SolverState::bottom(), SolverState(Trail(atoms))};
    std::size_t begin = 1;
    while (begin < out.size()) {
        std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
            for (Var v = 0; v < atoms; ++v) {
                if (out[i].trail().assigns(v)) continue;
                for (bool negative : {false, true}) {
                    for (bool decision : {false, true}) {
                        Trail t = out[i].trail();
                        t.push(Literal(v, negative), decision);
                        out.emplace_back(std::move(t));
                    }
                }
            }
        }
        begin = end;
    }
    return out;
}

TransitionGraph enumerateTransitionGraphSerial(const ModularSystem& a, std::size_t cap) {
    auto s = skeleton(a, cap);
    for (std::size_t i = 1; i < s.graph.states.size(); ++i) {
        auto e = edgesFrom(a, s, i);
        s.graph.edges.insert(s.graph.edges.end(), e.begin(), e.end());
    }
    return std::move(s.graph);
}

TransitionGraph enumerateTransitionGraphParallel(const ModularSystem& a, std::size_t cap) {
    auto s = skeleton(a, cap);
    const auto count = static_cast<std::int64_t>(s.graph.states.size());
    std::vector<std::vector<TransitionGraph::Edge>> perState(s.graph.states.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 1; i < count; ++i) {
        try {
            perState[i] = edgesFrom(a, s, static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(ams_graph_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    for (auto& e : perState) s.graph.edges.insert(s.graph.edges.end(), e.begin(), e.end());
    return std::move(s.graph);
}

TransitionGraph enumerateTransitionGraph(const ModularSystem& a, std::size_t cap, Exec exec) {
    return exec == Exec::Serial ? enumerateTransitionGraphSerial(a, cap) : enumerateTransitionGraphParallel(a, cap);
}

TransitionGraph dpGraph(const CnfTheory& f, std::size_t cap) { return single("F", unitPropagateModule(f), cap); }
TransitionGraph asGraph(const Program& p, std::size_t cap) { return single("P", asModule(p), cap); }
TransitionGraph smGraph(const Program& p, std::size_t cap) { return single("P", smModule(p), cap); }

std::optional<std::size_t> TransitionGraph::indexOf(const SolverState& s) const {
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (states[i] == s) return i;
    }
    return std::nullopt;
}

std::vector<std::vector<std::size_t>> TransitionGraph::adjacency() const {
    std::vector<std::vector<std::size_t>> adj(states.size());
    for (const auto& e : edges) adj[e.from].push_back(e.to);
    return adj;
}

bool TransitionGraph::isAcyclic() const {
    auto adj = adjacency();
    std::vector<std::size_t> indegree(states.size(), 0);
    for (const auto& e : edges) ++indegree[e.to];
    std::deque<std::size_t> ready;
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (indegree[i] == 0) ready.push_back(i);
    }
    std::size_t seen = 0;
    while (!ready.empty()) {
        auto v = ready.front();
        ready.pop_front();
        ++seen;
        for (auto w : adj[v]) {
            if (--indegree[w] == 0) ready.push_back(w);
        }
    }
    return seen == states.size();
}

std::vector<bool> TransitionGraph::reachableFrom(std::size_t start) const {
    auto adj = adjacency();
    std::vector<bool> seen(states.size(), false);
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto w : adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    return seen;
}

std::vector<std::size_t> TransitionGraph::terminalStates() const {
    std::vector<bool> hasOut(states.size(), false);
    for (const auto& e : edges) hasOut[e.from] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < states.size(); ++i) {
        if (!hasOut[i]) out.push_back(i);
    }
    return out;
}

std::string toDot(const TransitionGraph& g, std::string_view graphName) {
    std::ostringstream os;
    os << "digraph " << graphName << " {\n";
    os << "  s0 [label=\"⊥\", shape=box];\n";
    for (std::size_t i = 1; i < g.states.size(); ++i) {
        os << "  s" << i << " [label=\"" << render(g.states[i], g.vocabulary) << "\"];\n";
    }
    for (const auto& e : g.edges) {
        os << "  s" << e.from << " -> s" << e.to << " [label=\"" << toString(e.label.rule);
        if (e.label.module && g.moduleNames.size() > 1) os << "@" << g.moduleNames[*e.label.module];
        os << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace ams
