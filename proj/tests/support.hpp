#pragma once

#include <ams/core.hpp>
#include <ams/logics.hpp>
#include <ams/module.hpp>
#include <ams/oracle.hpp>
#include <ams/solver.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace ams::test {

inline LiteralSet set(const AbstractModule& s, const std::string& text) { return parseLiteralSet(text, s.vocabulary()); }

inline ModuleEdge edge(const AbstractModule& s, const std::string& text) { return parseEdge(text, s.vocabulary()); }

inline std::vector<std::string> edgeTexts(const AbstractModule& s) {
    std::vector<std::string> out;
    for (const auto& e : s.materialize().edges()) out.push_back(render(e, s.vocabulary()));
    return out;
}

inline std::vector<std::string> modelTexts(const AbstractModule& s, const Vocabulary& over) {
    std::vector<std::string> out;
    for (const auto& i : models(s, over)) out.push_back(render(i));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::string> modelTexts(const std::vector<Interpretation>& is) {
    std::vector<std::string> out;
    for (const auto& i : is) out.push_back(render(i));
    std::sort(out.begin(), out.end());
    return out;
}

// Clause a next to the choice program.
inline ModularSystem composite() {
    ModularSystem a;
    a.add("S1", figureModule("fig1a"));
    a.add("S2", figureModule("fig3b"));
    return a;
}

inline ModularSystem single(const AbstractModule& s, const std::string& name = "S") {
    ModularSystem a;
    a.add(name, s);
    return a;
}

inline std::vector<std::string> traceLines(const SolveResult& r, const ModularSystem& a) {
    std::vector<std::string> out;
    auto text = renderTrace(r, a);
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        out.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

} // namespace ams::test
