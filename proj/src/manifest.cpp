#include <ams/manifest.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace ams {

std::string_view toString(Logic l) { return l == Logic::Cnf ? "cnf" : "asp"; }

std::string_view toString(Semantics s) {
    switch (s) {
    case Semantics::UnitProp: return "unitprop";
    case Semantics::Entail: return "entail";
    case Semantics::As: return "as";
    case Semantics::Sm: return "sm";
    case Semantics::Fc: return "fc";
    }
    return "?";
}

std::optional<Semantics> parseSemantics(std::string_view text) {
    for (auto s : {Semantics::UnitProp, Semantics::Entail, Semantics::As, Semantics::Sm, Semantics::Fc}) {
        if (toString(s) == text) return s;
    }
    return std::nullopt;
}

bool validFor(Logic l, Semantics s) {
    if (l == Logic::Cnf) return s == Semantics::UnitProp || s == Semantics::Entail;
    return s != Semantics::UnitProp;
}

Semantics defaultSemantics(Logic l) { return l == Logic::Cnf ? Semantics::UnitProp : Semantics::As; }

Manifest parseManifest(std::string_view text, const std::filesystem::path& baseDir, const std::string& source) {
    Manifest m;
    std::set<std::string> names;
    std::istringstream in{std::string(text)};
    std::string line;
    for (std::size_t lineNo = 1; std::getline(in, line); ++lineNo) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream words(line);
        std::vector<std::string> w;
        for (std::string t; words >> t;) w.push_back(t);
        if (w.empty()) continue;
        auto fail = [&](const std::string& msg) { throw InputError(source, lineNo, msg); };
        if (w[0] != "module") fail("expected 'module', got '" + w[0] + "'");
        if (w.size() != 5) fail("expected 'module <name> <cnf|asp> <path> semantics=<value>'");
        ManifestEntry e;
        e.line = lineNo;
        e.name = w[1];
        if (!names.insert(e.name).second) fail("duplicate module name '" + e.name + "'");
        if (w[2] == "cnf") {
            e.logic = Logic::Cnf;
        } else if (w[2] == "asp") {
            e.logic = Logic::Asp;
        } else {
            fail("unknown logic '" + w[2] + "'");
        }
        e.path = baseDir / w[3];
        const std::string prefix = "semantics=";
        if (w[4].rfind(prefix, 0) != 0) fail("expected semantics=<value>");
        auto s = parseSemantics(std::string_view(w[4]).substr(prefix.size()));
        if (!s) fail("unknown semantics '" + w[4].substr(prefix.size()) + "'");
        if (!validFor(e.logic, *s)) fail("semantics " + std::string(toString(*s)) + " is not valid for " + std::string(toString(e.logic)));
        e.semantics = *s;
        m.entries.push_back(std::move(e));
    }
    if (m.entries.empty()) throw InputError(source, 1, "manifest lists no modules");
    return m;
}

std::string readFile(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path.string(), 0, "cannot open file");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Manifest loadManifest(const std::filesystem::path& path) {
    return parseManifest(readFile(path), path.parent_path(), path.string());
}

std::optional<Logic> logicForExtension(const std::filesystem::path& path) {
    auto ext = path.extension().string();
    if (ext == ".cnf") return Logic::Cnf;
    if (ext == ".lp") return Logic::Asp;
    return std::nullopt;
}

AbstractModule buildModule(const CnfTheory& f, Semantics s) {
    switch (s) {
    case Semantics::UnitProp: return unitPropagateModule(f);
    case Semantics::Entail: return entailmentModule(f);
    default: throw Error("semantics " + std::string(toString(s)) + " is not valid for cnf");
    }
}

AbstractModule buildModule(const Program& p, Semantics s) {
    switch (s) {
    case Semantics::As: return asModule(p);
    case Semantics::Sm: return smModule(p);
    case Semantics::Entail: return programEntailmentModule(p);
    case Semantics::Fc: return forwardChainingModule(p);
    default: throw Error("semantics " + std::string(toString(s)) + " is not valid for asp");
    }
}

AbstractModule loadModule(const std::filesystem::path& path, Logic logic, Semantics s) {
    auto text = readFile(path);
    try {
        if (logic == Logic::Cnf) return buildModule(parseDimacs(text), s);
        return buildModule(parseProgram(text), s);
    } catch (const ParseError& e) {
        throw InputError(path.string(), e.line(), e.message());
    }
}

ModularSystem buildSystem(const Manifest& m) {
    ModularSystem a;
    for (const auto& e : m.entries) a.add(e.name, loadModule(e.path, e.logic, e.semantics));
    return a;
}

} // namespace ams
