#include "cli.hpp"

#include <ams/learning.hpp>
#include <ams/manifest.hpp>
#include <ams/oracle.hpp>
#include <ams/solver.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

namespace ams::cli {

namespace {

std::vector<std::string> splitOn(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::optional<Semantics> semanticsFlag(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto s = parseSemantics(text);
    if (!s) throw Error("unknown semantics '" + text + "'");
    return s;
}

ModularSystem loadSystem(const std::string& input, const std::string& semantics) {
    std::filesystem::path path(input);
    if (auto logic = logicForExtension(path)) {
        auto s = semanticsFlag(semantics).value_or(defaultSemantics(*logic));
        if (!validFor(*logic, s)) throw Error("semantics " + semantics + " is not valid for " + std::string(toString(*logic)));
        ModularSystem a;
        a.add(path.stem().string(), loadModule(path, *logic, s));
        return a;
    }
    if (!semantics.empty()) throw Error("--semantics applies to .cnf and .lp inputs only");
    return buildSystem(loadManifest(path));
}

std::vector<std::vector<RuleFamily>> parsePriority(const std::string& text) {
    std::vector<std::vector<RuleFamily>> tiers;
    for (const auto& tier : splitOn(text, '>')) {
        std::vector<RuleFamily> families;
        for (const auto& name : splitOn(tier, ',')) {
            if (name == "conflict") {
                families.push_back(RuleFamily::Conflict);
            } else if (name == "propagate") {
                families.push_back(RuleFamily::Propagate);
            } else if (name == "decide") {
                families.push_back(RuleFamily::Decide);
            } else {
                throw Error("unknown rule family '" + name + "' in --priority");
            }
        }
        tiers.push_back(std::move(families));
    }
    return tiers;
}

struct SolveFlags {
    std::string input;
    std::string semantics;
    std::string learn = "off";
    std::string decideOrder;
    std::string polarity;
    std::string priority;
    bool trace = false;
    bool dumpLearned = false;
    std::size_t cap = kDefaultEnumerationCap;
};

int cmdSolve(const SolveFlags& f, std::ostream& out) {
    auto a = loadSystem(f.input, f.semantics);
    Strategy strategy;
    strategy.decisionOrder = splitOn(f.decideOrder, ',');
    for (const auto& lit : splitOn(f.polarity, ',')) {
        bool negative = lit.front() == '-';
        auto name = lit.substr(lit.front() == '-' || lit.front() == '+' ? 1 : 0);
        strategy.polarity[name] = !negative;
    }
    if (!f.priority.empty()) strategy.priority = parsePriority(f.priority);

    SolveResult result;
    std::vector<EdgeStore> stores;
    if (f.learn == "off") {
        result = solve(a, strategy);
    } else {
        LearningPolicy policy;
        policy.mode = f.learn == "local" ? LearningPolicy::Mode::Local : LearningPolicy::Mode::Global;
        policy.cap = f.cap;
        auto r = solveWithLearning(a, strategy, policy);
        result = std::move(r.result);
        stores = std::move(r.stores);
    }
    if (f.trace) {
        out << renderTrace(result, a);
    } else {
        out << renderOutcome(result) << '\n';
    }
    if (f.dumpLearned && !stores.empty()) out << renderLearned(a, stores);
    return result.outcome == Outcome::Model ? kExitModel : kExitUnsat;
}

int cmdVerify(const std::string& target, const std::string& input, const std::string& semantics, std::uint64_t seed,
              std::size_t count, std::ostream& out) {
    Report r;
    if (target == "figures") {
        r = verifyFigures();
    } else if (target == "props") {
        r = runPropertySuite(seed, count);
    } else if (target == "theorem1" || target == "theorem2") {
        if (input.empty()) throw Error(target + " needs an input");
        auto a = loadSystem(input, semantics);
        if (target == "theorem1" && a.size() != 1) throw Error("theorem1 needs a single module");
        r = target == "theorem1" ? checkTheorem1(a[0].module) : checkTheorem2(a);
    } else {
        throw Error("unknown verify target '" + target + "'");
    }
    out << r.render();
    return r.passed() ? 0 : kExitError;
}

int cmdExport(const std::string& input, const std::string& kind, const std::string& semantics, std::size_t cap, std::ostream& out) {
    auto a = loadSystem(input, semantics);
    if (kind == "module") {
        if (a.size() != 1) throw Error("module export needs a single module");
        out << toDot(a[0].module, "module");
    } else {
        out << toDot(enumerateTransitionGraph(a, cap), "transitions");
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Abstract modular solving"};
    app.require_subcommand(1);

    SolveFlags solveFlags;
    auto* solveCmd = app.add_subcommand("solve", "Find a model of a module or manifest");
    solveCmd->add_option("input", solveFlags.input, "Manifest, .cnf or .lp file")->required();
    solveCmd->add_flag("--trace", solveFlags.trace, "Print every transition");
    solveCmd->add_option("--learn", solveFlags.learn, "off, local or global")->check(CLI::IsMember({"off", "local", "global"}));
    solveCmd->add_option("--decide-order", solveFlags.decideOrder, "Atoms to decide first, comma separated");
    solveCmd->add_option("--polarity", solveFlags.polarity, "Decision polarity per atom, e.g. -a,b");
    solveCmd->add_option("--priority", solveFlags.priority, "Rule tiers, e.g. conflict>propagate>decide");
    solveCmd->add_option("--semantics", solveFlags.semantics, "unitprop, entail, as, sm or fc");
    solveCmd->add_flag("--dump-learned", solveFlags.dumpLearned, "Print learned edges");
    solveCmd->add_option("--cap", solveFlags.cap, "Enumeration cap for learning");

    std::string target, verifyInput, verifySemantics;
    std::uint64_t seed = 7;
    std::size_t count = 50;
    auto* verifyCmd = app.add_subcommand("verify", "Run oracle checks");
    verifyCmd->add_option("target", target, "figures, theorem1, theorem2 or props")->required();
    verifyCmd->add_option("input", verifyInput, "Input for theorem checks");
    verifyCmd->add_option("--semantics", verifySemantics, "unitprop, entail, as, sm or fc");
    verifyCmd->add_option("--seed", seed, "Seed for props");
    verifyCmd->add_option("--count", count, "Cases for props");

    std::string exportInput, kind = "module", exportSemantics;
    std::size_t graphCap = kDefaultGraphCap;
    auto* exportCmd = app.add_subcommand("export", "Write a DOT graph");
    exportCmd->add_option("input", exportInput, "Manifest, .cnf or .lp file")->required();
    exportCmd->add_option("--kind", kind, "module or transition")->check(CLI::IsMember({"module", "transition"}));
    exportCmd->add_option("--semantics", exportSemantics, "unitprop, entail, as, sm or fc");
    exportCmd->add_option("--cap", graphCap, "Atom cap for transition graphs");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (*solveCmd) return cmdSolve(solveFlags, out);
        if (*verifyCmd) return cmdVerify(target, verifyInput, verifySemantics, seed, count, out);
        return cmdExport(exportInput, kind, exportSemantics, graphCap, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitError;
}

} // namespace ams::cli
