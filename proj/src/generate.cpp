#include <ams/generate.hpp>

#include <algorithm>
#include <sstream>

namespace ams {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

} // namespace

Vocabulary letters(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i));
    }
    return Vocabulary(std::move(names));
}

CnfTheory randomCnf(Rng& rng, const Vocabulary& v, const CnfShape& shape) {
    CnfTheory t{v, {}};
    const auto clauses = uniform(rng, 0, shape.maxClauses);
    for (std::size_t c = 0; c < clauses; ++c) {
        std::vector<Literal> lits;
        if (!chance(rng, shape.emptyClauseRate) && !v.empty()) {
            const auto len = uniform(rng, 1, shape.maxClauseLength);
            for (std::size_t k = 0; k < len; ++k) {
                lits.emplace_back(static_cast<Var>(uniform(rng, 0, v.size() - 1)), chance(rng, 0.5));
            }
        }
        t.clauses.emplace_back(std::move(lits));
    }
    return t;
}

CnfTheory randomCnf(Rng& rng, const CnfShape& shape) { return randomCnf(rng, letters(uniform(rng, 1, shape.maxAtoms)), shape); }

Program randomProgram(Rng& rng, const Vocabulary& v, const ProgramShape& shape) {
    Program p{v, {}};
    if (v.empty()) return p;
    const auto rules = uniform(rng, 0, shape.maxRules);
    for (std::size_t r = 0; r < rules; ++r) {
        Rule rule;
        rule.head = static_cast<Var>(uniform(rng, 0, v.size() - 1));
        rule.kind = chance(rng, shape.choiceRate) ? RuleKind::Choice : RuleKind::Normal;
        const auto len = uniform(rng, 0, shape.maxBody);
        for (std::size_t k = 0; k < len; ++k) {
            BodyLiteral b{static_cast<Var>(uniform(rng, 0, v.size() - 1)), chance(rng, 0.5) ? BodyForm::Negated : BodyForm::Positive};
            if (std::find(rule.body.begin(), rule.body.end(), b) == rule.body.end()) rule.body.push_back(b);
        }
        p.rules.push_back(std::move(rule));
    }
    return p;
}

Program randomProgram(Rng& rng, const ProgramShape& shape) {
    return randomProgram(rng, letters(uniform(rng, 1, shape.maxAtoms)), shape);
}

RandomSystem randomSystem(Rng& rng, std::size_t maxAtoms, std::size_t maxModules) {
    RandomSystem out;
    const auto all = letters(maxAtoms);
    std::ostringstream desc;
    const auto modules = uniform(rng, 1, maxModules);
    for (std::size_t m = 0; m < modules; ++m) {
        std::vector<std::string> names;
        while (names.empty()) {
            for (const auto& n : all.names()) {
                if (chance(rng, 0.6)) names.push_back(n);
            }
        }
        Vocabulary v(names);
        const auto name = "S" + std::to_string(m + 1);
        std::string atoms;
        for (const auto& n : names) atoms += (atoms.empty() ? "" : ",") + n;
        switch (uniform(rng, 0, 3)) {
        case 0: {
            auto f = randomCnf(rng, v, CnfShape{maxAtoms, 4, 3, 0.03});
            out.system.add(name, unitPropagateModule(f));
            desc << name << " unitprop " << atoms << '\n' << renderDimacs(f);
            break;
        }
        case 1: {
            auto f = randomCnf(rng, v, CnfShape{maxAtoms, 4, 3, 0.03});
            out.system.add(name, entailmentModule(f));
            desc << name << " entail " << atoms << '\n' << renderDimacs(f);
            break;
        }
        case 2: {
            auto p = randomProgram(rng, v, ProgramShape{maxAtoms, 4, 2, 0.2});
            out.system.add(name, asModule(p));
            desc << name << " as " << atoms << '\n' << renderProgram(p);
            break;
        }
        default: {
            auto p = randomProgram(rng, v, ProgramShape{maxAtoms, 4, 2, 0.2});
            out.system.add(name, smModule(p));
            desc << name << " sm " << atoms << '\n' << renderProgram(p);
            break;
        }
        }
    }
    out.description = desc.str();
    return out;
}

} // namespace ams
