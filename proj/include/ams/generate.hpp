#pragma once

// Seeded random theories, programs and systems for property tests.

#include <ams/logics.hpp>
#include <ams/module.hpp>

#include <random>
#include <string>

namespace ams {

using Rng = std::mt19937_64;

struct CnfShape {
    std::size_t maxAtoms = 4;
    std::size_t maxClauses = 8;
    std::size_t maxClauseLength = 3;
    double emptyClauseRate = 0.03;
};

struct ProgramShape {
    std::size_t maxAtoms = 4;
    std::size_t maxRules = 6;
    std::size_t maxBody = 2;
    double choiceRate = 0.2;
};

// Atoms are drawn from a, b, c, ...; n atoms means the first n.
Vocabulary letters(std::size_t n);

CnfTheory randomCnf(Rng& rng, const CnfShape& shape = {});
CnfTheory randomCnf(Rng& rng, const Vocabulary& v, const CnfShape& shape = {});
Program randomProgram(Rng& rng, const ProgramShape& shape = {});
Program randomProgram(Rng& rng, const Vocabulary& v, const ProgramShape& shape = {});

struct RandomSystem {
    ModularSystem system;
    // One line per member: `<name> <semantics> <atoms>` followed by its text.
    std::string description;
};

// One or two sound members (unitprop, entail, as or sm) over random subsets
// of the first `maxAtoms` letters.
RandomSystem randomSystem(Rng& rng, std::size_t maxAtoms = 3, std::size_t maxModules = 2);

} // namespace ams
