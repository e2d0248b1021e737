#pragma once

// Manifests list the members of a modular system, one per line:
//   module <name> <cnf|asp> <path> semantics=<value>
// `#` starts a comment; paths are relative to the manifest's directory.

#include <ams/logics.hpp>
#include <ams/module.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ams {

enum class Logic { Cnf, Asp };
enum class Semantics { UnitProp, Entail, As, Sm, Fc };

std::string_view toString(Logic l);
std::string_view toString(Semantics s);
std::optional<Semantics> parseSemantics(std::string_view text);
bool validFor(Logic l, Semantics s);
Semantics defaultSemantics(Logic l);

// An error tied to a position in some input file.
class InputError : public Error {
public:
    InputError(std::string file, std::size_t line, const std::string& msg)
        : Error(file + ":" + std::to_string(line) + ": " + msg), file_(std::move(file)), line_(line) {}
    const std::string& file() const noexcept { return file_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::string file_;
    std::size_t line_;
};

struct ManifestEntry {
    std::string name;
    Logic logic = Logic::Cnf;
    std::filesystem::path path;
    Semantics semantics = Semantics::UnitProp;
    std::size_t line = 0;
};

struct Manifest {
    std::vector<ManifestEntry> entries;
};

// `source` names the manifest in error messages.
Manifest parseManifest(std::string_view text, const std::filesystem::path& baseDir, const std::string& source = "manifest");
Manifest loadManifest(const std::filesystem::path& path);

std::string readFile(const std::filesystem::path& path);
// .cnf -> Cnf, .lp -> Asp.
std::optional<Logic> logicForExtension(const std::filesystem::path& path);

AbstractModule buildModule(const CnfTheory& f, Semantics s);
AbstractModule buildModule(const Program& p, Semantics s);
// Parses the file; parse errors become InputError naming it.
AbstractModule loadModule(const std::filesystem::path& path, Logic logic, Semantics s);
ModularSystem buildSystem(const Manifest& m);

} // namespace ams
