#pragma once

// Atoms, literals, consistent literal sets and interpretations.
//
// Atoms are interned per Vocabulary as dense ids in insertion order. A literal
// is encoded as 2*id + sign, so sorting by code orders by atom and puts the
// positive literal before the negative one. Every LiteralSet is relative to
// some Vocabulary; moving a set between vocabularies goes through VarMap.

#include <ams/error.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ams {

using Var = std::uint32_t;

inline constexpr std::size_t kDefaultEnumerationCap = 12;

class Literal {
public:
    constexpr Literal() = default;
    constexpr Literal(Var atom, bool negative) : code_(2 * atom + (negative ? 1u : 0u)) {}

    static constexpr Literal positive(Var atom) { return Literal(atom, false); }
    static constexpr Literal negative(Var atom) { return Literal(atom, true); }
    static constexpr Literal fromCode(std::uint32_t code) {
        Literal l;
        l.code_ = code;
        return l;
    }

    constexpr Var atom() const { return code_ >> 1; }
    constexpr bool isNegative() const { return (code_ & 1u) != 0; }
    constexpr bool isPositive() const { return (code_ & 1u) == 0; }
    constexpr std::uint32_t code() const { return code_; }
    constexpr Literal complement() const { return fromCode(code_ ^ 1u); }

    constexpr auto operator<=>(const Literal&) const = default;

private:
    std::uint32_t code_ = 0;
};

constexpr Literal complement(Literal l) { return l.complement(); }

// Ordered, duplicate-free set of atom names. Cheap to copy: the data is shared
// and immutable.
class Vocabulary {
public:
    Vocabulary();
    explicit Vocabulary(std::vector<std::string> names);
    Vocabulary(std::initializer_list<std::string_view> names);

    // `[a-z][A-Za-z0-9_]*`
    static bool isValidAtomName(std::string_view name);

    std::size_t size() const { return data_->names.size(); }
    bool empty() const { return size() == 0; }
    const std::string& name(Var atom) const { return data_->names.at(atom); }
    const std::vector<std::string>& names() const { return data_->names; }
    std::optional<Var> find(std::string_view name) const;
    bool contains(std::string_view name) const { return find(name).has_value(); }

    // Atoms of this vocabulary followed by the new atoms of `other`.
    Vocabulary unionWith(const Vocabulary& other) const;
    // True if every atom of this vocabulary occurs in `other`.
    bool subsetOf(const Vocabulary& other) const;
    // Same atoms, order ignored.
    bool sameAtoms(const Vocabulary& other) const;

    std::string render(Literal l) const;
    // Accepts `a` or `-a`.
    std::optional<Literal> parseLiteral(std::string_view text) const;

    friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
        return a.data_ == b.data_ || a.data_->names == b.data_->names;
    }

private:
    struct Data {
        std::vector<std::string> names;
        std::unordered_map<std::string, Var> index;
    };
    std::shared_ptr<const Data> data_;
};

// A consistent set of literals, stored sorted by code.
class LiteralSet {
public:
    LiteralSet() = default;
    // Throws Error if the literals contain a complementary pair.
    LiteralSet(std::initializer_list<Literal> lits);
    explicit LiteralSet(std::span<const Literal> lits);

    // nullopt if the literals are inconsistent.
    static std::optional<LiteralSet> tryMake(std::vector<Literal> lits);

    bool contains(Literal l) const;
    bool assigns(Var atom) const;
    // Neither l nor its complement is in the set.
    bool unassigned(Literal l) const { return !assigns(l.atom()); }
    bool empty() const { return lits_.empty(); }
    std::size_t size() const { return lits_.size(); }
    const std::vector<Literal>& literals() const { return lits_; }
    auto begin() const { return lits_.begin(); }
    auto end() const { return lits_.end(); }

    // Atoms occurring positively / negatively.
    std::vector<Var> positiveAtoms() const;
    std::vector<Var> negativeAtoms() const;

    bool subsetOf(const LiteralSet& other) const;
    // The set with `l` added; caller guarantees l is unassigned.
    LiteralSet with(Literal l) const;

    friend bool operator==(const LiteralSet&, const LiteralSet&) = default;
    friend auto operator<=>(const LiteralSet& a, const LiteralSet& b) { return a.lits_ <=> b.lits_; }

private:
    std::vector<Literal> lits_;
};

// M u {l}; nullopt signals the conflict case (complement of l already in M).
std::optional<LiteralSet> addLiteral(const LiteralSet& m, Literal l);

// Maps atoms of one vocabulary onto another by name.
class VarMap {
public:
    VarMap() = default;
    VarMap(const Vocabulary& from, const Vocabulary& to);

    std::optional<Var> map(Var atom) const;
    std::optional<Literal> map(Literal l) const;
    // Literals whose atom is not in the target vocabulary are dropped.
    LiteralSet map(const LiteralSet& m) const;
    std::size_t targetSize() const { return targetSize_; }

private:
    static constexpr Var kNone = ~Var{0};
    std::vector<Var> target_;
    std::size_t targetSize_ = 0;
};

// M|sigma: the literals of M (over `from`) whose atoms are in `sigma`, re-coded
// over `sigma`.
LiteralSet restrict(const LiteralSet& m, const Vocabulary& from, const Vocabulary& sigma);
// Restriction of M to the first `prefix` atoms of its own vocabulary.
LiteralSet restrictToPrefix(const LiteralSet& m, std::size_t prefix);

// M is complete over its own vocabulary of the given size.
inline bool isComplete(const LiteralSet& m, std::size_t vocabularySize) { return m.size() == vocabularySize; }
// Every atom of sigma is assigned by M|sigma.
bool isCompleteOver(const LiteralSet& m, const Vocabulary& from, const Vocabulary& sigma);

class Interpretation {
public:
    Interpretation() = default;
    Interpretation(Vocabulary over, std::vector<Var> trueAtoms);
    // The positive part of M as an interpretation over `over`.
    static Interpretation fromPositive(const LiteralSet& m, Vocabulary over);

    const Vocabulary& over() const { return over_; }
    const std::vector<Var>& trueAtoms() const { return true_; }
    bool isTrue(Var atom) const;
    // Complete literal set over `over`.
    LiteralSet asLiteralSet() const;
    // Sorted names of the true atoms.
    std::vector<std::string> trueNames() const;

    friend bool operator==(const Interpretation& a, const Interpretation& b) {
        return a.over_ == b.over_ && a.true_ == b.true_;
    }
    friend auto operator<=>(const Interpretation& a, const Interpretation& b) { return a.true_ <=> b.true_; }

private:
    Vocabulary over_;
    std::vector<Var> true_;
};

// I is consistent with M: M+ in I and M- disjoint from I. M is over I.over().
bool satisfiesSet(const Interpretation& i, const LiteralSet& m);

// Canonical rendering: literals in code order separated by spaces, `{}` when empty.
std::string render(const LiteralSet& m, const Vocabulary& v);
// Inverse of render. Throws ParseError on unknown atoms or inconsistency.
LiteralSet parseLiteralSet(std::string_view text, const Vocabulary& v);
// Sorted true atom names separated by spaces.
std::string render(const Interpretation& i);

// All 3^n consistent literal sets over n atoms, in base-3 counter order
// (digit 0 = absent, 1 = positive, 2 = negative; atom 0 least significant).
std::vector<LiteralSet> enumerateLiteralSets(std::size_t atoms);
// The index-th set of that enumeration.
LiteralSet literalSetAt(std::uint64_t index, std::size_t atoms);
// Position of M in that enumeration.
std::uint64_t literalSetIndex(const LiteralSet& m);
std::uint64_t pow3(std::size_t n);

} // namespace ams
