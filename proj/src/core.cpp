#include <ams/core.hpp>

#include <algorithm>
#include <cctype>

namespace ams {

Vocabulary::Vocabulary() : Vocabulary(std::vector<std::string>{}) {}

Vocabulary::Vocabulary(std::initializer_list<std::string_view> names)
    : Vocabulary(std::vector<std::string>(names.begin(), names.end())) {}

Vocabulary::Vocabulary(std::vector<std::string> names) {
    auto data = std::make_shared<Data>();
    data->index.reserve(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!isValidAtomName(names[i])) {
            throw Error("invalid atom name '" + names[i] + "'");
        }
        if (!data->index.emplace(names[i], static_cast<Var>(i)).second) {
            throw Error("duplicate atom '" + names[i] + "' in vocabulary");
        }
    }
    data->names = std::move(names);
    data_ = std::move(data);
}

bool Vocabulary::isValidAtomName(std::string_view name) {
    if (name.empty() || !(name[0] >= 'a' && name[0] <= 'z')) {
        return false;
    }
    return std::all_of(name.begin() + 1, name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

std::optional<Var> Vocabulary::find(std::string_view name) const {
    auto it = data_->index.find(std::string(name));
    if (it == data_->index.end()) {
        return std::nullopt;
    }
    return it->second;
}

Vocabulary Vocabulary::unionWith(const Vocabulary& other) const {
    std::vector<std::string> names = data_->names;
    for (const auto& n : other.names()) {
        if (!contains(n)) {
            names.push_back(n);
        }
    }
    return Vocabulary(std::move(names));
}

bool Vocabulary::subsetOf(const Vocabulary& other) const {
    return std::all_of(names().begin(), names().end(), [&](const std::string& n) { return other.contains(n); });
}

bool Vocabulary::sameAtoms(const Vocabulary& other) const {
    return size() == other.size() && subsetOf(other);
}

std::string Vocabulary::render(Literal l) const {
    return l.isNegative() ? "-" + name(l.atom()) : name(l.atom());
}

std::optional<Literal> Vocabulary::parseLiteral(std::string_view text) const {
    bool neg = false;
    if (!text.empty() && text.front() == '-') {
        neg = true;
        text.remove_prefix(1);
    }
    auto atom = find(text);
    if (!atom) {
        return std::nullopt;
    }
    return Literal(*atom, neg);
}

LiteralSet::LiteralSet(std::initializer_list<Literal> lits) : LiteralSet(std::span<const Literal>(lits.begin(), lits.size())) {}

LiteralSet::LiteralSet(std::span<const Literal> lits) {
    auto made = tryMake(std::vector<Literal>(lits.begin(), lits.end()));
    if (!made) {
        throw Error("inconsistent literal set");
    }
    *this = std::move(*made);
}

std::optional<LiteralSet> LiteralSet::tryMake(std::vector<Literal> lits) {
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    for (std::size_t i = 1; i < lits.size(); ++i) {
        if (lits[i].atom() == lits[i - 1].atom()) {
            return std::nullopt;
        }
    }
    LiteralSet s;
    s.lits_ = std::move(lits);
    return s;
}

bool LiteralSet::contains(Literal l) const { return std::binary_search(lits_.begin(), lits_.end(), l); }

bool LiteralSet::assigns(Var atom) const {
    return contains(Literal::positive(atom)) || contains(Literal::negative(atom));
}

std::vector<Var> LiteralSet::positiveAtoms() const {
    std::vector<Var> out;
    for (Literal l : lits_) {
        if (l.isPositive()) out.push_back(l.atom());
    }
    return out;
}

std::vector<Var> LiteralSet::negativeAtoms() const {
    std::vector<Var> out;
    for (Literal l : lits_) {
        if (l.isNegative()) out.push_back(l.atom());
    }
    return out;
}

bool LiteralSet::subsetOf(const LiteralSet& other) const {
    return std::includes(other.lits_.begin(), other.lits_.end(), lits_.begin(), lits_.end());
}

LiteralSet LiteralSet::with(Literal l) const {
    LiteralSet s = *this;
    s.lits_.insert(std::upper_bound(s.lits_.begin(), s.lits_.end(), l), l);
    return s;
}

std::optional<LiteralSet> addLiteral(const LiteralSet& m, Literal l) {
    if (m.contains(l)) {
        return m;
    }
    if (m.contains(l.complement())) {
        return std::nullopt;
    }
    return m.with(l);
}

VarMap::VarMap(const Vocabulary& from, const Vocabulary& to) : target_(from.size(), kNone), targetSize_(to.size()) {
    for (Var v = 0; v < from.size(); ++v) {
        if (auto t = to.find(from.name(v))) {
            target_[v] = *t;
        }
    }
}

std::optional<Var> VarMap::map(Var atom) const {
    if (atom >= target_.size() || target_[atom] == kNone) {
        return std::nullopt;
    }
    return target_[atom];
}

std::optional<Literal> VarMap::map(Literal l) const {
    auto v = map(l.atom());
    if (!v) {
        return std::nullopt;
    }
    return Literal(*v, l.isNegative());
}

LiteralSet VarMap::map(const LiteralSet& m) const {
    std::vector<Literal> out;
    out.reserve(m.size());
    for (Literal l : m) {
        if (auto t = map(l)) {
            out.push_back(*t);
        }
    }
    // A renaming of a consistent set stays consistent.
    return *LiteralSet::tryMake(std::move(out));
}

LiteralSet restrict(const LiteralSet& m, const Vocabulary& from, const Vocabulary& sigma) {
    return VarMap(from, sigma).map(m);
}

LiteralSet restrictToPrefix(const LiteralSet& m, std::size_t prefix) {
    std::vector<Literal> out;
    for (Literal l : m) {
        if (l.atom() < prefix) out.push_back(l);
    }
    return *LiteralSet::tryMake(std::move(out));
}

bool isCompleteOver(const LiteralSet& m, const Vocabulary& from, const Vocabulary& sigma) {
    return restrict(m, from, sigma).size() == sigma.size();
}

Interpretation::Interpretation(Vocabulary over, std::vector<Var> trueAtoms) : over_(std::move(over)), true_(std::move(trueAtoms)) {
    std::sort(true_.begin(), true_.end());
    true_.erase(std::unique(true_.begin(), true_.end()), true_.end());
    if (!true_.empty() && true_.back() >= over_.size()) {
        throw Error("interpretation atom outside its vocabulary");
    }
}

Interpretation Interpretation::fromPositive(const LiteralSet& m, Vocabulary over) {
    return Interpretation(std::move(over), m.positiveAtoms());
}

bool Interpretation::isTrue(Var atom) const { return std::binary_search(true_.begin(), true_.end(), atom); }

LiteralSet Interpretation::asLiteralSet() const {
    std::vector<Literal> lits;
    lits.reserve(over_.size());
    for (Var v = 0; v < over_.size(); ++v) {
        lits.emplace_back(v, !isTrue(v));
    }
    return *LiteralSet::tryMake(std::move(lits));
}

std::vector<std::string> Interpretation::trueNames() const {
    std::vector<std::string> out;
    for (Var v : true_) out.push_back(over_.name(v));
    std::sort(out.begin(), out.end());
    return out;
}

bool satisfiesSet(const Interpretation& i, const LiteralSet& m) {
    return std::all_of(m.begin(), m.end(), [&](Literal l) { return i.isTrue(l.atom()) == l.isPositive(); });
}

std::string render(const LiteralSet& m, const Vocabulary& v) {
    if (m.empty()) {
        return "{}";
    }
    std::string out;
    for (Literal l : m) {
        if (!out.empty()) out += ' ';
        out += v.render(l);
    }
    return out;
}

LiteralSet parseLiteralSet(std::string_view text, const Vocabulary& v) {
    std::vector<Literal> lits;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        std::string_view tok = text.substr(start, pos - start);
        if (tok.empty() || tok == "{}") continue;
        auto l = v.parseLiteral(tok);
        if (!l) {
            throw ParseError(1, start + 1, "unknown literal '" + std::string(tok) + "'");
        }
        lits.push_back(*l);
    }
    auto s = LiteralSet::tryMake(std::move(lits));
    if (!s) {
        throw ParseError(1, 1, "inconsistent literal set '" + std::string(text) + "'");
    }
    return *s;
}

std::string render(const Interpretation& i) {
    std::string out;
    for (const auto& n : i.trueNames()) {
        if (!out.empty()) out += ' ';
        out += n;
    }
    return out;
}

std::uint64_t pow3(std::size_t n) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < n; ++i) r *= 3;
    return r;
}

LiteralSet literalSetAt(std::uint64_t index, std::size_t atoms) {
    std::vector<Literal> lits;
    for (Var v = 0; v < atoms; ++v) {
        auto digit = index % 3;
        index /= 3;
        if (digit == 1) lits.push_back(Literal::positive(v));
        if (digit == 2) lits.push_back(Literal::negative(v));
    }
    return *LiteralSet::tryMake(std::move(lits));
}

std::uint64_t literalSetIndex(const LiteralSet& m) {
    std::uint64_t idx = 0;
    for (Literal l : m) idx += pow3(l.atom()) * (l.isPositive() ? 1 : 2);
    return idx;
}

std::vector<LiteralSet> enumerateLiteralSets(std::size_t atoms) {
    std::vector<LiteralSet> out;
    const auto total = pow3(atoms);
    out.reserve(total);
    for (std::uint64_t i = 0; i < total; ++i) out.push_back(literalSetAt(i, atoms));
    return out;
}

} // namespace ams
