#include <ams/logics.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

namespace ams {

Clause::Clause(std::vector<Literal> lits) : literals(std::move(lits)) {
    std::sort(literals.begin(), literals.end());
    literals.erase(std::unique(literals.begin(), literals.end()), literals.end());
}

// --- DIMACS ---------------------------------------------------------------------------

namespace {

struct Token {
    std::string_view text;
    std::size_t line;
    std::size_t column;
};

std::vector<Token> splitWords(std::string_view line, std::size_t lineNo) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) out.push_back({line.substr(start, i - start), lineNo, start + 1});
    }
    return out;
}

std::vector<std::string_view> splitLines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

std::optional<long long> toInt(std::string_view s) {
    long long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
    return v;
}

} // namespace

CnfTheory parseDimacs(std::string_view text) {
    auto lines = splitLines(text);
    std::optional<std::size_t> vars;
    std::map<std::size_t, std::string> renames;
    std::vector<Clause> clauses;
    std::vector<Literal> current;
    bool open = false;
    std::size_t lastLine = 1;
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        const std::size_t lineNo = ln + 1;
        auto words = splitWords(lines[ln], lineNo);
        if (words.empty()) continue;
        if (words[0].text == "c") {
            if (words.size() == 4 && words[1].text == "var") {
                auto idx = toInt(words[2].text);
                if (!idx || *idx < 1) throw ParseError(lineNo, words[2].column, "bad variable index in name comment");
                if (!Vocabulary::isValidAtomName(words[3].text)) {
                    throw ParseError(lineNo, words[3].column, "invalid atom name '" + std::string(words[3].text) + "'");
                }
                renames[static_cast<std::size_t>(*idx)] = std::string(words[3].text);
            }
            continue;
        }
        if (words[0].text == "%") break; // SATLIB trailer
        if (words[0].text == "p") {
            if (vars) throw ParseError(lineNo, 1, "duplicate header");
            if (words.size() != 4 || words[1].text != "cnf") throw ParseError(lineNo, 1, "malformed header, expected 'p cnf <vars> <clauses>'");
            auto v = toInt(words[2].text);
            auto c = toInt(words[3].text);
            if (!v || !c || *v < 0 || *c < 0) throw ParseError(lineNo, 1, "malformed header, expected 'p cnf <vars> <clauses>'");
            vars = static_cast<std::size_t>(*v);
            continue;
        }
        if (!vars) throw ParseError(lineNo, words[0].column, "clause before 'p cnf' header");
        for (const auto& w : words) {
            auto v = toInt(w.text);
            if (!v) throw ParseError(lineNo, w.column, "expected integer literal, got '" + std::string(w.text) + "'");
            if (*v == 0) {
                clauses.emplace_back(std::move(current));
                current.clear();
                open = false;
                continue;
            }
            auto idx = static_cast<std::size_t>(*v < 0 ? -*v : *v);
            if (idx > *vars) throw ParseError(lineNo, w.column, "literal " + std::to_string(*v) + " out of range 1.." + std::to_string(*vars));
            current.emplace_back(static_cast<Var>(idx - 1), *v < 0);
            open = true;
        }
        lastLine = lineNo;
    }
    if (!vars) throw ParseError(1, 1, "missing 'p cnf' header");
    if (open) throw ParseError(lastLine, 1, "missing terminating 0 in last clause");
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= *vars; ++i) {
        auto it = renames.find(i);
        names.push_back(it != renames.end() ? it->second : "v" + std::to_string(i));
    }
    for (const auto& [idx, name] : renames) {
        if (idx > *vars) throw ParseError(1, 1, "name comment for variable " + std::to_string(idx) + " out of range");
    }
    Vocabulary vocab;
    try {
        vocab = Vocabulary(std::move(names));
    } catch (const Error& e) {
        throw ParseError(1, 1, e.what());
    }
    return CnfTheory{std::move(vocab), std::move(clauses)};
}

std::string renderDimacs(const CnfTheory& theory) {
    std::ostringstream os;
    os << "p cnf " << theory.vocabulary.size() << ' ' << theory.clauses.size() << '\n';
    for (Var v = 0; v < theory.vocabulary.size(); ++v) {
        if (theory.vocabulary.name(v) != "v" + std::to_string(v + 1)) {
            os << "c var " << v + 1 << ' ' << theory.vocabulary.name(v) << '\n';
        }
    }
    for (const auto& c : theory.clauses) {
        for (Literal l : c.literals) {
            os << (l.isNegative() ? "-" : "") << l.atom() + 1 << ' ';
        }
        os << "0\n";
    }
    return os.str();
}

// --- ASP text ---------------------------------------------------------------------------

namespace {

class ProgramParser {
public:
    explicit ProgramParser(std::string_view text) : text_(text) {}

    Program parse() {
        skipSpace();
        while (!atEnd()) {
            parseRule();
            skipSpace();
        }
        Program p{Vocabulary(names_), std::move(rules_)};
        return p;
    }

private:
    bool atEnd() const { return pos_ >= text_.size(); }
    char peek() const { return atEnd() ? '\0' : text_[pos_]; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skipSpace() {
        while (!atEnd()) {
            char c = peek();
            if (c == '%') {
                while (!atEnd() && peek() != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col_, msg); }

    void expect(char c, const char* what) {
        skipSpace();
        if (peek() != c) {
            if (atEnd()) fail(std::string("unexpected end of input, expected ") + what);
            fail(std::string("expected ") + what + ", got '" + peek() + "'");
        }
        advance();
    }

    std::string identifier() {
        skipSpace();
        if (atEnd()) fail("unexpected end of input, expected atom");
        char c = peek();
        if (!(c >= 'a' && c <= 'z')) {
            if (std::isupper(static_cast<unsigned char>(c))) fail("variables are not supported");
            fail(std::string("unexpected character '") + c + "'");
        }
        std::size_t start = pos_;
        while (!atEnd() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) advance();
        return std::string(text_.substr(start, pos_ - start));
    }

    Var atom(const std::string& name) {
        if (name == "not") fail("'not' cannot be used as an atom");
        auto it = index_.find(name);
        if (it != index_.end()) return it->second;
        auto v = static_cast<Var>(names_.size());
        names_.push_back(name);
        index_.emplace(name, v);
        return v;
    }

    void parseRule() {
        Rule r;
        skipSpace();
        if (peek() == '{') {
            advance();
            r.kind = RuleKind::Choice;
            r.head = atom(identifier());
            expect('}', "'}'");
        } else {
            r.head = atom(identifier());
        }
        skipSpace();
        if (peek() == ':') {
            advance();
            if (peek() != '-') fail("expected ':-'");
            advance();
            do {
                r.body.push_back(bodyLiteral());
                skipSpace();
                if (peek() != ',') break;
                advance();
            } while (true);
        }
        expect('.', "'.'");
        std::vector<BodyLiteral> unique;
        for (const auto& b : r.body) {
            if (std::find(unique.begin(), unique.end(), b) == unique.end()) unique.push_back(b);
        }
        r.body = std::move(unique);
        rules_.push_back(std::move(r));
    }

    BodyLiteral bodyLiteral() {
        auto name = identifier();
        if (name == "not") {
            return {atom(identifier()), BodyForm::Negated};
        }
        return {atom(name), BodyForm::Positive};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
    std::vector<std::string> names_;
    std::map<std::string, Var> index_;
    std::vector<Rule> rules_;
};

} // namespace

Program parseProgram(std::string_view text) { return ProgramParser(text).parse(); }

std::string renderProgram(const Program& program) {
    std::ostringstream os;
    const auto& v = program.vocabulary;
    for (const auto& r : program.rules) {
        if (r.kind == RuleKind::Choice) {
            os << '{' << v.name(r.head) << '}';
        } else {
            os << v.name(r.head);
        }
        for (std::size_t i = 0; i < r.body.size(); ++i) {
            os << (i == 0 ? " :- " : ", ");
            const auto& b = r.body[i];
            if (b.form != BodyForm::Positive) os << "not ";
            os << v.name(b.atom);
        }
        os << ".\n";
    }
    return os.str();
}

} // namespace ams
