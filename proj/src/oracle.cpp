#include <ams/generate.hpp>
#include <ams/oracle.hpp>

#include <algorithm>
#include <sstream>

namespace ams {

namespace {

bool clauseHolds(const Clause& c, std::uint64_t mask) {
    return std::any_of(c.literals.begin(), c.literals.end(), [&](Literal l) {
        return (((mask >> l.atom()) & 1u) != 0) == l.isPositive();
    });
}

bool theoryHolds(const CnfTheory& f, std::uint64_t mask) {
    return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const Clause& c) { return clauseHolds(c, mask); });
}

Interpretation fromMask(std::uint64_t mask, const Vocabulary& v) {
    std::vector<Var> atoms;
    for (Var a = 0; a < v.size(); ++a) {
        if ((mask >> a) & 1u) atoms.push_back(a);
    }
    return Interpretation(v, std::move(atoms));
}

std::vector<Interpretation> toInterpretations(std::vector<std::uint64_t> masks, const Vocabulary& v) {
    std::vector<Interpretation> out;
    for (auto m : masks) out.push_back(fromMask(m, v));
    std::sort(out.begin(), out.end());
    return out;
}

struct ReductRule {
    Var head;
    std::uint64_t positive;
};

std::vector<ReductRule> reduct(const Program& p, std::uint64_t x) {
    std::vector<ReductRule> out;
    for (const auto& r : p.rules) {
        auto body = r.body;
        if (r.kind == RuleKind::Choice) body.push_back({r.head, BodyForm::DoubleNegated});
        bool dropped = false;
        std::uint64_t positive = 0;
        for (const auto& b : body) {
            const bool inX = ((x >> b.atom) & 1u) != 0;
            if (b.form == BodyForm::Positive) positive |= std::uint64_t{1} << b.atom;
            if (b.form == BodyForm::Negated && inX) dropped = true;
            if (b.form == BodyForm::DoubleNegated && !inX) dropped = true;
        }
        if (!dropped) out.push_back({r.head, positive});
    }
    return out;
}

bool closedUnder(const std::vector<ReductRule>& rules, std::uint64_t y) {
    return std::all_of(rules.begin(), rules.end(), [&](const ReductRule& r) {
        return (r.positive & ~y) != 0 || ((y >> r.head) & 1u) != 0;
    });
}

void checkSubsetCap(std::size_t n) {
    if (n > kOracleSubsetCap) throw CapExceeded(n, kOracleSubsetCap);
}

} // namespace

std::vector<Interpretation> enumerateCnfModelsSerial(const CnfTheory& f) {
    const auto n = f.vocabulary.size();
    if (n > kOracleCnfCap) throw CapExceeded(n, kOracleCnfCap);
    std::vector<std::uint64_t> masks;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (theoryHolds(f, mask)) masks.push_back(mask);
    }
    return toInterpretations(std::move(masks), f.vocabulary);
}

std::vector<Interpretation> enumerateCnfModelsParallel(const CnfTheory& f) {
    const auto n = f.vocabulary.size();
    if (n > kOracleCnfCap) throw CapExceeded(n, kOracleCnfCap);
    const auto total = static_cast<std::int64_t>(std::uint64_t{1} << n);
    std::vector<std::uint64_t> masks;
#pragma omp parallel
    {
        std::vector<std::uint64_t> local;
#pragma omp for schedule(static) nowait
        for (std::int64_t mask = 0; mask < total; ++mask) {
            if (theoryHolds(f, static_cast<std::uint64_t>(mask))) local.push_back(static_cast<std::uint64_t>(mask));
        }
#pragma omp critical(ams_cnf_models)
        masks.insert(masks.end(), local.begin(), local.end());
    }
    std::sort(masks.begin(), masks.end());
    return toInterpretations(std::move(masks), f.vocabulary);
}

std::vector<Interpretation> enumerateCnfModels(const CnfTheory& f, Exec exec) {
    return exec == Exec::Serial ? enumerateCnfModelsSerial(f) : enumerateCnfModelsParallel(f);
}

bool reductCheck(const Program& p, const std::vector<Var>& x) {
    checkSubsetCap(p.vocabulary.size());
    std::uint64_t mask = 0;
    for (Var a : x) {
        if (a >= p.vocabulary.size()) throw Error("atom outside the program vocabulary");
        mask |= std::uint64_t{1} << a;
    }
    auto rules = reduct(p, mask);
    if (!closedUnder(rules, mask)) return false;
    // No proper subset of X may be closed under the reduct.
    for (std::uint64_t y = (mask - 1) & mask;; y = (y - 1) & mask) {
        if (y != mask && closedUnder(rules, y)) return false;
        if (y == 0) break;
    }
    return true;
}

std::vector<Interpretation> bruteForceAnswerSets(const Program& p) {
    const auto n = p.vocabulary.size();
    checkSubsetCap(n);
    std::vector<std::uint64_t> masks;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<Var> x;
        for (Var a = 0; a < n; ++a) {
            if ((mask >> a) & 1u) x.push_back(a);
        }
        if (reductCheck(p, x)) masks.push_back(mask);
    }
    return toInterpretations(std::move(masks), p.vocabulary);
}

std::vector<Var> bruteForceUnfounded(const LiteralSet& m, const Program& p) {
    const auto n = p.vocabulary.size();
    checkSubsetCap(n);
    struct Flat {
        Var head;
        bool falseInM;
        std::uint64_t positive;
    };
    std::vector<Flat> rules;
    for (const auto& r : p.rules) {
        auto body = r.body;
        if (r.kind == RuleKind::Choice) body.push_back({r.head, BodyForm::DoubleNegated});
        Flat f{r.head, false, 0};
        for (const auto& b : body) {
            // b and not not b hold when b is true; not b holds when b is false.
            const bool wantTrue = b.form != BodyForm::Negated;
            if (m.contains(Literal(b.atom, wantTrue))) f.falseInM = true;
            if (b.form == BodyForm::Positive) f.positive |= std::uint64_t{1} << b.atom;
        }
        rules.push_back(f);
    }
    const auto total = static_cast<std::int64_t>(std::uint64_t{1} << n);
    std::uint64_t acc = 0;
#pragma omp parallel for reduction(| : acc) schedule(static)
    for (std::int64_t u = 0; u < total; ++u) {
        const auto set = static_cast<std::uint64_t>(u);
        bool unfounded = std::all_of(rules.begin(), rules.end(), [&](const Flat& r) {
            return ((set >> r.head) & 1u) == 0 || r.falseInM || (r.positive & set) != 0;
        });
        if (unfounded) acc |= set;
    }
    std::vector<Var> out;
    for (Var a = 0; a < n; ++a) {
        if ((acc >> a) & 1u) out.push_back(a);
    }
    return out;
}

bool Report::passed() const {
    return std::all_of(lines.begin(), lines.end(), [](const ReportLine& l) { return l.pass; });
}

void Report::add(bool pass, std::string clause, std::string detail) {
    lines.push_back({pass, std::move(clause), std::move(detail)});
}

void Report::append(const Report& other) { lines.insert(lines.end(), other.lines.begin(), other.lines.end()); }

std::string Report::render() const {
    std::ostringstream os;
    for (const auto& l : lines) {
        os << (l.pass ? "PASS " : "FAIL ") << l.clause;
        if (!l.detail.empty()) os << " [" << l.detail << "]";
        os << '\n';
    }
    return os.str();
}

Report checkTheorem2(const ModularSystem& a, std::size_t cap) {
    auto g = enumerateTransitionGraph(a, cap);
    auto models = systemModels(a);
    Report r;
    r.add(g.isAcyclic(), "(a) acyclic");

    std::string bad;
    for (auto t : g.terminalStates()) {
        auto m = Interpretation::fromPositive(g.states[t].trail().literals(), a.vocabulary());
        if (std::find(models.begin(), models.end(), m) == models.end()) {
            bad = render(g.states[t], a.vocabulary());
            break;
        }
    }
    r.add(bad.empty(), "(b) terminal states are models", bad);

    const bool reachable = g.reachableFrom(TransitionGraph::kEmpty)[TransitionGraph::kBottom];
    std::string detail;
    if (reachable != models.empty()) detail = reachable ? "bottom reachable but models exist" : "bottom unreachable without models";
    r.add(detail.empty(), "(c) bottom reachable iff no models", detail);
    return r;
}

Report checkTheorem1(const AbstractModule& s, std::size_t cap) {
    ModularSystem a;
    a.add("S", s);
    return checkTheorem2(a, cap);
}

namespace {

struct Tally {
    explicit Tally(std::string n) : name(std::move(n)) {}
    std::string name;
    std::size_t cases = 0;
    std::size_t mismatches = 0;
    std::string first;

    void record(bool ok, const std::string& witness) {
        ++cases;
        if (!ok) {
            if (mismatches == 0) first = witness;
            ++mismatches;
        }
    }

    void report(Report& r) const {
        std::string detail = std::to_string(cases) + " cases";
        if (mismatches) detail += ", " + std::to_string(mismatches) + " mismatches, first: " + first;
        r.add(mismatches == 0, name, detail);
    }
};

std::vector<Interpretation> sorted(std::vector<Interpretation> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::string oneLine(std::string text) {
    std::replace(text.begin(), text.end(), '\n', ' ');
    return text;
}

} // namespace

Report runPropertySuite(std::uint64_t seed, std::size_t count) {
    Rng rng(seed);
    Tally cnf("unitprop models equal cnf models");
    Tally entail("entailment module is saturated");
    Tally as("as models equal answer sets");
    Tally sm("sm models equal answer sets");
    Tally reduct("reduct answer sets agree");
    Tally unfounded("greatest unfounded set agrees");
    for (std::size_t i = 0; i < count; ++i) {
        auto f = randomCnf(rng);
        auto oracle = enumerateCnfModels(f);
        cnf.record(sorted(models(unitPropagateModule(f), f.vocabulary)) == oracle, oneLine(renderDimacs(f)));
        entail.record(isSaturated(entailmentModule(f)), oneLine(renderDimacs(f)));

        auto p = randomProgram(rng);
        auto sets = bruteForceAnswerSets(p);
        as.record(sorted(models(asModule(p), p.vocabulary)) == sets, oneLine(renderProgram(p)));
        sm.record(sorted(models(smModule(p), p.vocabulary)) == sets, oneLine(renderProgram(p)));
        reduct.record(sorted(answerSets(p)) == sets, oneLine(renderProgram(p)));

        auto m = literalSetAt(std::uniform_int_distribution<std::uint64_t>(0, pow3(p.vocabulary.size()) - 1)(rng), p.vocabulary.size());
        unfounded.record(greatestUnfounded(m, p) == bruteForceUnfounded(m, p), oneLine(renderProgram(p)) + " at " + render(m, p.vocabulary));
    }
    Report r;
    for (const auto* t : {&cnf, &entail, &as, &sm, &reduct, &unfounded}) t->report(r);
    return r;
}

} // namespace ams
