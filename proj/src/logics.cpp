#include <ams/logics.hpp>

#include <algorithm>
#include <memory>

namespace ams {

namespace {

bool literalTrue(const LiteralSet& m, Literal l) { return m.contains(l); }
bool literalFalse(const LiteralSet& m, Literal l) { return m.contains(l.complement()); }

std::size_t checkedAtoms(std::size_t n, std::size_t cap) {
    if (n > cap || n > 62) throw CapExceeded(n, std::min<std::size_t>(cap, 62));
    return n;
}

LiteralSet completeFromMask(std::uint64_t mask, std::size_t atoms) {
    std::vector<Literal> lits;
    lits.reserve(atoms);
    for (Var v = 0; v < atoms; ++v) lits.emplace_back(v, ((mask >> v) & 1u) == 0);
    return *LiteralSet::tryMake(std::move(lits));
}

void unitPropagateEdges(const std::vector<Clause>& clauses, const LiteralSet& m, std::vector<OutEdge>& out) {
    for (const auto& c : clauses) {
        std::optional<Literal> open;
        std::size_t unassigned = 0;
        bool satisfied = false;
        for (Literal l : c.literals) {
            if (literalTrue(m, l)) {
                satisfied = true;
                break;
            }
            if (!literalFalse(m, l)) {
                ++unassigned;
                open = l;
            }
        }
        if (satisfied) continue;
        if (unassigned == 0) {
            out.push_back({EdgeTarget::bottom(), Reason::UnitPropagate});
        } else if (unassigned == 1) {
            // Tautologies never get here: their two literals share an atom.
            out.push_back({EdgeTarget::to(*open), Reason::UnitPropagate});
        }
    }
}

// Rule data shared by the program modules.
struct CompiledProgram {
    std::size_t atoms = 0;
    std::vector<Clause> clauses;
    std::vector<Var> heads;
    std::vector<std::vector<BodyLiteral>> bodies;
    std::vector<bool> normal;
    std::vector<std::vector<std::size_t>> rulesOf;

    explicit CompiledProgram(const Program& p) : atoms(p.vocabulary.size()), clauses(clausify(p).clauses), rulesOf(atoms) {
        for (std::size_t i = 0; i < p.rules.size(); ++i) {
            heads.push_back(p.rules[i].head);
            auto body = p.rules[i].effectiveBody();
            std::sort(body.begin(), body.end());
            bodies.push_back(std::move(body));
            normal.push_back(p.rules[i].kind == RuleKind::Normal);
            rulesOf[p.rules[i].head].push_back(i);
        }
    }
};

std::vector<Var> unfoundedOf(const CompiledProgram& p, const LiteralSet& m) {
    std::vector<bool> founded(p.atoms, false);
    std::vector<bool> live(p.heads.size());
    for (std::size_t r = 0; r < p.heads.size(); ++r) live[r] = !isCancelled(p.bodies[r], m);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t r = 0; r < p.heads.size(); ++r) {
            if (!live[r] || founded[p.heads[r]]) continue;
            bool supported = std::all_of(p.bodies[r].begin(), p.bodies[r].end(), [&](const BodyLiteral& b) {
                return b.form != BodyForm::Positive || founded[b.atom];
            });
            if (supported) {
                founded[p.heads[r]] = true;
                changed = true;
            }
        }
    }
    std::vector<Var> out;
    for (Var v = 0; v < p.atoms; ++v) {
        if (!founded[v]) out.push_back(v);
    }
    return out;
}

void unfoundedEdges(const CompiledProgram& p, const LiteralSet& m, std::vector<OutEdge>& out) {
    for (Var a : unfoundedOf(p, m)) {
        if (m.contains(Literal::positive(a))) {
            out.push_back({EdgeTarget::bottom(), Reason::Unfounded});
        } else if (!m.assigns(a)) {
            out.push_back({EdgeTarget::to(Literal::negative(a)), Reason::Unfounded});
        }
    }
}

void arcEdges(const CompiledProgram& p, const LiteralSet& m, std::vector<OutEdge>& out) {
    for (Var a = 0; a < p.atoms; ++a) {
        const auto& rules = p.rulesOf[a];
        bool allCancelled = std::all_of(rules.begin(), rules.end(), [&](std::size_t r) { return isCancelled(p.bodies[r], m); });
        if (!allCancelled) continue;
        if (m.contains(Literal::positive(a))) {
            out.push_back({EdgeTarget::bottom(), Reason::AllRulesCancelled});
        } else if (!m.assigns(a)) {
            out.push_back({EdgeTarget::to(Literal::negative(a)), Reason::AllRulesCancelled});
        }
    }
}

void backchainTrueEdges(const CompiledProgram& p, const LiteralSet& m, std::vector<OutEdge>& out) {
    for (Var a = 0; a < p.atoms; ++a) {
        if (!m.contains(Literal::positive(a))) continue;
        const auto& rules = p.rulesOf[a];
        for (std::size_t r : rules) {
            const auto& body = p.bodies[r];
            bool othersCancelled = std::all_of(rules.begin(), rules.end(), [&](std::size_t o) {
                return p.bodies[o] == body || isCancelled(p.bodies[o], m);
            });
            if (!othersCancelled) continue;
            for (const auto& b : body) {
                Literal l = b.asLiteral();
                if (literalFalse(m, l)) {
                    out.push_back({EdgeTarget::bottom(), Reason::BackchainTrue});
                } else if (!m.assigns(l.atom())) {
                    out.push_back({EdgeTarget::to(l), Reason::BackchainTrue});
                }
            }
        }
    }
}

} // namespace

bool satisfiesClause(const LiteralSet& complete, const Clause& c) {
    return std::any_of(c.literals.begin(), c.literals.end(), [&](Literal l) { return complete.contains(l); });
}

AbstractModule entailmentModule(const CnfTheory& theory, std::size_t cap) {
    const auto n = checkedAtoms(theory.vocabulary.size(), cap);
    std::vector<LiteralSet> modelSet;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        auto full = completeFromMask(mask, n);
        bool ok = std::all_of(theory.clauses.begin(), theory.clauses.end(), [&](const Clause& c) { return satisfiesClause(full, c); });
        if (ok) modelSet.push_back(std::move(full));
    }
    auto index = std::make_shared<const ModelIndex>(n, modelSet);
    return AbstractModule(
        theory.vocabulary, [index](const LiteralSet& m) { return index->saturatedEdges(m, Reason::Entailment); }, "entail");
}

AbstractModule unitPropagateModule(const CnfTheory& theory) {
    auto clauses = std::make_shared<const std::vector<Clause>>(theory.clauses);
    return AbstractModule(
        theory.vocabulary,
        [clauses](const LiteralSet& m) {
            std::vector<OutEdge> out;
            unitPropagateEdges(*clauses, m, out);
            return out;
        },
        "unitprop");
}

std::vector<BodyLiteral> Rule::effectiveBody() const {
    auto b = body;
    if (kind == RuleKind::Choice) b.push_back({head, BodyForm::DoubleNegated});
    return b;
}

CnfTheory clausify(const Program& program) {
    CnfTheory t{program.vocabulary, {}};
    for (const auto& r : program.rules) {
        std::vector<Literal> lits{Literal::positive(r.head)};
        for (const auto& b : r.effectiveBody()) lits.push_back(b.asLiteral().complement());
        t.clauses.emplace_back(std::move(lits));
    }
    return t;
}

std::vector<std::vector<BodyLiteral>> bodies(const Program& program, Var atom) {
    std::vector<std::vector<BodyLiteral>> out;
    for (const auto& r : program.rules) {
        if (r.head == atom) out.push_back(r.effectiveBody());
    }
    return out;
}

bool isCancelled(const std::vector<BodyLiteral>& body, const LiteralSet& m) {
    return std::any_of(body.begin(), body.end(), [&](const BodyLiteral& b) { return literalFalse(m, b.asLiteral()); });
}

std::vector<Var> greatestUnfounded(const LiteralSet& m, const Program& program) {
    return unfoundedOf(CompiledProgram(program), m);
}

AbstractModule asModule(const Program& program, AsOptions options) {
    auto p = std::make_shared<const CompiledProgram>(program);
    return AbstractModule(
        program.vocabulary,
        [p, options](const LiteralSet& m) {
            std::vector<OutEdge> out;
            if (options.unitPropagate) unitPropagateEdges(p->clauses, m, out);
            if (options.unfounded) unfoundedEdges(*p, m, out);
            return out;
        },
        "as");
}

AbstractModule smModule(const Program& program) {
    auto p = std::make_shared<const CompiledProgram>(program);
    return AbstractModule(
        program.vocabulary,
        [p](const LiteralSet& m) {
            std::vector<OutEdge> out;
            unitPropagateEdges(p->clauses, m, out);
            unfoundedEdges(*p, m, out);
            arcEdges(*p, m, out);
            backchainTrueEdges(*p, m, out);
            return out;
        },
        "sm");
}

AbstractModule forwardChainingModule(const Program& program) {
    auto p = std::make_shared<const CompiledProgram>(program);
    return AbstractModule(
        program.vocabulary,
        [p](const LiteralSet& m) {
            std::vector<OutEdge> out;
            for (std::size_t r = 0; r < p->heads.size(); ++r) {
                if (!p->normal[r]) continue;
                const auto& body = p->bodies[r];
                bool holds = std::all_of(body.begin(), body.end(), [&](const BodyLiteral& b) { return literalTrue(m, b.asLiteral()); });
                if (!holds) continue;
                Literal head = Literal::positive(p->heads[r]);
                if (literalFalse(m, head)) {
                    out.push_back({EdgeTarget::bottom(), Reason::ForwardChaining});
                } else if (!m.assigns(head.atom())) {
                    out.push_back({EdgeTarget::to(head), Reason::ForwardChaining});
                }
            }
            return out;
        },
        "fc");
}

std::vector<Interpretation> answerSets(const Program& program, std::size_t cap) {
    const auto n = checkedAtoms(program.vocabulary.size(), cap);
    CompiledProgram p(program);
    std::vector<Interpretation> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        auto inX = [&](Var v) { return ((mask >> v) & 1u) != 0; };
        // Reduct: drop rules whose negative or double-negated part is false in X.
        std::vector<std::size_t> kept;
        for (std::size_t r = 0; r < p.heads.size(); ++r) {
            bool keep = std::all_of(p.bodies[r].begin(), p.bodies[r].end(), [&](const BodyLiteral& b) {
                switch (b.form) {
                case BodyForm::Positive: return true;
                case BodyForm::Negated: return !inX(b.atom);
                case BodyForm::DoubleNegated: return inX(b.atom);
                }
                return true;
            });
            if (keep) kept.push_back(r);
        }
        std::uint64_t least = 0;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t r : kept) {
                const std::uint64_t bit = std::uint64_t{1} << p.heads[r];
                if (least & bit) continue;
                bool fires = std::all_of(p.bodies[r].begin(), p.bodies[r].end(), [&](const BodyLiteral& b) {
                    return b.form != BodyForm::Positive || ((least >> b.atom) & 1u);
                });
                if (fires) {
                    least |= bit;
                    changed = true;
                }
            }
        }
        if (least == mask) out.push_back(Interpretation::fromPositive(completeFromMask(mask, n), program.vocabulary));
    }
    return out;
}

AbstractModule programEntailmentModule(const Program& program, std::size_t cap) {
    std::vector<LiteralSet> nodes;
    for (const auto& i : answerSets(program, cap)) nodes.push_back(i.asLiteralSet());
    std::sort(nodes.begin(), nodes.end());
    auto index = std::make_shared<const ModelIndex>(program.vocabulary.size(), nodes);
    return AbstractModule(
        program.vocabulary, [index](const LiteralSet& m) { return index->saturatedEdges(m, Reason::Entailment); }, "entail");
}

} // namespace ams
