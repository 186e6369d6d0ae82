#include "arglp/program.hpp"

#include <algorithm>
#include <map>

namespace arglp {

Formula Formula::conj(std::vector<Formula> children) {
    if (children.empty()) return constant_true();
    if (children.size() == 1) return std::move(children.front());
    Formula f;
    f.tag = Tag::And;
    f.children = std::move(children);
    return f;
}

Formula Formula::disj(std::vector<Formula> children) {
    if (children.size() == 1) return std::move(children.front());
    if (children.empty()) throw InternalError("disjunction needs at least one child");
    Formula f;
    f.tag = Tag::Or;
    f.children = std::move(children);
    return f;
}

int PropProgram::atom_index(const std::string& name) const {
    auto it = std::find(atoms.begin(), atoms.end(), name);
    return it == atoms.end() ? -1 : static_cast<int>(it - atoms.begin());
}

int NormalProgram::atom_index(const std::string& name) const {
    auto it = std::find(atoms.begin(), atoms.end(), name);
    return it == atoms.end() ? -1 : static_cast<int>(it - atoms.begin());
}

namespace {

bool uses_source_guard(Kind kind) { return kind == Kind::ASAF || kind == Kind::AFRA || kind == Kind::AFRAD; }
bool support_keyed_by_source(Kind kind) { return kind == Kind::RAFD || kind == Kind::AFRAD; }

// Deduplicated attacker/supporter argument names per target, for the flat kinds.
std::map<std::string, std::set<std::string>> pair_map(const std::map<std::string, Interaction>& edges,
                                                      bool key_by_source) {
    std::map<std::string, std::set<std::string>> out;
    for (const auto& [_, e] : edges) {
        if (key_by_source)
            out[e.source].insert(e.target);
        else
            out[e.target].insert(e.source);
    }
    return out;
}

}  // namespace

PropProgram compile(const Framework& f) {
    ensure_valid(f);

    PropProgram p;
    p.atoms = universe_names(f);
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < p.atoms.size(); ++i) index[p.atoms[i]] = static_cast<int>(i);
    auto at = [&](const std::string& name) { return index.at(name); };

    if (f.kind == Kind::AF || f.kind == Kind::AFN || f.kind == Kind::AFD) {
        // Attack/support relations act as pair sets over arguments.
        auto attackers = pair_map(f.attacks, false);
        auto supporters = f.kind == Kind::AFN ? pair_map(f.supports, false)
                                              : pair_map(f.supports, true);
        for (const auto& a : p.atoms) {
            std::vector<Formula> body;
            if (auto it = attackers.find(a); it != attackers.end())
                for (const auto& b : it->second) body.push_back(Formula::literal(at(b), false));
            if (f.kind != Kind::AF)
                if (auto it = supporters.find(a); it != supporters.end())
                    for (const auto& c : it->second) body.push_back(Formula::literal(at(c), true));
            p.rules.push_back(Formula::conj(std::move(body)));
        }
        return p;
    }

    // Recursive kinds: one rule per element, one clause per interaction name.
    for (const auto& x : p.atoms) {
        std::vector<Formula> body;
        if (uses_source_guard(f.kind)) {
            if (auto it = f.attacks.find(x); it != f.attacks.end())
                body.push_back(Formula::literal(at(it->second.source), true));
        }
        for (const auto& [alpha, edge] : f.attacks) {
            if (edge.target != x) continue;
            if (uses_source_guard(f.kind)) {
                body.push_back(Formula::literal(at(alpha), false));
            } else {
                body.push_back(Formula::disj({Formula::literal(at(alpha), false),
                                              Formula::literal(at(edge.source), false)}));
            }
        }
        for (const auto& [beta, edge] : f.supports) {
            bool keyed = support_keyed_by_source(f.kind) ? edge.source == x : edge.target == x;
            if (!keyed) continue;
            const std::string& companion =
                support_keyed_by_source(f.kind) ? edge.target : edge.source;
            body.push_back(Formula::disj({Formula::literal(at(beta), false),
                                          Formula::literal(at(companion), true)}));
        }
        p.rules.push_back(Formula::conj(std::move(body)));
    }
    return p;
}

namespace {

std::vector<Literal> clause_literals(const Formula& clause) {
    if (clause.tag == Formula::Tag::Literal) return {{clause.atom, clause.positive}};
    if (clause.tag != Formula::Tag::Or)
        throw InternalError("normalize: clause is neither a literal nor a disjunction");
    std::vector<Literal> lits;
    for (const auto& child : clause.children) {
        if (child.tag != Formula::Tag::Literal)
            throw InternalError("normalize: disjunction over non-literals");
        lits.push_back({child.atom, child.positive});
    }
    return lits;
}

}  // namespace

NormalProgram normalize(const PropProgram& p) {
    for (const auto& name : p.atoms) {
        if (name.rfind("__f", 0) == 0)
            throw ReservedAtomError("atom '" + name + "' lies in the reserved fresh namespace");
    }

    NormalProgram n;
    n.atoms = p.atoms;
    n.num_original = p.atoms.size();

    std::vector<NormalRule> fresh_rules;
    int counter = 0;

    auto rewrite_clause = [&](const Formula& clause, std::vector<Literal>& body) {
        auto lits = clause_literals(clause);
        if (lits.size() == 1) {
            body.push_back(lits.front());
            return;
        }
        int fresh_atom = static_cast<int>(n.atoms.size());
        n.atoms.push_back("__f" + std::to_string(++counter));
        std::vector<Literal> complemented;
        for (const auto& l : lits) complemented.push_back({l.atom, !l.positive});
        fresh_rules.push_back({fresh_atom, complemented});
        n.fresh.emplace_back(fresh_atom, lits);
        body.push_back({fresh_atom, false});
    };

    for (std::size_t i = 0; i < p.rules.size(); ++i) {
        const Formula& rule = p.rules[i];
        NormalRule out{static_cast<int>(i), {}};
        if (rule.tag != Formula::Tag::True) {
            if (rule.tag == Formula::Tag::And) {
                for (const auto& clause : rule.children) rewrite_clause(clause, out.body);
            } else {
                rewrite_clause(rule, out.body);
            }
        }
        n.rules.push_back(std::move(out));
    }
    for (auto& r : fresh_rules) n.rules.push_back(std::move(r));
    return n;
}

}  // namespace arglp
