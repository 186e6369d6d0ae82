#include "arglp/psm.hpp"

#include <algorithm>
#include <functional>

namespace arglp {

std::string to_string(TruthValue v) {
    switch (v) {
        case TruthValue::False: return "false";
        case TruthValue::Undef: return "undef";
        case TruthValue::True: return "true";
    }
    return "?";
}

std::string to_string(Selector s) {
    switch (s) {
        case Selector::WF: return "WF";
        case Selector::MS: return "MS";
        case Selector::ST: return "ST";
        case Selector::LM: return "LM";
        case Selector::MD: return "MD";
    }
    return "?";
}

bool selector_from_string(const std::string& text, Selector& out) {
    for (Selector s : {Selector::WF, Selector::MS, Selector::ST, Selector::LM, Selector::MD}) {
        if (text == to_string(s)) {
            out = s;
            return true;
        }
    }
    return false;
}

Interpretation Interpretation::from_sets(const std::vector<std::string>& atoms,
                                         const std::set<std::string>& pos,
                                         const std::set<std::string>& neg) {
    Interpretation m(atoms.size(), TruthValue::Undef);
    auto index_of = [&](const std::string& name) {
        auto it = std::find(atoms.begin(), atoms.end(), name);
        if (it == atoms.end()) throw InternalError("unknown atom '" + name + "'");
        return static_cast<std::size_t>(it - atoms.begin());
    };
    for (const auto& a : pos) m.values[index_of(a)] = TruthValue::True;
    for (const auto& a : neg) {
        std::size_t i = index_of(a);
        if (m.values[i] == TruthValue::True)
            throw InternalError("inconsistent interpretation: '" + a + "' is both pos and neg");
        m.values[i] = TruthValue::False;
    }
    return m;
}

bool Interpretation::total() const {
    return std::none_of(values.begin(), values.end(),
                        [](TruthValue v) { return v == TruthValue::Undef; });
}

namespace {

std::set<std::string> names_with(const Interpretation& m, const std::vector<std::string>& atoms,
                                 TruthValue v) {
    std::set<std::string> out;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m.values[i] == v) out.insert(atoms[i]);
    return out;
}

}  // namespace

std::set<std::string> Interpretation::pos_names(const std::vector<std::string>& atoms) const {
    return names_with(*this, atoms, TruthValue::True);
}
std::set<std::string> Interpretation::neg_names(const std::vector<std::string>& atoms) const {
    return names_with(*this, atoms, TruthValue::False);
}
std::set<std::string> Interpretation::undef_names(const std::vector<std::string>& atoms) const {
    return names_with(*this, atoms, TruthValue::Undef);
}

bool subset_of(const Interpretation& a, const Interpretation& b) {
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        if (a.values[i] != TruthValue::Undef && a.values[i] != b.values[i]) return false;
    }
    return true;
}

TruthValue eval_body(const Formula& body, const Interpretation& m) {
    switch (body.tag) {
        case Formula::Tag::True:
            return TruthValue::True;
        case Formula::Tag::Literal: {
            if (body.atom < 0 || static_cast<std::size_t>(body.atom) >= m.size())
                throw InternalError("unknown atom index in body formula");
            TruthValue v = m.values[body.atom];
            return body.positive ? v : negate(v);
        }
        case Formula::Tag::And: {
            TruthValue acc = TruthValue::True;
            for (const auto& c : body.children) {
                acc = meet(acc, eval_body(c, m));
                if (acc == TruthValue::False) break;
            }
            return acc;
        }
        case Formula::Tag::Or: {
            TruthValue acc = TruthValue::False;
            for (const auto& c : body.children) {
                acc = join(acc, eval_body(c, m));
                if (acc == TruthValue::True) break;
            }
            return acc;
        }
    }
    throw InternalError("malformed body formula");
}

TruthValue eval_body(const Formula& body, const PropProgram& p, const Interpretation& m) {
    if (m.size() != p.atoms.size())
        throw InternalError("interpretation does not cover the program alphabet");
    return eval_body(body, m);
}

PositiveProgram reduct(const NormalProgram& n, const Interpretation& m) {
    PositiveProgram q;
    q.atom_count = n.atoms.size();
    for (const auto& rule : n.rules) {
        bool keep = true;
        std::vector<int> body;
        for (const auto& lit : rule.body) {
            TruthValue v = m.values[lit.atom];
            if (v == TruthValue::Undef) {  // (b) wholly-undefined literal
                keep = false;
                break;
            }
            if (!lit.positive) {
                if (v == TruthValue::True) {  // (a) false negative literal
                    keep = false;
                    break;
                }
                continue;  // (c) strip satisfied negative literal
            }
            body.push_back(lit.atom);
        }
        if (keep) q.rules.emplace_back(rule.head, std::move(body));
    }
    return q;
}

std::vector<int> least_model(const PositiveProgram& q) {
    std::vector<char> derived(q.atom_count, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [head, body] : q.rules) {
            if (derived[head]) continue;
            bool fires = std::all_of(body.begin(), body.end(), [&](int a) { return derived[a]; });
            if (fires) {
                derived[head] = 1;
                changed = true;
            }
        }
    }
    std::vector<int> out;
    for (std::size_t i = 0; i < derived.size(); ++i)
        if (derived[i]) out.push_back(static_cast<int>(i));
    return out;
}

bool is_partial_model(const NormalProgram& n, const Interpretation& m) {
    for (const auto& rule : n.rules) {
        if (m.values[rule.head] != TruthValue::False) continue;
        bool falsified = false;
        for (const auto& lit : rule.body) {
            TruthValue v = m.values[lit.atom];
            if ((lit.positive && v == TruthValue::False) ||
                (!lit.positive && v == TruthValue::True)) {
                falsified = true;
                break;
            }
        }
        if (!falsified) return false;
    }
    return true;
}

bool is_founded(const NormalProgram& n, const Interpretation& m) {
    std::vector<int> lm = least_model(reduct(n, m));
    std::vector<int> pos;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m.values[i] == TruthValue::True) pos.push_back(static_cast<int>(i));
    return lm == pos;
}

// ---------------------------------------------------------------------------
// Three-valued stable check and enumeration.
//
// The reduct of a candidate M replaces every negated occurrence by the
// constant ~M(atom); what remains is monotone in the positive occurrences, so
// its least model is the limit of Kleene sweeps from all-False.  M is a PSM
// iff that least model is M itself.  The least model is antimonotone in the
// constants, which gives pointwise bounds for every candidate inside a box
// [lo, hi]: lfp(hi) <= lfp(candidate) <= lfp(lo).  enumerate_psms exploits
// this to narrow boxes and only branches where the bounds stall.
// ---------------------------------------------------------------------------

namespace {

using Values = std::vector<TruthValue>;

// Evaluation adaptor for a propositional program.
struct PropEval {
    const PropProgram* p;

    std::size_t atom_count() const { return p->atoms.size(); }
    std::size_t enumerable_count() const { return p->atoms.size(); }

    TruthValue body_value(const Formula& f, const Values& x, const Values& nu) const {
        switch (f.tag) {
            case Formula::Tag::True:
                return TruthValue::True;
            case Formula::Tag::Literal:
                return f.positive ? x[f.atom] : negate(nu[f.atom]);
            case Formula::Tag::And: {
                TruthValue acc = TruthValue::True;
                for (const auto& c : f.children) {
                    acc = meet(acc, body_value(c, x, nu));
                    if (acc == TruthValue::False) break;
                }
                return acc;
            }
            case Formula::Tag::Or: {
                TruthValue acc = TruthValue::False;
                for (const auto& c : f.children) {
                    acc = join(acc, body_value(c, x, nu));
                    if (acc == TruthValue::True) break;
                }
                return acc;
            }
        }
        throw InternalError("malformed body formula");
    }

    TruthValue atom_value(std::size_t i, const Values& x, const Values& nu) const {
        return body_value(p->rules[i], x, nu);
    }

    void mark_negated(std::vector<char>& negated) const {
        std::function<void(const Formula&)> walk = [&](const Formula& f) {
            if (f.tag == Formula::Tag::Literal) {
                if (!f.positive) negated[f.atom] = 1;
                return;
            }
            for (const auto& c : f.children) walk(c);
        };
        for (const auto& r : p->rules) walk(r);
    }
};

// Evaluation adaptor for a normal program (possibly several rules per head).
//
// When the program carries a fresh registry (it came out of normalize()), a
// negated fresh atom is read through the registry as the disjunctive clause
// it replaced.  A fresh atom abbreviates the negation of its clause, so the
// clause's positive literals must keep tracking the least-model iteration
// rather than being frozen through the candidate; reading ~f literally would
// let an unfounded positive loop justify itself across the double negation.
struct NormalEval {
    const NormalProgram* n;
    std::vector<std::vector<const NormalRule*>> by_head;
    std::vector<const std::vector<Literal>*> clause_of;  // fresh atom -> replaced clause

    explicit NormalEval(const NormalProgram& prog)
        : n(&prog), by_head(prog.atoms.size()), clause_of(prog.atoms.size(), nullptr) {
        for (const auto& r : prog.rules) by_head[r.head].push_back(&r);
        for (const auto& [atom, clause] : prog.fresh)
            if (by_head[atom].size() == 1) clause_of[atom] = &clause;
    }

    std::size_t atom_count() const { return n->atoms.size(); }
    std::size_t enumerable_count() const { return n->num_original; }

    TruthValue literal_value(const Literal& lit, const Values& x, const Values& nu) const {
        if (lit.positive) return x[lit.atom];
        if (const auto* clause = clause_of[lit.atom]) {
            TruthValue acc = TruthValue::False;
            for (const auto& l : *clause) {
                acc = join(acc, l.positive ? x[l.atom] : negate(nu[l.atom]));
                if (acc == TruthValue::True) break;
            }
            return acc;
        }
        return negate(nu[lit.atom]);
    }

    TruthValue atom_value(std::size_t i, const Values& x, const Values& nu) const {
        TruthValue acc = TruthValue::False;
        for (const NormalRule* r : by_head[i]) {
            TruthValue body = TruthValue::True;
            for (const auto& lit : r->body) {
                body = meet(body, literal_value(lit, x, nu));
                if (body == TruthValue::False) break;
            }
            acc = join(acc, body);
            if (acc == TruthValue::True) break;
        }
        return acc;
    }

    void mark_negated(std::vector<char>& negated) const {
        for (const auto& r : n->rules) {
            for (const auto& lit : r.body) {
                if (lit.positive) continue;
                if (const auto* clause = clause_of[lit.atom]) {
                    for (const auto& l : *clause)
                        if (!l.positive) negated[l.atom] = 1;
                } else {
                    negated[lit.atom] = 1;
                }
            }
        }
    }
};

// Least model of the reduct with negated occurrences read from nu.  Monotone;
// each sweep raises at least one value, so 2n+1 sweeps suffice.
template <typename Eval>
Values kleene_lfp(const Eval& eval, const Values& nu) {
    std::size_t n = eval.atom_count();
    Values x(n, TruthValue::False);
    for (std::size_t sweep = 0; sweep <= 2 * n + 1; ++sweep) {
        bool changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            TruthValue v = eval.atom_value(i, x, nu);
            if (v < x[i]) throw InternalError("Kleene iteration regressed; operator not monotone");
            if (v != x[i]) {
                x[i] = v;
                changed = true;
            }
        }
        if (!changed) return x;
    }
    throw InternalError("Kleene iteration failed to converge");
}

template <typename Eval>
bool stable_under(const Eval& eval, const Values& candidate) {
    return kleene_lfp(eval, candidate) == candidate;
}

template <typename Eval>
class PsmSearch {
public:
    PsmSearch(const Eval& eval) : eval_(eval), negated_(eval.atom_count(), 0) {
        eval_.mark_negated(negated_);
    }

    std::vector<Interpretation> run() {
        std::size_t n = eval_.atom_count();
        Values lo(n, TruthValue::False), hi(n, TruthValue::True);
        descend(std::move(lo), std::move(hi));
        std::sort(out_.begin(), out_.end());
        return out_;
    }

private:
    void descend(Values lo, Values hi) {
        // Narrow the box: any stable candidate inside [lo, hi] also lies in
        // [lfp(hi), lfp(lo)].
        for (;;) {
            Values lower = kleene_lfp(eval_, hi);
            Values upper = kleene_lfp(eval_, lo);
            bool changed = false;
            for (std::size_t i = 0; i < lo.size(); ++i) {
                TruthValue nlo = join(lo[i], lower[i]);
                TruthValue nhi = meet(hi[i], upper[i]);
                if (nlo > nhi) return;  // no candidate survives
                changed |= nlo != lo[i] || nhi != hi[i];
                lo[i] = nlo;
                hi[i] = nhi;
            }
            if (!changed) break;
        }

        int branch = pick_branch(lo, hi);
        if (branch < 0) {
            if (lo != hi) throw InternalError("psm search stalled on an unpinned box");
            if (!stable_under(eval_, lo)) throw InternalError("psm narrowing emitted a non-model");
            out_.push_back(Interpretation{lo});
            return;
        }
        for (TruthValue v : {TruthValue::False, TruthValue::Undef, TruthValue::True}) {
            if (v < lo[branch] || v > hi[branch]) continue;
            Values nlo = lo, nhi = hi;
            nlo[branch] = nhi[branch] = v;
            descend(std::move(nlo), std::move(nhi));
        }
    }

    // Branch on negated atoms only; once those are pinned the constants of
    // the reduct are fixed and narrowing pins everything else.  Prefer
    // enumerable (non-fresh) atoms.
    int pick_branch(const Values& lo, const Values& hi) const {
        int fallback = -1;
        for (std::size_t i = 0; i < lo.size(); ++i) {
            if (!negated_[i] || lo[i] == hi[i]) continue;
            if (i < eval_.enumerable_count()) return static_cast<int>(i);
            if (fallback < 0) fallback = static_cast<int>(i);
        }
        return fallback;
    }

    const Eval& eval_;
    std::vector<char> negated_;
    std::vector<Interpretation> out_;
};

void check_limit(std::size_t enumerable, const EnumOptions& opts) {
    if (!opts.force && enumerable > static_cast<std::size_t>(opts.atom_limit))
        throw ResourceLimitError("program has " + std::to_string(enumerable) +
                                 " atoms, above the enumeration limit of " +
                                 std::to_string(opts.atom_limit) + " (use force to override)");
}

}  // namespace

bool is_psm(const PropProgram& p, const Interpretation& m) {
    if (m.size() != p.atoms.size())
        throw InternalError("interpretation does not cover the program alphabet");
    return stable_under(PropEval{&p}, m.values);
}

bool is_psm(const NormalProgram& n, const Interpretation& m) {
    if (m.size() != n.atoms.size())
        throw InternalError("interpretation does not cover the program alphabet");
    return stable_under(NormalEval(n), m.values);
}

std::vector<Interpretation> enumerate_psms(const PropProgram& p, const EnumOptions& opts) {
    check_limit(p.atoms.size(), opts);
    PropEval eval{&p};
    return PsmSearch(eval).run();
}

std::vector<Interpretation> enumerate_psms(const NormalProgram& n, const EnumOptions& opts) {
    check_limit(n.num_original, opts);
    NormalEval eval(n);
    auto models = PsmSearch(eval).run();
    // Every PSM assigns each fresh atom the value of its single defining
    // rule; anything else cannot be stable.
    for (const auto& m : models) {
        for (const auto& [fresh_atom, _] : n.fresh) {
            if (m.values[fresh_atom] != eval.atom_value(fresh_atom, m.values, m.values))
                throw InternalError("fresh atom diverged from its defining rule");
        }
    }
    return models;
}

Interpretation project_model(const Interpretation& m, const NormalProgram& n) {
    if (m.size() != n.atoms.size())
        throw InternalError("interpretation does not cover the program alphabet");
    Interpretation out;
    out.values.assign(m.values.begin(), m.values.begin() + n.num_original);
    return out;
}

std::vector<Interpretation> maximal_founded_models(const NormalProgram& n,
                                                   const EnumOptions& opts) {
    check_limit(n.atoms.size(), opts);
    std::vector<Interpretation> founded;
    std::vector<int> digits(n.atoms.size(), 0);
    for (;;) {
        Interpretation m(n.atoms.size());
        for (std::size_t i = 0; i < m.size(); ++i) m.values[i] = static_cast<TruthValue>(digits[i]);
        if (is_partial_model(n, m) && is_founded(n, m)) founded.push_back(std::move(m));
        std::size_t k = digits.size();
        while (k > 0 && digits[k - 1] == 2) digits[--k] = 0;
        if (k == 0) break;
        ++digits[k - 1];
    }
    std::vector<Interpretation> out;
    for (const auto& m : founded) {
        bool maximal = std::none_of(founded.begin(), founded.end(), [&](const Interpretation& o) {
            return o != m && subset_of(m, o);
        });
        if (maximal) out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Interpretation> select(const std::vector<Interpretation>& models, Selector which) {
    auto minimal = [&](const Interpretation& m) {
        return std::none_of(models.begin(), models.end(), [&](const Interpretation& other) {
            return other != m && subset_of(other, m);
        });
    };
    auto maximal = [&](const Interpretation& m) {
        return std::none_of(models.begin(), models.end(), [&](const Interpretation& other) {
            return other != m && subset_of(m, other);
        });
    };

    switch (which) {
        case Selector::WF: {
            std::vector<Interpretation> mins;
            std::copy_if(models.begin(), models.end(), std::back_inserter(mins), minimal);
            if (mins.size() != 1)
                throw InternalError("well-founded selector: " + std::to_string(mins.size()) +
                                    " subset-minimal models");
            return mins;
        }
        case Selector::MS: {
            std::vector<Interpretation> out;
            std::copy_if(models.begin(), models.end(), std::back_inserter(out), maximal);
            return out;
        }
        case Selector::ST: {
            auto ms = select(models, Selector::MS);
            std::vector<Interpretation> out;
            std::copy_if(ms.begin(), ms.end(), std::back_inserter(out),
                         [](const Interpretation& m) { return m.total(); });
            return out;
        }
        case Selector::LM: {
            auto ms = select(models, Selector::MS);
            auto undef_set = [](const Interpretation& m) {
                std::vector<int> u;
                for (std::size_t i = 0; i < m.size(); ++i)
                    if (m.values[i] == TruthValue::Undef) u.push_back(static_cast<int>(i));
                return u;
            };
            std::vector<Interpretation> out;
            for (const auto& m : ms) {
                auto um = undef_set(m);
                bool minimal_undef = std::none_of(ms.begin(), ms.end(), [&](const Interpretation& o) {
                    auto uo = undef_set(o);
                    return uo != um && std::includes(um.begin(), um.end(), uo.begin(), uo.end());
                });
                if (minimal_undef) out.push_back(m);
            }
            return out;
        }
        case Selector::MD: {
            auto ms = select(models, Selector::MS);
            std::vector<Interpretation> contained;
            for (const auto& m : models) {
                bool in_all = std::all_of(ms.begin(), ms.end(),
                                          [&](const Interpretation& top) { return subset_of(m, top); });
                if (in_all) contained.push_back(m);
            }
            std::vector<Interpretation> out;
            for (const auto& m : contained) {
                bool best = std::none_of(contained.begin(), contained.end(),
                                         [&](const Interpretation& o) {
                                             return o != m && subset_of(m, o);
                                         });
                if (best) out.push_back(m);
            }
            if (out.size() != 1)
                throw InternalError("max-deterministic selector: " + std::to_string(out.size()) +
                                    " candidates");
            return out;
        }
    }
    throw InternalError("unknown selector");
}

Interpretation well_founded(const NormalProgram& n) {
    std::size_t atom_count = n.atoms.size();

    std::vector<const std::vector<Literal>*> clause_of(atom_count, nullptr);
    for (const auto& [atom, clause] : n.fresh) clause_of[atom] = &clause;

    // gamma(X): least model of the reduct that deletes rules whose negative
    // literals touch X and strips the rest.  Negated fresh atoms are read as
    // the disjunctions they abbreviate, matching the enumeration semantics.
    auto gamma = [&](const std::vector<char>& x) {
        std::vector<char> derived(atom_count, 0);
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& rule : n.rules) {
                if (derived[rule.head]) continue;
                bool fires = true;
                for (const auto& lit : rule.body) {
                    bool ok;
                    if (lit.positive) {
                        ok = derived[lit.atom];
                    } else if (const auto* clause = clause_of[lit.atom]) {
                        ok = std::any_of(clause->begin(), clause->end(), [&](const Literal& l) {
                            return l.positive ? static_cast<bool>(derived[l.atom]) : !x[l.atom];
                        });
                    } else {
                        ok = !x[lit.atom];
                    }
                    if (!ok) {
                        fires = false;
                        break;
                    }
                }
                if (fires) {
                    derived[rule.head] = 1;
                    changed = true;
                }
            }
        }
        return derived;
    };

    std::vector<char> t(atom_count, 0);
    for (;;) {
        std::vector<char> next = gamma(gamma(t));
        if (next == t) break;
        t = std::move(next);
    }
    std::vector<char> upper = gamma(t);

    Interpretation wf(atom_count, TruthValue::Undef);
    for (std::size_t i = 0; i < atom_count; ++i) {
        if (t[i])
            wf.values[i] = TruthValue::True;
        else if (!upper[i])
            wf.values[i] = TruthValue::False;
    }
    return wf;
}

}  // namespace arglp
