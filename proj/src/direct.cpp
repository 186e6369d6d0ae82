#include "arglp/direct.hpp"

#include <algorithm>
#include <map>

#include "arglp/flatten.hpp"

namespace arglp {

std::string to_string(Semantics s) {
    switch (s) {
        case Semantics::Complete: return "complete";
        case Semantics::Preferred: return "preferred";
        case Semantics::Stable: return "stable";
        case Semantics::SemiStable: return "semi-stable";
        case Semantics::Grounded: return "grounded";
        case Semantics::Ideal: return "ideal";
    }
    return "?";
}

bool semantics_from_string(const std::string& text, Semantics& out) {
    for (Semantics s : {Semantics::Complete, Semantics::Preferred, Semantics::Stable,
                        Semantics::SemiStable, Semantics::Grounded, Semantics::Ideal}) {
        if (text == to_string(s)) {
            out = s;
            return true;
        }
    }
    return false;
}

Selector selector_counterpart(Semantics s) {
    switch (s) {
        case Semantics::Preferred: return Selector::MS;
        case Semantics::Stable: return Selector::ST;
        case Semantics::SemiStable: return Selector::LM;
        case Semantics::Grounded: return Selector::WF;
        case Semantics::Ideal: return Selector::MD;
        case Semantics::Complete: break;
    }
    throw InternalError("complete semantics has no single selector counterpart");
}

namespace {

using Mask = std::uint64_t;

struct Edge {
    int name;  // element index of the interaction name, or -1 for flat kinds
    int source;
    int target;
};

// Precomputed per-framework view: element indexing plus the structures each
// kind's defeated/acceptable definitions need.
struct Context {
    Kind kind = Kind::AF;
    std::vector<Element> elements;
    std::map<std::string, int> index;
    int n = 0;
    Mask all = 0;
    Mask args = 0;

    std::vector<Edge> attacks;             // recursive kinds
    std::vector<Edge> supports;            // recursive kinds
    std::vector<std::pair<int, int>> flat; // flat kinds: attack pairs of Omega_I

    explicit Context(const Framework& f) {
        ensure_valid(f);
        kind = f.kind;
        elements = universe(f);
        n = static_cast<int>(elements.size());
        if (n > 63)
            throw ResourceLimitError("universe of " + std::to_string(n) +
                                     " elements exceeds the 63-element mask bound");
        all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
        for (int i = 0; i < n; ++i) {
            index[elements[i].name] = i;
            if (elements[i].cls == ElementClass::Argument) args |= Mask{1} << i;
        }

        if (kind == Kind::AF || kind == Kind::AFN || kind == Kind::AFD) {
            const Framework& base = kind == Kind::AFN   ? flatten_afn(f)
                                    : kind == Kind::AFD ? flatten_afd(f)
                                                        : f;
            std::set<std::pair<int, int>> pairs;
            for (const auto& [_, e] : base.attacks)
                pairs.insert({index.at(e.source), index.at(e.target)});
            flat.assign(pairs.begin(), pairs.end());
        } else {
            for (const auto& [name, e] : f.attacks)
                attacks.push_back({index.at(name), index.at(e.source), index.at(e.target)});
            for (const auto& [name, e] : f.supports)
                supports.push_back({index.at(name), index.at(e.source), index.at(e.target)});
        }
    }

    bool is_attack_elem(int i) const { return elements[i].cls == ElementClass::Attack; }

    Mask to_mask(const ElementSet& s) const {
        Mask m = 0;
        for (const auto& name : s) {
            auto it = index.find(name);
            if (it == index.end())
                throw InternalError("'" + name + "' is not an element of the framework");
            m |= Mask{1} << it->second;
        }
        return m;
    }

    ElementSet to_set(Mask m) const {
        ElementSet out;
        for (int i = 0; i < n; ++i)
            if (m >> i & 1) out.insert(elements[i].name);
        return out;
    }
};

constexpr bool in(Mask m, int i) { return m >> i & 1; }

// Reachability (one or more steps) along the support pairs whose names lie
// in `selected`, as target masks per source element.
std::vector<Mask> support_reach(const Context& ctx, Mask selected) {
    std::vector<Mask> reach(ctx.n, 0);
    for (const auto& e : ctx.supports)
        if (in(selected, e.name)) reach[e.source] |= Mask{1} << e.target;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < ctx.n; ++i) {
            Mask next = reach[i];
            for (int j = 0; j < ctx.n; ++j)
                if (in(reach[i], j)) next |= reach[j];
            if (next != reach[i]) {
                reach[i] = next;
                changed = true;
            }
        }
    }
    return reach;
}

// --- flat kinds (AF / AFN / AFD over the flattened attack pairs) -----------

Mask def_flat(const Context& ctx, Mask s) {
    Mask out = 0;
    for (const auto& [src, tgt] : ctx.flat)
        if (in(s, src)) out |= Mask{1} << tgt;
    return out;
}

Mask acc_flat(const Context& ctx, Mask s) {
    Mask defeated = def_flat(ctx, s);
    Mask out = ctx.all;
    for (const auto& [src, tgt] : ctx.flat)
        if (!in(defeated, src)) out &= ~(Mask{1} << tgt);
    return out;
}

// --- RAF / RAFN -------------------------------------------------------------

// att_S as target masks per argument: direct attacks in S, extended through
// accepted support chains.
std::vector<Mask> rafn_att(const Context& ctx, Mask s) {
    auto reach = support_reach(ctx, s);
    std::vector<Mask> att(ctx.n, 0);
    for (const auto& e : ctx.attacks) {
        if (!in(s, e.name)) continue;
        att[e.source] |= Mask{1} << e.target;
        if (in(ctx.args, e.target)) att[e.source] |= reach[e.target];
    }
    return att;
}

Mask def_rafn(const Context& ctx, Mask s) {
    auto att = rafn_att(ctx, s);
    Mask out = 0;
    for (int a = 0; a < ctx.n; ++a)
        if (in(ctx.args & s, a)) out |= att[a];
    return out;
}

Mask acc_rafn(const Context& ctx, Mask s) {
    Mask defeated = def_rafn(ctx, s);
    Mask out = ctx.all;
    for (const auto& e : ctx.attacks)
        if (!in(defeated, e.name) && !in(defeated, e.source)) out &= ~(Mask{1} << e.target);
    for (const auto& e : ctx.supports)
        if (!in(defeated, e.name) && !in(s, e.source)) out &= ~(Mask{1} << e.target);
    return out;
}

// --- AFRA / ASAF ------------------------------------------------------------

// Extended-defeat targets of one attack given S.  The source-indirection
// clauses apply to attack names only.
Mask asaf_def_targets(const Context& ctx, const Edge& alpha, const std::vector<Mask>& reach) {
    Mask out = Mask{1} << alpha.target;
    if (in(ctx.args, alpha.target)) out |= reach[alpha.target];
    for (const auto& other : ctx.attacks) {
        if (in(out, other.source)) out |= Mask{1} << other.name;
    }
    return out;
}

Mask def_asaf(const Context& ctx, Mask s) {
    auto reach = support_reach(ctx, s);
    Mask out = 0;
    for (const auto& e : ctx.attacks)
        if (in(s, e.name)) out |= asaf_def_targets(ctx, e, reach);
    return out;
}

// Closed form over all attack and support names: attacks on X must be
// defeated, supports into X must be defeated or sourced inside S, and an
// attack name needs its source accepted.  The relation-based form (quantified
// through def_S) misses elements whose necessary supports float undecided.
Mask acc_asaf(const Context& ctx, Mask s) {
    Mask defeated = def_asaf(ctx, s);
    Mask bound = ctx.all;
    for (const auto& e : ctx.attacks)
        if (!in(defeated, e.name)) bound &= ~(Mask{1} << e.target);
    for (const auto& e : ctx.supports)
        if (!in(defeated, e.name) && !in(s, e.source)) bound &= ~(Mask{1} << e.target);

    Mask acc = 0;
    for (;;) {
        Mask next = bound;
        for (const auto& e : ctx.attacks)
            if (!in(acc, e.source)) next &= ~(Mask{1} << e.name);
        if (next == acc) break;
        acc = next;
    }
    return acc;
}

// --- recursive DEF / ACC ----------------------------------------------------

bool deductive_support(Kind kind) { return kind == Kind::AFD || kind == Kind::RAFD || kind == Kind::AFRAD; }
bool source_sensitive(Kind kind) { return kind == Kind::AFRA || kind == Kind::ASAF || kind == Kind::AFRAD; }

// One application of the DEF equation (named-interaction kinds).
Mask def_step(const Context& ctx, Mask s, Mask defeated) {
    Mask out = 0;
    for (const auto& e : ctx.attacks) {
        bool hits = source_sensitive(ctx.kind) ? in(s, e.name)
                                               : (in(s, e.name) && in(s, e.source));
        if (hits) out |= Mask{1} << e.target;
        if (source_sensitive(ctx.kind) && in(defeated, e.source)) out |= Mask{1} << e.name;
    }
    for (const auto& e : ctx.supports) {
        if (!in(s, e.name)) continue;
        if (deductive_support(ctx.kind)) {
            if (in(defeated, e.target)) out |= Mask{1} << e.source;
        } else {
            if (in(defeated, e.source)) out |= Mask{1} << e.target;
        }
    }
    return out;
}

// DEF for the flat BAF kinds, over arguments and the raw attack/support pairs.
Mask def_step_flat(const Context& ctx, const Framework& f, Mask s, Mask defeated) {
    Mask out = 0;
    for (const auto& [_, e] : f.attacks)
        if (in(s, ctx.index.at(e.source))) out |= Mask{1} << ctx.index.at(e.target);
    for (const auto& [_, e] : f.supports) {
        int src = ctx.index.at(e.source), tgt = ctx.index.at(e.target);
        if (ctx.kind == Kind::AFN) {
            if (in(defeated, src)) out |= Mask{1} << tgt;
        } else {
            if (in(defeated, tgt)) out |= Mask{1} << src;
        }
    }
    return out;
}

// ACC once DEF is fixed; one application of the equation.
Mask acc_step(const Context& ctx, Mask defeated, Mask acc) {
    Mask out = ctx.all;
    for (const auto& e : ctx.attacks) {
        bool neutralized = source_sensitive(ctx.kind)
                               ? in(defeated, e.name)
                               : (in(defeated, e.name) || in(defeated, e.source));
        if (!neutralized) out &= ~(Mask{1} << e.target);
        if (source_sensitive(ctx.kind) && !in(acc, e.source)) out &= ~(Mask{1} << e.name);
    }
    for (const auto& e : ctx.supports) {
        int constrained = deductive_support(ctx.kind) ? e.source : e.target;
        int needed = deductive_support(ctx.kind) ? e.target : e.source;
        if (!in(defeated, e.name) && !in(acc, needed)) out &= ~(Mask{1} << constrained);
    }
    return out;
}

Mask acc_step_flat(const Context& ctx, const Framework& f, Mask defeated, Mask acc) {
    Mask out = ctx.all;
    for (const auto& [_, e] : f.attacks)
        if (!in(defeated, ctx.index.at(e.source))) out &= ~(Mask{1} << ctx.index.at(e.target));
    for (const auto& [_, e] : f.supports) {
        int src = ctx.index.at(e.source), tgt = ctx.index.at(e.target);
        int constrained = ctx.kind == Kind::AFN ? tgt : src;
        int needed = ctx.kind == Kind::AFN ? src : tgt;
        if (!in(acc, needed)) out &= ~(Mask{1} << constrained);
    }
    return out;
}

// DEF as greatest fixpoint, then ACC as least fixpoint with DEF held fixed.
std::pair<Mask, Mask> recursive_def_acc(const Context& ctx, const Framework& f, Mask s) {
    bool flat = ctx.kind == Kind::AF || ctx.kind == Kind::AFN || ctx.kind == Kind::AFD;
    if (ctx.kind == Kind::AF) {
        return {def_flat(ctx, s), acc_flat(ctx, s)};
    }

    Mask defeated = ctx.all;
    for (;;) {
        Mask next = flat ? def_step_flat(ctx, f, s, defeated) : def_step(ctx, s, defeated);
        if (next == defeated) break;
        defeated = next;
    }
    Mask acc = 0;
    for (;;) {
        Mask next = flat ? acc_step_flat(ctx, f, defeated, acc) : acc_step(ctx, defeated, acc);
        if (next == acc) break;
        acc = next;
    }
    return {defeated, acc};
}

Mask def_of(const Context& ctx, const Framework& f, Mask s) {
    switch (ctx.kind) {
        case Kind::AF:
        case Kind::AFN:
        case Kind::AFD:
            return def_flat(ctx, s);
        case Kind::RAF:
        case Kind::RAFN:
            return def_rafn(ctx, s);
        case Kind::AFRA:
        case Kind::ASAF:
            return def_asaf(ctx, s);
        case Kind::RAFD:
        case Kind::AFRAD:
            return recursive_def_acc(ctx, f, s).first;
    }
    throw InternalError("unknown kind");
}

Mask acc_of(const Context& ctx, const Framework& f, Mask s) {
    switch (ctx.kind) {
        case Kind::AF:
        case Kind::AFN:
        case Kind::AFD:
            return acc_flat(ctx, s);
        case Kind::RAF:
        case Kind::RAFN:
            return acc_rafn(ctx, s);
        case Kind::AFRA:
        case Kind::ASAF:
            return acc_asaf(ctx, s);
        case Kind::RAFD:
        case Kind::AFRAD:
            return recursive_def_acc(ctx, f, s).second;
    }
    throw InternalError("unknown kind");
}

Interpretation make_completion(const Context& ctx, Mask ext, Mask defeated) {
    Interpretation m(ctx.n, TruthValue::Undef);
    for (int i = 0; i < ctx.n; ++i) {
        if (in(ext, i))
            m.values[i] = TruthValue::True;
        else if (in(defeated, i))
            m.values[i] = TruthValue::False;
    }
    return m;
}

}  // namespace

ElementSet def_set(const Framework& f, const ElementSet& s) {
    Context ctx(f);
    return ctx.to_set(def_of(ctx, f, ctx.to_mask(s)));
}

ElementSet acc_set(const Framework& f, const ElementSet& s) {
    Context ctx(f);
    return ctx.to_set(acc_of(ctx, f, ctx.to_mask(s)));
}

std::pair<ElementSet, ElementSet> new_def_acc(const Framework& f, const ElementSet& s) {
    Context ctx(f);
    auto [defeated, acc] = recursive_def_acc(ctx, f, ctx.to_mask(s));
    return {ctx.to_set(defeated), ctx.to_set(acc)};
}

std::vector<ElementSet> complete_extensions(const Framework& f, const DirectOptions& opts) {
    Context ctx(f);
    if (!opts.force && ctx.n > opts.element_limit)
        throw ResourceLimitError("universe of " + std::to_string(ctx.n) +
                                 " elements, above the subset-enumeration limit of " +
                                 std::to_string(opts.element_limit) + " (use force to override)");

    std::vector<std::pair<Interpretation, Mask>> found;
    for (Mask s = 0;; ++s) {
        Mask defeated = def_of(ctx, f, s);
        if ((s & defeated) == 0 && acc_of(ctx, f, s) == s)
            found.emplace_back(make_completion(ctx, s, defeated), s);
        if (s == ctx.all) break;
    }
    std::sort(found.begin(), found.end());

    std::vector<ElementSet> out;
    for (const auto& [_, mask] : found) out.push_back(ctx.to_set(mask));
    return out;
}

namespace {

std::vector<Mask> select_masks(const Context& ctx, const Framework& f,
                               const std::vector<Mask>& masks, Semantics which) {
    auto subset = [](Mask a, Mask b) { return (a & ~b) == 0; };
    auto range = [&](Mask s) { return s | def_of(ctx, f, s); };

    std::vector<Mask> chosen;
    switch (which) {
        case Semantics::Preferred: {
            for (Mask m : masks) {
                bool maximal = std::none_of(masks.begin(), masks.end(),
                                            [&](Mask o) { return o != m && subset(m, o); });
                if (maximal) chosen.push_back(m);
            }
            break;
        }
        case Semantics::Stable: {
            for (Mask m : select_masks(ctx, f, masks, Semantics::Preferred))
                if (range(m) == ctx.all) chosen.push_back(m);
            break;
        }
        case Semantics::SemiStable: {
            auto preferred = select_masks(ctx, f, masks, Semantics::Preferred);
            for (Mask m : preferred) {
                bool maximal_range =
                    std::none_of(preferred.begin(), preferred.end(), [&](Mask o) {
                        return range(o) != range(m) && subset(range(m), range(o));
                    });
                if (maximal_range) chosen.push_back(m);
            }
            break;
        }
        case Semantics::Grounded: {
            for (Mask m : masks) {
                bool minimal = std::none_of(masks.begin(), masks.end(),
                                            [&](Mask o) { return o != m && subset(o, m); });
                if (minimal) chosen.push_back(m);
            }
            if (chosen.size() != 1)
                throw InternalError("grounded selector: " + std::to_string(chosen.size()) +
                                    " subset-minimal complete extensions");
            break;
        }
        case Semantics::Ideal: {
            auto preferred = select_masks(ctx, f, masks, Semantics::Preferred);
            std::vector<Mask> contained;
            for (Mask m : masks) {
                bool in_all = std::all_of(preferred.begin(), preferred.end(),
                                          [&](Mask p) { return subset(m, p); });
                if (in_all) contained.push_back(m);
            }
            for (Mask m : contained) {
                bool biggest = std::none_of(contained.begin(), contained.end(),
                                            [&](Mask o) { return o != m && subset(m, o); });
                if (biggest) chosen.push_back(m);
            }
            if (chosen.size() != 1)
                throw InternalError("ideal selector: " + std::to_string(chosen.size()) +
                                    " candidates");
            break;
        }
        case Semantics::Complete:
            chosen = masks;
            break;
    }
    return chosen;
}

}  // namespace

std::vector<ElementSet> select_extensions(const std::vector<ElementSet>& cos, const Framework& f,
                                          Semantics which) {
    if (which == Semantics::Complete) return cos;

    Context ctx(f);
    std::vector<Mask> masks;
    for (const auto& e : cos) masks.push_back(ctx.to_mask(e));

    std::vector<ElementSet> out;
    for (Mask m : select_masks(ctx, f, masks, which)) out.push_back(ctx.to_set(m));
    return out;
}

Completion completion(const ElementSet& extension, const Framework& f) {
    Context ctx(f);
    Mask ext = ctx.to_mask(extension);
    return {extension, ctx.to_set(def_of(ctx, f, ext))};
}

Interpretation completion_interpretation(const ElementSet& extension, const Framework& f) {
    Context ctx(f);
    Mask ext = ctx.to_mask(extension);
    return make_completion(ctx, ext, def_of(ctx, f, ext));
}

}  // namespace arglp
