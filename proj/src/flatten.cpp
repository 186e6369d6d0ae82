#include "arglp/flatten.hpp"

#include <map>
#include <vector>

namespace arglp {

std::set<NamePair> support_closure(const std::set<NamePair>& pairs) {
    std::set<NamePair> closure = pairs;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<NamePair> fresh;
        for (const auto& [a, b] : closure)
            for (const auto& [c, d] : closure)
                if (b == c && !closure.count({a, d})) fresh.emplace_back(a, d);
        for (auto& p : fresh) changed |= closure.insert(std::move(p)).second;
    }
    for (const auto& [a, b] : closure) {
        if (a == b)
            throw ValidationError({Violation{
                ViolationCode::SupportCycle, "pair relation closes a cycle at '" + a + "'", {a}}});
    }
    return closure;
}

namespace {

enum class Rule { Original, Supported, Mediated };

struct FlatAttacks {
    std::map<NamePair, Rule> pairs;  // strongest provenance per pair
};

void add_pair(FlatAttacks& out, const NamePair& pair, Rule rule) {
    auto [it, inserted] = out.pairs.emplace(pair, rule);
    if (!inserted && rule < it->second) it->second = rule;
}

FlatAttacks flat_attacks(const Framework& f, bool deductive) {
    ensure_valid(f);
    if (f.kind != Kind::AF && f.kind != (deductive ? Kind::AFD : Kind::AFN))
        throw InternalError("flatten: framework is not an " +
                            std::string(deductive ? "AFD" : "AFN"));

    std::set<NamePair> direct;
    for (const auto& [_, e] : f.supports) direct.insert({e.source, e.target});
    auto paths = support_closure(direct);

    FlatAttacks out;
    for (const auto& [_, e] : f.attacks) add_pair(out, {e.source, e.target}, Rule::Original);
    for (const auto& [_, e] : f.attacks) {
        for (const auto& [c, d] : paths) {
            if (!deductive) {
                // attack a->c, path c=>+b  gives (a,b)
                if (c == e.target) add_pair(out, {e.source, d}, Rule::Supported);
                // path c=>+c', attack c->b  gives (c',b)
                if (c == e.source) add_pair(out, {d, e.target}, Rule::Mediated);
            } else {
                // path a=>+c, attack c->b  gives (a,b)
                if (d == e.source) add_pair(out, {c, e.target}, Rule::Supported);
                // attack a->c, path b=>+c  gives (a,b)
                if (d == e.target) add_pair(out, {e.source, c}, Rule::Mediated);
            }
        }
    }
    return out;
}

Framework assemble(const Framework& f, const FlatAttacks& flat, bool keep_mediated) {
    Framework out;
    out.kind = Kind::AF;
    out.args = f.args;

    std::set<std::string> used = f.args;
    std::map<NamePair, std::string> original_name;
    for (const auto& [name, e] : f.attacks) {
        used.insert(name);
        original_name.emplace(NamePair{e.source, e.target}, name);
    }

    auto next_name = [&used](const char* prefix, int& counter) {
        std::string name;
        do {
            name = prefix + std::to_string(++counter);
        } while (used.count(name));
        used.insert(name);
        return name;
    };

    int sup_counter = 0, med_counter = 0;
    for (const auto& [pair, rule] : flat.pairs) {
        switch (rule) {
            case Rule::Original:
                out.attacks.emplace(original_name.at(pair), Interaction{pair.first, pair.second});
                break;
            case Rule::Supported:
                out.attacks.emplace(next_name("supx_", sup_counter),
                                    Interaction{pair.first, pair.second});
                break;
            case Rule::Mediated:
                if (keep_mediated)
                    out.attacks.emplace(next_name("medx_", med_counter),
                                        Interaction{pair.first, pair.second});
                break;
        }
    }
    return out;
}

}  // namespace

Framework flatten_afn(const Framework& f) { return assemble(f, flat_attacks(f, false), true); }

Framework flatten_afd(const Framework& f) { return assemble(f, flat_attacks(f, true), true); }

Framework strip_mediated(const Framework& f) { return assemble(f, flat_attacks(f, false), false); }

bool mediated_attack_safe(const Framework& f) {
    if (f.kind != Kind::AFN && f.kind != Kind::AFD) return true;

    // Contrapositive complex attacks (mediated under the necessary reading,
    // supported under the deductive one) emanate from arguments that carry a
    // support obligation.  When such an attack also lands on an argument
    // carrying one, it can defeat or block a support chain whose acceptance
    // it presupposes, and the flattened frame admits extensions that are not
    // closed under the support reading.  Keeping the obligated side of every
    // attack single-ended rules that out: under the necessary reading no
    // attack may connect two support sources, under the deductive reading no
    // attack may connect two support targets.
    std::set<std::string> obligated;
    for (const auto& [_, e] : f.supports)
        obligated.insert(f.kind == Kind::AFN ? e.source : e.target);

    for (const auto& [_, attack] : f.attacks) {
        if (obligated.count(attack.source) && obligated.count(attack.target)) return false;
    }
    return true;
}

}  // namespace arglp
