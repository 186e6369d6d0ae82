#include "arglp/framework.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace arglp {

namespace {

const char* kKindNames[] = {"af", "afn", "afd", "raf", "afra", "rafn", "asaf", "rafd", "afrad"};

bool is_valid_name(const std::string& name) {
    if (name.empty()) return false;
    if (name.size() >= 2 && name[0] == '_' && name[1] == '_') return false;  // reserved
    auto head = name[0];
    if (!(std::isalpha(static_cast<unsigned char>(head)) || head == '_')) return false;
    return std::all_of(name.begin() + 1, name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

}  // namespace

const std::vector<Kind>& all_kinds() {
    static const std::vector<Kind> kinds = {Kind::AF,   Kind::AFN,  Kind::AFD,
                                            Kind::RAF,  Kind::AFRA, Kind::RAFN,
                                            Kind::ASAF, Kind::RAFD, Kind::AFRAD};
    return kinds;
}

std::string to_string(Kind kind) { return kKindNames[static_cast<int>(kind)]; }

bool kind_from_string(const std::string& text, Kind& out) {
    for (Kind k : all_kinds()) {
        if (text == kKindNames[static_cast<int>(k)]) {
            out = k;
            return true;
        }
    }
    return false;
}

bool kind_has_attack_elements(Kind kind) {
    return kind == Kind::RAF || kind == Kind::AFRA || kind_has_support_elements(kind);
}

bool kind_has_support_elements(Kind kind) {
    return kind == Kind::RAFN || kind == Kind::ASAF || kind == Kind::RAFD || kind == Kind::AFRAD;
}

bool kind_allows_supports(Kind kind) {
    return kind != Kind::AF && kind != Kind::RAF && kind != Kind::AFRA;
}

std::string to_string(ElementClass cls) {
    switch (cls) {
        case ElementClass::Argument: return "argument";
        case ElementClass::Attack: return "attack";
        case ElementClass::Support: return "support";
    }
    return "?";
}

std::string to_string(ViolationCode code) {
    switch (code) {
        case ViolationCode::UnknownTarget: return "UnknownTarget";
        case ViolationCode::SourceNotArgument: return "SourceNotArgument";
        case ViolationCode::SupportCycle: return "SupportCycle";
        case ViolationCode::KindTargetViolation: return "KindTargetViolation";
        case ViolationCode::NameClash: return "NameClash";
        case ViolationCode::InvalidName: return "InvalidName";
    }
    return "?";
}

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error([&violations] {
          std::ostringstream out;
          out << "invalid framework:";
          for (const auto& v : violations) out << "\n  " << to_string(v.code) << ": " << v.message;
          return out.str();
      }()),
      violations_(std::move(violations)) {}

namespace {

// DFS cycle search over a name->targets relation; fills `cycle` with the
// element names along the first cycle found.
bool find_cycle(const std::map<std::string, std::vector<std::string>>& edges,
                std::vector<std::string>& cycle) {
    std::map<std::string, int> state;  // 0 unseen, 1 on stack, 2 done
    std::vector<std::string> stack;

    std::function<bool(const std::string&)> visit = [&](const std::string& node) {
        state[node] = 1;
        stack.push_back(node);
        auto it = edges.find(node);
        if (it != edges.end()) {
            for (const auto& next : it->second) {
                int s = state.count(next) ? state[next] : 0;
                if (s == 1) {
                    auto pos = std::find(stack.begin(), stack.end(), next);
                    cycle.assign(pos, stack.end());
                    return true;
                }
                if (s == 0 && visit(next)) return true;
            }
        }
        stack.pop_back();
        state[node] = 2;
        return false;
    };

    for (const auto& [node, _] : edges) {
        if ((state.count(node) ? state[node] : 0) == 0 && visit(node)) return true;
    }
    return false;
}

}  // namespace

std::vector<Violation> validate(const Framework& f) {
    std::vector<Violation> out;
    auto report = [&out](ViolationCode code, std::string msg, std::vector<std::string> elems = {}) {
        out.push_back(Violation{code, std::move(msg), std::move(elems)});
    };

    // Name well-formedness and cross-class clashes.
    std::map<std::string, ElementClass> owner;
    auto claim = [&](const std::string& name, ElementClass cls) {
        if (!is_valid_name(name)) {
            report(ViolationCode::InvalidName,
                   "'" + name + "' is not a legal element name", {name});
        }
        auto [it, inserted] = owner.emplace(name, cls);
        if (!inserted) {
            report(ViolationCode::NameClash,
                   "'" + name + "' names both " + to_string(it->second) + " and " + to_string(cls),
                   {name});
        }
    };
    for (const auto& a : f.args) claim(a, ElementClass::Argument);
    for (const auto& [name, _] : f.attacks) claim(name, ElementClass::Attack);
    for (const auto& [name, _] : f.supports) claim(name, ElementClass::Support);

    auto class_of = [&](const std::string& name) -> const ElementClass* {
        auto it = owner.find(name);
        return it == owner.end() ? nullptr : &it->second;
    };

    // Supports are only meaningful for the BAF and Rec-BAF kinds.
    if (!kind_allows_supports(f.kind) && !f.supports.empty()) {
        for (const auto& [name, _] : f.supports) {
            report(ViolationCode::KindTargetViolation,
                   "kind '" + to_string(f.kind) + "' does not admit supports ('" + name + "')",
                   {name});
        }
    }

    auto check_edge = [&](const std::string& name, const Interaction& edge, bool is_attack) {
        const ElementClass* src = class_of(edge.source);
        if (src == nullptr || *src != ElementClass::Argument) {
            report(ViolationCode::SourceNotArgument,
                   "source '" + edge.source + "' of '" + name + "' is not a declared argument",
                   {name, edge.source});
        }
        const ElementClass* tgt = class_of(edge.target);
        if (tgt == nullptr) {
            report(ViolationCode::UnknownTarget,
                   "target '" + edge.target + "' of '" + name + "' is not declared",
                   {name, edge.target});
            return;
        }
        if (*tgt == ElementClass::Argument) return;  // arguments are legal targets everywhere
        bool ok = is_attack ? (*tgt == ElementClass::Attack ? kind_has_attack_elements(f.kind)
                                                            : kind_has_support_elements(f.kind))
                            : (*tgt == ElementClass::Attack ? kind_has_support_elements(f.kind)
                                                            : kind_has_support_elements(f.kind));
        if (!ok) {
            report(ViolationCode::KindTargetViolation,
                   "'" + name + "' targets " + to_string(*tgt) + " '" + edge.target +
                       "', which kind '" + to_string(f.kind) + "' does not allow",
                   {name, edge.target});
        }
    };
    for (const auto& [name, edge] : f.attacks) check_edge(name, edge, true);
    for (const auto& [name, edge] : f.supports) check_edge(name, edge, false);

    // Acyclicity of the support pair relation (source -> target) and of
    // name-level support-on-support chains.
    std::map<std::string, std::vector<std::string>> pair_edges;
    std::map<std::string, std::vector<std::string>> name_edges;
    for (const auto& [name, edge] : f.supports) {
        pair_edges[edge.source].push_back(edge.target);
        if (f.supports.count(edge.target)) name_edges[name].push_back(edge.target);
    }
    std::vector<std::string> cycle;
    if (find_cycle(pair_edges, cycle)) {
        report(ViolationCode::SupportCycle, "support relation is cyclic", cycle);
    } else if (find_cycle(name_edges, cycle)) {
        report(ViolationCode::SupportCycle, "support names form a targeting cycle", cycle);
    }

    return out;
}

void ensure_valid(const Framework& f) {
    auto violations = validate(f);
    if (!violations.empty()) throw ValidationError(std::move(violations));
}

std::vector<Element> universe(const Framework& f) {
    std::vector<Element> out;
    for (const auto& a : f.args) out.push_back({a, ElementClass::Argument});
    if (kind_has_attack_elements(f.kind)) {
        for (const auto& [name, _] : f.attacks) out.push_back({name, ElementClass::Attack});
    }
    if (kind_has_support_elements(f.kind)) {
        for (const auto& [name, _] : f.supports) out.push_back({name, ElementClass::Support});
    }
    return out;  // std::set/std::map iteration already gives class-then-name order
}

std::vector<std::string> universe_names(const Framework& f) {
    std::vector<std::string> out;
    for (auto& e : universe(f)) out.push_back(e.name);
    return out;
}

}  // namespace arglp
