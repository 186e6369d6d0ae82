// ============================================================================
// arglp/framework.hpp — unified data model for the nine framework kinds
// ============================================================================
//
// Design notes:
//
//   One value type, Framework, represents every kind.  Attacks and supports
//   are stored as named interactions (id -> source/target) even for the flat
//   kinds, where the names are parser-generated sugar.  What changes per kind
//   is which names count as semantic *elements*:
//
//     AF, AFN, AFD          elements = arguments
//     RAF, AFRA             elements = arguments + attack names
//     RAFN, ASAF,
//     RAFD, AFRAD           elements = arguments + attack + support names
//
//   universe() returns the element list in canonical order (class rank
//   Argument < Attack < Support, then name), which fixes iteration order for
//   program compilation, model emission and extension listings.
//
//   Frameworks are immutable values after construction; all free functions
//   here are pure.
//
// ============================================================================

#ifndef ARGLP_FRAMEWORK_HPP
#define ARGLP_FRAMEWORK_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "arglp/errors.hpp"

namespace arglp {

enum class Kind { AF, AFN, AFD, RAF, AFRA, RAFN, ASAF, RAFD, AFRAD };

// All nine kinds, in declaration order.
const std::vector<Kind>& all_kinds();

std::string to_string(Kind kind);
bool kind_from_string(const std::string& text, Kind& out);

// True for the Rec-AF and Rec-BAF kinds, whose attack names are elements.
bool kind_has_attack_elements(Kind kind);
// True for the Rec-BAF kinds, whose support names are elements.
bool kind_has_support_elements(Kind kind);
// False for AF, RAF and AFRA, which have no support relation at all.
bool kind_allows_supports(Kind kind);

enum class ElementClass { Argument, Attack, Support };

std::string to_string(ElementClass cls);

struct Element {
    std::string name;
    ElementClass cls;
    bool operator==(const Element&) const = default;
    auto operator<=>(const Element&) const = default;
};

// A named attack or support edge.
struct Interaction {
    std::string source;
    std::string target;
    bool operator==(const Interaction&) const = default;
    auto operator<=>(const Interaction&) const = default;
};

struct Framework {
    Kind kind = Kind::AF;
    std::set<std::string> args;
    std::map<std::string, Interaction> attacks;
    std::map<std::string, Interaction> supports;

    bool operator==(const Framework&) const = default;
};

// Checks every structural invariant and reports all violations found:
// name well-formedness, cross-class name clashes, source/target resolution,
// per-kind target domains, and acyclicity of the support relation (both the
// source->target pair relation and name-level support-on-support chains).
// An empty result means the framework is valid.
std::vector<Violation> validate(const Framework& f);

// Convenience: run validate() and throw ValidationError on any violation.
void ensure_valid(const Framework& f);

// The semantic element list of a valid framework, in canonical order.
std::vector<Element> universe(const Framework& f);

// Names of universe(f), same order.
std::vector<std::string> universe_names(const Framework& f);

}  // namespace arglp

#endif
