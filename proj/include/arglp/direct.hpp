// ============================================================================
// arglp/direct.hpp — direct extension semantics (the differential oracle)
// ============================================================================
//
// Everything here works on element sets and the per-kind defeated/acceptable
// definitions, with no logic-program machinery involved:
//
//   AF            Def / Acc over the attack relation
//   AFN, AFD      Def / Acc over the flattened AF (extended/complex attacks)
//   RAF           attacks defeated only when explicitly attacked
//   AFRA          attacks also defeated through their source
//   RAFN          recursive attack reachability through accepted supports;
//                 acceptability in the closed form with attack clauses
//                 ranging over all attack names (the form the rule
//                 derivation rests on -- quantifying only over attacks
//                 inside S misclassifies undecided attackers)
//   ASAF          extended defeat def_S, AFRA-style source handling
//   RAFD, AFRAD   the DEF / ACC fixpoint pairs are the defining semantics
//
// DEF is computed as the greatest fixpoint of its defining equation and ACC
// as the least fixpoint with DEF held fixed.  For every kind except AFRAD
// the DEF dependencies are acyclic, so greatest and least coincide; AFRAD
// can tie an argument to an attack it supports (argument a supporting an
// attack whose source is a), and only the greatest fixpoint marks such
// mutually-unfounded loops defeated, matching the logic-program side.
//
// A complete extension is a conflict-free fixpoint of the kind's acceptable
// set; preferred / stable / semi-stable / grounded / ideal select from the
// complete ones.  The completion of an extension E is (E, defeated(E)).
//
// ============================================================================

#ifndef ARGLP_DIRECT_HPP
#define ARGLP_DIRECT_HPP

#include <set>
#include <string>
#include <vector>

#include "arglp/framework.hpp"
#include "arglp/psm.hpp"

namespace arglp {

enum class Semantics { Complete, Preferred, Stable, SemiStable, Grounded, Ideal };

std::string to_string(Semantics s);
bool semantics_from_string(const std::string& text, Semantics& out);

// The PSM-side selector characterizing each extension semantics.
Selector selector_counterpart(Semantics s);

using ElementSet = std::set<std::string>;

struct DirectOptions {
    int element_limit = 16;  // maximum universe size for subset enumeration
    bool force = false;
};

// Defeated / acceptable sets w.r.t. S under the kind's own definitions.
ElementSet def_set(const Framework& f, const ElementSet& s);
ElementSet acc_set(const Framework& f, const ElementSet& s);

// The recursive DEF / ACC pair (greatest / least fixpoints as above).
std::pair<ElementSet, ElementSet> new_def_acc(const Framework& f, const ElementSet& s);

// All conflict-free fixpoints of the acceptable set, by subset enumeration,
// sorted by their completions in ternary-counter order over the universe.
std::vector<ElementSet> complete_extensions(const Framework& f, const DirectOptions& opts = {});

// Selects from the full complete-extension set of f.  Throws InternalError
// when grounded or ideal uniqueness fails.
std::vector<ElementSet> select_extensions(const std::vector<ElementSet>& cos, const Framework& f,
                                          Semantics which);

struct Completion {
    ElementSet pos;
    ElementSet neg;
    bool operator==(const Completion&) const = default;
};

Completion completion(const ElementSet& extension, const Framework& f);

// The completion as a three-valued assignment over universe order, directly
// comparable with models of the compiled program.
Interpretation completion_interpretation(const ElementSet& extension, const Framework& f);

}  // namespace arglp

#endif
