// ============================================================================
// arglp/flatten.hpp — BAF -> AF reduction via extended / complex attacks
// ============================================================================
//
// Necessary reading (AFN): an attack a->c plus a support path c=>+b yields
// the supported attack (a,b); a support path c=>+c' plus an attack c->b
// yields the mediated attack (c',b).  Deductive reading (AFD): a support path
// a=>+c plus an attack c->b yields the supported attack (a,b); an attack
// a->c plus a support path b=>+c yields the mediated attack (a,b).
//
// Synthesized attacks are deduplicated by (source,target) pair and named
// supx_N / medx_N so that provenance stays visible; strip_mediated() drops
// exactly the pairs that exist only through the mediated rule.
//
// ============================================================================

#ifndef ARGLP_FLATTEN_HPP
#define ARGLP_FLATTEN_HPP

#include <set>
#include <string>
#include <utility>

#include "arglp/framework.hpp"

namespace arglp {

using NamePair = std::pair<std::string, std::string>;

// Transitive closure of an acyclic pair relation.  Contains the input and
// never a reflexive pair; throws ValidationError (SupportCycle) if one would
// arise.
std::set<NamePair> support_closure(const std::set<NamePair>& pairs);

// AFN -> AF with extended attacks; accepts AF input as the degenerate case.
Framework flatten_afn(const Framework& f);

// AFD -> AF with complex attacks; accepts AF input as the degenerate case.
Framework flatten_afd(const Framework& f);

// flatten_afn(f) minus the attacks that exist only through the mediated rule.
Framework strip_mediated(const Framework& f);

// True when no attack connects two support sources (necessary reading) or
// two support targets (deductive reading).  Outside this class the
// contrapositive complex attacks can defeat or block a support chain whose
// acceptance they presuppose, and the flattened frame admits extensions that
// are not closed under the support reading; inside it they are inert at
// complete extensions.
bool mediated_attack_safe(const Framework& f);

}  // namespace arglp

#endif
