// ============================================================================
// arglp/io.hpp — framework text format, program text, model JSON
// ============================================================================
//
// Framework text format (one syntax for all nine kinds):
//
//   file := ("#kind:" kind)? stmt*          kind defaults to af
//   stmt := "arg(" name ")."
//         | "att(" name "," name "," name ")."      (id, source, target)
//         | "att(" name "," name ")."               (source, target)
//         | "sup(" name "," name "," name ")."
//         | "sup(" name "," name ")."
//
//   Whitespace is insignificant and '%' starts a line comment.  Two-argument
//   forms get generated ids att_1, att_2, ... / sup_1, ... in order of
//   appearance; a user id that collides with a generated one is an error.
//
// Model output is one JSON object per model,
//   {"pos":[...],"neg":[...],"undef":[...]}
// with every list in universe order.  Program output is plain text, one rule
// per line.  Emission is deterministic: equal values give identical bytes.
//
// ============================================================================

#ifndef ARGLP_IO_HPP
#define ARGLP_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "arglp/framework.hpp"
#include "arglp/program.hpp"
#include "arglp/psm.hpp"

namespace arglp {

// Parses the text format above, applies validate(), and returns the
// framework.  Throws ParseError (syntax, auto-name clash) or ValidationError.
Framework parse_framework(std::string_view text);

// Inverse of parse_framework up to value equality, statements in canonical
// (class-then-name) order.
std::string emit_framework(const Framework& f);

// One compact JSON object for a model over the given atom order.
std::string emit_model(const Interpretation& m, const std::vector<std::string>& atoms);

// Propositional form:  head <- C1 & C2.   with literals a / ~a, parenthesized
// disjunctions (l1 | l2), and  head <- true.  for empty bodies.
std::string emit_program(const PropProgram& p);

// Normal form:  head :- l1, ..., ln.   with  not a  for negative literals and
// head.  for facts.
std::string emit_program(const NormalProgram& p);

}  // namespace arglp

#endif
