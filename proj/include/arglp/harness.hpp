// ============================================================================
// arglp/harness.hpp — random instance generator, DOT export, engine diff
// ============================================================================

#ifndef ARGLP_HARNESS_HPP
#define ARGLP_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "arglp/direct.hpp"
#include "arglp/framework.hpp"
#include "arglp/psm.hpp"

namespace arglp {

struct GenSpec {
    Kind kind = Kind::AF;
    int n_args = 0;
    int n_atts = 0;
    int n_sups = 0;
    double recursion_rate = 0.0;  // fraction of interactions targeting non-arguments
    std::uint64_t seed = 0;
};

// Deterministic in the seed; exact element counts after kind coercions
// (reported through `warnings`); valid by construction: support pairs follow
// a random topological order over the arguments and support-on-support edges
// only point to later names.
Framework random_framework(const GenSpec& spec, std::vector<std::string>* warnings = nullptr);

// Directed-graph text: arguments are plain nodes; every attack/support is a
// labeled midpoint node with an edge into its target, so interactions
// targeting interactions stay representable.  Attacks solid, supports bold
// and doubled.
std::string export_dot(const Framework& f);

struct DiffReport {
    Semantics semantics = Semantics::Complete;
    bool match = true;
    std::vector<std::string> atoms;            // universe order
    std::vector<Interpretation> lp_only;       // completions only the LP engine finds
    std::vector<Interpretation> direct_only;   // completions only the oracle finds

    // First differing model in canonical order, as (side, model) when any.
    std::string render_text() const;
    std::string render_json() const;
};

// Runs the LP pipeline and the direct oracle under one semantics and reports
// the symmetric difference of their completion sets.
DiffReport diff_frameworks(const Framework& f, Semantics sem, const EnumOptions& lp_opts = {},
                           const DirectOptions& direct_opts = {});

}  // namespace arglp

#endif
