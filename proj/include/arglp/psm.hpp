// ============================================================================
// arglp/psm.hpp — partial stable models of propositional / normal programs
// ============================================================================
//
// Three-valued machinery (truth order False < Undef < True, ~Undef = Undef):
//
//   * eval_body      Kleene evaluation of a body formula (and = min, or = max)
//   * reduct         positive instantiation of a normal program w.r.t. a
//                    partial model: drop rules with a false negative literal
//                    or a wholly-undefined literal, strip remaining negatives
//   * least_model    fixpoint of the immediate-consequence operator
//   * is_partial_model / is_founded   the corresponding §-style checks
//   * is_psm         the three-valued stable condition: substitute every
//                    negated atom by its value under M, take the least
//                    three-valued model of the resulting monotone program by
//                    Kleene iteration from all-False, require equality with M
//   * enumerate_psms exhaustive enumeration (branch on atoms that occur
//                    negated, with interval propagation of the least-model
//                    bounds; sound and complete, output in ternary-counter
//                    order over the program's atom order)
//   * select         the WF / MS / ST / LM / MD selector family
//   * well_founded   alternating-fixpoint well-founded model of a normal
//                    program; independent fast path, cross-checked in tests
//                    against the subset-minimal enumerated PSM
//
// Interpretations are value vectors indexed by the owning program's atom
// order; (pos, neg) set views are available for I/O and assertions.
//
// ============================================================================

#ifndef ARGLP_PSM_HPP
#define ARGLP_PSM_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "arglp/program.hpp"

namespace arglp {

enum class TruthValue : std::uint8_t { False = 0, Undef = 1, True = 2 };

constexpr TruthValue negate(TruthValue v) {
    return static_cast<TruthValue>(2 - static_cast<int>(v));
}
constexpr TruthValue meet(TruthValue a, TruthValue b) { return a < b ? a : b; }
constexpr TruthValue join(TruthValue a, TruthValue b) { return a < b ? b : a; }

std::string to_string(TruthValue v);

// A consistent three-valued assignment over a fixed atom list.
struct Interpretation {
    std::vector<TruthValue> values;

    Interpretation() = default;
    explicit Interpretation(std::size_t n, TruthValue fill = TruthValue::Undef)
        : values(n, fill) {}
    explicit Interpretation(std::vector<TruthValue> v) : values(std::move(v)) {}

    // Builds from (pos, neg) name sets over the given atom order; atoms in
    // neither set are Undef.  Throws InternalError on unknown names (the two
    // sets cannot overlap by construction of the value vector; a name in both
    // would silently need two values, so that is rejected too).
    static Interpretation from_sets(const std::vector<std::string>& atoms,
                                    const std::set<std::string>& pos,
                                    const std::set<std::string>& neg);

    TruthValue operator[](std::size_t i) const { return values[i]; }
    std::size_t size() const { return values.size(); }
    bool total() const;

    std::set<std::string> pos_names(const std::vector<std::string>& atoms) const;
    std::set<std::string> neg_names(const std::vector<std::string>& atoms) const;
    std::set<std::string> undef_names(const std::vector<std::string>& atoms) const;

    bool operator==(const Interpretation&) const = default;
    // Ternary-counter order: lexicographic on values with False < Undef < True.
    auto operator<=>(const Interpretation&) const = default;
};

// Literal-set containment: pos(a) included in pos(b) and neg(a) in neg(b).
bool subset_of(const Interpretation& a, const Interpretation& b);

// Kleene value of a body formula under m.  Formula literals must index into
// m; use the name-based overload to evaluate against named atoms (throws
// InternalError on an unknown atom).
TruthValue eval_body(const Formula& body, const Interpretation& m);
TruthValue eval_body(const Formula& body, const PropProgram& p, const Interpretation& m);

// Negation-free program produced by reduct(); least_model() iterates its
// immediate-consequence operator from the empty set.
struct PositiveProgram {
    std::size_t atom_count = 0;
    std::vector<std::pair<int, std::vector<int>>> rules;  // head, positive body atoms
};

PositiveProgram reduct(const NormalProgram& n, const Interpretation& m);
std::vector<int> least_model(const PositiveProgram& q);  // sorted atom indices

bool is_partial_model(const NormalProgram& n, const Interpretation& m);
bool is_founded(const NormalProgram& n, const Interpretation& m);

bool is_psm(const PropProgram& p, const Interpretation& m);

// For programs produced by normalize(), negated fresh atoms are read through
// the fresh registry as the disjunctions they abbreviate; a fresh atom is an
// abbreviation, not an independent proposition, and reading ~f literally
// would let the double negation found a positive loop on itself.  Programs
// without a registry are checked as written.
bool is_psm(const NormalProgram& n, const Interpretation& m);

struct EnumOptions {
    int atom_limit = 14;  // maximum enumerable atoms (fresh atoms excluded)
    bool force = false;   // bypass the limit
};

// All partial stable models, sorted in ternary-counter order over the
// program's atom order.  Throws ResourceLimitError past the atom limit.
std::vector<Interpretation> enumerate_psms(const PropProgram& p, const EnumOptions& opts = {});

// Same for a normal program; enumeration ranges over non-fresh atoms and
// fresh values are derived from their single defining rule.  The returned
// interpretations cover the full atom list (fresh included); use
// project_model() for the original-alphabet view.
std::vector<Interpretation> enumerate_psms(const NormalProgram& n, const EnumOptions& opts = {});

// Restriction of a model of n to the non-fresh atoms.
Interpretation project_model(const Interpretation& m, const NormalProgram& n);

// Study aid, not part of any correctness claim: the subset-maximal founded
// partial models.  Reading "stable" as maximal-founded drops non-maximal
// members that the three-valued stable condition keeps (the empty model of an
// even attack cycle, for instance), so the engine proper never uses this.
std::vector<Interpretation> maximal_founded_models(const NormalProgram& n,
                                                   const EnumOptions& opts = {});

enum class Selector { WF, MS, ST, LM, MD };

std::string to_string(Selector s);
bool selector_from_string(const std::string& text, Selector& out);

// Applies a selector to the full PSM set of one program:
//   WF  unique subset-minimal model          MS  subset-maximal models
//   ST  total members of MS                  LM  members of MS with
//                                                subset-minimal undefined set
//   MD  unique subset-maximal model contained in every MS member
// Throws InternalError when WF or MD uniqueness fails.
std::vector<Interpretation> select(const std::vector<Interpretation>& models, Selector which);

// Alternating-fixpoint well-founded model.
Interpretation well_founded(const NormalProgram& n);

}  // namespace arglp

#endif
