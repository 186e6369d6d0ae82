// ============================================================================
// arglp/program.hpp — propositional programs and their normal form
// ============================================================================
//
// A PropProgram has exactly one rule per atom; bodies are formula trees over
// {true, literal, and, or}.  compile() derives the program of a framework:
//
//   AF     a <- /\ {~b : (b,a) attack}
//   AFN    a <- /\ {~b : (b,a) attack} & /\ {c : (c,a) support}
//   AFD    a <- /\ {~b : (b,a) attack} & /\ {c : (a,c) support}
//   RAFN   X <- /\ {(~al | ~src(al)) : tgt(al)=X} & /\ {(~be | src(be)) : tgt(be)=X}
//   ASAF   X <- phi(X) & /\ {~al : tgt(al)=X} & /\ {(~be | src(be)) : tgt(be)=X}
//   RAFD   X <- /\ {(~al | ~src(al)) : tgt(al)=X} & /\ {(~be | tgt(be)) : src(be)=X}
//   AFRAD  X <- phi(X) & /\ {~al : tgt(al)=X} & /\ {(~be | tgt(be)) : src(be)=X}
//
// with phi(X) = src(X) for attack names and true otherwise; RAF and AFRA are
// the support-free cases of RAFN and ASAF.  Empty conjunctions are facts.
//
// normalize() rewrites every disjunctive clause (l1 | ... | lk) into ~f for a
// fresh atom f defined by  f <- ~l1 & ... & ~lk  (literals complemented),
// yielding a normal program whose bodies are literal conjunctions.  Fresh
// atoms use the reserved prefix "__f" and are excluded from every
// extension-facing atom list downstream.
//
// ============================================================================

#ifndef ARGLP_PROGRAM_HPP
#define ARGLP_PROGRAM_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "arglp/framework.hpp"

namespace arglp {

// Body formula node.  And/Or children are nonempty.
struct Formula {
    enum class Tag { True, Literal, And, Or };

    Tag tag = Tag::True;
    bool positive = true;  // Literal
    int atom = -1;         // Literal: index into the owning program's atoms
    std::vector<Formula> children;

    static Formula constant_true() { return {}; }
    static Formula literal(int atom, bool positive) {
        Formula f;
        f.tag = Tag::Literal;
        f.atom = atom;
        f.positive = positive;
        return f;
    }
    static Formula conj(std::vector<Formula> children);
    static Formula disj(std::vector<Formula> children);

    bool operator==(const Formula&) const = default;
};

struct PropProgram {
    std::vector<std::string> atoms;  // alphabet, universe order
    std::vector<Formula> rules;      // rules[i] is the body of atoms[i]

    int atom_index(const std::string& name) const;  // -1 if absent
    bool operator==(const PropProgram&) const = default;
};

struct Literal {
    int atom;
    bool positive;
    bool operator==(const Literal&) const = default;
    auto operator<=>(const Literal&) const = default;
};

struct NormalRule {
    int head;
    std::vector<Literal> body;  // conjunction; empty = fact
    bool operator==(const NormalRule&) const = default;
};

struct NormalProgram {
    std::vector<std::string> atoms;  // originals first, then fresh (__fN)
    std::size_t num_original = 0;
    std::vector<NormalRule> rules;   // universe order, then fresh definitions

    // fresh atom -> the disjunctive clause it replaced
    std::vector<std::pair<int, std::vector<Literal>>> fresh;

    bool is_fresh(int atom) const { return atom >= static_cast<int>(num_original); }
    int atom_index(const std::string& name) const;
    bool operator==(const NormalProgram&) const = default;
};

// Derives the propositional program of a valid framework (one rule per
// universe element).  Clause lists follow universe order of the interacting
// element, so output is deterministic.
PropProgram compile(const Framework& f);

// Rewrites disjunctive clauses with fresh atoms as described above.  Fresh
// numbering is deterministic in rule order.  Throws ReservedAtomError if the
// input already uses "__f" atoms.
NormalProgram normalize(const PropProgram& p);

}  // namespace arglp

#endif
