#pragma once

#include <optional>
#include <vector>

#include "trineg/alternating.hpp"
#include "trineg/semantics.hpp"
#include "trineg/syntax.hpp"

namespace trineg {

// Membership assumptions for the three negation kinds: a clause survives the
// reduct iff its not-atoms are all in `not_in`, ~w-atoms in `weak_in`, and
// ~s-atoms in `strict_in`. No disjointness is required between the sets.
struct TriReductArgs {
  AtomSet not_in;
  AtomSet weak_in;
  AtomSet strict_in;
};

Program tri_reduct(const Program& program, const TriReductArgs& args);

// Least fixpoint of the reduct; monotone in each component of args.
AtomSet sigma(const Program& program, const TriReductArgs& args);

// All disjoint pairs (T, F) over the base with
//   T = sigma(F, comp(T), F)  and  F = comp(sigma(comp(T), comp(T), F)).
std::vector<Interpretation> solve_semantic_equations(const Program& program,
                                                     std::size_t guard = kDefaultGuard);

struct ConditionReport {
  bool disjoint = false;        // (a) T and F do not overlap
  bool true_fixpoint = false;   // (b) sigma(F, comp T, F) = T
  bool false_coherent = false;  // (c) sigma(comp T, comp T, F) avoids F
  bool false_supported = false; // (d) every clause with head in F is blocked
  std::string witness_a, witness_b, witness_c, witness_d;

  bool all() const {
    return disjoint && true_fixpoint && false_coherent && false_supported;
  }
};

ConditionReport check_model_conditions(const Program& program, const AtomSet& t,
                                       const AtomSet& f);

}  // namespace trineg
