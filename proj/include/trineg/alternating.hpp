#pragma once

#include <vector>

#include "trineg/semantics.hpp"
#include "trineg/syntax.hpp"

namespace trineg {

class ProgramClassError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

bool is_definite(const Program& program);
bool is_lp(const Program& program);
void require_definite(const Program& program);
void require_lp(const Program& program);

AtomSet complement(const AtomSet& s, const AtomSet& base);

// One application of the van-Emden-Kowalski step: heads of clauses whose
// whole body lies in the given set.
AtomSet immediate_consequence(const Program& definite, const AtomSet& atoms);

AtomSet lfp_definite(const Program& definite);

// Keeps a clause iff every default-negated atom is in k, dropping the
// negated literals.
Program reduct(const Program& lp, const AtomSet& k);

AtomSet derivable_under(const Program& lp, const AtomSet& k);  // S_P

// Alternating operator on false-set candidates:
//   comp(S_P(comp(S_P(k)))), complements relative to the program base.
// Monotone; its least fixpoint is the well-founded false set.
AtomSet alternating_operator(const Program& lp, const AtomSet& k);

// The uncorrected one-complement composition S_P(comp(S_P(k))), exposed for
// comparison only; carries no semantic claims.
AtomSet alternating_operator_literal(const Program& lp, const AtomSet& k);

std::vector<Interpretation> three_valued_stable_models(const Program& lp,
                                                       std::size_t guard = kDefaultGuard);

Interpretation well_founded_model(const Program& lp);

}  // namespace trineg
