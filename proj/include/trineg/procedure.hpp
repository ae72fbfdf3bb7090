#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "trineg/equations.hpp"
#include "trineg/semantics.hpp"
#include "trineg/syntax.hpp"

namespace trineg {

// Goal with order and multiplicity erased; keeps resolution saturation finite.
using CanonicalGoal = std::set<Literal>;

// Goals reachable by SLD resolution from <- atom.
std::set<CanonicalGoal> res(const Program& program, const Atom& atom);

// The subset of res() containing no positive literal; the empty goal
// qualifies vacuously.
std::set<CanonicalGoal> n_res(const Program& program, const Atom& atom);

// Test oracle: membership of the atom in sigma agrees with the existence of
// an all-negative resolvent whose assumptions lie in the respective sets.
bool sigma_nres_equivalence(const Program& program, const TriReductArgs& args,
                            const Atom& atom);

struct ClosureState {
  AtomSet suc_atoms;
  AtomSet fail_atoms;
  auto operator<=>(const ClosureState&) const = default;
};

// Least closure of the success/failure rules, with the two negative premises
// ("no suc(<- A)", "no fail(<- A)") answered by the fixed oracle pair (t, f).
ClosureState closure_with_oracle(const Program& program, const AtomSet& t,
                                 const AtomSet& f);

struct AdmissibleSet {
  std::vector<std::pair<AtomSet, AtomSet>> pairs;
  std::optional<std::pair<AtomSet, AtomSet>> canonical;  // componentwise intersection
};

// A disjoint pair is admissible iff the closure it induces as its own oracle
// derives exactly that pair.
AdmissibleSet admissible_pairs(const Program& program,
                               std::size_t guard = kDefaultGuard,
                               bool include_non_disjoint = false);

enum class Verdict { Succeeds, Fails, Unknown };

const char* verdict_name(Verdict v);

class NoAdmissibleClosureError : public std::runtime_error {
 public:
  NoAdmissibleClosureError() : std::runtime_error("no admissible closure exists") {}
};

// Skeptical answer from the canonical pair; goal atoms outside the program
// base count as failed (they have no clause).
Verdict query(const Program& program, const Goal& goal,
              std::size_t guard = kDefaultGuard);
Verdict query_against(const Program& program, const AdmissibleSet& admissible,
                      const Goal& goal);

struct SoundnessViolation {
  std::pair<AtomSet, AtomSet> pair;
  std::string check;  // which of model / true-fixpoint / false-bound failed
};

// Checks every admissible pair against the model-theoretic guarantees of the
// procedure; expected to come back empty for every program.
std::vector<SoundnessViolation> soundness_report(const Program& program,
                                                 std::size_t guard = kDefaultGuard);

}  // namespace trineg
