#pragma once

#include <stdexcept>
#include <vector>

#include "trineg/syntax.hpp"

namespace trineg {

enum class Truth { False = 0, Undef = 1, True = 2 };  // f < u < t

char truth_char(Truth v);

enum class Negation { Default, Weak, Strict };

// Disjoint (true set, false set); everything else is undefined.
struct Interpretation {
  AtomSet true_set;
  AtomSet false_set;
  auto operator<=>(const Interpretation&) const = default;
};

// Thrown when true/false sets overlap, or reach outside a program base.
class InterpretationError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown when an enumeration would exceed the atom-count guard.
class GuardError : public std::runtime_error {
 public:
  GuardError(std::size_t base_size, std::size_t limit)
      : std::runtime_error("base has " + std::to_string(base_size) +
                           " atoms, enumeration guard is " + std::to_string(limit)),
        base_size(base_size),
        limit(limit) {}
  std::size_t base_size;
  std::size_t limit;
};

constexpr std::size_t kDefaultGuard = 12;

void require_disjoint(const Interpretation& interp);

Truth atom_truth(const Interpretation& interp, const Atom& atom);
Truth negate(Negation kind, Truth v);
Truth literal_truth(const Interpretation& interp, const Literal& lit);
Truth body_truth(const Interpretation& interp, const std::vector<Literal>& body);
Truth clause_truth(const Interpretation& interp, const Clause& clause);
bool is_model(const Interpretation& interp, const Program& program);

std::vector<Interpretation> enumerate_models(const Program& program,
                                             std::size_t guard = kDefaultGuard);

// Inner mapping applied first, then outer.
Truth negation_chain_truth(Negation outer, Negation inner, Truth v);

std::string render(const Interpretation& interp);

}  // namespace trineg
