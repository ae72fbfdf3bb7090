#include "trineg/semantics.hpp"

#include <algorithm>

namespace trineg {

char truth_char(Truth v) {
  switch (v) {
    case Truth::True: return 't';
    case Truth::Undef: return 'u';
    case Truth::False: return 'f';
  }
  return '?';
}

void require_disjoint(const Interpretation& interp) {
  for (const Atom& a : interp.true_set) {
    if (interp.false_set.count(a)) {
      throw InterpretationError("true and false sets overlap on '" + a + "'");
    }
  }
}

Truth atom_truth(const Interpretation& interp, const Atom& atom) {
  if (interp.true_set.count(atom)) return Truth::True;
  if (interp.false_set.count(atom)) return Truth::False;
  return Truth::Undef;
}

Truth negate(Negation kind, Truth v) {
  switch (kind) {
    case Negation::Default:  // t->f, u->u, f->t
      return v == Truth::True ? Truth::False
             : v == Truth::False ? Truth::True
                                 : Truth::Undef;
    case Negation::Weak:  // t->f, u->t, f->t
      return v == Truth::True ? Truth::False : Truth::True;
    case Negation::Strict:  // t->f, u->f, f->t
      return v == Truth::False ? Truth::True : Truth::False;
  }
  return Truth::Undef;
}

Truth literal_truth(const Interpretation& interp, const Literal& lit) {
  Truth v = atom_truth(interp, lit.atom);
  switch (lit.kind) {
    case Kind::Pos: return v;
    case Kind::Not: return negate(Negation::Default, v);
    case Kind::Weak: return negate(Negation::Weak, v);
    case Kind::Strict: return negate(Negation::Strict, v);
  }
  return Truth::Undef;
}

Truth body_truth(const Interpretation& interp, const std::vector<Literal>& body) {
  Truth v = Truth::True;  // empty conjunction
  for (const Literal& lit : body) v = std::min(v, literal_truth(interp, lit));
  return v;
}

Truth clause_truth(const Interpretation& interp, const Clause& clause) {
  return atom_truth(interp, clause.head) >= body_truth(interp, clause.body)
             ? Truth::True
             : Truth::False;
}

bool is_model(const Interpretation& interp, const Program& program) {
  require_disjoint(interp);
  for (const Atom& a : interp.true_set) {
    if (!program.base().count(a)) {
      throw InterpretationError("atom '" + a + "' is outside the program base");
    }
  }
  for (const Atom& a : interp.false_set) {
    if (!program.base().count(a)) {
      throw InterpretationError("atom '" + a + "' is outside the program base");
    }
  }
  for (const Clause& c : program.clauses()) {
    if (clause_truth(interp, c) != Truth::True) return false;
  }
  return true;
}

std::vector<Interpretation> enumerate_models(const Program& program, std::size_t guard) {
  const AtomSet& base = program.base();
  if (base.size() > guard) throw GuardError(base.size(), guard);
  std::vector<Atom> atoms(base.begin(), base.end());
  std::vector<Interpretation> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < atoms.size(); ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    Interpretation cand;
    std::size_t c = code;
    for (const Atom& a : atoms) {
      switch (c % 3) {
        case 0: cand.true_set.insert(a); break;
        case 1: cand.false_set.insert(a); break;
        default: break;  // undefined
      }
      c /= 3;
    }
    if (is_model(cand, program)) out.push_back(std::move(cand));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Truth negation_chain_truth(Negation outer, Negation inner, Truth v) {
  return negate(outer, negate(inner, v));
}

std::string render(const Interpretation& interp) {
  return "T = " + render(interp.true_set) + "  F = " + render(interp.false_set);
}

}  // namespace trineg
