#include "trineg/equations.hpp"

#include <algorithm>

namespace trineg {

Program tri_reduct(const Program& program, const TriReductArgs& args) {
  std::vector<Clause> kept;
  for (const Clause& c : program.clauses()) {
    bool keep = true;
    Clause stripped{c.head, {}};
    for (const Literal& l : c.body) {
      switch (l.kind) {
        case Kind::Pos: stripped.body.push_back(l); break;
        case Kind::Not: keep = args.not_in.count(l.atom); break;
        case Kind::Weak: keep = args.weak_in.count(l.atom); break;
        case Kind::Strict: keep = args.strict_in.count(l.atom); break;
      }
      if (!keep) break;
    }
    if (keep) kept.push_back(std::move(stripped));
  }
  return Program(std::move(kept));
}

AtomSet sigma(const Program& program, const TriReductArgs& args) {
  return lfp_definite(tri_reduct(program, args));
}

std::vector<Interpretation> solve_semantic_equations(const Program& program,
                                                     std::size_t guard) {
  const AtomSet& base = program.base();
  if (base.size() > guard) throw GuardError(base.size(), guard);
  std::vector<Atom> atoms(base.begin(), base.end());
  std::size_t total = 1;
  for (std::size_t i = 0; i < atoms.size(); ++i) total *= 3;
  std::vector<Interpretation> out;
  for (std::size_t code = 0; code < total; ++code) {
    AtomSet t, f;
    std::size_t c = code;
    for (const Atom& a : atoms) {
      switch (c % 3) {
        case 0: t.insert(a); break;
        case 1: f.insert(a); break;
        default: break;
      }
      c /= 3;
    }
    AtomSet comp_t = complement(t, base);
    if (sigma(program, {f, comp_t, f}) != t) continue;
    if (complement(sigma(program, {comp_t, comp_t, f}), base) != f) continue;
    out.push_back({std::move(t), std::move(f)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

ConditionReport check_model_conditions(const Program& program, const AtomSet& t,
                                       const AtomSet& f) {
  const AtomSet& base = program.base();
  ConditionReport rep;

  rep.disjoint = true;
  for (const Atom& a : t) {
    if (f.count(a)) {
      rep.disjoint = false;
      rep.witness_a = a;
      break;
    }
  }

  AtomSet comp_t = complement(t, base);
  AtomSet derived_true = sigma(program, {f, comp_t, f});
  rep.true_fixpoint = derived_true == t;
  if (!rep.true_fixpoint) {
    AtomSet diff;
    std::set_symmetric_difference(derived_true.begin(), derived_true.end(), t.begin(),
                                  t.end(), std::inserter(diff, diff.end()));
    rep.witness_b = *diff.begin();
  }

  AtomSet shadow = sigma(program, {comp_t, comp_t, f});
  rep.false_coherent = true;
  for (const Atom& a : shadow) {
    if (f.count(a)) {
      rep.false_coherent = false;
      rep.witness_c = a;
      break;
    }
  }

  // (d): a clause with a false head must be blocked by some positive body
  // atom in F, a not- or ~w-atom in T, or a ~s-atom outside F.
  rep.false_supported = true;
  for (const Clause& c : program.clauses()) {
    if (!f.count(c.head)) continue;
    bool blocked = false;
    for (const Literal& l : c.body) {
      switch (l.kind) {
        case Kind::Pos: blocked = f.count(l.atom); break;
        case Kind::Not: blocked = t.count(l.atom); break;
        case Kind::Weak: blocked = t.count(l.atom); break;
        case Kind::Strict: blocked = !f.count(l.atom); break;
      }
      if (blocked) break;
    }
    if (!blocked) {
      rep.false_supported = false;
      rep.witness_d = render(c);
      break;
    }
  }
  return rep;
}

}  // namespace trineg
