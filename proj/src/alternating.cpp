#include "trineg/alternating.hpp"

#include <algorithm>

namespace trineg {

bool is_definite(const Program& program) {
  for (const Clause& c : program.clauses()) {
    for (const Literal& l : c.body) {
      if (l.kind != Kind::Pos) return false;
    }
  }
  return true;
}

bool is_lp(const Program& program) {
  for (const Clause& c : program.clauses()) {
    for (const Literal& l : c.body) {
      if (l.kind == Kind::Weak || l.kind == Kind::Strict) return false;
    }
  }
  return true;
}

void require_definite(const Program& program) {
  if (!is_definite(program)) {
    throw ProgramClassError("program is not definite (negated body literal present)");
  }
}

void require_lp(const Program& program) {
  if (!is_lp(program)) {
    throw ProgramClassError("program is not a general LP (~w or ~s literal present)");
  }
}

AtomSet complement(const AtomSet& s, const AtomSet& base) {
  AtomSet out;
  std::set_difference(base.begin(), base.end(), s.begin(), s.end(),
                      std::inserter(out, out.end()));
  return out;
}

AtomSet immediate_consequence(const Program& definite, const AtomSet& atoms) {
  require_definite(definite);
  AtomSet out;
  for (const Clause& c : definite.clauses()) {
    bool satisfied = true;
    for (const Literal& l : c.body) {
      if (!atoms.count(l.atom)) {
        satisfied = false;
        break;
      }
    }
    if (satisfied) out.insert(c.head);
  }
  return out;
}

AtomSet lfp_definite(const Program& definite) {
  AtomSet cur;
  for (;;) {
    AtomSet next = immediate_consequence(definite, cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

Program reduct(const Program& lp, const AtomSet& k) {
  require_lp(lp);
  std::vector<Clause> kept;
  for (const Clause& c : lp.clauses()) {
    bool keep = true;
    Clause stripped{c.head, {}};
    for (const Literal& l : c.body) {
      if (l.kind == Kind::Pos) {
        stripped.body.push_back(l);
      } else if (!k.count(l.atom)) {
        keep = false;
        break;
      }
    }
    if (keep) kept.push_back(std::move(stripped));
  }
  return Program(std::move(kept));
}

AtomSet derivable_under(const Program& lp, const AtomSet& k) {
  return lfp_definite(reduct(lp, k));
}

AtomSet alternating_operator(const Program& lp, const AtomSet& k) {
  const AtomSet& base = lp.base();
  return complement(derivable_under(lp, complement(derivable_under(lp, k), base)), base);
}

AtomSet alternating_operator_literal(const Program& lp, const AtomSet& k) {
  return derivable_under(lp, complement(derivable_under(lp, k), lp.base()));
}

std::vector<Interpretation> three_valued_stable_models(const Program& lp,
                                                       std::size_t guard) {
  require_lp(lp);
  const AtomSet& base = lp.base();
  if (base.size() > guard) throw GuardError(base.size(), guard);
  std::vector<Atom> atoms(base.begin(), base.end());
  std::vector<Interpretation> out;
  for (std::size_t code = 0; code < (std::size_t{1} << atoms.size()); ++code) {
    AtomSet j;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (code & (std::size_t{1} << i)) j.insert(atoms[i]);
    }
    if (alternating_operator(lp, j) != j) continue;
    AtomSet t = derivable_under(lp, j);
    bool disjoint = std::none_of(t.begin(), t.end(),
                                 [&](const Atom& a) { return j.count(a); });
    if (disjoint) out.push_back({std::move(t), std::move(j)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Interpretation well_founded_model(const Program& lp) {
  require_lp(lp);
  AtomSet j;
  for (;;) {
    AtomSet next = alternating_operator(lp, j);
    if (next == j) break;
    j = std::move(next);
  }
  return {derivable_under(lp, j), j};
}

}  // namespace trineg
