#pragma once

// Independent well-founded model oracle based on greatest-unfounded-set
// iteration, kept free of the alternating-operator code path it checks.

#include "trineg/semantics.hpp"
#include "trineg/syntax.hpp"

namespace trineg::testing {

inline AtomSet oracle_derivable(const Program& lp, const AtomSet& falses) {
  AtomSet t;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Clause& c : lp.clauses()) {
      bool fires = true;
      for (const Literal& l : c.body) {
        if (l.kind == Kind::Pos ? !t.count(l.atom) : !falses.count(l.atom)) {
          fires = false;
          break;
        }
      }
      if (fires && t.insert(c.head).second) changed = true;
    }
  }
  return t;
}

// Greatest unfounded set wrt (t, f): shrink from the whole base by removing
// atoms with a clause none of whose positive atoms is in f or the candidate
// set and none of whose not-atoms is in t.
inline AtomSet greatest_unfounded_set(const Program& lp, const AtomSet& t,
                                      const AtomSet& f) {
  AtomSet u = lp.base();
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Clause& c : lp.clauses()) {
      if (!u.count(c.head)) continue;
      bool blocked = false;
      for (const Literal& l : c.body) {
        if (l.kind == Kind::Pos) {
          if (f.count(l.atom) || u.count(l.atom)) blocked = true;
        } else {
          if (t.count(l.atom)) blocked = true;
        }
        if (blocked) break;
      }
      if (!blocked) {
        u.erase(c.head);
        changed = true;
      }
    }
  }
  return u;
}

inline Interpretation oracle_well_founded_model(const Program& lp) {
  AtomSet t, f;
  for (;;) {
    AtomSet t2 = oracle_derivable(lp, f);
    AtomSet f2 = greatest_unfounded_set(lp, t2, f);
    if (t2 == t && f2 == f) return {t, f};
    t = std::move(t2);
    f = std::move(f2);
  }
}

}  // namespace trineg::testing
