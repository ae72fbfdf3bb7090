#include "trineg/procedure.hpp"

#include <algorithm>
#include <deque>

namespace trineg {

namespace {

CanonicalGoal canonicalize(const std::vector<Literal>& body) {
  return CanonicalGoal(body.begin(), body.end());
}

AtomSet intersect(const AtomSet& a, const AtomSet& b) {
  AtomSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

}  // namespace

std::set<CanonicalGoal> res(const Program& program, const Atom& atom) {
  std::set<CanonicalGoal> seen;
  std::deque<CanonicalGoal> work;
  CanonicalGoal start{pos(atom)};
  seen.insert(start);
  work.push_back(start);
  while (!work.empty()) {
    CanonicalGoal g = std::move(work.front());
    work.pop_front();
    for (const Literal& sel : g) {
      if (sel.kind != Kind::Pos) continue;
      for (const Clause& c : program.clauses()) {
        if (c.head != sel.atom) continue;
        CanonicalGoal next = g;
        next.erase(sel);
        for (const Literal& l : c.body) next.insert(l);
        if (seen.insert(next).second) work.push_back(std::move(next));
      }
    }
  }
  return seen;
}

std::set<CanonicalGoal> n_res(const Program& program, const Atom& atom) {
  std::set<CanonicalGoal> out;
  for (const CanonicalGoal& g : res(program, atom)) {
    bool negative_only = std::none_of(g.begin(), g.end(), [](const Literal& l) {
      return l.kind == Kind::Pos;
    });
    if (negative_only) out.insert(g);
  }
  return out;
}

bool sigma_nres_equivalence(const Program& program, const TriReductArgs& args,
                            const Atom& atom) {
  bool in_sigma = sigma(program, args).count(atom) > 0;
  bool has_witness = false;
  for (const CanonicalGoal& g : n_res(program, atom)) {
    bool admitted = true;
    for (const Literal& l : g) {
      const AtomSet& required = l.kind == Kind::Not    ? args.not_in
                                : l.kind == Kind::Weak ? args.weak_in
                                                       : args.strict_in;
      if (!required.count(l.atom)) {
        admitted = false;
        break;
      }
    }
    if (admitted) {
      has_witness = true;
      break;
    }
  }
  return in_sigma == has_witness;
}

namespace {

// Literal-level success/failure under a closure state plus the fixed oracle
// for the two non-monotone premises.
bool literal_suc(const Literal& l, const ClosureState& st, const AtomSet& oracle_t) {
  switch (l.kind) {
    case Kind::Pos: return st.suc_atoms.count(l.atom);
    case Kind::Not: return st.fail_atoms.count(l.atom);
    case Kind::Weak: return !oracle_t.count(l.atom);
    case Kind::Strict: return st.fail_atoms.count(l.atom);
  }
  return false;
}

bool literal_fail(const Literal& l, const ClosureState& st, const AtomSet& oracle_f) {
  switch (l.kind) {
    case Kind::Pos: return st.fail_atoms.count(l.atom);
    case Kind::Not: return st.suc_atoms.count(l.atom);
    case Kind::Weak: return st.suc_atoms.count(l.atom);
    case Kind::Strict: return !oracle_f.count(l.atom);
  }
  return false;
}

}  // namespace

ClosureState closure_with_oracle(const Program& program, const AtomSet& t,
                                 const AtomSet& f) {
  ClosureState st;
  AtomSet base = program.base();
  base.insert(t.begin(), t.end());
  base.insert(f.begin(), f.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Atom& a : base) {
      bool has_clause = false;
      bool some_suc = false;
      bool all_fail = true;
      for (const Clause& c : program.clauses()) {
        if (c.head != a) continue;
        has_clause = true;
        bool body_suc = std::all_of(c.body.begin(), c.body.end(), [&](const Literal& l) {
          return literal_suc(l, st, t);
        });
        bool body_fail = std::any_of(c.body.begin(), c.body.end(), [&](const Literal& l) {
          return literal_fail(l, st, f);
        });
        some_suc = some_suc || body_suc;
        all_fail = all_fail && body_fail;
      }
      if (some_suc && st.suc_atoms.insert(a).second) changed = true;
      if ((!has_clause || all_fail) && st.fail_atoms.insert(a).second) changed = true;
    }
  }
  return st;
}

AdmissibleSet admissible_pairs(const Program& program, std::size_t guard,
                               bool include_non_disjoint) {
  const AtomSet& base = program.base();
  if (base.size() > guard) throw GuardError(base.size(), guard);
  std::vector<Atom> atoms(base.begin(), base.end());
  std::size_t total = 1;
  for (std::size_t i = 0; i < atoms.size(); ++i) total *= 3;

  AdmissibleSet out;
  auto consider = [&](const AtomSet& t, const AtomSet& f) {
    ClosureState derived = closure_with_oracle(program, t, f);
    if (derived.suc_atoms == t && derived.fail_atoms == f) out.pairs.emplace_back(t, f);
  };
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
    consider(t, f);
  }
  if (include_non_disjoint) {
    // Sweep overlapping candidates too; Theorem-level expectation is that
    // none is ever self-consistent, so this adds nothing but the check.
    std::size_t masks = std::size_t{1} << atoms.size();
    for (std::size_t mt = 0; mt < masks; ++mt) {
      for (std::size_t mf = 0; mf < masks; ++mf) {
        if (!(mt & mf)) continue;  // disjoint ones were covered above
        AtomSet t, f;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
          if (mt & (std::size_t{1} << i)) t.insert(atoms[i]);
          if (mf & (std::size_t{1} << i)) f.insert(atoms[i]);
        }
        consider(t, f);
      }
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  if (!out.pairs.empty()) {
    AtomSet ct = out.pairs.front().first;
    AtomSet cf = out.pairs.front().second;
    for (const auto& [t, f] : out.pairs) {
      ct = intersect(ct, t);
      cf = intersect(cf, f);
    }
    out.canonical = {std::move(ct), std::move(cf)};
  }
  return out;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Succeeds: return "succeeds";
    case Verdict::Fails: return "fails";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

Verdict query_against(const Program& program, const AdmissibleSet& admissible,
                      const Goal& goal) {
  if (!admissible.canonical) throw NoAdmissibleClosureError();
  const auto& [ct, cf] = *admissible.canonical;
  ClosureState canon{ct, cf};
  // Atoms outside the base have no clause and fail by the no-clause rule.
  AtomSet oracle_f = cf;
  for (const Literal& l : goal.body) {
    if (!program.base().count(l.atom)) {
      canon.fail_atoms.insert(l.atom);
      oracle_f.insert(l.atom);
    }
  }
  bool all_suc = true;
  for (const Literal& l : goal.body) {
    if (literal_fail(l, canon, oracle_f)) return Verdict::Fails;
    all_suc = all_suc && literal_suc(l, canon, ct);
  }
  return all_suc ? Verdict::Succeeds : Verdict::Unknown;
}

Verdict query(const Program& program, const Goal& goal, std::size_t guard) {
  return query_against(program, admissible_pairs(program, guard), goal);
}

std::vector<SoundnessViolation> soundness_report(const Program& program,
                                                 std::size_t guard) {
  std::vector<SoundnessViolation> violations;
  for (const auto& [t, f] : admissible_pairs(program, guard).pairs) {
    if (!is_model({t, f}, program)) {
      violations.push_back({{t, f}, "model"});
    }
    const AtomSet& base = program.base();
    AtomSet comp_t = complement(t, base);
    if (sigma(program, {f, comp_t, f}) != t) {
      violations.push_back({{t, f}, "true-fixpoint"});
    }
    AtomSet shadow_comp = complement(sigma(program, {comp_t, comp_t, f}), base);
    if (!std::includes(shadow_comp.begin(), shadow_comp.end(), f.begin(), f.end())) {
      violations.push_back({{t, f}, "false-bound"});
    }
  }
  return violations;
}

}  // namespace trineg
