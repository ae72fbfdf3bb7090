#include <doctest.h>

#include <algorithm>

#include "trineg/generate.hpp"
#include "trineg/procedure.hpp"

using namespace trineg;

namespace {

const char* kExample31 = "p :- not q, ~w r. r :- ~w p, ~s s.";

Program random_mixed(std::uint64_t seed, std::size_t atoms = 4,
                     std::size_t clauses = 5) {
  GeneratorConfig cfg;
  cfg.atom_count = atoms;
  cfg.clause_count = clauses;
  cfg.seed = seed;
  return random_program(cfg);
}

std::vector<AtomSet> all_subsets(const AtomSet& base) {
  std::vector<Atom> atoms(base.begin(), base.end());
  std::vector<AtomSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << atoms.size()); ++mask) {
    AtomSet s;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (mask & (std::size_t{1} << i)) s.insert(atoms[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

TEST_CASE("negative resolvents") {
  Program ex31 = parse_program(kExample31);
  auto goals = n_res(ex31, "p");
  REQUIRE(goals.size() == 1);
  CHECK(*goals.begin() == CanonicalGoal{neg("q"), wneg("r")});

  CHECK(n_res(ex31, "q").empty());  // no clause, the initial goal stays positive

  auto fact_goals = n_res(parse_program("p."), "p");
  REQUIRE(fact_goals.size() == 1);
  CHECK(fact_goals.begin()->empty());  // the empty goal qualifies vacuously
}

TEST_CASE("resolution saturates through duplicated body atoms") {
  // p :- p, p. would loop without canonicalization
  Program p = parse_program("p :- p, p. p :- not q.");
  auto goals = n_res(p, "p");
  REQUIRE(goals.size() == 1);
  CHECK(*goals.begin() == CanonicalGoal{neg("q")});
}

TEST_CASE("sigma agrees with negative resolvents") {
  Program ex31 = parse_program(kExample31);
  CHECK(sigma_nres_equivalence(ex31, {{"q"}, {"r"}, {}}, "p"));
  CHECK(sigma_nres_equivalence(ex31, {{}, {}, {}}, "p"));
  CHECK(sigma_nres_equivalence(parse_program("p."), {{}, {}, {}}, "p"));
}

TEST_CASE("sigma/resolvent agreement over exhaustive small sweeps") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Program p = random_mixed(seed, 3, 4);
    auto subsets = all_subsets(p.base());
    for (const AtomSet& i : subsets) {
      for (const AtomSet& j : subsets) {
        for (const AtomSet& k : subsets) {
          for (const Atom& a : p.base()) {
            CAPTURE(seed);
            CHECK(sigma_nres_equivalence(p, {i, j, k}, a));
          }
        }
      }
    }
  }
}

TEST_CASE("rule closure against an oracle pair") {
  Program strict_loop = parse_program("p :- ~s q. q :- q.");
  CHECK(closure_with_oracle(strict_loop, {}, {"p"}) == ClosureState{{}, {"p"}});

  Program weak = parse_program("p :- ~w q.");
  CHECK(closure_with_oracle(weak, {"p"}, {"q"}) == ClosureState{{"p"}, {"q"}});

  Program odd = parse_program("p :- not p.");
  CHECK(closure_with_oracle(odd, {}, {}) == ClosureState{{}, {}});
}

TEST_CASE("admissible pairs of the strict-loop program") {
  Program p = parse_program("p :- ~s q. q :- q.");
  AdmissibleSet adm = admissible_pairs(p);
  REQUIRE(adm.pairs.size() == 1);
  CHECK(adm.pairs[0] == std::pair<AtomSet, AtomSet>{{}, {"p"}});
  REQUIRE(adm.canonical);
  CHECK(*adm.canonical == std::pair<AtomSet, AtomSet>{{}, {"p"}});
  // neither suc(<- p) nor fail(<- q) in the least admissible closure
  CHECK_FALSE(adm.pairs[0].first.count("p"));
  CHECK_FALSE(adm.pairs[0].second.count("q"));
}

TEST_CASE("admissible pairs of the two-fixpoint program") {
  AdmissibleSet adm = admissible_pairs(parse_program(kExample31));
  REQUIRE(adm.pairs.size() == 2);
  CHECK(adm.pairs[0] == std::pair<AtomSet, AtomSet>{{"p"}, {"q", "r", "s"}});
  CHECK(adm.pairs[1] == std::pair<AtomSet, AtomSet>{{"r"}, {"p", "q", "s"}});
  REQUIRE(adm.canonical);
  CHECK(*adm.canonical == std::pair<AtomSet, AtomSet>{{}, {"q", "s"}});
}

TEST_CASE("odd loop admits only the empty pair") {
  AdmissibleSet adm = admissible_pairs(parse_program("p :- not p."));
  REQUIRE(adm.pairs.size() == 1);
  CHECK(adm.pairs[0] == std::pair<AtomSet, AtomSet>{{}, {}});
}

TEST_CASE("non-disjoint candidates are never self-consistent") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Program p = random_mixed(seed, 3, 4);
    AdmissibleSet strict = admissible_pairs(p);
    AdmissibleSet swept = admissible_pairs(p, kDefaultGuard,
                                           /*include_non_disjoint=*/true);
    CAPTURE(seed);
    CHECK(strict.pairs == swept.pairs);
  }
}

TEST_CASE("canonical pair is a componentwise lower bound") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Program p = random_mixed(seed);
    AdmissibleSet adm = admissible_pairs(p);
    if (!adm.canonical) continue;
    CAPTURE(seed);
    for (const auto& [t, f] : adm.pairs) {
      CHECK(std::includes(t.begin(), t.end(), adm.canonical->first.begin(),
                          adm.canonical->first.end()));
      CHECK(std::includes(f.begin(), f.end(), adm.canonical->second.begin(),
                          adm.canonical->second.end()));
    }
  }
}

TEST_CASE("skeptical queries") {
  Program ex31 = parse_program(kExample31);
  CHECK(query(ex31, parse_goal("?- p.")) == Verdict::Unknown);
  CHECK(query(ex31, parse_goal("?- not q.")) == Verdict::Succeeds);
  CHECK(query(ex31, parse_goal("?- .")) == Verdict::Succeeds);
  // atoms outside the base have no clause and fail
  CHECK(query(ex31, parse_goal("?- zzz.")) == Verdict::Fails);
  CHECK(query(ex31, parse_goal("?- not zzz.")) == Verdict::Succeeds);
}

TEST_CASE("goal order and multiplicity do not change the verdict") {
  Program ex31 = parse_program(kExample31);
  Goal fwd = parse_goal("?- not q, not s, not q.");
  Goal rev = parse_goal("?- not s, not q.");
  CHECK(query(ex31, fwd) == query(ex31, rev));
}

TEST_CASE("soundness report on the worked examples") {
  CHECK(soundness_report(parse_program(kExample31)).empty());
  CHECK(soundness_report(parse_program("p :- ~s q. q :- q.")).empty());
  CHECK(soundness_report(parse_program("")).empty());
}

TEST_CASE("every admissible pair satisfies the soundness guarantees") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    CAPTURE(seed);
    CHECK(soundness_report(random_mixed(seed)).empty());
  }
}
