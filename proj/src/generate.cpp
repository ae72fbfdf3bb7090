#include "trineg/generate.hpp"

#include <numeric>

namespace trineg {

Program random_program(const GeneratorConfig& config) {
  std::mt19937_64 rng(config.seed);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < config.atom_count; ++i) {
    atoms.push_back("a" + std::to_string(i));
  }

  std::uint64_t weight_total =
      std::accumulate(config.negation_mix.begin(), config.negation_mix.end(),
                      std::uint64_t{0});
  auto pick_kind = [&]() {
    if (weight_total == 0) return Kind::Pos;
    std::uint64_t r = rng() % weight_total;
    for (std::size_t k = 0; k < 4; ++k) {
      if (r < config.negation_mix[k]) return static_cast<Kind>(k);
      r -= config.negation_mix[k];
    }
    return Kind::Pos;
  };

  std::vector<Clause> clauses;
  for (std::size_t i = 0; i < config.clause_count && !atoms.empty(); ++i) {
    Clause c;
    c.head = atoms[pick(atoms.size())];
    std::size_t len = config.max_body_len ? pick(config.max_body_len + 1) : 0;
    for (std::size_t j = 0; j < len; ++j) {
      c.body.push_back({pick_kind(), atoms[pick(atoms.size())]});
    }
    clauses.push_back(std::move(c));
  }
  return Program(std::move(clauses));
}

}  // namespace trineg
