#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "trineg/syntax.hpp"

namespace trineg {

struct GeneratorConfig {
  std::size_t atom_count = 4;
  std::size_t clause_count = 5;
  std::size_t max_body_len = 3;
  // Weights for Pos, not, ~w, ~s literals; zero disables a kind.
  std::array<std::uint32_t, 4> negation_mix{2, 1, 1, 1};
  std::uint64_t seed = 0;
};

// Deterministic: identical config yields an identical program.
Program random_program(const GeneratorConfig& config);

}  // namespace trineg
