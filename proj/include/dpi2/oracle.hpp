#pragma once

#include <cstddef>
#include <optional>

#include "dpi2/homotopy.hpp"

namespace dpi2 {

enum class Outcome { Equivalent, Unknown };

struct SearchBudget {
  Rect pad_limit{6, 6};
  std::size_t max_states = 1'000'000;  // shared by all padding sizes
};

struct OracleResult {
  Outcome outcome = Outcome::Unknown;
  std::optional<Certificate> cert;  // shortest move sequence on `pad`
  Rect pad{};                       // rectangle where the search stopped
  std::size_t states = 0;
};

// Bidirectional breadth-first search over spider moves between the trivial
// extensions of f and g, trying each padding from the larger input size up to
// pad_limit. Never claims non-equivalence.
OracleResult homotopy_decide(const GridMap& f, const GridMap& g, const SearchBudget& budget = {});

}  // namespace dpi2
