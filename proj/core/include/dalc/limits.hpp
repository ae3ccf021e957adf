#pragma once

#include <cstddef>

namespace dalc {

/// Resource bounds shared by the tableau and the semantic oracle.
struct Limits {
  /// Maximum number of tableau expansions per satisfiability call.
  std::size_t max_nodes = 100000;
  /// Maximum number of distinct concept atoms the oracle will enumerate over.
  std::size_t max_atoms = 5;
  /// Maximum oracle domain size (number of strict-consistent valuations).
  std::size_t max_domain = 16;
};

}  // namespace dalc
