#pragma once

#include <cstddef>
#include <cstdint>

namespace resolv {

/// Explicit resource limits. Exceeding any of them is a hard BudgetExceeded
/// error; results are never silently truncated.
struct Budget {
  std::uint64_t codewords = std::uint64_t{1} << 24;  // q^k for full enumeration
  std::uint64_t subcodes = std::uint64_t{1} << 20;   // per Grassmannian dimension
  std::size_t scan_limit = 22;                       // n for the 2^n subset scan
  std::size_t homology_limit = 12;                   // |sigma| for the boundary-matrix oracle
  std::size_t threads = 1;
};

}  // namespace resolv
