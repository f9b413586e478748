#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "resolv/budget.hpp"
#include "resolv/code.hpp"

namespace resolv {

struct VerifyItem {
  int number = 0;
  std::string tag;
  std::string title;
  bool passed = false;
  /// "expected ... computed ..." lines.
  std::vector<std::string> lines;
  /// Informational diffs against reference closed forms; never failures.
  std::vector<std::string> notes;
  double seconds = 0;
  double limit_seconds = 0;
};

struct VerifyOptions {
  /// Restrict to these tags; empty runs everything.
  std::set<std::string> only;
  Budget budget;
  bool inject_fault = false;
  /// Called after each item finishes.
  std::function<void(const VerifyItem&)> on_item;
};

/// Tags in suite order: mds simplex rm1 rm-binary rm-q4 tf1d tf3 rt3 tf2 rt1 properties.
std::vector<std::string> verify_tags();
std::vector<VerifyItem> run_verification(const VerifyOptions& options);

/// Seeded corpus of projective codes: distinct spanning points of
/// P^(k-1)(F_q), q in {2,3,4}, 2 <= k <= 4, k < n <= 10.
std::vector<LinearCode> random_projective_codes(std::size_t count, std::uint64_t seed);

}  // namespace resolv
