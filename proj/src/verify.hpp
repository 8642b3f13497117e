#pragma once

#include <string>
#include <vector>

namespace tropmod {

struct VerifyReport {
  bool passed = true;
  std::vector<std::string> lines;
  std::string text() const;
};

/// Runs one of the invariant suites {all, poset, monodromy, sections,
/// boundary, fibers} over M-bar_{g,n}^trop. Deterministic (fixed seeds).
/// Throws std::invalid_argument on an unknown suite, 2g-2+n <= 0, or
/// 3g-3+n beyond `bound`.
VerifyReport run_verify(int g, int n, const std::string& suite, int bound);

}  // namespace tropmod
