#pragma once

// Self-contained checks of the structure theorems for concrete parameters,
// used by `superalg verify`.

#include "superalg/io.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace superalg {

struct CheckLine {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct TheoremCheck {
  std::string theorem;
  std::vector<CheckLine> lines;

  bool passed() const;
};

/// Theorems: 3.1 and 5.1 (filiform: even = {n}, odd = {m}), 4.1 and 6.1
/// (block data), 7.1 / 7.3 (filiform) and 7.2 / 7.4 (block data).
/// Throws ParameterError for an unknown theorem id.
TheoremCheck verify_theorem(std::string_view theorem, std::span<const Index> even, std::span<const Index> odd);

Json to_json(const TheoremCheck& c);
std::string to_text(const TheoremCheck& c);

}  // namespace superalg
