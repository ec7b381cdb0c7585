#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gfg/state_set.hpp"

namespace gfg {

/// The ultimately periodic word prefix · cycle^ω. `cycle` is nonempty.
struct Lasso {
  std::vector<LetterId> prefix;
  std::vector<LetterId> cycle;
  friend bool operator==(const Lasso&, const Lasso&) = default;
};

/// "U:V". Letters are concatenated when every letter of the alphabet is a single
/// character, otherwise separated by spaces.
std::string format_lasso(const Lasso& w, const std::vector<std::string>& alphabet);

/// Parses "U:V" against an alphabet; throws ParseError (column relative to `text`).
Lasso parse_lasso(std::string_view text, const std::vector<std::string>& alphabet);

}  // namespace gfg
