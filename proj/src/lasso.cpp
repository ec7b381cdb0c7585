#include "gfg/lasso.hpp"

#include <algorithm>

#include "gfg/errors.hpp"

namespace gfg {

namespace {

bool single_char(const std::vector<std::string>& alphabet) {
  return std::all_of(alphabet.begin(), alphabet.end(), [](const std::string& s) { return s.size() == 1; });
}

std::string join(const std::vector<LetterId>& word, const std::vector<std::string>& alphabet, bool compact) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += alphabet.at(word[i]);
  }
  return out;
}

std::vector<LetterId> split(std::string_view part, std::size_t offset, const std::vector<std::string>& alphabet) {
  std::vector<LetterId> out;
  auto lookup = [&](std::string_view tok, std::size_t col) {
    for (std::size_t i = 0; i < alphabet.size(); ++i)
      if (alphabet[i] == tok) return static_cast<LetterId>(i);
    throw ParseError(1, col + 1, "unknown letter '" + std::string(tok) + "'");
  };
  const bool spaced = part.find(' ') != std::string_view::npos || !single_char(alphabet);
  if (!spaced) {
    for (std::size_t i = 0; i < part.size(); ++i) out.push_back(lookup(part.substr(i, 1), offset + i));
    return out;
  }
  std::size_t i = 0;
  while (i < part.size()) {
    if (part[i] == ' ') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < part.size() && part[j] != ' ') ++j;
    out.push_back(lookup(part.substr(i, j - i), offset + i));
    i = j;
  }
  return out;
}

}  // namespace

std::string format_lasso(const Lasso& w, const std::vector<std::string>& alphabet) {
  const bool compact = single_char(alphabet);
  return join(w.prefix, alphabet, compact) + ":" + join(w.cycle, alphabet, compact);
}

Lasso parse_lasso(std::string_view text, const std::vector<std::string>& alphabet) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError(1, 1, "lasso must have the form U:V");
  if (text.find(':', colon + 1) != std::string_view::npos) throw ParseError(1, colon + 2, "second ':' in lasso");
  Lasso w;
  w.prefix = split(text.substr(0, colon), 0, alphabet);
  w.cycle = split(text.substr(colon + 1), colon + 1, alphabet);
  if (w.cycle.empty()) throw ParseError(1, colon + 2, "lasso cycle must be nonempty");
  return w;
}

}  // namespace gfg
