#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gfg/automaton.hpp"
#include "gfg/language.hpp"
#include "gfg/strategy.hpp"

namespace gfg {

struct CorpusItem {
  std::string name;
  std::string description;
  Automaton automaton;
  std::optional<StrategyTransducer> strategy;
  std::optional<Automaton> reference;  // deterministic, same language
  std::optional<std::vector<Witness>> witnesses;
};

/// Entry names in listing order.
std::vector<std::string> corpus_names();
/// Throws Error for an unknown name.
CorpusItem corpus(const std::string& name);

struct CorpusFile {
  std::string filename;  // e.g. "a0.aut", "g_fig2.strat", "a1.wit"
  std::string text;
};
/// Every automaton, strategy and witness file of the corpus.
std::vector<CorpusFile> corpus_files();
/// Text of one corpus file, or nullopt.
std::optional<std::string> corpus_file(const std::string& filename);

struct CorpusCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Re-derives the stated properties of the corpus figures from the text files.
std::vector<CorpusCheck> verify_corpus();

}  // namespace gfg
