#pragma once

// The named example families and the verdicts each is expected to produce.

#include <string>
#include <string_view>
#include <vector>

#include "naads/family.hpp"
#include "naads/report.hpp"

namespace naads {

/// One expected outcome: running `task` with `params` on the family
/// should yield `verdict`.
struct Expectation {
  std::string key;
  std::string task;
  Record params;
  Verdict verdict;
  std::string locus;
};

struct CorpusEntry {
  std::string name;
  std::string locus;
  MapFamily family;
  std::vector<Expectation> expected;

  /// Throws LookupError for an unknown key.
  const Expectation& expectation(std::string_view key) const;
};

/// Throws LookupError for unknown names.
CorpusEntry corpus(std::string_view name);

struct CorpusListing {
  std::string name;
  std::string locus;
};

/// All entries, in a fixed order.
std::vector<CorpusListing> list_corpus();

}  // namespace naads
