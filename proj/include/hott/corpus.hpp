#ifndef HOTT_CORPUS_HPP
#define HOTT_CORPUS_HPP

#include <string>
#include <vector>

#include "hott/check.hpp"

namespace hott {

// One line of corpus/manifest:
//   name <tab> file <tab> paper-ref <tab> comma-separated expected axioms
// Lines starting with '#' are notes and are skipped.
struct ManifestEntry {
  std::string name;
  std::string file;
  std::string paper_ref;
  std::set<std::string> expected_axioms;
};

std::vector<ManifestEntry> parse_manifest(const std::string& text);
std::vector<ManifestEntry> load_manifest(const std::string& path);

struct CorpusEntryResult {
  std::string name;
  bool ok = false;
  std::string error;
  std::set<std::string> axioms;
};

struct CorpusResult {
  Report report;  // per-declaration results for all corpus files
  std::vector<CorpusEntryResult> entries;
  bool ok = true;
};

// Reads the file on disk; throws std::runtime_error on IO failure.
std::string read_file(const std::string& path);

// Checks every corpus file named by the manifest (in first-appearance
// order) and validates each entry: it must check and its axiom
// footprint must be contained in the expected set.
CorpusResult check_corpus(const std::string& dir, const Options& opts = {});

}  // namespace hott

#endif
