#include "hott/corpus.hpp"

#include <fstream>
#include <sstream>

namespace hott {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

std::vector<ManifestEntry> parse_manifest(const std::string& text) {
  std::vector<ManifestEntry> out;
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto fields = split(line, '\t');
    if (fields.size() != 4)
      throw std::runtime_error("manifest line " + std::to_string(lineno) +
                               ": expected 4 tab-separated fields");
    ManifestEntry e;
    e.name = trim(fields[0]);
    e.file = trim(fields[1]);
    e.paper_ref = trim(fields[2]);
    for (const auto& a : split(fields[3], ',')) {
      std::string ax = trim(a);
      if (!ax.empty()) e.expected_axioms.insert(ax);
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<ManifestEntry> load_manifest(const std::string& path) {
  return parse_manifest(read_file(path));
}

CorpusResult check_corpus(const std::string& dir, const Options& opts) {
  CorpusResult result;
  auto manifest = load_manifest(dir + "/manifest");

  std::vector<std::string> files;
  for (const auto& e : manifest)
    if (std::find(files.begin(), files.end(), e.file) == files.end())
      files.push_back(e.file);

  std::vector<SourceModule> modules;
  for (const auto& f : files) {
    std::string path = dir + "/" + f;
    modules.push_back(parse_module(read_file(path), f));
  }

  Signature sig;
  result.report = check_modules(sig, modules, opts);

  std::map<std::string, const DeclResult*> by_name;
  for (const auto& r : result.report.decls) by_name[r.name] = &r;

  for (const auto& e : manifest) {
    CorpusEntryResult er;
    er.name = e.name;
    auto it = by_name.find(e.name);
    if (it == by_name.end()) {
      er.error = "not checked (missing or skipped after an earlier failure)";
    } else if (!it->second->ok) {
      er.error = it->second->error;
    } else {
      er.axioms = it->second->axioms;
      std::set<std::string> extra;
      for (const auto& a : er.axioms)
        if (!e.expected_axioms.count(a)) extra.insert(a);
      if (extra.empty()) {
        er.ok = true;
      } else {
        std::string msg = "axiom footprint exceeds the expected set:";
        for (const auto& a : extra) msg += " " + a;
        er.error = msg;
      }
    }
    if (!er.ok) result.ok = false;
    result.entries.push_back(std::move(er));
  }
  return result;
}

}  // namespace hott
