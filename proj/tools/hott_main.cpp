#include <iostream>
#include <string>
#include <vector>

#include "hott/corpus.hpp"

namespace {

constexpr const char* kUsage =
    "usage: hott <command> [args] [flags]\n"
    "\n"
    "commands:\n"
    "  check <files...>    type-check files in order; one line per "
    "declaration\n"
    "  axioms <files...>   print each declaration's axiom footprint\n"
    "  corpus [dir]        check the shipped corpus manifest (default: "
    "corpus)\n"
    "\n"
    "flags:\n"
    "  --trace-conversion  print both sides of each failed conversion\n"
    "  --no-eta            disable eta rules in conversion\n"
    "  --quiet             suppress OK lines\n";

struct Cli {
  std::string command;
  std::vector<std::string> files;
  hott::Options opts;
  bool quiet = false;
};

int usage_error(const std::string& msg) {
  std::cout << "error: " << msg << "\n" << kUsage;
  return 2;
}

std::string join_axioms(const std::set<std::string>& axioms) {
  std::string out;
  for (const auto& a : axioms) {
    if (!out.empty()) out += ", ";
    out += a;
  }
  return out;
}

int run_check(const Cli& cli, bool print_axioms) {
  if (cli.files.empty()) return usage_error("no input files");
  std::vector<hott::SourceModule> modules;
  for (const auto& f : cli.files) {
    try {
      modules.push_back(hott::parse_module(hott::read_file(f), f));
    } catch (const hott::LexError& e) {
      std::cout << f << ":" << e.span.to_string() << ": lex error: "
                << e.what() << "\n";
      return 2;
    } catch (const hott::ParseError& e) {
      std::cout << f << ":" << e.span.to_string() << ": parse error: "
                << e.what() << "\n";
      return 2;
    } catch (const std::exception& e) {
      std::cout << "error: " << e.what() << "\n";
      return 2;
    }
  }
  hott::Signature sig;
  auto report = hott::check_modules(sig, modules, cli.opts);
  for (const auto& d : report.decls) {
    if (!d.ok) {
      std::cout << "FAIL " << d.name << ": " << d.error << "\n";
    } else if (print_axioms) {
      std::cout << d.name << ": " << join_axioms(d.axioms) << "\n";
    } else if (!cli.quiet) {
      std::cout << "OK " << d.name << "\n";
    }
  }
  return report.all_ok ? 0 : 1;
}

int run_corpus(const Cli& cli) {
  std::string dir = cli.files.empty() ? "corpus" : cli.files[0];
  if (cli.files.size() > 1) return usage_error("corpus takes one directory");
  hott::CorpusResult result;
  try {
    result = hott::check_corpus(dir, cli.opts);
  } catch (const hott::LexError& e) {
    std::cout << e.span.to_string() << ": lex error: " << e.what() << "\n";
    return 2;
  } catch (const hott::ParseError& e) {
    std::cout << e.span.to_string() << ": parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << "error: " << e.what() << "\n";
    return 2;
  }
  size_t failed = 0;
  for (const auto& e : result.entries) {
    if (e.ok) {
      if (!cli.quiet) std::cout << "OK " << e.name << "\n";
    } else {
      failed++;
      std::cout << "FAIL " << e.name << ": " << e.error << "\n";
    }
  }
  if (result.ok) {
    std::cout << "CORPUS OK (" << result.entries.size() << " entries)\n";
    return 0;
  }
  std::cout << "CORPUS FAIL (" << failed << "/" << result.entries.size()
            << " entries failed)\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  Cli cli;
  std::vector<std::string> args(argv + 1, argv + argc);
  for (const auto& a : args) {
    if (a == "--trace-conversion") {
      cli.opts.trace_conversion = true;
    } else if (a == "--no-eta") {
      cli.opts.eta = false;
    } else if (a == "--quiet") {
      cli.quiet = true;
    } else if (!a.empty() && a[0] == '-') {
      return usage_error("unknown flag '" + a + "'");
    } else if (cli.command.empty()) {
      cli.command = a;
    } else {
      cli.files.push_back(a);
    }
  }
  if (cli.command.empty()) return usage_error("no command given");
  try {
    if (cli.command == "check") return run_check(cli, false);
    if (cli.command == "axioms") return run_check(cli, true);
    if (cli.command == "corpus") return run_corpus(cli);
  } catch (const hott::InternalError& e) {
    std::cout << "internal error: " << e.what() << "\n";
    return 2;
  }
  return usage_error("unknown command '" + cli.command + "'");
}
