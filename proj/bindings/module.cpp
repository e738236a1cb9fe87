#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hott/corpus.hpp"

namespace py = pybind11;

namespace {

struct PyDecl {
  std::string name;
  std::string file;
  bool ok;
  std::string error;
  std::vector<std::string> axioms;
};

std::vector<PyDecl> to_pydecls(const hott::Report& report) {
  std::vector<PyDecl> out;
  for (const auto& d : report.decls)
    out.push_back(PyDecl{d.name, d.file, d.ok, d.error,
                         {d.axioms.begin(), d.axioms.end()}});
  return out;
}

std::vector<PyDecl> check_files(const std::vector<std::string>& paths,
                                bool eta) {
  std::vector<hott::SourceModule> modules;
  for (const auto& p : paths)
    modules.push_back(hott::parse_module(hott::read_file(p), p));
  hott::Signature sig;
  hott::Options opts;
  opts.eta = eta;
  return to_pydecls(hott::check_modules(sig, modules, opts));
}

std::vector<PyDecl> check_source(const std::string& source, bool eta) {
  std::vector<hott::SourceModule> modules{
      hott::parse_module(source, "<string>")};
  hott::Signature sig;
  hott::Options opts;
  opts.eta = eta;
  return to_pydecls(hott::check_modules(sig, modules, opts));
}

py::dict check_corpus(const std::string& dir) {
  auto result = hott::check_corpus(dir);
  py::dict out;
  out["ok"] = result.ok;
  py::list entries;
  for (const auto& e : result.entries) {
    py::dict d;
    d["name"] = e.name;
    d["ok"] = e.ok;
    d["error"] = e.error;
    d["axioms"] = std::vector<std::string>(e.axioms.begin(), e.axioms.end());
    entries.append(d);
  }
  out["entries"] = entries;
  return out;
}

// Normalizes a standalone expression against the signature built from
// `paths`, returning its eta-long normal form and inferred type.
std::pair<std::string, std::string> normalize(
    const std::vector<std::string>& paths, const std::string& expr) {
  std::vector<hott::SourceModule> modules;
  for (const auto& p : paths)
    modules.push_back(hott::parse_module(hott::read_file(p), p));
  hott::Signature sig;
  auto report = hott::check_modules(sig, modules);
  if (!report.all_ok)
    throw std::runtime_error("signature files failed to check");
  auto surface = hott::parse_term(expr);
  auto term = hott::elaborate(sig, {}, surface);
  hott::Context ctx;
  auto type = hott::infer(sig, ctx, term);
  auto normal = hott::normalize(sig, term, type);
  return {hott::print(normal), hott::print(hott::readback_type(sig, 0, type))};
}

}  // namespace

PYBIND11_MODULE(_hottcheck, m) {
  m.doc() = "Proof checker for a small homotopy type theory";

  py::class_<PyDecl>(m, "Decl")
      .def_readonly("name", &PyDecl::name)
      .def_readonly("file", &PyDecl::file)
      .def_readonly("ok", &PyDecl::ok)
      .def_readonly("error", &PyDecl::error)
      .def_readonly("axioms", &PyDecl::axioms)
      .def("__repr__", [](const PyDecl& d) {
        return "<Decl " + d.name + (d.ok ? " ok" : " FAIL") + ">";
      });

  m.def("check_files", &check_files, py::arg("paths"), py::arg("eta") = true,
        "Type-check .hott files in order; returns per-declaration results.");
  m.def("check_source", &check_source, py::arg("source"),
        py::arg("eta") = true,
        "Type-check a module given as a string.");
  m.def("check_corpus", &check_corpus, py::arg("dir"),
        "Check a corpus directory against its manifest.");
  m.def("normalize", &normalize, py::arg("paths"), py::arg("expr"),
        "Normalize an expression; returns (normal_form, type).");
}
