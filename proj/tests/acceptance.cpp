// Acceptance suite: one line per criterion, nonzero exit on failure.

#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "hott/corpus.hpp"
#include "oracle.hpp"

using namespace hott;

namespace {

int failures = 0;

void report(int number, const std::string& what, bool ok,
            const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " " << number << " " << what;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) failures++;
}

std::vector<std::string> corpus_files(
    const std::vector<ManifestEntry>& manifest) {
  std::vector<std::string> files;
  for (const auto& e : manifest)
    if (std::find(files.begin(), files.end(), e.file) == files.end())
      files.push_back(e.file);
  return files;
}

const std::set<std::string> kTrusted = {
    "funext",          "equiv_induction", "is_prop_ishadj",
    "is_prop_ishadjl", "fib_eq_char",     "fib_contr"};

// 1. Full-corpus check within the time budget.
void criterion1() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  try {
    auto result = check_corpus(HOTT_CORPUS_DIR);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    size_t n = result.entries.size();
    ok = result.ok && n >= 40 && ms < 60000;
    std::ostringstream d;
    d << n << " entries, " << ms << " ms";
    if (!result.ok)
      for (const auto& e : result.entries)
        if (!e.ok) d << "; FAIL " << e.name;
    detail = d.str();
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report(1, "full-corpus check", ok, detail);
}

struct Loaded {
  Signature sig;
  Report report;
};

Loaded load() {
  Loaded l;
  auto manifest = load_manifest(std::string(HOTT_CORPUS_DIR) + "/manifest");
  std::vector<SourceModule> modules;
  for (const auto& f : corpus_files(manifest))
    modules.push_back(
        parse_module(read_file(std::string(HOTT_CORPUS_DIR) + "/" + f), f));
  l.report = check_modules(l.sig, modules);
  return l;
}

// 2. Axiom audit: zero tolerance.
void criterion2(const Loaded& l) {
  bool ok = true;
  std::string bad;
  for (const auto& d : l.report.decls) {
    for (const auto& a : d.axioms)
      if (!kTrusted.count(a)) {
        ok = false;
        bad = d.name + " uses " + a;
      }
  }
  std::set<std::string> declared;
  for (const auto& d : l.sig.decls())
    if (d->is_axiom) declared.insert(d->name);
  if (declared != kTrusted) {
    ok = false;
    bad = "axiom declarations differ from the six trusted names";
  }
  const char* pure[] = {"sigma_pi_swap", "sigma_assoc", "two_hae_swap",
                        "two_hae_l_assoc", "sigma_eq"};
  for (const char* name : pure) {
    const DeclInfo* d = l.sig.find(name);
    if (!d || !d->axioms.empty()) {
      ok = false;
      bad = std::string(name) + " should have an empty footprint";
    }
  }
  report(2, "axiom audit", ok, bad);
}

// 3. Coh refl is refl_refl definitionally.
void criterion3(const Loaded& l) {
  bool ok = false;
  std::string detail;
  try {
    const Signature& sig = l.sig;
    auto coh = elaborate(sig, {},
        parse_term("fun A => fun x => nat_coh A A (idfun A) (idfun A) "
                   "(fun x' => refl x') x"));
    auto rr =
        elaborate(sig, {}, parse_term("fun A => fun x => refl (refl x)"));
    auto ty = eval(sig, Env{},
                   elaborate(sig, {},
                             parse_term("(A : Type 0) -> (x : A) -> "
                                        "Id (Id A x x) (refl x) (refl x)")));
    ok = conv(sig, 0, ty, eval(sig, Env{}, coh), eval(sig, Env{}, rr));
  } catch (const std::exception& e) {
    detail = e.what();
  }
  report(3, "conv(Coh refl, refl_refl)", ok, detail);
}

// 4. Kernel normal forms agree with the substitution interpreter.
void criterion4() {
  std::mt19937_64 rng(20240817);
  Signature sig;
  int agreed = 0;
  const int total = 500;
  std::string detail;
  for (int i = 0; i < total; i++) {
    auto [term, type] = oracle::generate(rng, 6);
    try {
      auto type_v = eval(sig, Env{}, type);
      Context ctx;
      check(sig, ctx, term, type_v);
      auto kernel_nf = normalize(sig, term, type_v);
      auto oracle_nf = oracle::normal_form(sig, term, type);
      if (alpha_equal(kernel_nf, oracle_nf)) agreed++;
    } catch (const std::exception& e) {
      detail = e.what();
    }
  }
  std::ostringstream d;
  d << agreed << "/" << total << " agree";
  if (!detail.empty()) d << "; " << detail;
  report(4, "kernel vs oracle normal forms", agreed == total, d.str());
}

// 5. Bidirectional soundness rules plus mutant rejection.
void criterion5(const Loaded& l) {
  bool ok = true;
  std::string detail;
  auto expect_checks = [&](const std::string& src) {
    Signature sig = l.sig;
    std::vector<SourceModule> mods{parse_module(src, "<accept>")};
    auto r = check_modules(sig, mods);
    for (const auto& d : r.decls)
      if (!d.ok) {
        ok = false;
        detail = d.name + ": " + d.error;
      }
  };
  // J computation, eta for Pi and Sigma, projection rules, universes.
  expect_checks(
      "axiom A : Type 0\naxiom a : A\naxiom b : A\n"
      "axiom P : A -> Type 0\naxiom S : (x : A) * P x\naxiom f : A -> A\n"
      "def j_beta : Id A (J A a (fun y p => A) b a (refl a)) b := refl b\n"
      "def eta_pi : Id (A -> A) f (fun x => f x) := refl f\n"
      "def eta_sigma : Id ((x : A) * P x) S (S.1, S.2) := refl S\n"
      "def proj1_rule : Id A (let w : (x : A) * A := (a, b) in w.1) a := refl a\n"
      "def proj2_rule : Id A (let w : (x : A) * A := (a, b) in w.2) b := refl b\n"
      "def universe_rule : Type 1 := Type 0\n");
  const char* mutants[] = {
      "def m1 (A : Type 0) (x y : A) (p : Id A x y) : Id A y x :=\n"
      "  J A y (fun y' p' => Id A y' x) (refl x) x p\n",
      "def m2 (A : Type 0) (x y z : A) (p : Id A x y) (q : Id A y z)\n"
      "  : Id A x z := concat A x y z q p\n",
      "def m3 (A B : Type 0) (f : A -> B) (x y : A) (p : Id A x y)\n"
      "  : Id B (f x) (f y) :=\n"
      "  J A x (fun y' p' => Id B (f y') (f y')) (refl (f x)) y p\n",
      "axiom T_A : Type 0\naxiom T_B : Type 0\naxiom T_f : T_A -> T_B\n"
      "axiom T_hl : ishadjl T_A T_B T_f\n"
      "def m4 : ishadjl T_A T_B T_f :=\n"
      "  ((T_hl.1), ((T_hl.2.2.1), ((T_hl.2.1), (T_hl.2.2.2))))\n",
      "def m5 (A B : Type 0) (f : A -> B) (g : B -> A)\n"
      "    (H : hmap A A (fun x => g (f x)) (idfun A)) (x : A)\n"
      "  : Id (Id A (g (f (g (f x)))) (g (f x)))\n"
      "      (H (g (f x)))\n"
      "      (ap B A g (f (g (f x))) (f x) (ap A B f (g (f x)) x (H x))) :=\n"
      "  concat (Id A (g (f (g (f x)))) (g (f x)))\n"
      "    (H (g (f x)))\n"
      "    (ap A A (fun a => g (f a)) (g (f x)) x (H x))\n"
      "    (ap B A g (f (g (f x))) (f x) (ap A B f (g (f x)) x (H x)))\n"
      "    (hnat_id A (fun a => g (f a)) H x)\n"
      "    (ap_comp B A B g f (g (f x)) x (H x))\n",
      "def m6 (A : Type 0) (P : A -> Type 0) (x y : A) (p : Id A x y)\n"
      "    (u : P x) (v : P y) (q : Id (P y) (transport A P x y p u) v)\n"
      "  : Id ((a : A) * P a) (x, u) (y, v) :=\n"
      "  sigma_eq A P x y p v u q\n",
      "axiom W_A : Type 0\naxiom W_B : Type 0\naxiom W_f : W_A -> W_B\n"
      "axiom W_hl : ishadjl W_A W_B W_f\n"
      "def m7 (x : W_A)\n"
      "  : Id (Id W_A ((W_hl.1) (W_f ((W_hl.1) (W_f x)))) ((W_hl.1) (W_f x)))\n"
      "      (ap W_B W_A (W_hl.1) (W_f ((W_hl.1) (W_f x))) (W_f x)\n"
      "         (ap W_A W_B W_f ((W_hl.1) (W_f x)) x ((W_hl.2.1) x)))\n"
      "      (ap W_B W_A (W_hl.1) (W_f ((W_hl.1) (W_f x))) (W_f x)\n"
      "         ((W_hl.2.2.1) (W_f x))) :=\n"
      "  concat (Id W_A ((W_hl.1) (W_f ((W_hl.1) (W_f x)))) ((W_hl.1) (W_f x)))\n"
      "    (ap W_B W_A (W_hl.1) (W_f ((W_hl.1) (W_f x))) (W_f x)\n"
      "       (ap W_A W_B W_f ((W_hl.1) (W_f x)) x ((W_hl.2.1) x)))\n"
      "    ((W_hl.2.1) ((W_hl.1) (W_f x)))\n"
      "    (ap W_B W_A (W_hl.1) (W_f ((W_hl.1) (W_f x))) (W_f x)\n"
      "       ((W_hl.2.2.1) (W_f x)))\n"
      "    (nat_coh W_A W_B W_f (W_hl.1) (W_hl.2.1) x)\n"
      "    ((W_hl.2.2.2) (W_f x))\n",
      "def m8 (A : Type 0) (P : A -> Type 0) (x y : A) (p : Id A x y) (u : P x)\n"
      "  : P y := J A x (fun y' p' => P y') u p y\n",
      "def m9 : Type 0 := (A : Type 0) -> A\n",
      "axiom Z_A : Type 0\naxiom Z_B : Type 0\naxiom Z_f : Z_A -> Z_B\n"
      "axiom Z_h : ishadj Z_A Z_B Z_f\n"
      "def m10 (x : Z_A) : Id Z_A x ((Z_h.1) (Z_f x)) := refl x\n",
  };
  int rejected = 0;
  for (const char* src : mutants) {
    Signature sig = l.sig;
    std::vector<SourceModule> mods{parse_module(src, "<mutant>")};
    auto r = check_modules(sig, mods);
    bool failed = false;
    for (const auto& d : r.decls)
      if (!d.ok) failed = true;
    if (failed) rejected++;
  }
  if (rejected != 10) {
    ok = false;
    detail = std::to_string(rejected) + "/10 mutants rejected";
  }
  std::ostringstream d;
  d << "rules pass, " << rejected << "/10 mutants rejected";
  if (!detail.empty() && !ok) d << "; " << detail;
  report(5, "bidirectional soundness and mutants", ok, d.str());
}

// 6. Parse-print-parse round trip over every shipped file.
void criterion6() {
  bool ok = true;
  std::string detail;
  try {
    auto manifest = load_manifest(std::string(HOTT_CORPUS_DIR) + "/manifest");
    int total = 0, good = 0;
    for (const auto& f : corpus_files(manifest)) {
      total++;
      auto src = read_file(std::string(HOTT_CORPUS_DIR) + "/" + f);
      auto once = parse_module(src, f);
      auto twice = parse_module(print(once), f);
      if (structurally_equal(once, twice))
        good++;
      else
        detail = f;
    }
    ok = total > 0 && good == total;
    std::ostringstream d;
    d << good << "/" << total << " files";
    if (!detail.empty()) d << "; first failure " << detail;
    detail = d.str();
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report(6, "round trip on shipped files", ok, detail);
}

// 7. The eight structure maps exist and triangle composites into qinv
// agree definitionally on g.
void criterion7(const Loaded& l) {
  bool ok = true;
  std::string detail;
  const char* arrows[] = {
      "two_hae_of_two_hae_l", "two_hae_l_of_two_hae", "adj_of_two_hae_l",
      "two_hae_l_of_adj",     "adj_of_two_hae",       "two_hae_of_adj",
      "ishadjl_of_adj",       "adj_of_ishadjl",       "ishadj_of_adj",
      "adj_of_ishadj",        "ishadj_of_ishadjl",    "ishadjl_of_ishadj",
      "qinv_of_ishadjl",      "adjointify_l",         "qinv_of_ishadj",
      "adjointify"};
  for (const char* name : arrows)
    if (!l.sig.find(name)) {
      ok = false;
      detail = std::string("missing arrow ") + name;
    }
  Signature sig = l.sig;
  std::vector<SourceModule> mods{parse_module(
      "axiom T_A : Type 0\n"
      "axiom T_B : Type 0\n"
      "axiom T_f : T_A -> T_B\n"
      "axiom T_h : ishadj T_A T_B T_f\n"
      "axiom T_hl : ishadjl T_A T_B T_f\n"
      "def tri_l : Id (T_B -> T_A)\n"
      "    ((qinv_of_ishadj T_A T_B T_f (ishadj_of_ishadjl T_A T_B T_f T_hl)).1)\n"
      "    ((qinv_of_ishadjl T_A T_B T_f T_hl).1) :=\n"
      "  refl (T_hl.1)\n"
      "def tri_r : Id (T_B -> T_A)\n"
      "    ((qinv_of_ishadjl T_A T_B T_f (ishadjl_of_ishadj T_A T_B T_f T_h)).1)\n"
      "    ((qinv_of_ishadj T_A T_B T_f T_h).1) :=\n"
      "  refl (T_h.1)\n",
      "<diagram>")};
  auto r = check_modules(sig, mods);
  for (const auto& d : r.decls)
    if (!d.ok) {
      ok = false;
      detail = d.name + ": " + d.error;
    }
  report(7, "structure-map diagram", ok, detail);
}

}  // namespace

int main() {
  try {
    criterion1();
    auto l = load();
    criterion2(l);
    criterion3(l);
    criterion4();
    criterion5(l);
    criterion6();
    criterion7(l);
  } catch (const std::exception& e) {
    std::cout << "FAIL - acceptance suite aborted: " << e.what() << "\n";
    return 1;
  }
  if (failures == 0) {
    std::cout << "ACCEPTANCE OK (7 criteria)\n";
    return 0;
  }
  std::cout << "ACCEPTANCE FAIL (" << failures << " criteria)\n";
  return 1;
}
