#include <random>

#include "doctest.h"
#include "hott/term.hpp"
#include "oracle.hpp"

using namespace hott;

TEST_CASE("shift moves free variables only") {
  CHECK(alpha_equal(shift(mk::var(0), 0, 1), mk::var(1)));
  CHECK(alpha_equal(shift(mk::lam("x", mk::var(0)), 0, 5),
                    mk::lam("x", mk::var(0))));
  // Checked against renaming by hand: the free index 3 under one
  // binder is free index 2 outside, so it moves to 5 under the binder.
  CHECK(alpha_equal(shift(mk::lam("x", mk::var(3)), 0, 2),
                    mk::lam("x", mk::var(5))));
}

TEST_CASE("shift below the cutoff is the identity") {
  auto t = mk::app(mk::var(0), mk::var(1));
  CHECK(alpha_equal(shift(t, 2, 7), t));
}

TEST_CASE("shift underflow is an internal fault") {
  CHECK_THROWS_AS(shift(mk::var(0), 0, -1), InternalError);
}

TEST_CASE("shift composes additively") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; i++) {
    auto [term, type] = oracle::generate(rng, 4);
    (void)type;
    for (int c = 0; c < 3; c++) {
      auto once = shift(shift(term, c, 2), c, 3);
      auto at_once = shift(term, c, 5);
      CHECK(alpha_equal(once, at_once));
    }
  }
}

TEST_CASE("alpha_equal ignores name hints") {
  CHECK(alpha_equal(mk::lam("x", mk::var(0)), mk::lam("y", mk::var(0))));
  CHECK_FALSE(alpha_equal(mk::var(0), mk::var(1)));
  CHECK(alpha_equal(mk::pi("a", mk::universe(0), mk::var(0)),
                    mk::pi("b", mk::universe(0), mk::var(0))));
}

TEST_CASE("alpha_equal is an equivalence relation on generated terms") {
  std::mt19937_64 rng(11);
  std::vector<TermPtr> terms;
  for (int i = 0; i < 60; i++) terms.push_back(oracle::generate(rng, 4).first);
  for (const auto& t : terms) CHECK(alpha_equal(t, t));
  for (size_t i = 0; i < terms.size(); i++)
    for (size_t j = 0; j < i; j++) {
      bool ij = alpha_equal(terms[i], terms[j]);
      bool ji = alpha_equal(terms[j], terms[i]);
      CHECK(ij == ji);
    }
  // Transitivity on the sampled set.
  for (size_t i = 0; i < terms.size(); i++)
    for (size_t j = 0; j < terms.size(); j++)
      for (size_t k = 0; k < terms.size(); k++)
        if (alpha_equal(terms[i], terms[j]) &&
            alpha_equal(terms[j], terms[k]))
          CHECK(alpha_equal(terms[i], terms[k]));
}

TEST_CASE("collect_consts finds constants") {
  std::set<std::string> out;
  collect_consts(mk::app(mk::cnst("funext"), mk::lam("x", mk::cnst("ap"))),
                 out);
  CHECK(out == std::set<std::string>{"funext", "ap"});
}
