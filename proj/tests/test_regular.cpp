#include <doctest.h>

#include <random>

#include "pia/catalog.hpp"
#include "pia/differential.hpp"
#include "pia/emptiness.hpp"
#include "pia/errors.hpp"
#include "pia/regular.hpp"
#include "pia/run.hpp"
#include "support/oracle.hpp"

using namespace pia;

namespace {

Nfa a_star() {
  return {{"a"}, {"s"}, "s", {"s"}, {{"s", "a", "s"}}};
}

Nfa ab_star() {
  return {{"a", "b"}, {"s", "t"}, "s", {"s"}, {{"s", "a", "t"}, {"t", "b", "s"}}};
}

bool is_ab_star(const Word& w) {
  if (w.size() % 2) return false;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != (i % 2 ? "b" : "a")) return false;
  return true;
}

}  // namespace

TEST_CASE("a* round trip") {
  const Pia p = nfa_to_pia(a_star());
  CHECK_FALSE(unidirectional_violation(p).has_value());
  for (const auto& w : oracle::all_words({"a"}, 10)) CHECK(accepts(p, w));
  CHECK(p.states.size() == 2);  // initial state has a self loop
}

TEST_CASE("(ab)* agrees with its pattern") {
  const Pia p = nfa_to_pia(ab_star());
  CHECK(p.states.size() == 3);
  const Nfa back = pia_to_nfa(p);
  CHECK(back.states.size() == p.states.size());
  for (const auto& w : oracle::all_words({"a", "b"}, 10)) {
    CHECK(accepts(p, w) == is_ab_star(w));
    CHECK(nfa_accepts(back, w) == is_ab_star(w));
  }
}

TEST_CASE("empty NFA gives an empty PIA") {
  const Nfa n{{"a"}, {"s"}, "s", {}, {}};
  CHECK(is_empty(nfa_to_pia(n)));
}

TEST_CASE("single accepting state without transitions accepts only ε") {
  const Nfa n{{"a"}, {"s"}, "s", {"s"}, {}};
  const Pia p = nfa_to_pia(n);
  CHECK(enumerate_accepted(p, 4) == std::set<Word>{{}});
  CHECK(nfa_accepts(pia_to_nfa(p), {}));
}

TEST_CASE("Dyck automaton is not unidirectional") {
  CHECK(unidirectional_violation(catalog::dyck()).has_value());
  CHECK_THROWS_AS(pia_to_nfa(catalog::dyck()), NotUnidirectional);
}

TEST_CASE("random NFAs survive the round trip") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    const Nfa n = differential::random_nfa(rng);
    const Pia p = nfa_to_pia(n);
    REQUIRE(validate(p).empty());
    CHECK_FALSE(unidirectional_violation(p).has_value());
    CHECK(p.pebbles == 1);
    bool loops_back = false;
    for (const auto& t : n.transitions) loops_back |= t.to == n.initial;
    CHECK(p.states.size() == n.states.size() + (loops_back ? 1 : 0));
    const Nfa back = pia_to_nfa(p);
    for (const auto& w : oracle::all_words(n.alphabet, 8)) {
      REQUIRE(accepts(p, w) == nfa_accepts(n, w));
      REQUIRE(nfa_accepts(back, w) == nfa_accepts(n, w));
    }
  }
}
