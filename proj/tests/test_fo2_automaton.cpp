#include <doctest.h>

#include <deque>
#include <unordered_set>

#include "pia/catalog.hpp"
#include "pia/errors.hpp"
#include "pia/fo2_automaton.hpp"
#include "pia/run.hpp"
#include "support/oracle.hpp"

using namespace pia;

namespace {

// Breadth-first states of the lazy automaton, at most `cap` of them.
std::vector<AutState> reachable(const LazyAutomaton& a, std::size_t cap) {
  std::unordered_set<AutState> seen{a.initial_state()};
  std::deque<AutState> todo{a.initial_state()};
  std::vector<AutState> out;
  while (!todo.empty() && out.size() < cap) {
    AutState q = todo.front();
    todo.pop_front();
    for (auto& e : a.edges(q, -1))
      if (seen.insert(e.target).second) todo.push_back(e.target);
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace

TEST_CASE("initial state accepts the empty word") {
  const LazyAutomaton a{Sentence(catalog::running_example())};
  CHECK(a.is_accepting(a.initial_state()));
  CHECK(a.pebble_count() == a.m() + 1);
  CHECK(projection_member(catalog::running_example(), {}));
  CHECK_FALSE(projection_member(catalog::unsatisfiable_example(), {}));
  CHECK(projection_member(catalog::epsilon_only_example(), {}));
}

TEST_CASE("membership on the running example") {
  const auto nf = catalog::running_example();
  CHECK(projection_member(nf, {"ξ1", "ξ2"}));
  CHECK_FALSE(projection_member(nf, {"ξ2", "ξ1"}));
  CHECK_FALSE(projection_member(nf, {"ξ1"}));
  CHECK(projection_member(nf, catalog::running_example_word().letters()));
  CHECK_THROWS_AS(projection_member(nf, {"a"}), AlphabetMismatch);
}

TEST_CASE("projection maps to the image alphabet") {
  const auto nf = catalog::projected_example();
  CHECK(projection_alphabet(nf) == std::vector<Letter>{"σ"});
  CHECK(projection_alphabet(catalog::running_example()) == catalog::running_example().letters);
  CHECK(projection_member(nf, {"σ", "σ"}));
  CHECK_FALSE(projection_member(nf, {"σ"}));
  CHECK_THROWS_AS(projection_member(nf, {"ξ1"}), AlphabetMismatch);
}

TEST_CASE("membership agrees with the data-word oracle") {
  for (const auto& nf : {catalog::running_example(), catalog::two_classes_example(), catalog::projected_example()}) {
    const LazyAutomaton a{Sentence(nf)};
    for (const auto& w : oracle::all_words(projection_alphabet(nf), 4)) CHECK(projection_member(a, w) == oracle::member(nf, w));
  }
}

TEST_CASE("satisfiability") {
  const auto run = satisfiable(catalog::running_example());
  CHECK(run.satisfiable);
  REQUIRE(run.witness);
  CHECK(projection_member(catalog::running_example(), *run.witness));

  CHECK_FALSE(satisfiable(catalog::unsatisfiable_example()).satisfiable);
  const auto eps = satisfiable(catalog::epsilon_only_example());
  CHECK(eps.satisfiable);
  CHECK(eps.witness == Word{});

  const auto two = satisfiable(catalog::two_classes_example());
  CHECK(two.satisfiable);
  REQUIRE(two.witness);
  CHECK(oracle::member(catalog::two_classes_example(), *two.witness));
}

TEST_CASE("generated states satisfy the pebble invariants") {
  for (const auto& nf : {catalog::running_example(), catalog::two_classes_example()}) {
    const LazyAutomaton a{Sentence(nf)};
    const auto states = reachable(a, 400);
    CHECK(states.size() > 1);
    for (const auto& q : states) CHECK_NOTHROW(a.check_invariants(q));
  }
}

TEST_CASE("canonical renaming is idempotent") {
  const LazyAutomaton a{Sentence(catalog::running_example())};
  for (const auto& q : reachable(a, 200)) {
    AutState c = q;
    Rho rho(a.pebble_count() + 2, 0);
    a.canonicalize(c, rho);
    AutState d = c;
    auto rho2 = rho;
    a.canonicalize(d, rho2);
    CHECK(d == c);
    CHECK(rho2 == rho);
  }
}

// A capped export is a sub-automaton, so it accepts members only.
TEST_CASE("exported automata accept members only") {
  for (const auto& nf : {catalog::unsatisfiable_example(), catalog::epsilon_only_example(), catalog::running_example()}) {
    const auto r = export_automaton(nf, 3000);
    CHECK(r.states <= 3000);
    CHECK(validate(r.pia).empty());
    CHECK(accepts(r.pia, {}) == nf.epsilon);
    for (const auto& w : oracle::all_words(projection_alphabet(nf), 3))
      if (accepts(r.pia, w)) CHECK(projection_member(nf, w));
  }
}

TEST_CASE("export stops at the state cap") {
  const auto r = export_automaton(catalog::running_example(), 50);
  CHECK_FALSE(r.complete);
  CHECK(r.states <= 50);
  CHECK(validate(r.pia).empty());
}
