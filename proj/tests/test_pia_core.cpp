#include <doctest.h>

#include <functional>
#include <map>
#include <random>
#include <set>

#include "pia/catalog.hpp"
#include "pia/differential.hpp"
#include "pia/errors.hpp"
#include "pia/run.hpp"
#include "support/oracle.hpp"

using namespace pia;

namespace {

MoveSpec mv(int k, Anchor i, Anchor j) { return {k, i, j}; }

// Plain recursive search without memoization; cycles of silent moves are cut
// by refusing to revisit a configuration on the current branch.
bool naive_accepts(const Pia& p, const Word& w) {
  const int n = static_cast<int>(w.size());
  std::vector<Configuration> path;
  std::function<bool(const Configuration&)> go = [&](const Configuration& c) {
    if (c.is_accepting(p, n)) return true;
    if (std::find(path.begin(), path.end(), c) != path.end()) return false;
    path.push_back(c);
    bool found = false;
    for (const auto& t : p.transitions) {
      if (found) break;
      if (t.from != c.state) continue;
      if (t.is_silent()) {
        found = go(step(p, c, t, std::nullopt, w));
        continue;
      }
      for (int pos = 1; pos <= n && !found; ++pos) {
        try {
          found = go(step(p, c, t, pos, w));
        } catch (const IllegalStep&) {
        }
      }
    }
    path.pop_back();
    return found;
  };
  return go(Configuration::initial(p));
}

}  // namespace

TEST_CASE("validate accepts the catalog automata") {
  CHECK(validate(catalog::dyck()).empty());
  CHECK(validate(catalog::two_brackets()).empty());
  CHECK(validate(catalog::abc_counting()).empty());
  CHECK(validate(catalog::copy_language()).empty());
}

TEST_CASE("validate reports unknown states, letters and bad move specs") {
  Pia p = catalog::dyck();
  p.transitions.push_back(Transition::silent("q]", "nowhere"));
  const auto v = validate(p);
  REQUIRE(v.size() == 1);
  CHECK(v.front().message.find("nowhere") != std::string::npos);

  Pia q = catalog::dyck();
  q.transitions.push_back(Transition::make_move("q]", mv(1, Anchor::left_end(), Anchor::right_end()), "x", "q]"));
  CHECK(validate(q).size() == 1);

  Pia r = catalog::dyck();
  r.transitions.push_back(Transition::make_move("q]", mv(2, Anchor::left_end(), Anchor::right_end()), "[", "q]"));
  r.transitions.push_back(Transition::make_move("q]", mv(1, Anchor::pebble(1), Anchor::pebble(1)), "[", "q]"));
  CHECK(validate(r).size() == 2);
}

TEST_CASE("a move anchored at its own pebble is legal") {
  Pia p = catalog::dyck();
  p.transitions.push_back(Transition::make_move("q]", mv(1, Anchor::pebble(1), Anchor::right_end()), "[", "q["));
  CHECK(validate(p).empty());
}

TEST_CASE("size counts transitions, letters and states") { CHECK(catalog::dyck().size() == 2 + 2 + 2); }

TEST_CASE("step places a pebble and marks the position read") {
  const Pia p = catalog::dyck();
  const Word w = parse_word("[ ]");
  const auto c0 = Configuration::initial(p);
  const auto c1 = step(p, c0, p.transitions[0], 1, w);
  CHECK(c1.state == "q[");
  CHECK(c1.assignment.at(1) == 1);
  CHECK(c1.read == std::set<int>{1});
  CHECK_THROWS_AS(step(p, c1, p.transitions[1], 1, w), IllegalStep);  // already read
  CHECK_THROWS_AS(step(p, c0, p.transitions[0], 2, w), IllegalStep);  // wrong letter
  CHECK_THROWS_AS(step(p, c0, p.transitions[1], 2, w), IllegalStep);  // wrong state
  const auto c2 = step(p, c1, p.transitions[1], 2, w);
  CHECK(c2.is_accepting(p, 2));
}

TEST_CASE("silent steps keep the assignment and read set") {
  Pia p = catalog::dyck();
  p.transitions.push_back(Transition::silent("q]", "q["));
  const auto c0 = Configuration::initial(p);
  const auto c1 = step(p, c0, p.transitions.back(), std::nullopt, {});
  CHECK(c1.state == "q[");
  CHECK(c1.assignment == c0.assignment);
  CHECK(c1.read == c0.read);
}

TEST_CASE("accepts on the worked examples") {
  CHECK(accepts(catalog::dyck(), parse_word("[ ]")));
  CHECK_FALSE(accepts(catalog::dyck(), parse_word("] [")));
  CHECK(accepts(catalog::dyck(), {}));
  CHECK(accepts(catalog::abc_counting(), parse_word("a a $ b b # c c")));
  CHECK_FALSE(accepts(catalog::abc_counting(), parse_word("a a $ b # c c")));
  CHECK_THROWS_AS(accepts(catalog::dyck(), parse_word("x")), AlphabetMismatch);
}

TEST_CASE("enumerate_accepted matches the examples") {
  const std::set<Word> dyck4{{}, parse_word("[ ]"), parse_word("[ ] [ ]"), parse_word("[ [ ] ]")};
  CHECK(enumerate_accepted(catalog::dyck(), 4) == dyck4);
  CHECK(enumerate_accepted(catalog::copy_language(), 3) == std::set<Word>{parse_word("0 $ 0"), parse_word("1 $ 1")});
  CHECK(enumerate_accepted(catalog::dyck(), 0) == std::set<Word>{{}});
  CHECK(enumerate_accepted(catalog::copy_language(), 0).empty());
}

TEST_CASE("memoized search agrees with the naive search") {
  std::mt19937_64 rng(7);
  differential::RandomPiaParams params;
  params.max_states = 4;
  params.max_pebbles = 2;
  for (int i = 0; i < 60; ++i) {
    const Pia p = differential::random_pia(rng, params);
    const CompiledPia c(p);
    for (const auto& w : oracle::all_words(p.alphabet, 5)) REQUIRE(accepts(c, w) == naive_accepts(p, w));
  }
}

TEST_CASE("acceptance is invariant under renaming states") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    const Pia p = differential::random_pia(rng);
    Pia q = p;
    std::map<StateName, StateName> ren;
    for (auto& s : q.states) s = ren[s] = "r" + s + "'";
    q.initial = ren.at(p.initial);
    for (auto& s : q.accepting) s = ren.at(s);
    for (auto& t : q.transitions) t.from = ren.at(t.from), t.to = ren.at(t.to);
    for (const auto& w : oracle::all_words(p.alphabet, 5)) REQUIRE(accepts(p, w) == accepts(q, w));
  }
}

TEST_CASE("enumeration equals filtering all words through accepts") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    const Pia p = differential::random_pia(rng);
    std::set<Word> expect;
    for (const auto& w : oracle::all_words(p.alphabet, 6))
      if (accepts(p, w)) expect.insert(w);
    REQUIRE(enumerate_accepted(p, 6) == expect);
  }
}

TEST_CASE("pebble assignment extension to the end markers") {
  PebbleAssignment a(2);
  a.place(1, 3);
  CHECK(a.hat(Anchor::left_end(), 5) == 0);
  CHECK(a.hat(Anchor::right_end(), 5) == 6);
  CHECK(a.hat(Anchor::pebble(1), 5) == 3);
  CHECK_FALSE(a.hat(Anchor::pebble(2), 5).has_value());
}

TEST_CASE("words parse from whitespace-separated tokens") {
  CHECK(parse_word("ξ1  ξ2") == Word{"ξ1", "ξ2"});
  CHECK(parse_word("").empty());
  CHECK(format_word({"a", "b"}) == "a b");
}

TEST_CASE("pebble liveness") {
  const CompiledPia d(catalog::dyck());
  const int open = d.state_name(0) == "q[" ? 0 : 1;
  CHECK(d.is_live(open, 1));
  CHECK_FALSE(d.is_live(1 - open, 1));
  const CompiledPia abc(catalog::abc_counting());
  for (int q = 0; q < abc.state_count(); ++q) {
    // Pebbles 1 and 2 bound the later intervals; pebble 3 is always re-placed first.
    CHECK(abc.is_live(q, 1) == (abc.state_name(q) != "s0"));
    CHECK_FALSE(abc.is_live(q, 3));
  }
}
