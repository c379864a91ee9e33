#include <doctest.h>

#include <random>

#include "pia/catalog.hpp"
#include "pia/closure.hpp"
#include "pia/differential.hpp"
#include "pia/errors.hpp"
#include "pia/run.hpp"
#include "support/languages.hpp"
#include "support/oracle.hpp"

using namespace pia;

namespace {

oracle::Member member(const Pia& p) {
  auto c = std::make_shared<CompiledPia>(p);
  return oracle::cached([c](const Word& w) { return accepts(*c, w); });
}

// Same language on all words over `alphabet` up to max_len.
void check_equal(const Pia& x, const oracle::Member& y, const std::vector<Letter>& alphabet, int max_len) {
  const CompiledPia c(x);
  for (const auto& w : oracle::all_words(alphabet, max_len)) {
    INFO("word: " << format_word(w));
    REQUIRE(accepts(c, w) == y(w));
  }
}

Pia letter(const Letter& a, std::vector<Letter> alphabet) { return word_pia({a}, std::move(alphabet)); }

const std::vector<Letter> kAB{"a", "b"};

}  // namespace

TEST_CASE("union of the Dyck and copy languages") {
  const Pia u = union_of(catalog::dyck(), catalog::copy_language());
  CHECK(validate(u).empty());
  CHECK(accepts(u, parse_word("[ ]")));
  CHECK(accepts(u, parse_word("0 $ 0")));
  CHECK_FALSE(accepts(u, parse_word("0 $ 1")));
}

TEST_CASE("union identities") {
  const Pia a = catalog::dyck();
  Pia none = a;
  none.accepting.clear();
  check_equal(union_of(a, a), member(a), a.alphabet, 8);
  check_equal(union_of(none, a), member(a), a.alphabet, 8);
}

TEST_CASE("concatenation of Dyck words") {
  const Pia d = catalog::dyck();
  const Pia dd = concat(d, d);
  CHECK(accepts(dd, parse_word("[ ] [ ]")));
  CHECK_FALSE(accepts(dd, parse_word("] [")));
  const auto md = member(d);
  check_equal(dd, [&](const Word& w) { return oracle::in_concat(md, md, w); }, d.alphabet, 8);
  check_equal(concat(d, epsilon_pia(d.alphabet)), md, d.alphabet, 8);
  check_equal(concat(epsilon_pia(d.alphabet), d), md, d.alphabet, 8);
}

TEST_CASE("star") {
  const Pia a = letter("a", {"a"});
  check_equal(star(a), [](const Word&) { return true; }, {"a"}, 8);
  const Pia d = catalog::dyck();
  CHECK(accepts(star(d), {}));
  const auto ms = member(star(d));
  check_equal(star(star(d)), ms, d.alphabet, 6);
  const Pia ab = word_pia(parse_word("a b"), kAB);
  const auto mab = member(ab);
  check_equal(star(ab), [&](const Word& w) { return oracle::in_star(mab, w); }, kAB, 8);
}

TEST_CASE("shuffle of two two-letter words") {
  const std::vector<Letter> abcd{"a", "b", "c", "d"};
  const Pia s = shuffle(word_pia(parse_word("a b"), abcd), word_pia(parse_word("c d"), abcd));
  CHECK(enumerate_accepted(s, 4).size() == 6);
  for (const auto& w : enumerate_accepted(s, 4)) CHECK(w.size() == 4);
}

TEST_CASE("shuffle identities") {
  const Pia d = catalog::dyck();
  check_equal(shuffle(d, epsilon_pia(d.alphabet)), member(d), d.alphabet, 8);
  const Pia ab = word_pia(parse_word("a b"), kAB);
  const Pia ba = star(letter("b", kAB));
  check_equal(shuffle(ab, ba), member(shuffle(ba, ab)), kAB, 7);
}

TEST_CASE("shuffle_star") {
  const Pia ab = word_pia(parse_word("a b"), kAB);
  const Pia ss = shuffle_star(ab);
  CHECK(accepts(ss, parse_word("a a b b")));
  CHECK(accepts(ss, parse_word("a b a b")));
  CHECK_FALSE(accepts(ss, parse_word("b a")));
  CHECK(accepts(ss, {}));
  const auto mab = member(ab);
  check_equal(ss, [&](const Word& w) { return oracle::in_shuffle_star(mab, w); }, kAB, 6);
  check_equal(shuffle_star(letter("a", {"a"})), [](const Word&) { return true; }, {"a"}, 6);
}

TEST_CASE("substitution") {
  const Pia d = catalog::dyck();
  check_equal(substitute(d, {{"[", "["}, {"]", "]"}}), member(d), d.alphabet, 8);
  CHECK(accepts(substitute(d, {{"[", "("}, {"]", ")"}}), parse_word("( )")));
  const Pia x = substitute(d, {{"[", "x"}, {"]", "x"}});
  CHECK(accepts(x, parse_word("x x")));
  CHECK_FALSE(accepts(x, parse_word("x x x")));
  CHECK_THROWS_AS(substitute(d, {{"[", "x"}}), PartialMap);
}

TEST_CASE("random operands: constructions match the definitions") {
  std::mt19937_64 rng(21);
  differential::RandomPiaParams small;
  small.max_states = 3;
  small.max_pebbles = 2;
  small.max_transitions = 5;
  for (int i = 0; i < 12; ++i) {
    const Pia a = differential::random_pia(rng, small), b = differential::random_pia(rng, small);
    const auto ma = member(a), mb = member(b);
    const Pia built[] = {union_of(a, b), concat(a, b), star(a), shuffle(a, b), shuffle_star(a)};
    for (const auto& p : built) {
      CHECK(validate(p).empty());
    }
    CHECK(built[0].pebbles <= a.pebbles + b.pebbles + 1);
    CHECK(built[1].pebbles <= a.pebbles + b.pebbles + 1);
    CHECK(built[3].pebbles <= a.pebbles + b.pebbles + 1);
    CHECK(built[4].pebbles <= a.pebbles + 1);
    CHECK(built[2].pebbles == a.pebbles + 2);
    check_equal(built[0], [&](const Word& w) { return ma(w) || mb(w); }, kAB, 6);
    check_equal(built[1], [&](const Word& w) { return oracle::in_concat(ma, mb, w); }, kAB, 6);
    check_equal(built[2], [&](const Word& w) { return oracle::in_star(ma, w); }, kAB, 6);
    check_equal(built[3], [&](const Word& w) { return oracle::in_shuffle(ma, mb, w); }, kAB, 6);
    check_equal(built[4], [&](const Word& w) { return oracle::in_shuffle_star(ma, w); }, kAB, 5);
  }
}
