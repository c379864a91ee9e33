#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "pia/catalog.hpp"
#include "pia/dataword.hpp"
#include "pia/errors.hpp"
#include "pia/fo2_extremal.hpp"
#include "support/running.hpp"

using namespace pia;
using running::C;
using running::P;
using running::rest;
using running::top1;
using running::top2;

namespace {

const Sentence& S() { return running::sentence(); }

TaskWord running_task_word() {
  std::vector<int> omegas;
  for (const auto& id : catalog::running_example_choice()) {
    const int theta = static_cast<int>(id[std::string("θ").size()] - '1');
    omegas.push_back(S().omega_index(std::uint64_t{1} << theta));
  }
  auto t = make_task_word(S(), catalog::running_example_word(), omegas);
  REQUIRE(t);
  return *t;
}

// Calls visit on every task word over d.
void for_each_task_word(const Sentence& s, const DataWord& d, const std::function<void(const TaskWord&)>& visit) {
  std::vector<int> choice(d.size());
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == d.size()) {
      if (auto t = make_task_word(s, d, choice)) visit(*t);
      return;
    }
    for (int o : s.omegas_of(s.letter_index(d.letters()[i]))) {
      choice[i] = o;
      go(i + 1);
    }
  };
  go(0);
}

std::vector<GammaLetter> all_letters(const Sentence& s) {
  std::vector<GammaLetter> out;
  for (const auto& ts : s.task_sets())
    for (auto h : {top1, top2, rest}) out.push_back({h, ts});
  return out;
}

GammaString random_string(std::mt19937_64& rng, const std::vector<GammaLetter>& letters, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), pick(0, letters.size() - 1);
  GammaString w(len(rng));
  for (auto& g : w) g = letters[pick(rng)];
  return w;
}

}  // namespace

TEST_CASE("task word of the running example") {
  const TaskWord t = running_task_word();
  CHECK(is_completed(S(), t));
  CHECK(abst(t) == running::w());
  CHECK(abst(trim_task_word(S(), t)) == running::s_prime());
}

TEST_CASE("make_task_word rejects Ω entries of the wrong letter") {
  const DataWord d({"ξ1"}, {1});
  CHECK_FALSE(make_task_word(S(), d, {S().omega_index(2)}).has_value());
  CHECK(make_task_word(S(), d, {S().omega_index(1)}).has_value());
}

TEST_CASE("extremal positions and ext") {
  CHECK(ext_positions(S(), running::w()) == std::vector<std::size_t>{1, 3, 4, 5, 6});
  CHECK(ext(S(), running::w()) == running::s());
  CHECK(is_extremal(S(), running::s()));
  CHECK(is_extremal(S(), running::s_prime()));
  CHECK_FALSE(is_extremal(S(), running::w()));
  CHECK(ext(S(), {}) == GammaString{});
}

TEST_CASE("down and rcon reproduce the running string") {
  CHECK(down(running::s_prime()) == GammaString{P(rest, 3), P(rest, 3), P(top2, 1), P(rest, 3)});
  const GammaString r{P(top1, 2), P(top1, 4)};
  const GammaString con = rcon(S(), r, {4, 6}, running::s_prime());
  CHECK(con == running::w());
  CHECK(ext(S(), con) == running::s());
  CHECK(partial_embedding(S(), running::s_prime(), running::s(), r, {4, 6}) ==
        std::vector<std::size_t>{1, 3, 0, 4, 0});
}

TEST_CASE("rcon validates g") {
  const GammaString r{P(top1, 2), P(top1, 4)};
  CHECK_THROWS_AS(rcon(S(), r, {6, 4}, running::s_prime()), NonMonotoneG);
  CHECK_THROWS_AS(rcon(S(), r, {4, 7}, running::s_prime()), NonMonotoneG);
  CHECK_THROWS_AS(rcon(S(), r, {0, 4}, running::s_prime()), NonMonotoneG);
  CHECK_THROWS_AS(rcon(S(), r, {4}, running::s_prime()), NonMonotoneG);
}

TEST_CASE("consecutive finds the running successor") {
  const auto wit = consecutive(S(), running::s_prime(), running::s());
  REQUIRE(wit);
  CHECK(ext(S(), rcon(S(), wit->r, wit->g, running::s_prime())) == running::s());
  CHECK_FALSE(consecutive(S(), running::s(), running::s_prime()).has_value());
  CHECK_THROWS_AS(partial_embedding(S(), running::s_prime(), running::s(), {P(top1, 2), P(top1, 4)}, {1, 2}),
                  NotConsecutive);
}

TEST_CASE("successors contain the running step") {
  const auto succ = successors(S(), running::s_prime(), 2);
  const bool found = std::any_of(succ.begin(), succ.end(), [](const Successor& x) {
    return x.s1 == running::s() && x.emb == std::vector<std::size_t>{1, 3, 0, 4, 0};
  });
  CHECK(found);
  for (const auto& x : succ) {
    CHECK(is_extremal(S(), x.s1));
    CHECK(ext(S(), rcon(S(), x.r, x.g, running::s_prime())) == x.s1);
    CHECK(partial_embedding(S(), running::s_prime(), x.s1, x.r, x.g) == x.emb);
  }
}

TEST_CASE("ext is idempotent and bounded on random strings") {
  std::mt19937_64 rng(7);
  const auto letters = all_letters(S());
  for (int i = 0; i < 200; ++i) {
    const GammaString w = random_string(rng, letters, 14);
    const GammaString e = ext(S(), w);
    CHECK(ext(S(), e) == e);
    CHECK(e.size() <= ext_bound(S()));
    const auto pos = ext_positions(S(), w);
    CHECK(std::is_sorted(pos.begin(), pos.end()));
  }
}

TEST_CASE("gamma_notext matches brute-force insertion") {
  std::mt19937_64 rng(11);
  const auto letters = all_letters(S());
  for (int i = 0; i < 60; ++i) {
    const GammaString w = random_string(rng, letters, 7);
    const GammaString e = ext(S(), w);
    for (std::size_t ell = 1; ell <= w.size() + 1; ++ell) {
      std::vector<GammaLetter> brute;
      for (const auto& g : letters) {
        GammaString v = w;
        v.insert(v.begin() + static_cast<std::ptrdiff_t>(ell - 1), g);
        if (ext(S(), v) == e) brute.push_back(g);
      }
      auto fast = gamma_notext(S(), w, ell);
      std::sort(fast.begin(), fast.end());
      std::sort(brute.begin(), brute.end());
      CHECK(fast == brute);
    }
  }
}

TEST_CASE("completed perfect task words characterize models") {
  for (const auto& nf : {catalog::running_example(), catalog::two_classes_example()}) {
    const Sentence s(nf);
    const Formula phi = s.formula();
    for (int n = 0; n <= 3; ++n)
      for_each_dataword(nf.letters, n, [&](const DataWord& d) {
        bool some = false;
        for_each_task_word(s, d, [&](const TaskWord& t) { some |= is_completed(s, t) && is_perfect(s, t); });
        CHECK(some == model_check(d, phi));
      });
  }
}

TEST_CASE("trimming steps are consecutive") {
  for (int n = 1; n <= 3; ++n)
    for_each_dataword(S().letters(), n, [&](const DataWord& d) {
      for_each_task_word(S(), d, [&](const TaskWord& t) {
        const GammaString s0 = ext(S(), abst(trim_task_word(S(), t)));
        const GammaString s1 = ext(S(), abst(t));
        CHECK(consecutive(S(), s0, s1).has_value());
      });
    });
}
