#include <doctest.h>

#include "pia/catalog.hpp"
#include "pia/dataword.hpp"
#include "pia/errors.hpp"

using namespace pia;

namespace {

// Elements a..f of the running example.
enum { a, b, c, d, e, f };

}  // namespace

TEST_CASE("string projection") {
  CHECK(string_projection(catalog::running_example_word()) == parse_word("ξ1 ξ1 ξ1 ξ2 ξ1 ξ2"));
  CHECK(string_projection(DataWord{}).empty());
  CHECK(string_projection(DataWord({"a"}, {1})) == Word{"a"});
}

TEST_CASE("values are normalized onto an initial segment") {
  const DataWord w({"x", "x", "x"}, {10, 3, 10});
  CHECK(w.values() == std::vector<int>{2, 1, 2});
  CHECK(w.maxval() == 2);
  CHECK_THROWS_AS(DataWord({"x"}, {0}), FormatError);
  CHECK_THROWS_AS(DataWord({"x"}, {1, 2}), FormatError);
}

TEST_CASE("trimming the running example removes d and f") {
  const DataWord t = trim(catalog::running_example_word());
  CHECK(t.size() == 4);
  CHECK(string_projection(t) == parse_word("ξ1 ξ1 ξ1 ξ1"));
  CHECK(t.values() == std::vector<int>{2, 1, 4, 3});
  CHECK(trim(DataWord({"a", "b"}, {1, 1})).empty());
}

TEST_CASE("trimming twice lowers maxval by two") {
  for (const auto& w : enumerate_datawords({"a", "b"}, 4)) {
    if (w.maxval() < 2) continue;
    CHECK(trim(trim(w)).maxval() == w.maxval() - 2);
  }
}

TEST_CASE("trim keeps the letters of non-maximal positions in order") {
  for (const auto& w : enumerate_datawords({"a", "b"}, 4)) {
    Word expect;
    for (std::size_t p = 0; p < w.size(); ++p)
      if (w.value(p) < w.maxval()) expect.push_back(w.letter(p));
    CHECK(string_projection(trim(w)) == expect);
  }
}

TEST_CASE("model checking on the running example") {
  const DataWord D = catalog::running_example_word();
  CHECK(evaluate(D, Formula::succ2(Var::X, Var::Y), a, e));
  CHECK(evaluate(D, !Formula::succ2(Var::X, Var::Y) && Formula::le2(Var::X, Var::Y), b, e));
  CHECK(model_check(D, Formula::exists(Var::X, Formula::exists(Var::Y, Formula::succ2(Var::X, Var::Y)))));
  CHECK_THROWS_AS(model_check(D, Formula::succ2(Var::X, Var::Y)), FreeVariable);
  const Formula all = Formula::forall(Var::X, Formula::forall(Var::Y, Formula::falsity()));
  CHECK(model_check(DataWord{}, all));
  CHECK_FALSE(model_check(D, all));
}

TEST_CASE("sim2 is the symmetric part of the preorder") {
  for (const auto& w : enumerate_datawords({"a"}, 4))
    for (std::size_t p = 0; p < w.size(); ++p)
      for (std::size_t q = 0; q < w.size(); ++q)
        CHECK(evaluate(w, Formula::sim2(Var::X, Var::Y), static_cast<int>(p), static_cast<int>(q)) ==
              (w.value(p) == w.value(q)));
}

TEST_CASE("S2 is the successor of the preorder") {
  for (const auto& w : enumerate_datawords({"a"}, 5))
    for (std::size_t p = 0; p < w.size(); ++p)
      for (std::size_t q = 0; q < w.size(); ++q) {
        const bool strictly = w.le2(p, q) && !w.le2(q, p);
        bool between = false;
        for (std::size_t r = 0; r < w.size(); ++r)
          between |= w.le2(p, r) && !w.le2(r, p) && w.le2(r, q) && !w.le2(q, r);
        CHECK(w.succ2(p, q) == (strictly && !between));
      }
}

TEST_CASE("data word enumeration counts") {
  CHECK(enumerate_datawords({"a"}, 0).size() == 1);
  CHECK(enumerate_datawords({"a"}, 1).size() == 2);
  int two = 0;
  for_each_dataword({"a"}, 2, [&](const DataWord&) { ++two; });
  CHECK(two == 3);
  // Ordered set partitions of 3 elements: 13; times 2^3 letterings.
  int three = 0;
  for_each_dataword({"a", "b"}, 3, [&](const DataWord&) { ++three; });
  CHECK(three == 13 * 8);
  CHECK(value_patterns(3).size() == 13);
}
