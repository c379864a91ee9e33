#include <doctest.h>

#include <algorithm>
#include <set>

#include "pia/catalog.hpp"
#include "pia/dataword.hpp"
#include "pia/errors.hpp"
#include "pia/fo2_logic.hpp"
#include "support/oracle.hpp"
#include "support/running.hpp"

using namespace pia;
using running::C;
using running::P;
using running::rest;
using running::top1;
using running::top2;

namespace {

const std::vector<Letter> kXi{"ξ1", "ξ2"};

bool has(const std::vector<std::string>& v, const std::string& x) { return std::find(v.begin(), v.end(), x) != v.end(); }

// 2-types realized by data words with <= 3 elements satisfying qf at (x, y).
std::set<TwoType> realized(const Formula& qf, const std::vector<Letter>& alphabet) {
  std::set<TwoType> out;
  for (int n = 2; n <= 3; ++n)
    for_each_dataword(alphabet, n, [&](const DataWord& d) {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (x != y && evaluate(d, qf, x, y)) out.insert(two_type_of(d, x, y, alphabet));
    });
  return out;
}

}  // namespace

TEST_CASE("every consistent 2-type is realized by a small data word") {
  const auto all = all_two_types(2);
  CHECK(all.size() == 40);
  for (const auto& t : all) {
    const auto r = realize(t, kXi);
    CHECK(r.word.size() <= 3);
    CHECK(two_type_of(r.word, r.x, r.y, kXi) == t);
    CHECK(evaluate(r.word, to_formula(t, kXi), static_cast<int>(r.x), static_cast<int>(r.y)));
  }
}

TEST_CASE("swapping twice is the identity") {
  for (const auto& t : all_two_types(2)) CHECK(swapped(swapped(t)) == t);
}

TEST_CASE("expansion of quantifier-free formulas") {
  CHECK(expand_to_two_types(Formula::truth(), kXi) == all_two_types(2));
  CHECK(expand_to_two_types(Formula::falsity(), kXi).empty());
  const auto chi = catalog::running_example().forall;
  for (const auto& t : all_two_types(2)) {
    const bool both2 = t.x_letter == 1 && t.y_letter == 1;
    const bool excluded = both2 && t.rel != ValueRel::Equal;
    CHECK((std::find(chi.begin(), chi.end(), t) == chi.end()) == excluded);
  }
  CHECK_THROWS_AS(expand_to_two_types(Formula::exists(Var::X, Formula::truth()), kXi), FormatError);
}

TEST_CASE("expansion agrees with realizations") {
  const Formula qf = Formula::implies(Formula::letter("ξ1", Var::X), Formula::lt2(Var::X, Var::Y)) &&
                     !Formula::succ2(Var::Y, Var::X);
  const auto types = expand_to_two_types(qf, kXi);
  CHECK(std::set<TwoType>(types.begin(), types.end()) == realized(qf, kXi));
}

TEST_CASE("witness type sets") {
  const auto omegas = witness_type_sets(catalog::running_example());
  REQUIRE(omegas.size() == 2);
  CHECK(omegas[0] == std::vector<std::vector<std::string>>{{"θ1"}, {"θ3"}});
  CHECK(omegas[1] == std::vector<std::vector<std::string>>{{"θ2"}, {"θ4"}});

  NormalForm zero = catalog::running_example();
  zero.B = 0;
  zero.exists.clear();
  for (const auto& per_letter : witness_type_sets(zero)) CHECK(per_letter == std::vector<std::vector<std::string>>{{}});
  CHECK_THROWS_AS(Sentence{zero}, FormatError);

  NormalForm two;
  two.letters = {"a"};
  two.B = 2;
  two.C = 2;
  two.exists = {{1, 1, 1, "p", TwoType{0, 0, true, ValueRel::XSuccY}},
                {1, 1, 2, "q", TwoType{0, 0, true, ValueRel::XBelowY}},
                {1, 2, 1, "r", TwoType{0, 0, false, ValueRel::Equal}},
                {1, 2, 2, "s", TwoType{0, 0, false, ValueRel::YSuccX}}};
  two.forall = all_two_types(1);
  CHECK(witness_type_sets(two)[0].size() == 4);
  CHECK(Sentence(two).omegas().size() == 4);
}

TEST_CASE("running example has eight task sets") {
  const auto& s = running::sentence();
  const auto sets = s.task_sets();
  CHECK(sets.size() == 8);
  for (int i = 1; i <= 4; ++i) {
    CHECK(std::find(sets.begin(), sets.end(), running::ts(i, true)) != sets.end());
    CHECK(std::find(sets.begin(), sets.end(), running::ts(i, false)) != sets.end());
  }
  for (const auto& ts : sets) {
    CHECK((ts.completed & ~s.omegas()[ts.omega].types) == 0);
    CHECK(s.omega_index(s.omegas()[ts.omega].types) == ts.omega);
  }
}

TEST_CASE("perf on the running example") {
  const auto& s = running::sentence();
  const Formula expect = Formula::all_of({Formula::letter("ξ1", Var::X), Formula::letter("ξ2", Var::Y),
                                          Formula::lt1(Var::X, Var::Y), Formula::lt2(Var::X, Var::Y),
                                          Formula::succ2(Var::X, Var::Y)});
  CHECK(perf(s, C(top2, 1), C(top1, 2)) == expect);
  const TwoType t = perf_two_type(s, C(top2, 1), C(top1, 2));
  CHECK(t == TwoType{0, 1, true, ValueRel::XSuccY});
  const auto lits = literals(t, s.letters());
  for (const auto* l : {"ξ1(x)", "ξ2(y)", "¬y<1x", "¬y<=2x", "¬S2(y,x)"}) CHECK(has(lits, l));
  CHECK_THROWS_AS(perf(s, C(rest, 3), C(top2, 1)), NeitherTop);
}

TEST_CASE("perf for two top letters forces equal values") {
  const auto& s = running::sentence();
  CHECK(perf_two_type(s, C(top1, 2), P(top1, 4)).rel == ValueRel::Equal);
  CHECK(perf_two_type(s, C(top1, 1), P(top1, 3)).rel == ValueRel::Equal);
  const auto r = realized(perf(s, C(top1, 1), P(top1, 3)), s.letters());
  CHECK(r.size() == 1);
}

TEST_CASE("perf with a rest letter excludes the successor") {
  const auto& s = running::sentence();
  const Formula f = perf(s, C(rest, 3), C(top1, 2));
  CHECK(perf_two_type(s, C(rest, 3), C(top1, 2)).rel == ValueRel::XBelowY);
  bool negated_succ = false;
  for (const auto& g : f.children())
    negated_succ |= g.kind() == Formula::Kind::Not && g.children().front() == Formula::succ2(Var::X, Var::Y);
  CHECK(negated_succ);
}

TEST_CASE("perf completions are exactly the realized types") {
  const auto& s = running::sentence();
  for (const auto& ts : s.task_sets())
    for (const auto& us : s.task_sets())
      for (auto ha : {top1, top2, rest})
        for (auto hb : {top1, top2, rest}) {
          if (ha != top1 && hb != top1) continue;
          const GammaLetter x{ha, ts}, y{hb, us};
          const auto r = realized(perf(s, x, y), s.letters());
          REQUIRE(r.size() == 1);
          CHECK(*r.begin() == perf_two_type(s, x, y));
        }
}

TEST_CASE("perfect strings") {
  const auto& s = running::sentence();
  CHECK(is_perfect_string(s, running::w()));
  CHECK(is_perfect_string(s, {}));
  // A rest-layer ξ2 strictly below a top ξ2 breaks χ.
  CHECK_FALSE(is_perfect_string(s, {C(rest, 2), C(top1, 4)}));
}

TEST_CASE("parse_two_type picks the minimal completion") {
  const TwoType t = parse_two_type({"x<1y", "S2(x,y)", "ξ1(x)", "ξ2(y)"}, kXi);
  CHECK(t == TwoType{0, 1, true, ValueRel::XSuccY});
  CHECK(parse_two_type(literals(t, kXi), kXi) == t);
  for (const auto& u : all_two_types(2)) CHECK(parse_two_type(literals(u, kXi), kXi) == u);
  CHECK_THROWS_AS(parse_two_type({"x<1y", "¬x<1y", "ξ1(x)", "ξ1(y)"}, kXi), FormatError);
  CHECK_THROWS_AS(parse_two_type({"bogus", "ξ1(x)", "ξ1(y)"}, kXi), FormatError);
}

TEST_CASE("validate reports table problems") {
  NormalForm nf = catalog::running_example();
  CHECK(validate(nf).empty());
  nf.exists[0].type.x_letter = 1;
  CHECK_FALSE(validate(nf).empty());
  nf = catalog::running_example();
  nf.exists.pop_back();
  CHECK_FALSE(validate(nf).empty());
}

TEST_CASE("direct normal-form reading agrees with model checking the sentence") {
  for (const auto& nf : {catalog::running_example(), catalog::unsatisfiable_example(),
                         catalog::epsilon_only_example(), catalog::two_classes_example()}) {
    const Formula phi = Sentence(nf).formula();
    for (int n = 0; n <= 4; ++n)
      for_each_dataword(nf.letters, n, [&](const DataWord& d) {
        std::vector<int> letters;
        for (const auto& l : d.letters())
          letters.push_back(static_cast<int>(std::find(nf.letters.begin(), nf.letters.end(), l) - nf.letters.begin()));
        REQUIRE(oracle::satisfies(nf, letters, d.values()) == model_check(d, phi));
      });
  }
}

TEST_CASE("the running data word is a model") {
  const Formula phi = running::sentence().formula();
  CHECK(model_check(catalog::running_example_word(), phi));
}
