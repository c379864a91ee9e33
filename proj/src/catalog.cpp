#include "pia/catalog.hpp"

#include <algorithm>

namespace pia::catalog {

namespace {

MoveSpec mv(int k, Anchor i, Anchor j) { return {k, i, j}; }
Anchor P(int k) { return Anchor::pebble(k); }
const Anchor L = Anchor::left_end();
const Anchor R = Anchor::right_end();

bool balanced(const Word& w, const Letter& open, const Letter& close) {
  int depth = 0;
  for (const auto& l : w) {
    if (l == open) ++depth;
    if (l == close && --depth < 0) return false;
  }
  return depth == 0;
}

}  // namespace

Pia dyck() {
  Pia p;
  p.alphabet = {"[", "]"};
  p.pebbles = 1;
  p.states = {"q]", "q["};
  p.initial = "q]";
  p.accepting = {"q]"};
  p.transitions = {Transition::make_move("q]", mv(1, L, R), "[", "q["),
                   Transition::make_move("q[", mv(1, P(1), R), "]", "q]")};
  return p;
}

Pia two_brackets() {
  Pia p;
  p.alphabet = {"(", ")", "[", "]"};
  p.pebbles = 1;
  p.states = {"q0", "q(", "q["};
  p.initial = "q0";
  p.accepting = {"q0"};
  p.transitions = {Transition::make_move("q0", mv(1, L, R), "(", "q("),
                   Transition::make_move("q(", mv(1, P(1), R), ")", "q0"),
                   Transition::make_move("q0", mv(1, L, R), "[", "q["),
                   Transition::make_move("q[", mv(1, P(1), R), "]", "q0")};
  return p;
}

Pia abc_counting() {
  Pia p;
  p.alphabet = {"a", "$", "b", "#", "c"};
  p.pebbles = 3;
  p.states = {"s0", "s1", "s2", "s3", "s4"};
  p.initial = "s0";
  p.accepting = {"s2"};
  p.transitions = {Transition::make_move("s0", mv(1, L, R), "$", "s1"),
                   Transition::make_move("s1", mv(2, P(1), R), "#", "s2"),
                   Transition::make_move("s2", mv(3, L, P(1)), "a", "s3"),
                   Transition::make_move("s3", mv(3, P(1), P(2)), "b", "s4"),
                   Transition::make_move("s4", mv(3, P(2), R), "c", "s2")};
  return p;
}

Pia copy_language() {
  Pia p;
  p.alphabet = {"0", "1", "$"};
  p.pebbles = 3;
  p.states = {"s0", "s1", "s2", "t0", "t1", "u0", "u1"};
  p.initial = "s0";
  p.accepting = {"s2"};
  p.transitions.push_back(Transition::make_move("s0", mv(1, L, R), "$", "s1"));
  for (const Letter a : {"0", "1"}) {
    p.transitions.push_back(Transition::make_move("s1", mv(2, L, P(1)), a, "t" + a));
    p.transitions.push_back(Transition::make_move("t" + a, mv(3, P(1), R), a, "s2"));
    p.transitions.push_back(Transition::make_move("s2", mv(2, P(2), P(1)), a, "u" + a));
    p.transitions.push_back(Transition::make_move("u" + a, mv(3, P(3), R), a, "s2"));
  }
  return p;
}

bool is_dyck(const Word& w) {
  return std::all_of(w.begin(), w.end(), [](const Letter& l) { return l == "[" || l == "]"; }) &&
         balanced(w, "[", "]");
}

bool is_two_brackets(const Word& w) {
  return std::all_of(w.begin(), w.end(), [](const Letter& l) { return l == "(" || l == ")" || l == "[" || l == "]"; }) &&
         balanced(w, "(", ")") && balanced(w, "[", "]");
}

bool is_abc_counting(const Word& w) {
  std::size_t i = 0, a = 0, b = 0, c = 0;
  while (i < w.size() && w[i] == "a") ++i, ++a;
  if (i == w.size() || w[i++] != "$") return false;
  while (i < w.size() && w[i] == "b") ++i, ++b;
  if (i == w.size() || w[i++] != "#") return false;
  while (i < w.size() && w[i] == "c") ++i, ++c;
  return i == w.size() && a == b && b == c;
}

bool is_copy(const Word& w) {
  if (w.size() < 3 || w.size() % 2 == 0) return false;
  const std::size_t half = w.size() / 2;
  if (w[half] != "$") return false;
  for (std::size_t i = 0; i < half; ++i) {
    if (w[i] != "0" && w[i] != "1") return false;
    if (w[i] != w[half + 1 + i]) return false;
  }
  return true;
}

NormalForm running_example() {
  NormalForm nf;
  nf.letters = {"ξ1", "ξ2"};
  nf.B = 1;
  nf.C = 2;
  nf.exists = {
      {1, 1, 1, "θ1", TwoType{0, 1, true, ValueRel::XSuccY}},
      {2, 1, 1, "θ2", TwoType{1, 0, false, ValueRel::YSuccX}},
      {1, 1, 2, "θ3", TwoType{0, 1, true, ValueRel::XBelowY}},
      {2, 1, 2, "θ4", TwoType{1, 0, false, ValueRel::YBelowX}},
  };
  const Formula chi = Formula::implies(Formula::letter("ξ2", Var::X) && Formula::letter("ξ2", Var::Y),
                                       Formula::sim2(Var::X, Var::Y));
  nf.forall = expand_to_two_types(chi, nf.letters);
  nf.epsilon = true;
  return nf;
}

DataWord running_example_word() { return DataWord({"ξ1", "ξ1", "ξ1", "ξ2", "ξ1", "ξ2"}, {2, 1, 4, 5, 3, 5}); }

std::vector<std::string> running_example_choice() { return {"θ3", "θ3", "θ1", "θ2", "θ3", "θ4"}; }

NormalForm unsatisfiable_example() {
  NormalForm nf;
  nf.letters = {"a"};
  nf.B = 1;
  nf.C = 1;
  nf.exists = {{1, 1, 1, "θ", TwoType{0, 0, true, ValueRel::Equal}}};
  nf.forall = all_two_types(1);
  nf.epsilon = false;
  return nf;
}

NormalForm epsilon_only_example() {
  NormalForm nf = unsatisfiable_example();
  nf.epsilon = true;
  return nf;
}

NormalForm two_classes_example() {
  NormalForm nf;
  nf.letters = {"a", "b"};
  nf.B = 1;
  nf.C = 2;
  nf.exists = {
      {1, 1, 1, "θa>", TwoType{0, 1, true, ValueRel::XSuccY}},
      {1, 1, 2, "θa<", TwoType{0, 1, false, ValueRel::XSuccY}},
      {2, 1, 1, "θb>", TwoType{1, 0, true, ValueRel::YSuccX}},
      {2, 1, 2, "θb<", TwoType{1, 0, false, ValueRel::YSuccX}},
  };
  const Formula same = Formula::implies(Formula::letter("a", Var::X) && Formula::letter("a", Var::Y),
                                        Formula::sim2(Var::X, Var::Y));
  nf.forall = expand_to_two_types(same, nf.letters);
  nf.epsilon = false;
  return nf;
}

NormalForm projected_example() {
  NormalForm nf = running_example();
  nf.projection = {{"ξ1", "σ"}, {"ξ2", "σ"}};
  return nf;
}

}  // namespace pia::catalog
