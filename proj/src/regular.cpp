#include "pia/regular.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pia {

namespace {

std::set<StateName> closure(const std::set<StateName>& from,
                            const std::multimap<StateName, StateName>& edges) {
  std::set<StateName> seen = from;
  std::vector<StateName> todo(from.begin(), from.end());
  while (!todo.empty()) {
    StateName q = todo.back();
    todo.pop_back();
    auto [b, e] = edges.equal_range(q);
    for (auto it = b; it != e; ++it)
      if (seen.insert(it->second).second) todo.push_back(it->second);
  }
  return seen;
}

std::multimap<StateName, StateName> epsilon_edges(const Nfa& nfa) {
  std::multimap<StateName, StateName> eps;
  for (const auto& t : nfa.transitions)
    if (!t.letter) eps.emplace(t.from, t.to);
  return eps;
}

bool contains(const std::vector<StateName>& v, const StateName& q) {
  return std::find(v.begin(), v.end(), q) != v.end();
}

}  // namespace

std::vector<Violation> validate(const Nfa& nfa) {
  std::vector<Violation> out;
  const std::set<StateName> states(nfa.states.begin(), nfa.states.end());
  const std::set<Letter> letters(nfa.alphabet.begin(), nfa.alphabet.end());
  if (!states.contains(nfa.initial)) out.push_back({"initial " + nfa.initial, "unknown state"});
  for (const auto& q : nfa.accepting)
    if (!states.contains(q)) out.push_back({"accepting " + q, "unknown state"});
  for (const auto& t : nfa.transitions) {
    const std::string name = "(" + t.from + ", " + t.letter.value_or("ε") + ", " + t.to + ")";
    if (!states.contains(t.from)) out.push_back({name, "unknown source state"});
    if (!states.contains(t.to)) out.push_back({name, "unknown target state"});
    if (t.letter && !letters.contains(*t.letter)) out.push_back({name, "unknown letter"});
  }
  return out;
}

bool nfa_accepts(const Nfa& nfa, const Word& word) {
  const auto eps = epsilon_edges(nfa);
  std::set<StateName> current = closure({nfa.initial}, eps);
  for (const auto& l : word) {
    std::set<StateName> next;
    for (const auto& t : nfa.transitions)
      if (t.letter == l && current.contains(t.from)) next.insert(t.to);
    current = closure(next, eps);
    if (current.empty()) return false;
  }
  return std::any_of(current.begin(), current.end(), [&](const StateName& q) { return contains(nfa.accepting, q); });
}

Pia nfa_to_pia(const Nfa& nfa) {
  Pia out;
  out.alphabet = nfa.alphabet;
  out.pebbles = 1;
  out.states = nfa.states;
  out.accepting = nfa.accepting;

  const StateName& q0 = nfa.initial;
  const bool has_incoming =
      std::any_of(nfa.transitions.begin(), nfa.transitions.end(), [&](const auto& t) { return t.to == q0; });
  StateName init = q0;
  if (has_incoming) {
    init = "init";
    while (contains(out.states, init)) init += "'";
    out.states.push_back(init);
  }
  out.initial = init;

  const MoveSpec first{1, Anchor::left_end(), Anchor::right_end()};
  const MoveSpec later{1, Anchor::pebble(1), Anchor::right_end()};

  // First reads: from the epsilon closure of q0, with the whole word as interval.
  const auto start = closure({q0}, epsilon_edges(nfa));
  for (const auto& t : nfa.transitions)
    if (t.letter && start.contains(t.from)) out.transitions.push_back(Transition::make_move(init, first, *t.letter, t.to));
  if (std::any_of(start.begin(), start.end(), [&](const StateName& q) { return contains(nfa.accepting, q); }) &&
      !contains(out.accepting, init))
    out.accepting.push_back(init);

  for (const auto& t : nfa.transitions) {
    if (t.from == init) continue;  // replaced by the first reads above
    if (t.letter)
      out.transitions.push_back(Transition::make_move(t.from, later, *t.letter, t.to));
    else
      out.transitions.push_back(Transition::silent(t.from, t.to));
  }
  return out;
}

std::optional<std::string> unidirectional_violation(const Pia& pia) {
  if (pia.pebbles != 1) return "automaton has " + std::to_string(pia.pebbles) + " pebbles";
  const MoveSpec first{1, Anchor::left_end(), Anchor::right_end()};
  const MoveSpec later{1, Anchor::pebble(1), Anchor::right_end()};
  for (const auto& t : pia.transitions) {
    if (t.to == pia.initial) return "transition " + to_string(t) + " enters the initial state";
    if (t.is_silent()) continue;
    if (t.from == pia.initial && *t.move != first)
      return "transition " + to_string(t) + " leaves the initial state without Move<1,▷,◁>";
    if (t.from != pia.initial && *t.move != later)
      return "transition " + to_string(t) + " does not use Move<1,1,◁>";
  }
  return std::nullopt;
}

Nfa pia_to_nfa(const Pia& pia) {
  require_valid(pia);
  if (auto why = unidirectional_violation(pia)) throw NotUnidirectional(*why);
  Nfa out;
  out.alphabet = pia.alphabet;
  out.states = pia.states;
  out.initial = pia.initial;
  out.accepting = pia.accepting;

  // Silent steps out of the initial state leave the pebble unplaced, after
  // which no move can fire: they only matter for accepting the empty word.
  std::multimap<StateName, StateName> silent;
  for (const auto& t : pia.transitions)
    if (t.is_silent()) silent.emplace(t.from, t.to);
  const auto reach = closure({pia.initial}, silent);
  if (std::any_of(reach.begin(), reach.end(), [&](const StateName& q) { return contains(pia.accepting, q); }) &&
      !contains(out.accepting, pia.initial))
    out.accepting.push_back(pia.initial);

  for (const auto& t : pia.transitions) {
    if (t.is_silent()) {
      if (t.from != pia.initial) out.transitions.push_back({t.from, std::nullopt, t.to});
    } else {
      out.transitions.push_back({t.from, t.letter, t.to});
    }
  }
  return out;
}

}  // namespace pia
