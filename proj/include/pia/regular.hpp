#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pia/pia.hpp"

namespace pia {

struct NfaTransition {
  StateName from;
  std::optional<Letter> letter;  // empty: epsilon move
  StateName to;
  bool operator==(const NfaTransition&) const = default;
};

struct Nfa {
  std::vector<Letter> alphabet;
  std::vector<StateName> states;
  StateName initial;
  std::vector<StateName> accepting;
  std::vector<NfaTransition> transitions;
  bool operator==(const Nfa&) const = default;
};

std::vector<Violation> validate(const Nfa& nfa);

// Subset simulation with epsilon closure.
bool nfa_accepts(const Nfa& nfa, const Word& word);

// One-pebble unidirectional automaton. A fresh initial state is added only when
// the NFA's initial state has incoming transitions.
Pia nfa_to_pia(const Nfa& nfa);

// Empty when the automaton is unidirectional, otherwise a description of the
// first offending element.
std::optional<std::string> unidirectional_violation(const Pia& pia);

// Same states as the input. Throws NotUnidirectional.
Nfa pia_to_nfa(const Pia& pia);

}  // namespace pia
