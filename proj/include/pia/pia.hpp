#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pia/errors.hpp"

namespace pia {

using Letter = std::string;
using StateName = std::string;
using Word = std::vector<Letter>;

// Interval endpoint of a move: the left end marker, the right end marker, or a pebble.
class Anchor {
 public:
  static constexpr Anchor left_end() { return Anchor(kLeft); }
  static constexpr Anchor right_end() { return Anchor(kRight); }
  static constexpr Anchor pebble(int k) { return Anchor(k); }

  constexpr bool is_left_end() const { return v_ == kLeft; }
  constexpr bool is_right_end() const { return v_ == kRight; }
  constexpr bool is_pebble() const { return v_ > 0; }
  constexpr int pebble_index() const { return v_; }

  // Raw encoding: 0 for the left end, -1 for the right end, k >= 1 for a pebble.
  constexpr int raw() const { return v_; }

  constexpr auto operator<=>(const Anchor&) const = default;

 private:
  static constexpr int kLeft = 0;
  static constexpr int kRight = -1;
  constexpr explicit Anchor(int v) : v_(v) {}
  int v_;
};

std::string to_string(Anchor a);

struct MoveSpec {
  int pebble = 1;
  Anchor left = Anchor::left_end();
  Anchor right = Anchor::right_end();
  auto operator<=>(const MoveSpec&) const = default;
};

std::string to_string(const MoveSpec& m);

struct Transition {
  StateName from;
  StateName to;
  std::optional<MoveSpec> move;  // empty for a silent transition
  Letter letter;                 // unused for silent transitions

  bool is_silent() const { return !move.has_value(); }

  static Transition silent(StateName from, StateName to);
  static Transition make_move(StateName from, MoveSpec spec, Letter letter, StateName to);

  auto operator<=>(const Transition&) const = default;
};

std::string to_string(const Transition& t);

struct Pia {
  std::vector<Letter> alphabet;
  int pebbles = 1;
  std::vector<StateName> states;
  StateName initial;
  std::vector<StateName> accepting;
  std::vector<Transition> transitions;

  std::size_t size() const { return transitions.size() + alphabet.size() + states.size(); }
  bool operator==(const Pia&) const = default;
};

struct Violation {
  std::string element;
  std::string message;
};

// Empty iff the automaton is well formed.
std::vector<Violation> validate(const Pia& pia);

// Throws FormatError listing the first violations when validate() is non-empty.
void require_valid(const Pia& pia);

// Whitespace-separated tokens; the empty string is the empty word.
Word parse_word(const std::string& text);
std::string format_word(const Word& w);

}  // namespace pia
