#include "pia/pia.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pia {

std::string to_string(Anchor a) {
  if (a.is_left_end()) return "▷";
  if (a.is_right_end()) return "◁";
  return std::to_string(a.pebble_index());
}

std::string to_string(const MoveSpec& m) {
  return "<" + std::to_string(m.pebble) + "," + to_string(m.left) + "," + to_string(m.right) + ">";
}

Transition Transition::silent(StateName from, StateName to) {
  return Transition{std::move(from), std::move(to), std::nullopt, {}};
}

Transition Transition::make_move(StateName from, MoveSpec spec, Letter letter, StateName to) {
  return Transition{std::move(from), std::move(to), spec, std::move(letter)};
}

std::string to_string(const Transition& t) {
  if (t.is_silent()) return "(" + t.from + ", " + t.to + ")";
  return "(" + t.from + ", Move" + to_string(*t.move) + ", " + t.letter + ", " + t.to + ")";
}

std::vector<Violation> validate(const Pia& pia) {
  std::vector<Violation> out;
  const std::set<StateName> states(pia.states.begin(), pia.states.end());
  const std::set<Letter> letters(pia.alphabet.begin(), pia.alphabet.end());

  if (states.size() != pia.states.size()) out.push_back({"states", "duplicate state name"});
  if (letters.size() != pia.alphabet.size()) out.push_back({"alphabet", "duplicate letter"});
  if (pia.pebbles < 1) out.push_back({"pebbles", "pebble count must be positive"});
  if (!states.contains(pia.initial)) out.push_back({"initial " + pia.initial, "unknown state"});
  for (const auto& q : pia.accepting)
    if (!states.contains(q)) out.push_back({"accepting " + q, "unknown state"});

  for (const auto& t : pia.transitions) {
    const std::string name = to_string(t);
    if (!states.contains(t.from)) out.push_back({name, "unknown source state " + t.from});
    if (!states.contains(t.to)) out.push_back({name, "unknown target state " + t.to});
    if (t.is_silent()) continue;
    if (!letters.contains(t.letter)) out.push_back({name, "unknown letter " + t.letter});
    const MoveSpec& m = *t.move;
    const auto in_range = [&](int k) { return k >= 1 && k <= pia.pebbles; };
    if (!in_range(m.pebble)) out.push_back({name, "moved pebble out of range"});
    if (m.left.is_right_end() || (m.left.is_pebble() && !in_range(m.left.pebble_index())) ||
        (!m.left.is_pebble() && !m.left.is_left_end()))
      out.push_back({name, "left endpoint must be a pebble or the left end"});
    if (m.right.is_left_end() || (m.right.is_pebble() && !in_range(m.right.pebble_index())) ||
        (!m.right.is_pebble() && !m.right.is_right_end()))
      out.push_back({name, "right endpoint must be a pebble or the right end"});
    if (m.left == m.right) out.push_back({name, "endpoints must differ"});
  }
  return out;
}

void require_valid(const Pia& pia) {
  const auto v = validate(pia);
  if (v.empty()) return;
  std::string msg = "invalid automaton:";
  for (std::size_t i = 0; i < v.size() && i < 5; ++i) msg += " [" + v[i].element + ": " + v[i].message + "]";
  throw FormatError(msg);
}

Word parse_word(const std::string& text) {
  Word w;
  std::istringstream in(text);
  for (std::string tok; in >> tok;) w.push_back(tok);
  return w;
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w[i];
  }
  return out;
}

}  // namespace pia
