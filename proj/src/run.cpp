#include "pia/run.hpp"

#include <algorithm>

namespace pia {

CompiledPia::CompiledPia(const Pia& pia) : pebbles_(pia.pebbles), alphabet_(pia.alphabet) {
  require_valid(pia);
  std::unordered_map<StateName, int> ids;
  for (const auto& q : pia.states) {
    ids.emplace(q, static_cast<int>(names_.size()));
    names_.push_back(q);
  }
  for (std::size_t i = 0; i < alphabet_.size(); ++i) letter_ids_.emplace(alphabet_[i], static_cast<int>(i));
  initial_ = ids.at(pia.initial);
  accepting_.assign(names_.size(), false);
  for (const auto& q : pia.accepting) accepting_[ids.at(q)] = true;
  out_.resize(names_.size());
  for (const auto& t : pia.transitions) {
    Edge<State> e{t.move, t.is_silent() ? -1 : letter_ids_.at(t.letter), ids.at(t.to)};
    out_[ids.at(t.from)].push_back(e);
  }

  // Backwards fixpoint: k is live at q if some edge anchors on k, or leads
  // (without replacing k) to a state where k is live.
  const std::size_t m = static_cast<std::size_t>(pebbles_);
  live_.assign(names_.size() * m, false);
  auto anchors = [](const MoveSpec& mv, int k) {
    return (mv.left.is_pebble() && mv.left.pebble_index() == k) || (mv.right.is_pebble() && mv.right.pebble_index() == k);
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t q = 0; q < names_.size(); ++q)
      for (int k = 1; k <= pebbles_; ++k) {
        const std::size_t at = q * m + (k - 1);
        if (live_[at]) continue;
        for (const auto& e : out_[q]) {
          const bool uses = e.move && anchors(*e.move, k);
          const bool kills = e.move && e.move->pebble == k;
          if (uses || (!kills && live_[static_cast<std::size_t>(e.target) * m + (k - 1)])) {
            live_[at] = true;
            changed = true;
            break;
          }
        }
      }
  }
}

int CompiledPia::letter_index(const Letter& l) const {
  auto it = letter_ids_.find(l);
  return it == letter_ids_.end() ? -1 : it->second;
}

std::vector<int> CompiledPia::encode(const Word& w) const {
  std::vector<int> out;
  out.reserve(w.size());
  for (const auto& l : w) {
    const int id = letter_index(l);
    if (id < 0) throw AlphabetMismatch("letter '" + l + "' is not in the alphabet");
    out.push_back(id);
  }
  return out;
}

Word CompiledPia::decode(const std::vector<int>& w) const {
  Word out;
  out.reserve(w.size());
  for (int id : w) out.push_back(alphabet_.at(id));
  return out;
}

std::optional<int> PebbleAssignment::hat(Anchor a, int n) const {
  if (a.is_left_end()) return 0;
  if (a.is_right_end()) return n + 1;
  const int k = a.pebble_index();
  if (k < 1 || k > pebbles()) return std::nullopt;
  return slots_[k];
}

Configuration Configuration::initial(const Pia& pia) {
  return Configuration{pia.initial, PebbleAssignment(pia.pebbles), {}};
}

bool Configuration::is_accepting(const Pia& pia, int n) const {
  if (static_cast<int>(read.size()) != n) return false;
  return std::find(pia.accepting.begin(), pia.accepting.end(), state) != pia.accepting.end();
}

Configuration step(const Pia& pia, const Configuration& cfg, const Transition& t,
                   std::optional<int> pos, const Word& input) {
  if (std::find(pia.transitions.begin(), pia.transitions.end(), t) == pia.transitions.end())
    throw IllegalStep("transition " + to_string(t) + " is not in the automaton");
  if (t.from != cfg.state) throw IllegalStep("transition does not start in the current state");
  Configuration next = cfg;
  next.state = t.to;
  if (t.is_silent()) return next;

  const int n = static_cast<int>(input.size());
  if (!pos) throw IllegalStep("move transition needs a position");
  const int p = *pos;
  const MoveSpec& m = *t.move;
  const auto lo = cfg.assignment.hat(m.left, n);
  const auto hi = cfg.assignment.hat(m.right, n);
  if (!lo || !hi) throw IllegalStep("interval endpoint pebble is not placed");
  if (!(*lo < p && p < *hi)) throw IllegalStep("position outside the open interval");
  if (cfg.read.contains(p)) throw IllegalStep("position " + std::to_string(p) + " was already read");
  if (input.at(p - 1) != t.letter) throw IllegalStep("letter mismatch at position " + std::to_string(p));
  next.assignment.place(m.pebble, p);
  next.read.insert(p);
  return next;
}

bool accepts(const CompiledPia& pia, const Word& word) { return search_accepts(pia, pia.encode(word)); }

bool accepts(const Pia& pia, const Word& word) { return accepts(CompiledPia(pia), word); }

std::set<Word> enumerate_accepted(const Pia& pia, int max_len) {
  const CompiledPia c(pia);
  std::set<Word> out;
  for (const auto& w : search_language(c, max_len)) out.insert(c.decode(w));
  return out;
}

}  // namespace pia
