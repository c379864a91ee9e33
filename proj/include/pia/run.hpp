#pragma once

#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "pia/pia.hpp"
#include "pia/search.hpp"

namespace pia {

// Index-based view of a validated Pia used by the search engines.
class CompiledPia {
 public:
  using State = int;

  explicit CompiledPia(const Pia& pia);

  int pebble_count() const { return pebbles_; }
  State initial_state() const { return initial_; }
  bool is_accepting(State q) const { return accepting_[q]; }
  const std::vector<Edge<State>>& edges(State q, int /*budget*/) const { return out_[q]; }
  // False when every path from q places the pebble again before using it as an endpoint.
  bool is_live(State q, int pebble) const {
    return pebble < 1 || pebble > pebbles_ || live_[static_cast<std::size_t>(q) * pebbles_ + (pebble - 1)];
  }

  int state_count() const { return static_cast<int>(names_.size()); }
  const std::string& state_name(State q) const { return names_[q]; }
  int letter_index(const Letter& l) const;
  const std::vector<Letter>& alphabet() const { return alphabet_; }

  // Throws AlphabetMismatch on unknown letters.
  std::vector<int> encode(const Word& w) const;
  Word decode(const std::vector<int>& w) const;

 private:
  int pebbles_;
  int initial_;
  std::vector<std::string> names_;
  std::vector<Letter> alphabet_;
  std::unordered_map<Letter, int> letter_ids_;
  std::vector<bool> accepting_;
  std::vector<std::vector<Edge<State>>> out_;
  std::vector<bool> live_;  // state-major, pebble-minor
};

// Total map from pebbles 1..m to positions 1..n or unplaced.
class PebbleAssignment {
 public:
  PebbleAssignment() = default;
  explicit PebbleAssignment(int pebbles) : slots_(pebbles + 1) {}

  int pebbles() const { return static_cast<int>(slots_.size()) - 1; }
  std::optional<int> at(int k) const { return slots_.at(k); }
  void place(int k, int pos) { slots_.at(k) = pos; }

  // Extension to the end markers; empty for an unplaced pebble.
  std::optional<int> hat(Anchor a, int n) const;

  bool operator==(const PebbleAssignment&) const = default;

 private:
  std::vector<std::optional<int>> slots_;  // index 0 unused
};

struct Configuration {
  StateName state;
  PebbleAssignment assignment;
  std::set<int> read;

  static Configuration initial(const Pia& pia);
  bool is_accepting(const Pia& pia, int n) const;
  bool operator==(const Configuration&) const = default;
};

// One transition on `input`; Move transitions need `pos`. Throws IllegalStep.
Configuration step(const Pia& pia, const Configuration& cfg, const Transition& t,
                   std::optional<int> pos, const Word& input);

bool accepts(const Pia& pia, const Word& word);
bool accepts(const CompiledPia& pia, const Word& word);

std::set<Word> enumerate_accepted(const Pia& pia, int max_len);

}  // namespace pia
