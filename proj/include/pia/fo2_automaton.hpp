#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pia/fo2_extremal.hpp"
#include "pia/search.hpp"

namespace pia {

struct GammaStringHash {
  std::size_t operator()(const GammaString& w) const;
};

// State of the lazily built automaton for a normal-form sentence.
// prefix == 0: extremal state (s, τ); otherwise the prefix of length `prefix`
// is being read. tau[k] is the 1-based slot of pebble k (k in 1..m), 0 if unplaced.
// `s` points into the string pool of the automaton that produced the state.
struct AutState {
  const GammaString* s = nullptr;
  std::uint8_t prefix = 0;
  std::vector<std::uint8_t> tau;
  bool flag = false;
  bool operator==(const AutState&) const = default;
};

struct AutStateHash {
  std::size_t operator()(const AutState& q) const;
};

}  // namespace pia

template <>
struct std::hash<pia::AutState> : pia::AutStateHash {};

namespace pia {

// A^φ over the letter alphabet Ξ, generated on demand. Successor sets of
// extremal strings are memoized; the memo is not synchronized.
class LazyAutomaton {
 public:
  using State = AutState;

  explicit LazyAutomaton(Sentence s);

  const Sentence& sentence() const { return s_; }
  int m() const { return m_; }
  int pebble_count() const { return m_ + 1; }
  State initial_state() const;
  bool is_accepting(const State& q) const;
  std::vector<Edge<State>> edges(const State& q, int budget) const;
  bool is_live(const State& q, int pebble) const;
  // Renames pebbles 1..m so that placed ones come first in slot order.
  void canonicalize(State& q, Rho& rho) const;
  // Necessary condition for acceptance on `word`: between consecutive placed
  // pebbles, the unread positions contain the pending top letters in order.
  // letter_map sends letter indices to the symbols used in `word`.
  bool feasible(const State& q, const Rho& rho, std::uint64_t read,
                const std::vector<int>& word, const std::vector<int>& letter_map) const;

  // Throws std::logic_error when q breaks the pebble conditions of its kind.
  void check_invariants(const State& q) const;

  std::string state_name(const State& q) const;

 private:
  struct Step {
    const GammaString* s1;
    std::vector<std::uint8_t> inv;  // slot in s0 -> slot in s1
  };
  const GammaString* intern(GammaString w) const;
  const std::vector<Step>& successors_of(const GammaString* s0, int budget) const;
  const std::vector<int>& notext_letters(const GammaString* s, std::size_t ell) const;

  Sentence s_;
  int m_;
  mutable std::unordered_set<GammaString, GammaStringHash> pool_;
  mutable std::unordered_map<const GammaString*, std::map<std::size_t, std::vector<Step>>> succ_memo_;
  mutable std::unordered_map<const GammaString*, std::vector<std::vector<int>>> notext_memo_;
};

struct SatResult {
  bool satisfiable = false;
  std::optional<Word> witness;  // over Σ, after h
  std::size_t nodes = 0;
};

// Iterative deepening on the number of elements up to `deepening`, then an
// unbounded search of the reachable configurations.
SatResult satisfiable(const NormalForm& nf, int deepening = 8);

// Σ = the image of h (Ξ when h is empty), in first-occurrence order.
std::vector<Letter> projection_alphabet(const NormalForm& nf);

// Throws AlphabetMismatch when w uses a letter outside Σ.
bool projection_member(const NormalForm& nf, const Word& w);
bool projection_member(const LazyAutomaton& a, const Word& w);

struct ExportResult {
  Pia pia;
  bool complete = true;  // false when the state cap cut the exploration short
  std::size_t states = 0;
};

// The reachable part of A^φ as a concrete automaton over Σ.
ExportResult export_automaton(const NormalForm& nf, std::size_t state_cap);

}  // namespace pia
