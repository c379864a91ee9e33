#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pia/pia.hpp"
#include "pia/regular.hpp"

// Random automata and the differential suites behind `pia oracle compare`.
namespace pia::differential {

struct RandomPiaParams {
  std::vector<Letter> alphabet{"a", "b"};
  int max_states = 5;
  int max_pebbles = 3;
  int max_transitions = 8;
  double silent_ratio = 0.15;
};

Pia random_pia(std::mt19937_64& rng, const RandomPiaParams& params = {});

struct RandomNfaParams {
  std::vector<Letter> alphabet{"a", "b"};
  int max_states = 5;
  int max_transitions = 10;
  double epsilon_ratio = 0.15;
};

Nfa random_nfa(std::mt19937_64& rng, const RandomNfaParams& params = {});

// Every word over the alphabet with length <= max_len, shortest first.
std::vector<Word> all_words(const std::vector<Letter>& alphabet, int max_len);

struct SuiteReport {
  std::string name;
  std::size_t cases = 0;
  std::size_t checks = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// is_empty / witness against bounded enumeration.
SuiteReport compare_emptiness(std::uint64_t seed, int count, int max_len);
// Closure constructions against split and interleaving definitions.
SuiteReport compare_closure(std::uint64_t seed, int pairs, int max_len, int shuffle_star_len);
// NFA -> PIA -> NFA round trips against subset simulation.
SuiteReport compare_regular(std::uint64_t seed, int count, int max_len);
// Membership in the catalog sentences against data-word enumeration with
// model checking.
SuiteReport compare_fo2(int max_len);

}  // namespace pia::differential
