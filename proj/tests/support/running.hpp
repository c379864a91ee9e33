#pragma once

// Γ letters of the running example: ts_i with θ_i promised or completed.

#include "pia/catalog.hpp"
#include "pia/fo2_logic.hpp"

namespace running {

inline const pia::Sentence& sentence() {
  static const pia::Sentence s(pia::catalog::running_example());
  return s;
}

inline pia::TaskSet ts(int i, bool completed) {
  const std::uint64_t bit = std::uint64_t{1} << (i - 1);
  return {sentence().omega_index(bit), completed ? bit : 0};
}

inline pia::GammaLetter C(pia::Layer h, int i) { return {h, ts(i, true)}; }
inline pia::GammaLetter P(pia::Layer h, int i) { return {h, ts(i, false)}; }

constexpr auto top1 = pia::Layer::Top1;
constexpr auto top2 = pia::Layer::Top2;
constexpr auto rest = pia::Layer::Rest;

// abst of the running task word and of its trimming.
inline pia::GammaString w() { return {C(rest, 3), C(rest, 3), C(top2, 1), C(top1, 2), C(rest, 3), C(top1, 4)}; }
inline pia::GammaString s() { return {C(rest, 3), C(top2, 1), C(top1, 2), C(rest, 3), C(top1, 4)}; }
inline pia::GammaString s_prime() { return {P(rest, 3), P(rest, 3), P(top1, 1), P(top2, 3)}; }

}  // namespace running
