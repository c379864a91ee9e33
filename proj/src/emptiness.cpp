#include "pia/emptiness.hpp"

#include <algorithm>

#include "pia/run.hpp"

namespace pia {

std::vector<Arrangement> arrangement_update(const Arrangement& a, const MoveSpec& move) {
  const auto index_of = [&](Anchor an, int end_value) -> int {
    if (!an.is_pebble()) return end_value;
    auto it = std::find(a.order.begin(), a.order.end(), an.pebble_index());
    if (it == a.order.end())
      throw UnplacedBoundary("pebble " + std::to_string(an.pebble_index()) + " is not placed");
    return static_cast<int>(it - a.order.begin());
  };
  const int n = static_cast<int>(a.order.size());
  const int lo = index_of(move.left, -1);
  const int hi = index_of(move.right, n);
  std::vector<Arrangement> out;
  if (lo >= hi) return out;
  // Gap g sits just before old element g; gaps lo+1..hi lie strictly inside.
  for (int g = lo + 1; g <= hi; ++g) {
    Arrangement next;
    for (int idx = 0; idx <= n; ++idx) {
      if (idx == g) next.order.push_back(move.pebble);
      if (idx < n && a.order[idx] != move.pebble) next.order.push_back(a.order[idx]);
    }
    if (std::find(out.begin(), out.end(), next) == out.end()) out.push_back(std::move(next));
  }
  return out;
}

unsigned long long arrangement_node_bound(std::size_t states, int pebbles) {
  unsigned long long total = 0;
  for (int k = 0; k <= pebbles; ++k) {
    unsigned long long falling = 1;  // m! / (m-k)! = C(m,k) * k!
    for (int i = 0; i < k; ++i) falling *= static_cast<unsigned long long>(pebbles - i);
    total += falling;
  }
  return total * states;
}

EmptinessReport emptiness_report(const Pia& pia) {
  const CompiledPia c(pia);
  return explore_emptiness(c);
}

bool is_empty(const Pia& pia) { return emptiness_report(pia).empty; }

std::optional<Word> witness(const Pia& pia) {
  const CompiledPia c(pia);
  auto r = explore_emptiness(c);
  if (r.empty) return std::nullopt;
  return c.decode(*r.witness);
}

}  // namespace pia
