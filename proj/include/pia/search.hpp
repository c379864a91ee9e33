#pragma once

// Generic exploration engines shared by concrete automata and the lazily built
// automaton of the logic pipeline. An automaton type A provides
//   using State = ...;                   (hashable, equality comparable)
//   int pebble_count() const;
//   State initial_state() const;
//   bool is_accepting(const State&) const;
//   edges(const State&, int budget) const -> range of Edge<State>
//   bool is_live(const State&, int pebble) const;
// `budget` is the number of still unread input positions (-1 when unknown);
// an automaton may drop edges that cannot lead to acceptance within it.
// Automata may also provide feasible(state, rho, read, word); search_accepts
// drops configurations for which it returns false.
// An optional canonicalize(state, rho) may rename pebbles consistently in both,
// for automata whose behaviour is invariant under such renamings.
// A pebble that is not live is never used as an interval endpoint before it
// is placed again, so its position can be forgotten.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <memory_resource>
#include <optional>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "pia/pia.hpp"

namespace pia {

template <class State>
struct Edge {
  std::optional<MoveSpec> move;  // empty: silent
  int letter = -1;               // letter index for moves
  State target;
};

inline constexpr int kMaxWordLength = 62;

// Pebble positions indexed by pebble; inline storage covers small automata.
using Rho = boost::container::small_vector<std::uint8_t, 16>;

namespace detail {

inline void hash_mix(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

template <class State>
struct Config {
  State state;
  Rho rho;  // rho[k] for k in 1..m; 0 = unplaced
  std::uint64_t read = 0;         // bit p-1 set iff position p was read
  bool operator==(const Config&) const = default;
};

template <class State>
struct ConfigHash {
  std::size_t operator()(const Config<State>& c) const {
    std::size_t h = std::hash<State>{}(c.state);
    hash_mix(h, std::hash<std::uint64_t>{}(c.read));
    for (auto p : c.rho) hash_mix(h, p);
    return h;
  }
};

template <class A>
void forget_dead(const A& a, Config<typename A::State>& c) {
  for (std::size_t k = 1; k < c.rho.size(); ++k)
    if (c.rho[k] != 0 && !a.is_live(c.state, static_cast<int>(k))) c.rho[k] = 0;
  if constexpr (requires { a.canonicalize(c.state, c.rho); }) a.canonicalize(c.state, c.rho);
}

// Position of an anchor under rho, or -1 when it names an unplaced pebble.
inline int anchor_position(Anchor a, const Rho& rho, int n) {
  if (a.is_left_end()) return 0;
  if (a.is_right_end()) return n + 1;
  const int k = a.pebble_index();
  if (k <= 0 || k >= static_cast<int>(rho.size()) || rho[k] == 0) return -1;
  return rho[k];
}

}  // namespace detail

// Reachability of an accepting configuration on a fixed word.
template <class A>
bool search_accepts(const A& a, const std::vector<int>& word) {
  using State = typename A::State;
  using Cfg = detail::Config<State>;
  const int n = static_cast<int>(word.size());
  if (n > kMaxWordLength) throw Error("word too long for membership search");
  const std::uint64_t full = n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));

  Cfg start{a.initial_state(), Rho(a.pebble_count() + 2, 0), 0};
  // Node addresses of an unordered_set are stable, so the stack points into it.
  // Most searches are short; a stack arena keeps their nodes off the heap.
  std::array<std::byte, 16384> arena;
  std::pmr::monotonic_buffer_resource pool(arena.data(), arena.size());
  std::pmr::unordered_set<Cfg, detail::ConfigHash<State>> visited(&pool);
  std::vector<const Cfg*> stack{&*visited.insert(std::move(start)).first};

  auto push = [&](Cfg&& next) {
    if constexpr (requires { a.feasible(next.state, next.rho, next.read, word); })
      if (!a.feasible(next.state, next.rho, next.read, word)) return;
    detail::forget_dead(a, next);
    auto [it, inserted] = visited.insert(std::move(next));
    if (inserted) stack.push_back(&*it);
  };

  while (!stack.empty()) {
    const Cfg& c = *stack.back();
    stack.pop_back();
    if (c.read == full && a.is_accepting(c.state)) return true;
    const int budget = n - std::popcount(c.read);
    // Edges and positions go in reverse so that the leftmost choice is popped first.
    const auto& edges = a.edges(c.state, budget);
    for (auto e = edges.rbegin(); e != edges.rend(); ++e) {
      if (!e->move) {
        push(Cfg{e->target, c.rho, c.read});
        continue;
      }
      const int lo = detail::anchor_position(e->move->left, c.rho, n);
      const int hi = detail::anchor_position(e->move->right, c.rho, n);
      if (lo < 0 || hi < 0) continue;
      for (int pos = hi - 1; pos > lo; --pos) {
        if ((c.read >> (pos - 1)) & 1U) continue;
        if (word[pos - 1] != e->letter) continue;
        Cfg next{e->target, c.rho, c.read | (std::uint64_t{1} << (pos - 1))};
        next.rho[e->move->pebble] = static_cast<std::uint8_t>(pos);
        push(std::move(next));
      }
    }
  }
  return false;
}

// All accepted words of length <= max_len, found by a search that guesses the
// letter of each position at the moment it is read.
template <class A>
std::set<std::vector<int>> search_language(const A& a, int max_len) {
  using State = typename A::State;
  struct Node {
    detail::Config<State> cfg;
    std::vector<std::int8_t> letters;  // letter at each read position
    bool operator==(const Node&) const = default;
  };
  struct NodeHash {
    std::size_t operator()(const Node& x) const {
      std::size_t h = detail::ConfigHash<State>{}(x.cfg);
      for (auto l : x.letters) detail::hash_mix(h, static_cast<std::size_t>(l + 1));
      return h;
    }
  };
  if (max_len > kMaxWordLength) throw Error("length bound too large for enumeration");

  std::set<std::vector<int>> out;
  for (int n = 0; n <= max_len; ++n) {
    const std::uint64_t full = n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
    Node start{{a.initial_state(), Rho(a.pebble_count() + 2, 0), 0},
               std::vector<std::int8_t>(n, -1)};
    std::unordered_set<Node, NodeHash> visited;
    visited.insert(start);
    std::vector<Node> stack{start};
    while (!stack.empty()) {
      Node x = std::move(stack.back());
      stack.pop_back();
      if (x.cfg.read == full && a.is_accepting(x.cfg.state))
        out.insert(std::vector<int>(x.letters.begin(), x.letters.end()));
      const int budget = n - std::popcount(x.cfg.read);
      for (const auto& e : a.edges(x.cfg.state, budget)) {
        if (!e.move) {
          Node next{{e.target, x.cfg.rho, x.cfg.read}, x.letters};
          detail::forget_dead(a, next.cfg);
          if (visited.insert(next).second) stack.push_back(std::move(next));
          continue;
        }
        const int lo = detail::anchor_position(e.move->left, x.cfg.rho, n);
        const int hi = detail::anchor_position(e.move->right, x.cfg.rho, n);
        if (lo < 0 || hi < 0) continue;
        for (int pos = lo + 1; pos < hi; ++pos) {
          if ((x.cfg.read >> (pos - 1)) & 1U) continue;
          Node next{{e.target, x.cfg.rho, x.cfg.read | (std::uint64_t{1} << (pos - 1))}, x.letters};
          next.cfg.rho[e.move->pebble] = static_cast<std::uint8_t>(pos);
          next.letters[pos - 1] = static_cast<std::int8_t>(e.letter);
          detail::forget_dead(a, next.cfg);
          if (visited.insert(next).second) stack.push_back(std::move(next));
        }
      }
    }
  }
  return out;
}

// Linear order of the currently placed pebbles.
struct Arrangement {
  std::vector<int> order;
  bool contains(int pebble) const { return std::find(order.begin(), order.end(), pebble) != order.end(); }
  bool operator==(const Arrangement&) const = default;
  auto operator<=>(const Arrangement&) const = default;
};

// Throws UnplacedBoundary when a pebble endpoint is not placed.
std::vector<Arrangement> arrangement_update(const Arrangement& a, const MoveSpec& move);

struct ArrangementHash {
  std::size_t operator()(const Arrangement& a) const {
    std::size_t h = a.order.size();
    for (int p : a.order) detail::hash_mix(h, static_cast<std::size_t>(p));
    return h;
  }
};

struct EmptinessReport {
  bool empty = true;
  std::optional<std::vector<int>> witness;  // letter indices
  std::size_t nodes = 0;                    // explored (state, arrangement) pairs
  std::size_t depth = 0;                    // transitions in the witness run
  bool truncated = false;                   // node limit reached before a verdict
};

// Breadth-first reachability over (state, arrangement) pairs. The first
// accepting pair found has a shortest transition sequence; its moves are
// realized on fresh positions, each inserted directly after its left
// neighbour in the target arrangement.
template <class A>
EmptinessReport explore_emptiness(const A& a, std::size_t node_limit = 0) {
  using State = typename A::State;
  struct Node {
    State state;
    Arrangement arr;
    bool operator==(const Node&) const = default;
  };
  struct NodeHash {
    std::size_t operator()(const Node& x) const {
      std::size_t h = std::hash<State>{}(x.state);
      detail::hash_mix(h, ArrangementHash{}(x.arr));
      return h;
    }
  };
  struct Visit {
    Node node;
    long parent;
    std::optional<MoveSpec> move;
    int letter;
  };

  auto project = [&](const State& s, Arrangement arr) {
    std::erase_if(arr.order, [&](int p) { return !a.is_live(s, p); });
    return arr;
  };

  EmptinessReport report;
  std::vector<Visit> visits;
  std::unordered_map<Node, std::size_t, NodeHash> seen;
  std::deque<std::size_t> queue;
  {
    Node root{a.initial_state(), Arrangement{}};
    seen.emplace(root, 0);
    visits.push_back({root, -1, std::nullopt, -1});
    queue.push_back(0);
  }
  long found = -1;
  while (!queue.empty()) {
    const std::size_t idx = queue.front();
    queue.pop_front();
    const Node cur = visits[idx].node;
    if (a.is_accepting(cur.state)) {
      found = static_cast<long>(idx);
      break;
    }
    if (node_limit != 0 && visits.size() >= node_limit) {
      report.truncated = true;
      break;
    }
    for (const auto& e : a.edges(cur.state, -1)) {
      std::vector<Arrangement> targets;
      if (!e.move) {
        targets.push_back(cur.arr);
      } else {
        const auto& mv = *e.move;
        if (mv.left.is_pebble() && !cur.arr.contains(mv.left.pebble_index())) continue;
        if (mv.right.is_pebble() && !cur.arr.contains(mv.right.pebble_index())) continue;
        targets = arrangement_update(cur.arr, mv);
      }
      for (auto& t : targets) {
        Node next{e.target, project(e.target, std::move(t))};
        if (seen.contains(next)) continue;
        seen.emplace(next, visits.size());
        visits.push_back({next, static_cast<long>(idx), e.move, e.letter});
        queue.push_back(visits.size() - 1);
      }
    }
  }
  report.nodes = visits.size();
  if (found < 0) return report;

  report.empty = false;
  std::vector<std::size_t> path;
  for (long i = found; i >= 0; i = visits[i].parent) path.push_back(static_cast<std::size_t>(i));
  std::reverse(path.begin(), path.end());
  report.depth = path.size() - 1;

  // Slots are read positions in left-to-right order; slot ids index `slot_letter`.
  std::vector<int> slots;
  std::vector<int> slot_letter;
  std::unordered_map<int, int> pebble_slot;
  for (std::size_t step = 1; step < path.size(); ++step) {
    const Visit& v = visits[path[step]];
    if (!v.move) continue;
    const int k = v.move->pebble;
    const auto& order = v.node.arr.order;
    // The target arrangement may have dropped k if it is dead immediately;
    // fall back to the arrangement before projection by recomputing neighbours.
    int left_neighbour = 0;
    auto it = std::find(order.begin(), order.end(), k);
    if (it != order.end()) {
      if (it != order.begin()) left_neighbour = *(it - 1);
    } else if (v.move->left.is_pebble()) {
      left_neighbour = v.move->left.pebble_index();
    }
    const int id = static_cast<int>(slot_letter.size());
    slot_letter.push_back(v.letter);
    auto insert_at = slots.begin();
    if (left_neighbour != 0) {
      auto where = std::find(slots.begin(), slots.end(), pebble_slot.at(left_neighbour));
      insert_at = where + 1;
    }
    slots.insert(insert_at, id);
    pebble_slot[k] = id;
  }
  std::vector<int> word;
  word.reserve(slots.size());
  for (int id : slots) word.push_back(slot_letter[id]);
  report.witness = std::move(word);
  return report;
}

}  // namespace pia
