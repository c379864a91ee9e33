#include "pia/closure.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace pia {

namespace {

std::vector<Letter> merge_alphabets(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  std::vector<Letter> out = a;
  for (const auto& l : b)
    if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
  return out;
}

bool is_accepting(const Pia& p, const StateName& q) {
  return std::find(p.accepting.begin(), p.accepting.end(), q) != p.accepting.end();
}

std::multimap<StateName, const Transition*> outgoing(const Pia& p) {
  std::multimap<StateName, const Transition*> out;
  for (const auto& t : p.transitions) out.emplace(t.from, &t);
  return out;
}

template <class F>
void for_each_out(const std::multimap<StateName, const Transition*>& idx, const StateName& q, F&& f) {
  auto [b, e] = idx.equal_range(q);
  for (auto it = b; it != e; ++it) f(*it->second);
}

// Letters that can be read at the leftmost position of a run's input.
std::set<Letter> first_letters(const Pia& p) {
  std::set<Letter> out;
  for (const auto& t : p.transitions)
    if (!t.is_silent() && t.move->left.is_left_end()) out.insert(t.letter);
  return out;
}

std::string set_name(unsigned bits) {
  std::string s = "{";
  bool first = true;
  for (int k = 1; bits >> k; ++k) {
    if (!((bits >> k) & 1U)) continue;
    if (!first) s += ",";
    s += std::to_string(k);
    first = false;
  }
  return s + "}";
}

bool placed(unsigned bits, int k) { return (bits >> k) & 1U; }

// Worklist over product keys. Each key gets a unique state name on first visit.
template <class Key>
class Product {
 public:
  explicit Product(Pia& out) : out_(out) {}

  StateName visit(const Key& key, std::string name) {
    auto it = names_.find(key);
    if (it != names_.end()) return it->second;
    while (used_.contains(name)) name += "'";
    used_.insert(name);
    names_.emplace(key, name);
    out_.states.push_back(name);
    queue_.push_back(key);
    return name;
  }

  bool empty() const { return queue_.empty(); }
  std::pair<Key, StateName> pop() {
    Key k = queue_.front();
    queue_.pop_front();
    return {k, names_.at(k)};
  }

 private:
  Pia& out_;
  std::map<Key, StateName> names_;
  std::unordered_set<std::string> used_;
  std::deque<Key> queue_;
};

Anchor shift(Anchor a, int offset) { return a.is_pebble() ? Anchor::pebble(a.pebble_index() + offset) : a; }

void copy_prefixed(const Pia& src, const std::string& prefix, int offset, Pia& out) {
  for (const auto& q : src.states) out.states.push_back(prefix + q);
  for (const auto& q : src.accepting) out.accepting.push_back(prefix + q);
  for (const auto& t : src.transitions) {
    if (t.is_silent()) {
      out.transitions.push_back(Transition::silent(prefix + t.from, prefix + t.to));
      continue;
    }
    MoveSpec m{t.move->pebble + offset, shift(t.move->left, offset), shift(t.move->right, offset)};
    out.transitions.push_back(Transition::make_move(prefix + t.from, m, t.letter, prefix + t.to));
  }
}

}  // namespace

Pia union_of(const Pia& a, const Pia& b) {
  require_valid(a);
  require_valid(b);
  Pia out;
  out.alphabet = merge_alphabets(a.alphabet, b.alphabet);
  out.pebbles = a.pebbles + b.pebbles;
  out.initial = "init";
  out.states.push_back(out.initial);
  copy_prefixed(a, "L.", 0, out);
  copy_prefixed(b, "R.", a.pebbles, out);
  out.transitions.push_back(Transition::silent(out.initial, "L." + a.initial));
  out.transitions.push_back(Transition::silent(out.initial, "R." + b.initial));
  return out;
}

Pia shuffle(const Pia& a, const Pia& b) {
  require_valid(a);
  require_valid(b);
  Pia out;
  out.alphabet = merge_alphabets(a.alphabet, b.alphabet);
  out.pebbles = a.pebbles + b.pebbles;
  copy_prefixed(a, "L.", 0, out);
  out.accepting.clear();
  copy_prefixed(b, "R.", a.pebbles, out);
  out.initial = "L." + a.initial;
  // Each operand's run only sees its own pebbles, so running a to completion
  // and then b on the remaining positions covers every interleaving.
  for (const auto& q : a.accepting) out.transitions.push_back(Transition::silent("L." + q, "R." + b.initial));
  return out;
}

Pia concat(const Pia& a, const Pia& b) {
  require_valid(a);
  require_valid(b);
  const int ma = a.pebbles;
  const int frontier = a.pebbles + b.pebbles + 1;
  const Anchor front = Anchor::pebble(frontier);

  // init; A: a unmodified (right factor empty); Z: b silently to acceptance;
  // AF: a confined left of the frontier; BP: b before reading the frontier
  // letter; B: b after it, with `alias` naming the b pebble sitting there.
  enum Phase { kInit, kA, kZ, kAF, kBP, kB };
  struct Key {
    int phase = kInit;
    StateName q;
    Letter sigma;
    unsigned placed_b = 0;
    int alias = 0;
    auto operator<=>(const Key&) const = default;
  };

  Pia out;
  out.alphabet = merge_alphabets(a.alphabet, b.alphabet);
  out.pebbles = frontier;
  Product<Key> prod(out);
  out.initial = prod.visit(Key{}, "init");
  const auto a_out = outgoing(a);
  const auto b_out = outgoing(b);

  auto name = [](const Key& k) -> std::string {
    switch (k.phase) {
      case kA: return "L." + k.q;
      case kZ: return "R." + k.q;
      case kAF: return "L." + k.q + "|" + k.sigma;
      case kBP: return "R." + k.q + "|" + k.sigma + "|" + set_name(k.placed_b);
      case kB: return "R." + k.q + "|@" + (k.alias ? std::to_string(k.alias) : std::string("-"));
      default: return "init";
    }
  };
  auto go = [&](const Key& k) { return prod.visit(k, name(k)); };
  // b pebble p lives at ma + p; the left end of b's input is the frontier.
  auto b_anchor = [&](Anchor x) { return x.is_left_end() ? front : shift(x, ma); };

  while (!prod.empty()) {
    auto [key, from] = prod.pop();
    switch (key.phase) {
      case kInit: {
        out.transitions.push_back(Transition::silent(from, go(Key{kA, a.initial, {}})));
        for (const auto& sigma : first_letters(b))
          out.transitions.push_back(Transition::make_move(from, {frontier, Anchor::left_end(), Anchor::right_end()},
                                                          sigma, go(Key{kAF, a.initial, sigma})));
        break;
      }
      case kA: {
        for_each_out(a_out, key.q, [&](const Transition& t) {
          const StateName to = go(Key{kA, t.to, {}});
          out.transitions.push_back(t.is_silent() ? Transition::silent(from, to)
                                                  : Transition::make_move(from, *t.move, t.letter, to));
        });
        if (is_accepting(a, key.q)) out.transitions.push_back(Transition::silent(from, go(Key{kZ, b.initial, {}})));
        break;
      }
      case kZ: {
        if (is_accepting(b, key.q)) out.accepting.push_back(from);
        for_each_out(b_out, key.q, [&](const Transition& t) {
          if (t.is_silent()) out.transitions.push_back(Transition::silent(from, go(Key{kZ, t.to, {}})));
        });
        break;
      }
      case kAF: {
        for_each_out(a_out, key.q, [&](const Transition& t) {
          const StateName to = go(Key{kAF, t.to, key.sigma});
          if (t.is_silent()) {
            out.transitions.push_back(Transition::silent(from, to));
            return;
          }
          MoveSpec m = *t.move;
          if (m.right.is_right_end()) m.right = front;
          out.transitions.push_back(Transition::make_move(from, m, t.letter, to));
        });
        if (is_accepting(a, key.q))
          out.transitions.push_back(Transition::silent(from, go(Key{kBP, b.initial, key.sigma, 0})));
        break;
      }
      case kBP: {
        for_each_out(b_out, key.q, [&](const Transition& t) {
          if (t.is_silent()) {
            out.transitions.push_back(Transition::silent(from, go(Key{kBP, t.to, key.sigma, key.placed_b})));
            return;
          }
          const MoveSpec& m = *t.move;
          const bool left_ok = !m.left.is_pebble() || placed(key.placed_b, m.left.pebble_index());
          const bool right_ok = !m.right.is_pebble() || placed(key.placed_b, m.right.pebble_index());
          if (left_ok && right_ok) {
            const Key next{kBP, t.to, key.sigma, key.placed_b | (1U << m.pebble)};
            out.transitions.push_back(Transition::make_move(
                from, {m.pebble + ma, b_anchor(m.left), b_anchor(m.right)}, t.letter, go(next)));
          }
          // b reads its first position, which the frontier already holds.
          if (m.left.is_left_end() && t.letter == key.sigma && right_ok)
            out.transitions.push_back(Transition::silent(from, go(Key{kB, t.to, {}, 0, m.pebble})));
        });
        break;
      }
      case kB: {
        if (is_accepting(b, key.q)) out.accepting.push_back(from);
        for_each_out(b_out, key.q, [&](const Transition& t) {
          if (t.is_silent()) {
            out.transitions.push_back(Transition::silent(from, go(Key{kB, t.to, {}, 0, key.alias})));
            return;
          }
          const MoveSpec& m = *t.move;
          if (m.right.is_pebble() && m.right.pebble_index() == key.alias) return;
          const Anchor left =
              (m.left.is_pebble() && m.left.pebble_index() == key.alias) ? front : b_anchor(m.left);
          const int alias = m.pebble == key.alias ? 0 : key.alias;
          out.transitions.push_back(Transition::make_move(from, {m.pebble + ma, left, b_anchor(m.right)}, t.letter,
                                                          go(Key{kB, t.to, {}, 0, alias})));
        });
        break;
      }
    }
  }
  return out;
}

Pia star(const Pia& a) {
  require_valid(a);
  const int ma = a.pebbles;
  auto frontier = [&](int which) { return Anchor::pebble(ma + which); };

  // kStart: the current block's first letter sits under frontier `cur`;
  // kPending: a runs inside the block before reading that letter;
  // kActive: after it, `alias` names the a pebble logically on the frontier.
  // `next` is the letter under the other frontier when the block is bounded.
  enum Phase { kInit, kStart, kPending, kActive };
  struct Key {
    int phase = kInit;
    StateName q;
    unsigned placed_a = 0;
    Letter sigma;
    int cur = 1;
    std::optional<Letter> next;
    int alias = 0;
    auto operator<=>(const Key&) const = default;
  };

  Pia out;
  out.alphabet = a.alphabet;
  out.pebbles = ma + 2;
  Product<Key> prod(out);
  auto name = [](const Key& k) -> std::string {
    const std::string tail = "|" + std::to_string(k.cur) + "|" + (k.next ? *k.next : std::string("-"));
    switch (k.phase) {
      case kStart: return "start|" + k.sigma + tail;
      case kPending: return "L." + k.q + "|" + set_name(k.placed_a) + "|" + k.sigma + tail;
      case kActive:
        return "L." + k.q + "|" + set_name(k.placed_a) + "|@" + (k.alias ? std::to_string(k.alias) : "-") + tail;
      default: return "init";
    }
  };
  auto go = [&](const Key& k) { return prod.visit(k, name(k)); };
  out.initial = go(Key{});
  out.accepting.push_back(out.initial);
  const auto a_out = outgoing(a);
  const auto starts = first_letters(a);

  while (!prod.empty()) {
    auto [key, from] = prod.pop();
    const int other = 3 - key.cur;
    const Anchor right_bound = key.next ? frontier(other) : Anchor::right_end();
    auto block_anchor = [&](Anchor x) { return x.is_left_end() ? frontier(key.cur) : x.is_right_end() ? right_bound : x; };
    auto is_placed = [&](Anchor x) { return !x.is_pebble() || placed(key.placed_a, x.pebble_index()); };

    switch (key.phase) {
      case kInit:
        for (const auto& sigma : starts)
          out.transitions.push_back(Transition::make_move(from, {ma + 1, Anchor::left_end(), Anchor::right_end()},
                                                          sigma, go(Key{kStart, {}, 0, sigma, 1, {}})));
        break;
      case kStart: {
        Key last{kPending, a.initial, 0, key.sigma, key.cur, {}};
        out.transitions.push_back(Transition::silent(from, go(last)));
        for (const auto& s : starts) {
          Key bounded = last;
          bounded.next = s;
          out.transitions.push_back(
              Transition::make_move(from, {ma + other, frontier(key.cur), Anchor::right_end()}, s, go(bounded)));
        }
        break;
      }
      case kPending: {
        for_each_out(a_out, key.q, [&](const Transition& t) {
          Key next = key;
          next.q = t.to;
          if (t.is_silent()) {
            out.transitions.push_back(Transition::silent(from, go(next)));
            return;
          }
          const MoveSpec& m = *t.move;
          if (!is_placed(m.left) || !is_placed(m.right)) return;
          next.placed_a |= 1U << m.pebble;
          out.transitions.push_back(
              Transition::make_move(from, {m.pebble, block_anchor(m.left), block_anchor(m.right)}, t.letter, go(next)));
          if (m.left.is_left_end() && t.letter == key.sigma) {
            Key act = next;
            act.phase = kActive;
            act.sigma.clear();
            act.alias = m.pebble;
            out.transitions.push_back(Transition::silent(from, go(act)));
          }
        });
        break;
      }
      case kActive: {
        if (is_accepting(a, key.q)) {
          if (key.next)
            out.transitions.push_back(Transition::silent(from, go(Key{kStart, {}, 0, *key.next, other, {}})));
          else
            out.accepting.push_back(from);
        }
        for_each_out(a_out, key.q, [&](const Transition& t) {
          Key next = key;
          next.q = t.to;
          if (t.is_silent()) {
            out.transitions.push_back(Transition::silent(from, go(next)));
            return;
          }
          const MoveSpec& m = *t.move;
          if (!is_placed(m.left) || !is_placed(m.right)) return;
          if (m.right.is_pebble() && m.right.pebble_index() == key.alias) return;
          const Anchor left =
              (m.left.is_pebble() && m.left.pebble_index() == key.alias) ? frontier(key.cur) : block_anchor(m.left);
          next.placed_a |= 1U << m.pebble;
          if (m.pebble == key.alias) next.alias = 0;
          out.transitions.push_back(
              Transition::make_move(from, {m.pebble, left, block_anchor(m.right)}, t.letter, go(next)));
        });
        break;
      }
    }
  }
  return out;
}

Pia shuffle_star(const Pia& a) {
  require_valid(a);
  struct Key {
    bool init = true;
    StateName q;
    unsigned placed_a = 0;
    auto operator<=>(const Key&) const = default;
  };
  Pia out;
  out.alphabet = a.alphabet;
  out.pebbles = a.pebbles;
  Product<Key> prod(out);
  auto go = [&](const Key& k) {
    return prod.visit(k, k.init ? std::string("init") : "L." + k.q + "|" + set_name(k.placed_a));
  };
  out.initial = go(Key{});
  out.accepting.push_back(out.initial);
  const auto a_out = outgoing(a);

  while (!prod.empty()) {
    auto [key, from] = prod.pop();
    if (key.init) {
      out.transitions.push_back(Transition::silent(from, go(Key{false, a.initial, 0})));
      continue;
    }
    if (is_accepting(a, key.q)) {
      out.accepting.push_back(from);
      // Start another copy; pebbles of finished copies are never consulted again.
      out.transitions.push_back(Transition::silent(from, go(Key{false, a.initial, 0})));
    }
    for_each_out(a_out, key.q, [&](const Transition& t) {
      if (t.is_silent()) {
        out.transitions.push_back(Transition::silent(from, go(Key{false, t.to, key.placed_a})));
        return;
      }
      const MoveSpec& m = *t.move;
      if (m.left.is_pebble() && !placed(key.placed_a, m.left.pebble_index())) return;
      if (m.right.is_pebble() && !placed(key.placed_a, m.right.pebble_index())) return;
      out.transitions.push_back(
          Transition::make_move(from, m, t.letter, go(Key{false, t.to, key.placed_a | (1U << m.pebble)})));
    });
  }
  return out;
}

Pia substitute(const Pia& a, const std::map<Letter, Letter>& h) {
  require_valid(a);
  Pia out = a;
  out.alphabet.clear();
  for (const auto& l : a.alphabet) {
    auto it = h.find(l);
    if (it == h.end()) throw PartialMap("substitution is undefined on letter '" + l + "'");
    if (std::find(out.alphabet.begin(), out.alphabet.end(), it->second) == out.alphabet.end())
      out.alphabet.push_back(it->second);
  }
  for (auto& t : out.transitions)
    if (!t.is_silent()) t.letter = h.at(t.letter);
  return out;
}

Pia epsilon_pia(std::vector<Letter> alphabet) {
  Pia out;
  out.alphabet = std::move(alphabet);
  out.states = {"q0"};
  out.initial = "q0";
  out.accepting = {"q0"};
  return out;
}

Pia word_pia(const Word& w, std::vector<Letter> alphabet) {
  Pia out;
  out.alphabet = std::move(alphabet);
  for (const auto& l : w)
    if (std::find(out.alphabet.begin(), out.alphabet.end(), l) == out.alphabet.end()) out.alphabet.push_back(l);
  out.states.push_back("q0");
  for (std::size_t i = 0; i < w.size(); ++i) {
    out.states.push_back("q" + std::to_string(i + 1));
    const MoveSpec m{1, i == 0 ? Anchor::left_end() : Anchor::pebble(1), Anchor::right_end()};
    out.transitions.push_back(Transition::make_move(out.states[i], m, w[i], out.states[i + 1]));
  }
  out.initial = "q0";
  out.accepting = {out.states.back()};
  return out;
}

}  // namespace pia
