#include "pia/differential.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "pia/catalog.hpp"
#include "pia/closure.hpp"
#include "pia/dataword.hpp"
#include "pia/emptiness.hpp"
#include "pia/fo2_automaton.hpp"
#include "pia/run.hpp"

namespace pia::differential {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Anchor random_anchor(std::mt19937_64& rng, int pebbles, bool left) {
  const int pick = uniform(rng, 0, pebbles);
  if (pick == 0) return left ? Anchor::left_end() : Anchor::right_end();
  return Anchor::pebble(pick);
}

std::string describe(const Word& w) { return w.empty() ? "ε" : format_word(w); }

using Member = std::function<bool(const Word&)>;

// Memoized membership of sub-words.
class Cached {
 public:
  explicit Cached(const Pia& p) : c_(p) {}
  bool operator()(const Word& w) {
    auto it = memo_.find(w);
    if (it == memo_.end()) it = memo_.emplace(w, accepts(c_, w)).first;
    return it->second;
  }

 private:
  CompiledPia c_;
  std::map<Word, bool> memo_;
};

Word slice(const Word& w, std::size_t from, std::size_t to) { return Word(w.begin() + from, w.begin() + to); }

bool in_concat(Cached& a, Cached& b, const Word& w) {
  for (std::size_t k = 0; k <= w.size(); ++k)
    if (a(slice(w, 0, k)) && b(slice(w, k, w.size()))) return true;
  return false;
}

bool in_star(Cached& a, const Word& w) {
  std::vector<bool> ok(w.size() + 1, false);
  ok[0] = true;
  for (std::size_t j = 1; j <= w.size(); ++j)
    for (std::size_t i = 0; i < j && !ok[j]; ++i) ok[j] = ok[i] && a(slice(w, i, j));
  return ok[w.size()];
}

bool in_shuffle(const Member& a, const Member& b, const Word& w) {
  const std::size_t n = w.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Word u, v;
    for (std::size_t p = 0; p < n; ++p) ((mask >> p) & 1U ? u : v).push_back(w[p]);
    if (a(u) && b(v)) return true;
  }
  return false;
}

// Iterated shuffle: w is a shuffle of some nonempty u ∈ L and a word of L^⧢.
bool in_shuffle_star(Cached& a, const Word& w, std::map<Word, bool>& memo) {
  if (w.empty()) return true;
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  bool found = false;
  const std::size_t n = w.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n) && !found; ++mask) {
    Word u, v;
    for (std::size_t p = 0; p < n; ++p) ((mask >> p) & 1U ? u : v).push_back(w[p]);
    found = a(u) && in_shuffle_star(a, v, memo);
  }
  memo.emplace(w, found);
  return found;
}

}  // namespace

Pia random_pia(std::mt19937_64& rng, const RandomPiaParams& params) {
  Pia p;
  p.alphabet = params.alphabet;
  p.pebbles = uniform(rng, 1, params.max_pebbles);
  const int states = uniform(rng, 1, params.max_states);
  for (int i = 0; i < states; ++i) p.states.push_back("q" + std::to_string(i));
  p.initial = p.states.front();
  for (const auto& q : p.states)
    if (coin(rng, 0.35)) p.accepting.push_back(q);
  if (p.accepting.empty()) p.accepting.push_back(p.states[uniform(rng, 0, states - 1)]);
  const int transitions = uniform(rng, 0, params.max_transitions);
  for (int t = 0; t < transitions; ++t) {
    const auto& from = p.states[uniform(rng, 0, states - 1)];
    const auto& to = p.states[uniform(rng, 0, states - 1)];
    if (coin(rng, params.silent_ratio)) {
      p.transitions.push_back(Transition::silent(from, to));
      continue;
    }
    MoveSpec m;
    m.pebble = uniform(rng, 1, p.pebbles);
    m.left = random_anchor(rng, p.pebbles, true);
    do m.right = random_anchor(rng, p.pebbles, false);
    while (m.right == m.left);
    const auto& letter = p.alphabet[uniform(rng, 0, static_cast<int>(p.alphabet.size()) - 1)];
    p.transitions.push_back(Transition::make_move(from, m, letter, to));
  }
  std::sort(p.transitions.begin(), p.transitions.end());
  p.transitions.erase(std::unique(p.transitions.begin(), p.transitions.end()), p.transitions.end());
  return p;
}

Nfa random_nfa(std::mt19937_64& rng, const RandomNfaParams& params) {
  Nfa n;
  n.alphabet = params.alphabet;
  const int states = uniform(rng, 1, params.max_states);
  for (int i = 0; i < states; ++i) n.states.push_back("s" + std::to_string(i));
  n.initial = n.states.front();
  for (const auto& q : n.states)
    if (coin(rng, 0.4)) n.accepting.push_back(q);
  const int transitions = uniform(rng, 0, params.max_transitions);
  for (int t = 0; t < transitions; ++t) {
    NfaTransition tr;
    tr.from = n.states[uniform(rng, 0, states - 1)];
    tr.to = n.states[uniform(rng, 0, states - 1)];
    if (!coin(rng, params.epsilon_ratio))
      tr.letter = n.alphabet[uniform(rng, 0, static_cast<int>(n.alphabet.size()) - 1)];
    if (std::find(n.transitions.begin(), n.transitions.end(), tr) == n.transitions.end()) n.transitions.push_back(tr);
  }
  return n;
}

std::vector<Word> all_words(const std::vector<Letter>& alphabet, int max_len) {
  std::vector<Word> out{{}};
  std::size_t from = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t to = out.size();
    for (std::size_t i = from; i < to; ++i)
      for (const auto& l : alphabet) {
        Word w = out[i];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    from = to;
  }
  return out;
}

SuiteReport compare_emptiness(std::uint64_t seed, int count, int max_len) {
  SuiteReport rep;
  rep.name = "emptiness";
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    const Pia p = random_pia(rng);
    ++rep.cases;
    const bool empty = is_empty(p);
    const bool none = enumerate_accepted(p, max_len).empty();
    ++rep.checks;
    if (empty && !none) rep.mismatches.push_back("case " + std::to_string(i) + ": is_empty but accepts a short word");
    const auto w = witness(p);
    if (w.has_value() == empty) rep.mismatches.push_back("case " + std::to_string(i) + ": witness disagrees with is_empty");
    if (w && !accepts(p, *w)) rep.mismatches.push_back("case " + std::to_string(i) + ": witness " + describe(*w) + " rejected");
  }
  return rep;
}

SuiteReport compare_closure(std::uint64_t seed, int pairs, int max_len, int shuffle_star_len) {
  SuiteReport rep;
  rep.name = "closure";
  std::mt19937_64 rng(seed);
  RandomPiaParams small;
  small.max_states = 3;
  small.max_pebbles = 2;
  small.max_transitions = 5;
  for (int i = 0; i < pairs; ++i) {
    const Pia a = random_pia(rng, small), b = random_pia(rng, small);
    ++rep.cases;
    Cached ma(a), mb(b);
    const Member fa = [&](const Word& w) { return ma(w); };
    const Member fb = [&](const Word& w) { return mb(w); };
    const std::vector<std::pair<std::string, std::function<bool(const Word&)>>> defs{
        {"union", [&](const Word& w) { return ma(w) || mb(w); }},
        {"concat", [&](const Word& w) { return in_concat(ma, mb, w); }},
        {"star", [&](const Word& w) { return in_star(ma, w); }},
        {"shuffle", [&](const Word& w) { return in_shuffle(fa, fb, w); }},
    };
    const std::vector<Pia> built{union_of(a, b), concat(a, b), star(a), shuffle(a, b)};
    const auto words = all_words(a.alphabet, max_len);
    for (std::size_t k = 0; k < built.size(); ++k) {
      const CompiledPia c(built[k]);
      for (const auto& w : words) {
        ++rep.checks;
        if (accepts(c, w) != defs[k].second(w))
          rep.mismatches.push_back("pair " + std::to_string(i) + " " + defs[k].first + " on " + describe(w));
      }
    }
    const CompiledPia ss(shuffle_star(a));
    std::map<Word, bool> memo;
    for (const auto& w : all_words(a.alphabet, shuffle_star_len)) {
      ++rep.checks;
      if (accepts(ss, w) != in_shuffle_star(ma, w, memo))
        rep.mismatches.push_back("pair " + std::to_string(i) + " shuffle_star on " + describe(w));
    }
  }
  return rep;
}

SuiteReport compare_regular(std::uint64_t seed, int count, int max_len) {
  SuiteReport rep;
  rep.name = "regular";
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    const Nfa n = random_nfa(rng);
    ++rep.cases;
    const Pia p = nfa_to_pia(n);
    const Nfa back = pia_to_nfa(p);
    const CompiledPia c(p);
    for (const auto& w : all_words(n.alphabet, max_len)) {
      ++rep.checks;
      const bool want = nfa_accepts(n, w);
      if (accepts(c, w) != want || nfa_accepts(back, w) != want)
        rep.mismatches.push_back("nfa " + std::to_string(i) + " on " + describe(w));
    }
  }
  return rep;
}

SuiteReport compare_fo2(int max_len) {
  SuiteReport rep;
  rep.name = "fo2";
  const std::vector<std::pair<std::string, NormalForm>> sentences{
      {"running", catalog::running_example()},
      {"unsatisfiable", catalog::unsatisfiable_example()},
      {"epsilon-only", catalog::epsilon_only_example()},
      {"two-classes", catalog::two_classes_example()},
  };
  for (const auto& [name, nf] : sentences) {
    ++rep.cases;
    const Sentence s(nf);
    const Formula phi = s.formula();
    std::set<Word> models;
    for (int n = 0; n <= max_len; ++n)
      for_each_dataword(nf.letters, n, [&](const DataWord& d) {
        if (model_check(d, phi)) models.insert(string_projection(d));
      });
    const LazyAutomaton a{s};
    for (const auto& w : all_words(nf.letters, max_len)) {
      ++rep.checks;
      if (projection_member(a, w) != models.contains(w)) rep.mismatches.push_back(name + " on " + describe(w));
    }
  }
  return rep;
}

}  // namespace pia::differential
