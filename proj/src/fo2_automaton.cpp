#include "pia/fo2_automaton.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "pia/errors.hpp"

namespace pia {

std::size_t GammaStringHash::operator()(const GammaString& w) const {
  std::size_t h = w.size();
  for (const auto& g : w) {
    detail::hash_mix(h, static_cast<std::size_t>(g.layer));
    detail::hash_mix(h, static_cast<std::size_t>(g.tasks.omega));
    detail::hash_mix(h, static_cast<std::size_t>(g.tasks.completed));
  }
  return h;
}

std::size_t AutStateHash::operator()(const AutState& q) const {
  std::size_t h = std::hash<const GammaString*>{}(q.s);
  detail::hash_mix(h, q.prefix);
  detail::hash_mix(h, q.flag);
  for (auto t : q.tau) detail::hash_mix(h, t);
  return h;
}

LazyAutomaton::LazyAutomaton(Sentence s) : s_(std::move(s)), m_(static_cast<int>(ext_bound(s_))) {
  if (m_ + 1 > 250) throw Error("too many existential 2-types for the automaton");
}

const GammaString* LazyAutomaton::intern(GammaString w) const { return &*pool_.insert(std::move(w)).first; }

AutState LazyAutomaton::initial_state() const { return {intern({}), 0, std::vector<std::uint8_t>(m_ + 1, 0), false}; }

bool LazyAutomaton::is_accepting(const State& q) const { return q.prefix == 0 && is_completed(s_, *q.s); }

bool LazyAutomaton::is_live(const State& q, int pebble) const {
  if (pebble == m_ + 1) return q.prefix != 0 && q.flag;
  return pebble >= 1 && pebble <= m_ && q.tau[pebble] != 0;
}

void LazyAutomaton::canonicalize(State& q, Rho& rho) const {
  const std::size_t n = q.s->size();
  std::vector<std::uint8_t> old_of(n + 1, 0);  // slot -> pebble
  for (int k = 1; k <= m_; ++k)
    if (q.tau[k]) old_of[q.tau[k]] = static_cast<std::uint8_t>(k);
  std::vector<std::uint8_t> tau(m_ + 1, 0);
  Rho r = rho;
  int next = 1;
  for (std::size_t slot = 1; slot <= n; ++slot) {
    const int k = old_of[slot];
    if (!k) continue;
    tau[next] = static_cast<std::uint8_t>(slot);
    r[next] = rho[k];
    ++next;
  }
  for (; next <= m_; ++next) r[next] = 0;
  q.tau = std::move(tau);
  rho = std::move(r);
}

bool LazyAutomaton::feasible(const State& q, const Rho& rho, std::uint64_t read,
                             const std::vector<int>& word, const std::vector<int>& letter_map) const {
  if (q.prefix == 0) return true;
  const int n = static_cast<int>(word.size());
  const GammaString& w = *q.s;
  std::vector<std::uint8_t> owner(w.size() + 1, 0);
  for (int k = 1; k <= m_; ++k)
    if (q.tau[k]) owner[q.tau[k]] = static_cast<std::uint8_t>(k);
  int lo = 0;
  for (std::size_t l = 1; l < q.prefix; ++l)
    if (owner[l]) lo = rho[owner[l]];
  if (q.flag) lo = std::max<int>(lo, rho[m_ + 1]);
  // Greedy subsequence match of pending top letters, gap by gap.
  int pos = lo;
  for (std::size_t l = q.prefix; l <= w.size(); ++l) {
    if (owner[l]) {
      if (rho[owner[l]] <= pos) return false;
      pos = rho[owner[l]];
      continue;
    }
    if (w[l - 1].layer != Layer::Top1) continue;
    const int want = letter_map[s_.letter_of(w[l - 1])];
    do ++pos;
    while (pos <= n && (((read >> (pos - 1)) & 1U) || word[pos - 1] != want));
    if (pos > n) return false;
    // The match must stay left of the next placed pebble.
    for (std::size_t r = l + 1; r <= w.size(); ++r)
      if (owner[r]) {
        if (rho[owner[r]] < pos) return false;
        break;
      }
  }
  return true;
}

const std::vector<LazyAutomaton::Step>& LazyAutomaton::successors_of(const GammaString* s0, int budget) const {
  // Every r letter is extremal, so |r| <= 2 |Θ_∃| regardless of the budget.
  const std::size_t full = 2 * s_.exists_types().size();
  const std::size_t cap = budget < 0 ? full : std::min<std::size_t>(full, static_cast<std::size_t>(budget));
  auto& per_cap = succ_memo_[s0];
  auto it = per_cap.find(cap);
  if (it == per_cap.end()) {
    std::vector<Step> steps;
    for (auto& succ : successors(s_, *s0, cap, true)) {
      if (succ.s1.empty()) continue;
      Step st{nullptr, std::vector<std::uint8_t>(s0->size() + 1, 0)};
      for (std::size_t l = 1; l <= succ.emb.size(); ++l)
        if (succ.emb[l - 1]) st.inv[succ.emb[l - 1]] = static_cast<std::uint8_t>(l);
      st.s1 = intern(std::move(succ.s1));
      steps.push_back(std::move(st));
    }
    it = per_cap.emplace(cap, std::move(steps)).first;
  }
  return it->second;
}

const std::vector<int>& LazyAutomaton::notext_letters(const GammaString* sp, std::size_t ell) const {
  auto it = notext_memo_.find(sp);
  if (it == notext_memo_.end()) {
    const GammaString& s = *sp;
    const std::size_t n = s.size();
    std::vector<std::vector<int>> per(n + 1);
    // before[l]: types seen on top positions < l; from[l]: on top positions >= l.
    std::vector<std::uint64_t> before(n + 2, 0), from(n + 2, 0);
    auto types = [&](std::size_t l) { return s[l - 1].layer == Layer::Top1 ? s_.omegas()[s[l - 1].tasks.omega].types : 0; };
    for (std::size_t l = 1; l <= n; ++l) before[l + 1] = before[l] | types(l);
    for (std::size_t l = n; l >= 1; --l) from[l] = from[l + 1] | types(l);
    for (std::size_t l = 1; l <= n; ++l) {
      std::set<int> letters;
      const std::uint64_t inside = before[l] & from[l];
      for (const auto& om : s_.omegas())
        if ((om.types & ~inside) == 0) letters.insert(om.letter);
      per[l].assign(letters.begin(), letters.end());
    }
    it = notext_memo_.emplace(sp, std::move(per)).first;
  }
  return it->second[ell];
}

std::vector<Edge<AutState>> LazyAutomaton::edges(const State& q, int budget) const {
  std::vector<Edge<State>> out;
  const GammaString& w = *q.s;

  if (q.prefix == 0) {
    if (budget == 0) return out;
    const auto& steps = successors_of(q.s, budget);
    out.reserve(steps.size());
    for (const auto& st : steps) {
      State next{st.s1, 1, std::vector<std::uint8_t>(m_ + 1, 0), false};
      for (int k = 1; k <= m_; ++k)
        if (q.tau[k]) next.tau[k] = st.inv[q.tau[k]];
      out.push_back({std::nullopt, -1, std::move(next)});
    }
    return out;
  }

  const std::size_t ell = q.prefix;
  const GammaLetter& head = w[ell - 1];
  // Neighbouring pebbles of slot ℓ.
  int below = 0, above = 0;
  for (int k = 1; k <= m_; ++k) {
    const std::size_t slot = q.tau[k];
    if (!slot) continue;
    if (slot < ell && (!below || slot > q.tau[below])) below = k;
    if (slot > ell && (!above || slot < q.tau[above])) above = k;
  }
  const Anchor left = q.flag ? Anchor::pebble(m_ + 1) : (below ? Anchor::pebble(below) : Anchor::left_end());
  const Anchor right = above ? Anchor::pebble(above) : Anchor::right_end();
  const bool head_top = head.layer == Layer::Top1;
  int head_pebble = 0;
  if (!head_top)
    for (int k = 1; k <= m_; ++k)
      if (q.tau[k] == ell) head_pebble = k;

  int tops_left = 0;
  for (std::size_t l = ell; l <= w.size(); ++l) tops_left += w[l - 1].layer == Layer::Top1;
  // Non-extremal reads land before the head position.
  if (budget < 0 || budget > tops_left) {
    const Anchor gap_right = head_top ? right : Anchor::pebble(head_pebble);
    State next = q;
    next.flag = true;
    for (int letter : notext_letters(q.s, ell))
      out.push_back({MoveSpec{m_ + 1, left, gap_right}, letter, next});
  }

  State next = q;
  next.flag = false;
  next.prefix = ell < w.size() ? static_cast<std::uint8_t>(ell + 1) : 0;
  if (!head_top) {
    out.push_back({std::nullopt, -1, std::move(next)});
    return out;
  }
  if (budget >= 0 && budget < tops_left) return out;
  int k = 1;
  while (k <= m_ && q.tau[k]) ++k;
  if (k > m_) throw std::logic_error("no free pebble");
  next.tau[k] = static_cast<std::uint8_t>(ell);
  out.push_back({MoveSpec{k, left, right}, s_.letter_of(head), std::move(next)});
  return out;
}

void LazyAutomaton::check_invariants(const State& q) const {
  const GammaString& w = *q.s;
  std::vector<int> owner(w.size() + 1, 0);
  for (int k = 1; k <= m_; ++k) {
    const std::size_t slot = q.tau[k];
    if (!slot) continue;
    if (slot > w.size() || owner[slot]) throw std::logic_error("pebble assignment is not injective");
    owner[slot] = k;
  }
  if (q.prefix == 0) {
    for (std::size_t l = 1; l <= w.size(); ++l)
      if (!owner[l]) throw std::logic_error("extremal state with an uncovered position");
    return;
  }
  for (std::size_t l = 1; l < q.prefix; ++l)
    if (!owner[l]) throw std::logic_error("prefix state with an uncovered read position");
  for (std::size_t l = q.prefix; l <= w.size(); ++l)
    if ((owner[l] != 0) == (w[l - 1].layer == Layer::Top1))
      throw std::logic_error("prefix state with a wrong pebble beyond the prefix");
}

std::string LazyAutomaton::state_name(const State& q) const {
  std::string out = q.prefix == 0 ? "E" : "P" + std::to_string(q.prefix) + (q.flag ? "b" : "");
  out += ":" + to_string(s_, *q.s) + ":";
  bool first = true;
  for (int k = 1; k <= m_; ++k) {
    if (!q.tau[k]) continue;
    if (!first) out += ",";
    out += std::to_string(k) + "@" + std::to_string(q.tau[k]);
    first = false;
  }
  return out;
}

std::vector<Letter> projection_alphabet(const NormalForm& nf) {
  if (nf.projection.empty()) return nf.letters;
  std::vector<Letter> out;
  for (const auto& l : nf.letters) {
    const auto& img = nf.projection.at(l);
    if (std::find(out.begin(), out.end(), img) == out.end()) out.push_back(img);
  }
  return out;
}

struct BudgetState {
  AutState q;
  int left = 0;
  bool operator==(const BudgetState&) const = default;
};

}  // namespace pia

template <>
struct std::hash<pia::BudgetState> {
  std::size_t operator()(const pia::BudgetState& s) const {
    std::size_t h = pia::AutStateHash{}(s.q);
    pia::detail::hash_mix(h, static_cast<std::size_t>(s.left));
    return h;
  }
};

namespace pia {

namespace {

Letter image(const NormalForm& nf, const Letter& l) { return nf.projection.empty() ? l : nf.projection.at(l); }

// Relabels letters of the lazy automaton through h.
class ProjectedAutomaton {
 public:
  using State = AutState;
  explicit ProjectedAutomaton(const LazyAutomaton& a) : a_(a) {
    const auto& nf = a.sentence().form();
    sigma_ = projection_alphabet(nf);
    for (const auto& l : nf.letters)
      map_.push_back(static_cast<int>(std::find(sigma_.begin(), sigma_.end(), image(nf, l)) - sigma_.begin()));
  }
  int pebble_count() const { return a_.pebble_count(); }
  State initial_state() const { return a_.initial_state(); }
  bool is_accepting(const State& q) const { return a_.is_accepting(q); }
  bool is_live(const State& q, int k) const { return a_.is_live(q, k); }
  void canonicalize(State& q, Rho& rho) const { a_.canonicalize(q, rho); }
  std::vector<Edge<State>> edges(const State& q, int budget) const {
    auto out = a_.edges(q, budget);
    for (auto& e : out)
      if (e.move) e.letter = map_[e.letter];
    return out;
  }
  bool feasible(const State& q, const Rho& rho, std::uint64_t read,
                const std::vector<int>& word) const {
    return a_.feasible(q, rho, read, word, map_);
  }
  const std::vector<Letter>& sigma() const { return sigma_; }

 private:
  const LazyAutomaton& a_;
  std::vector<Letter> sigma_;
  std::vector<int> map_;
};

}  // namespace

namespace {

// Caps the number of reads, so that the search only looks for short words.
class Budgeted {
 public:
  using State = BudgetState;
  Budgeted(const ProjectedAutomaton& a, int budget) : a_(a), budget_(budget) {}
  int pebble_count() const { return a_.pebble_count(); }
  State initial_state() const { return {a_.initial_state(), budget_}; }
  bool is_accepting(const State& q) const { return a_.is_accepting(q.q); }
  bool is_live(const State& q, int k) const { return a_.is_live(q.q, k); }
  std::vector<Edge<State>> edges(const State& q, int) const {
    std::vector<Edge<State>> out;
    for (auto& e : a_.edges(q.q, q.left)) {
      const int left = q.left - (e.move ? 1 : 0);
      if (left >= 0) out.push_back({e.move, e.letter, {std::move(e.target), left}});
    }
    return out;
  }

 private:
  const ProjectedAutomaton& a_;
  int budget_;
};

}  // namespace

SatResult satisfiable(const NormalForm& nf, int deepening) {
  SatResult res;
  if (nf.epsilon) {
    for (const auto& problem : validate(nf)) throw FormatError("invalid normal form: " + problem);
    res.satisfiable = true;
    res.witness = Word{};
    return res;
  }
  const LazyAutomaton a{Sentence(nf)};
  const ProjectedAutomaton p(a);
  auto finish = [&](const EmptinessReport& report) {
    res.nodes += report.nodes;
    res.satisfiable = !report.empty;
    if (report.witness) {
      Word w;
      for (int l : *report.witness) w.push_back(p.sigma()[l]);
      res.witness = std::move(w);
    }
  };
  // Small models first; the unbounded search settles the rest.
  for (int n = 1; n <= deepening; ++n) {
    finish(explore_emptiness(Budgeted(p, n)));
    if (res.satisfiable) return res;
  }
  finish(explore_emptiness(p));
  return res;
}

bool projection_member(const LazyAutomaton& a, const Word& w) {
  if (w.empty()) return a.sentence().form().epsilon;
  const ProjectedAutomaton p(a);
  std::vector<int> encoded;
  for (const auto& l : w) {
    auto it = std::find(p.sigma().begin(), p.sigma().end(), l);
    if (it == p.sigma().end()) throw AlphabetMismatch("letter '" + l + "' is not in the projected alphabet");
    encoded.push_back(static_cast<int>(it - p.sigma().begin()));
  }
  return search_accepts(p, encoded);
}

bool projection_member(const NormalForm& nf, const Word& w) {
  if (w.empty()) {
    for (const auto& problem : validate(nf)) throw FormatError("invalid normal form: " + problem);
    return nf.epsilon;
  }
  return projection_member(LazyAutomaton{Sentence(nf)}, w);
}

ExportResult export_automaton(const NormalForm& nf, std::size_t state_cap) {
  const LazyAutomaton a{Sentence(nf)};
  const ProjectedAutomaton p(a);
  ExportResult res;
  res.pia.alphabet = p.sigma();
  res.pia.pebbles = a.pebble_count();

  std::unordered_map<AutState, std::string> names;
  std::deque<AutState> queue;
  auto admit = [&](const AutState& q) -> bool {
    if (names.contains(q)) return true;
    if (names.size() >= state_cap) {
      res.complete = false;
      return false;
    }
    names.emplace(q, a.state_name(q));
    res.pia.states.push_back(names.at(q));
    if (a.is_accepting(q)) res.pia.accepting.push_back(names.at(q));
    queue.push_back(q);
    return true;
  };
  admit(a.initial_state());
  res.pia.initial = names.at(a.initial_state());
  while (!queue.empty()) {
    const AutState q = std::move(queue.front());
    queue.pop_front();
    for (const auto& e : p.edges(q, -1)) {
      if (!admit(e.target)) continue;
      const auto& from = names.at(q);
      const auto& to = names.at(e.target);
      res.pia.transitions.push_back(e.move ? Transition::make_move(from, *e.move, p.sigma()[e.letter], to)
                                           : Transition::silent(from, to));
    }
  }
  res.states = names.size();
  return res;
}

}  // namespace pia
