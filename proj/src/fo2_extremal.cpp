#include "pia/fo2_extremal.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <set>

#include "pia/errors.hpp"

namespace pia {

namespace {

bool has_type(const Sentence& s, const DataWord& d, std::size_t p, const TwoType& theta) {
  for (std::size_t q = 0; q < d.size(); ++q)
    if (q != p && two_type_of(d, p, q, s.letters()) == theta) return true;
  return false;
}

TaskSet marks(const Sentence& s, const DataWord& d, std::size_t p, int omega) {
  TaskSet ts{omega, 0};
  const std::uint64_t types = s.omegas()[omega].types;
  for (int t = 0; t < static_cast<int>(s.exists_types().size()); ++t)
    if (((types >> t) & 1U) && has_type(s, d, p, s.exists_types()[t])) ts.completed |= std::uint64_t{1} << t;
  return ts;
}

Layer layer_of(int value, int maxval) {
  if (value == maxval) return Layer::Top1;
  if (value == maxval - 1) return Layer::Top2;
  return Layer::Rest;
}

bool in_omega(const Sentence& s, const GammaLetter& g, int t) { return (s.omegas()[g.tasks.omega].types >> t) & 1U; }
bool done(const GammaLetter& g, int t) { return (g.tasks.completed >> t) & 1U; }

}  // namespace

std::optional<TaskWord> make_task_word(const Sentence& s, const DataWord& d, const std::vector<int>& omegas) {
  if (omegas.size() != d.size()) return std::nullopt;
  TaskWord t{d, {}};
  for (std::size_t p = 0; p < d.size(); ++p) {
    const int w = omegas[p];
    if (w < 0 || w >= static_cast<int>(s.omegas().size())) return std::nullopt;
    if (s.letters()[s.omega_letter(w)] != d.letter(p)) return std::nullopt;
    t.tasks.push_back(marks(s, d, p, w));
  }
  return t;
}

TaskWord trim_task_word(const Sentence& s, const TaskWord& t) {
  const int top = t.data.maxval();
  std::vector<int> kept;
  for (std::size_t p = 0; p < t.data.size(); ++p)
    if (t.data.value(p) != top) kept.push_back(t.tasks[p].omega);
  return *make_task_word(s, trim(t.data), kept);
}

bool is_completed(const Sentence& s, const TaskWord& t) {
  if (t.data.empty()) return s.form().epsilon;
  return std::all_of(t.tasks.begin(), t.tasks.end(), [&](const TaskSet& ts) { return s.is_completed(ts); });
}

bool is_perfect(const Sentence& s, const TaskWord& t) {
  for (TaskWord cur = t; !cur.data.empty(); cur = trim_task_word(s, cur))
    if (!is_perfect_string(s, abst(cur))) return false;
  return true;
}

GammaString abst(const TaskWord& t) {
  GammaString out;
  const int top = t.data.maxval();
  for (std::size_t p = 0; p < t.data.size(); ++p) out.push_back({layer_of(t.data.value(p), top), t.tasks[p]});
  return out;
}

std::vector<std::size_t> ext_positions(const Sentence& s, const GammaString& w) {
  std::set<std::size_t> keep;
  const int n_types = static_cast<int>(s.exists_types().size());
  for (int t = 0; t < n_types; ++t) {
    for (Layer h : {Layer::Top1, Layer::Top2, Layer::Rest}) {
      std::size_t lo = 0, hi = 0;
      for (std::size_t l = 1; l <= w.size(); ++l)
        if (w[l - 1].layer == h && in_omega(s, w[l - 1], t)) {
          if (!lo) lo = l;
          hi = l;
        }
      if (lo) keep.insert({lo, hi});
    }
    std::size_t lo = 0, hi = 0;
    for (std::size_t l = 1; l <= w.size(); ++l)
      if (w[l - 1].layer == Layer::Rest && in_omega(s, w[l - 1], t) && !done(w[l - 1], t)) {
        if (!lo) lo = l;
        hi = l;
      }
    if (lo) keep.insert(s.exists_types()[t].x_first ? hi : lo);
  }
  return {keep.begin(), keep.end()};
}

GammaString ext(const Sentence& s, const GammaString& w) {
  GammaString out;
  for (std::size_t l : ext_positions(s, w)) out.push_back(w[l - 1]);
  return out;
}

bool is_extremal(const Sentence& s, const GammaString& w) { return ext_positions(s, w).size() == w.size(); }

bool is_completed(const Sentence& s, const GammaString& w) {
  if (w.empty()) return s.form().epsilon;
  return std::all_of(w.begin(), w.end(), [&](const GammaLetter& g) { return s.is_completed(g.tasks); });
}

GammaString down(const GammaString& w) {
  GammaString out = w;
  for (auto& g : out) g.layer = g.layer == Layer::Top1 ? Layer::Top2 : Layer::Rest;
  return out;
}

namespace {

// Upgrades promised tasks of an interleaved string per the three completion rules.
GammaString complete(const Sentence& s, GammaString s1) {
  const GammaString base = s1;
  const auto& types = s.exists_types();
  const std::size_t n = base.size();
  for (std::size_t l = 0; l < n; ++l) {
    const std::uint64_t om = s.omegas()[base[l].tasks.omega].types;
    for (int t = 0; t < static_cast<int>(types.size()); ++t) {
      if (!((om >> t) & 1U) || done(base[l], t)) continue;
      const TwoType& theta = types[t];
      bool found = false;
      if (theta.x_first) {
        for (std::size_t l2 = l + 1; l2 < n && !found; ++l2)
          found = (base[l].layer == Layer::Top1 || base[l2].layer == Layer::Top1) &&
                  perf_two_type(s, base[l], base[l2]) == theta;
      } else {
        for (std::size_t l1 = 0; l1 < l && !found; ++l1)
          found = (base[l1].layer == Layer::Top1 || base[l].layer == Layer::Top1) &&
                  swapped(perf_two_type(s, base[l1], base[l])) == theta;
      }
      if (found) s1[l].tasks.completed |= std::uint64_t{1} << t;
    }
  }
  return s1;
}

// Interleaving of r into down(s0); src[i] is the 1-based s0 position or 0.
GammaString interleave(const GammaString& r, const std::vector<std::size_t>& g, const GammaString& s0,
                       std::vector<std::size_t>* src) {
  const std::size_t n = r.size() + s0.size();
  if (g.size() != r.size()) throw NonMonotoneG("g must have one entry per letter of r");
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] < 1 || g[i] > n) throw NonMonotoneG("g leaves the interleaved range");
    if (i && g[i] <= g[i - 1]) throw NonMonotoneG("g is not strictly increasing");
  }
  const GammaString d0 = down(s0);
  GammaString out;
  std::size_t ri = 0, si = 0;
  for (std::size_t pos = 1; pos <= n; ++pos) {
    if (ri < r.size() && g[ri] == pos) {
      out.push_back(r[ri++]);
      if (src) src->push_back(0);
    } else {
      out.push_back(d0[si++]);
      if (src) src->push_back(si);
    }
  }
  return out;
}

}  // namespace

GammaString rcon(const Sentence& s, const GammaString& r, const std::vector<std::size_t>& g, const GammaString& s0) {
  return complete(s, interleave(r, g, s0, nullptr));
}

std::size_t ext_bound(const Sentence& s) { return 7 * s.exists_types().size(); }

namespace {

class SuccessorSearch {
 public:
  SuccessorSearch(const Sentence& s, const GammaString& s0, std::size_t max_r, bool perfect)
      : s_(s), d0_(down(s0)), max_r_(max_r), perfect_(perfect) {
    const int letters = static_cast<int>(s.letters().size());
    ok_.assign(3 * letters * 3 * letters, true);
    for (int hx = 0; hx < 3; ++hx)
      for (int ax = 0; ax < letters; ++ax)
        for (int hy = 0; hy < 3; ++hy)
          for (int ay = 0; ay < letters; ++ay) {
            if (hx != 0 && hy != 0) continue;
            const TwoType t = perf_two_type_raw(static_cast<Layer>(hx), ax, static_cast<Layer>(hy), ay);
            ok_[index(hx, ax, hy, ay)] = s.allowed(t) && s.allowed(swapped(t));
          }
    for (int w = 0; w < static_cast<int>(s.omegas().size()); ++w) top_letters_.push_back({Layer::Top1, s.promised(w)});
  }

  std::vector<Successor> run() {
    if (d0_.empty()) out_.push_back({});  // r = ε only when s0 = ε
    dfs();
    return std::move(out_);
  }

 private:
  struct RInfo {
    std::size_t pos;
    std::uint64_t first;
    std::uint64_t last_candidates;
  };

  static TwoType perf_two_type_raw(Layer hx, int ax, Layer hy, int ay) {
    ValueRel rel = ValueRel::Equal;
    if (hx == Layer::Top2) rel = ValueRel::XSuccY;
    else if (hx == Layer::Rest) rel = ValueRel::XBelowY;
    else if (hy == Layer::Top2) rel = ValueRel::YSuccX;
    else if (hy == Layer::Rest) rel = ValueRel::YBelowX;
    return {ax, ay, true, rel};
  }

  std::size_t index(int hx, int ax, int hy, int ay) const {
    const int letters = static_cast<int>(s_.letters().size());
    return ((hx * letters + ax) * 3 + hy) * letters + ay;
  }

  bool compatible(const GammaLetter& a, const GammaLetter& b) const {
    return ok_[index(static_cast<int>(a.layer), s_.letter_of(a), static_cast<int>(b.layer), s_.letter_of(b))];
  }

  // Placing a letter at the end must keep every top pair allowed.
  bool fits(const GammaLetter& g) const {
    if (!perfect_) return true;
    if (g.layer == Layer::Top1)
      return std::all_of(merged_.begin(), merged_.end(), [&](const GammaLetter& a) { return compatible(a, g); });
    for (const auto& ri : rinfo_)
      if (!compatible(merged_[ri.pos], g)) return false;
    return true;
  }

  void dfs() {
    const std::size_t si = merged_.size() - rinfo_.size();
    if (si == d0_.size() && !rinfo_.empty()) emit();
    if (si < d0_.size() && fits(d0_[si])) {
      merged_.push_back(d0_[si]);
      src_.push_back(si + 1);
      dfs();
      merged_.pop_back();
      src_.pop_back();
    }
    if (rinfo_.size() >= max_r_) return;
    for (const auto& g : top_letters_) {
      if (!fits(g)) continue;
      const std::uint64_t types = s_.omegas()[g.tasks.omega].types;
      const auto saved = rinfo_;
      bool viable = true;
      for (auto& ri : rinfo_) {
        ri.last_candidates &= ~types;
        if (!ri.first && !ri.last_candidates) viable = false;
      }
      if (viable) {
        rinfo_.push_back({merged_.size(), types & ~seen_, types});
        const std::uint64_t seen_before = seen_;
        seen_ |= types;
        merged_.push_back(g);
        src_.push_back(0);
        dfs();
        merged_.pop_back();
        src_.pop_back();
        seen_ = seen_before;
      }
      rinfo_ = saved;
    }
  }

  void emit() {
    const GammaString full = complete(s_, merged_);
    const auto keep = ext_positions(s_, full);
    for (const auto& ri : rinfo_)
      if (!std::binary_search(keep.begin(), keep.end(), ri.pos + 1)) return;
    Successor succ;
    for (std::size_t l : keep) {
      succ.s1.push_back(full[l - 1]);
      succ.emb.push_back(src_[l - 1]);
    }
    if (!seen_results_.emplace(succ.s1, succ.emb).second) return;
    for (const auto& ri : rinfo_) {
      succ.r.push_back(merged_[ri.pos]);
      succ.g.push_back(ri.pos + 1);
    }
    out_.push_back(std::move(succ));
  }

  const Sentence& s_;
  GammaString d0_;
  std::size_t max_r_;
  bool perfect_;
  std::vector<bool> ok_;
  std::vector<GammaLetter> top_letters_;

  GammaString merged_;
  std::vector<std::size_t> src_;
  std::vector<RInfo> rinfo_;
  std::uint64_t seen_ = 0;
  std::set<std::pair<GammaString, std::vector<std::size_t>>> seen_results_;
  std::vector<Successor> out_;
};

}  // namespace

std::vector<Successor> successors(const Sentence& s, const GammaString& s0, std::size_t max_r, bool require_perfect) {
  return SuccessorSearch(s, s0, max_r, require_perfect).run();
}

// r survives ext, so it is the top-layer subsequence of s1 up to completed
// bits that rcon would add back; only g is searched.
std::optional<Witness> consecutive(const Sentence& s, const GammaString& s0, const GammaString& s1) {
  GammaString r;
  std::vector<std::uint64_t> full;
  for (const auto& l : s1)
    if (l.layer == Layer::Top1) {
      r.push_back(l);
      full.push_back(l.tasks.completed);
    }
  if (r.empty() && !s0.empty()) return std::nullopt;
  const std::size_t n = r.size() + s0.size();
  std::vector<std::size_t> g(r.size());
  auto try_g = [&]() -> bool {
    return ext(s, rcon(s, r, g, s0)) == s1;
  };
  std::function<bool(std::size_t, std::size_t)> place = [&](std::size_t i, std::size_t from) {
    if (i == g.size()) return try_g();
    for (std::size_t p = from; p + (g.size() - i) <= n + 1; ++p) {
      g[i] = p;
      if (place(i + 1, p + 1)) return true;
    }
    return false;
  };
  std::function<bool(std::size_t)> masks = [&](std::size_t i) {
    if (i == r.size()) return place(0, 1);
    for (std::uint64_t sub = full[i];; sub = (sub - 1) & full[i]) {
      r[i].tasks.completed = sub;
      if (masks(i + 1)) return true;
      if (sub == 0) break;
    }
    return false;
  };
  if (masks(0)) return Witness{std::move(r), std::move(g)};
  return std::nullopt;
}

std::vector<std::size_t> partial_embedding(const Sentence& s, const GammaString& s0, const GammaString& s1,
                                           const GammaString& r, const std::vector<std::size_t>& g) {
  std::vector<std::size_t> src;
  const GammaString full = complete(s, interleave(r, g, s0, &src));
  const auto keep = ext_positions(s, full);
  std::vector<std::size_t> emb;
  GammaString got;
  for (std::size_t l : keep) {
    got.push_back(full[l - 1]);
    emb.push_back(src[l - 1]);
  }
  if (got != s1) throw NotConsecutive("s1 is not ext(rcon(r, g, s0))");
  return emb;
}

std::vector<GammaLetter> gamma_notext(const Sentence& s, const GammaString& w, std::size_t ell) {
  std::vector<GammaLetter> out;
  if (ell < 1 || ell > w.size() + 1) return out;
  const GammaString base = ext(s, w);
  for (Layer h : {Layer::Top1, Layer::Top2, Layer::Rest})
    for (const auto& ts : s.task_sets()) {
      GammaString v = w;
      v.insert(v.begin() + static_cast<std::ptrdiff_t>(ell - 1), GammaLetter{h, ts});
      if (ext(s, v) == base) out.push_back({h, ts});
    }
  return out;
}

}  // namespace pia
