#include "pia/fo2_logic.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace pia {

TwoType swapped(const TwoType& t) {
  ValueRel rel = t.rel;
  switch (t.rel) {
    case ValueRel::XSuccY: rel = ValueRel::YSuccX; break;
    case ValueRel::YSuccX: rel = ValueRel::XSuccY; break;
    case ValueRel::XBelowY: rel = ValueRel::YBelowX; break;
    case ValueRel::YBelowX: rel = ValueRel::XBelowY; break;
    case ValueRel::Equal: break;
  }
  return {t.y_letter, t.x_letter, !t.x_first, rel};
}

std::string atom_tag(Atom a) {
  switch (a) {
    case Atom::XLt1Y: return "x<1y";
    case Atom::YLt1X: return "y<1x";
    case Atom::XLe2Y: return "x<=2y";
    case Atom::YLe2X: return "y<=2x";
    case Atom::S2XY: return "S2(x,y)";
    case Atom::S2YX: return "S2(y,x)";
  }
  return {};
}

bool holds(const TwoType& t, Atom a) {
  switch (a) {
    case Atom::XLt1Y: return t.x_first;
    case Atom::YLt1X: return !t.x_first;
    case Atom::XLe2Y: return t.rel == ValueRel::XSuccY || t.rel == ValueRel::XBelowY || t.rel == ValueRel::Equal;
    case Atom::YLe2X: return t.rel == ValueRel::YSuccX || t.rel == ValueRel::YBelowX || t.rel == ValueRel::Equal;
    case Atom::S2XY: return t.rel == ValueRel::XSuccY;
    case Atom::S2YX: return t.rel == ValueRel::YSuccX;
  }
  return false;
}

std::vector<TwoType> all_two_types(int letters) {
  std::vector<TwoType> out;
  for (int a = 0; a < letters; ++a)
    for (int b = 0; b < letters; ++b)
      for (bool first : {true, false})
        for (auto rel : {ValueRel::XSuccY, ValueRel::XBelowY, ValueRel::Equal, ValueRel::YSuccX, ValueRel::YBelowX})
          out.push_back({a, b, first, rel});
  return out;
}

namespace {

int index_of(const std::vector<Letter>& alphabet, const Letter& l) {
  auto it = std::find(alphabet.begin(), alphabet.end(), l);
  if (it == alphabet.end()) throw AlphabetMismatch("letter '" + l + "' is not in the alphabet");
  return static_cast<int>(it - alphabet.begin());
}

}  // namespace

TwoType two_type_of(const DataWord& d, std::size_t p, std::size_t q, const std::vector<Letter>& alphabet) {
  const int vx = d.value(p);
  const int vy = d.value(q);
  ValueRel rel = ValueRel::Equal;
  if (vy == vx + 1)
    rel = ValueRel::XSuccY;
  else if (vy > vx)
    rel = ValueRel::XBelowY;
  else if (vx == vy + 1)
    rel = ValueRel::YSuccX;
  else if (vx > vy)
    rel = ValueRel::YBelowX;
  return {index_of(alphabet, d.letter(p)), index_of(alphabet, d.letter(q)), p < q, rel};
}

std::vector<std::string> literals(const TwoType& t, const std::vector<Letter>& alphabet) {
  std::vector<std::string> out;
  for (Atom a : kAtoms)
    if (holds(t, a)) out.push_back(atom_tag(a));
  for (Atom a : kAtoms)
    if (!holds(t, a)) out.push_back("¬" + atom_tag(a));
  out.push_back(alphabet.at(t.x_letter) + "(x)");
  out.push_back(alphabet.at(t.y_letter) + "(y)");
  return out;
}

namespace {

Formula atom_formula(Atom a) {
  switch (a) {
    case Atom::XLt1Y: return Formula::lt1(Var::X, Var::Y);
    case Atom::YLt1X: return Formula::lt1(Var::Y, Var::X);
    case Atom::XLe2Y: return Formula::le2(Var::X, Var::Y);
    case Atom::YLe2X: return Formula::le2(Var::Y, Var::X);
    case Atom::S2XY: return Formula::succ2(Var::X, Var::Y);
    case Atom::S2YX: return Formula::succ2(Var::Y, Var::X);
  }
  return Formula::truth();
}

bool quantifier_free(const Formula& f) {
  if (f.kind() == Formula::Kind::Exists || f.kind() == Formula::Kind::Forall) return false;
  return std::all_of(f.children().begin(), f.children().end(), quantifier_free);
}

}  // namespace

Formula to_formula(const TwoType& t, const std::vector<Letter>& alphabet) {
  std::vector<Formula> parts{Formula::letter(alphabet.at(t.x_letter), Var::X),
                             Formula::letter(alphabet.at(t.y_letter), Var::Y)};
  for (Atom a : kAtoms) parts.push_back(holds(t, a) ? atom_formula(a) : !atom_formula(a));
  return Formula::all_of(std::move(parts));
}

Realization realize(const TwoType& t, const std::vector<Letter>& alphabet) {
  int vx = 1, vy = 1;
  bool gap = false;
  switch (t.rel) {
    case ValueRel::XSuccY: vy = 2; break;
    case ValueRel::XBelowY: vy = 3, gap = true; break;
    case ValueRel::Equal: break;
    case ValueRel::YSuccX: vx = 2; break;
    case ValueRel::YBelowX: vx = 3, gap = true; break;
  }
  Realization r;
  r.x = t.x_first ? 0 : 1;
  r.y = 1 - r.x;
  std::vector<Letter> letters(2);
  std::vector<int> values(2);
  letters[r.x] = alphabet.at(t.x_letter);
  letters[r.y] = alphabet.at(t.y_letter);
  values[r.x] = vx;
  values[r.y] = vy;
  // A strict non-successor gap needs a witness value in between.
  if (gap) {
    letters.push_back(alphabet.front());
    values.push_back(2);
  }
  r.word = DataWord(std::move(letters), std::move(values));
  return r;
}

std::vector<TwoType> expand_to_two_types(const Formula& qf, const std::vector<Letter>& alphabet) {
  if (!quantifier_free(qf)) throw FormatError("expected a quantifier-free formula");
  std::vector<TwoType> out;
  for (const auto& t : all_two_types(static_cast<int>(alphabet.size()))) {
    const auto r = realize(t, alphabet);
    if (evaluate(r.word, qf, static_cast<int>(r.x), static_cast<int>(r.y))) out.push_back(t);
  }
  return out;
}

namespace {

Formula parse_tag(const std::string& raw, const std::vector<Letter>& alphabet) {
  std::string tag = raw;
  bool negated = false;
  for (const std::string neg : {"¬", "!"})
    if (tag.rfind(neg, 0) == 0) {
      negated = true;
      tag = tag.substr(neg.size());
    }
  std::optional<Formula> f;
  for (Atom a : kAtoms)
    if (tag == atom_tag(a)) f = atom_formula(a);
  if (tag == "x=y" || tag == "y=x") f = Formula::eq(Var::X, Var::Y);
  if (tag == "x~2y" || tag == "y~2x") f = Formula::sim2(Var::X, Var::Y);
  if (!f && tag.size() > 3 && tag.back() == ')' && (tag.ends_with("(x)") || tag.ends_with("(y)"))) {
    const Letter name = tag.substr(0, tag.size() - 3);
    if (std::find(alphabet.begin(), alphabet.end(), name) == alphabet.end())
      throw FormatError("unknown letter in literal '" + raw + "'");
    f = Formula::letter(name, tag[tag.size() - 2] == 'x' ? Var::X : Var::Y);
  }
  if (!f) throw FormatError("unknown literal '" + raw + "'");
  return negated ? !*f : *f;
}

std::set<std::string> positive_atoms(const TwoType& t, const std::vector<Letter>& alphabet) {
  std::set<std::string> out;
  for (Atom a : kAtoms)
    if (holds(t, a)) out.insert(atom_tag(a));
  out.insert(alphabet.at(t.x_letter) + "(x)");
  out.insert(alphabet.at(t.y_letter) + "(y)");
  return out;
}

}  // namespace

TwoType parse_two_type(const std::vector<std::string>& tags, const std::vector<Letter>& alphabet) {
  std::vector<Formula> parts;
  for (const auto& t : tags) parts.push_back(parse_tag(t, alphabet));
  const auto candidates = expand_to_two_types(Formula::all_of(std::move(parts)), alphabet);
  if (candidates.empty()) throw FormatError("contradictory 2-type literals");
  if (candidates.size() == 1) return candidates.front();
  std::vector<TwoType> minimal;
  for (const auto& c : candidates) {
    const auto pc = positive_atoms(c, alphabet);
    const bool dominated = std::any_of(candidates.begin(), candidates.end(), [&](const TwoType& o) {
      if (o == c) return false;
      const auto po = positive_atoms(o, alphabet);
      return po.size() < pc.size() && std::includes(pc.begin(), pc.end(), po.begin(), po.end());
    });
    if (!dominated) minimal.push_back(c);
  }
  if (minimal.size() != 1) throw FormatError("2-type literals do not determine a unique 2-type");
  return minimal.front();
}

std::vector<std::string> validate(const NormalForm& nf) {
  std::vector<std::string> out;
  const int A = static_cast<int>(nf.letters.size());
  if (A == 0) out.push_back("empty letter alphabet");
  if (std::set<Letter>(nf.letters.begin(), nf.letters.end()).size() != nf.letters.size())
    out.push_back("duplicate letter");
  if (nf.B < 0) out.push_back("B must not be negative");
  if (nf.C < 1) out.push_back("C must be positive");
  auto type_ok = [&](const TwoType& t) { return t.x_letter >= 0 && t.x_letter < A && t.y_letter >= 0 && t.y_letter < A; };
  std::set<std::tuple<int, int, int>> seen;
  for (const auto& e : nf.exists) {
    const std::string name = "θ_" + std::to_string(e.a) + std::to_string(e.b) + std::to_string(e.c);
    if (e.a < 1 || e.a > A || e.b < 1 || e.b > nf.B || e.c < 1 || e.c > nf.C) out.push_back(name + " out of range");
    if (!seen.emplace(e.a, e.b, e.c).second) out.push_back(name + " defined twice");
    if (!type_ok(e.type)) out.push_back(name + " uses an unknown letter");
    else if (e.type.x_letter != e.a - 1) out.push_back(name + " does not have x-letter ξ_" + std::to_string(e.a));
  }
  if (static_cast<long>(seen.size()) != static_cast<long>(A) * nf.B * nf.C && nf.B > 0)
    out.push_back("θ_abc table is incomplete");
  for (const auto& t : nf.forall)
    if (!type_ok(t)) out.push_back("universal 2-type uses an unknown letter");
  if (!nf.projection.empty())
    for (const auto& l : nf.letters)
      if (!nf.projection.contains(l)) out.push_back("projection misses letter " + l);
  return out;
}

namespace {

std::string default_id(const ExistsEntry& e) {
  return e.id.empty() ? "θ" + std::to_string(e.a) + std::to_string(e.b) + std::to_string(e.c) : e.id;
}

// Choice functions b -> c for letter a, as index vectors into the table.
template <class F>
void for_each_choice(const NormalForm& nf, int a, F&& f) {
  std::vector<const ExistsEntry*> pick(nf.B, nullptr);
  std::function<void(int)> rec = [&](int b) {
    if (b == nf.B) {
      f(pick);
      return;
    }
    for (const auto& e : nf.exists)
      if (e.a == a + 1 && e.b == b + 1) {
        pick[b] = &e;
        rec(b + 1);
      }
  };
  rec(0);
}

}  // namespace

std::vector<std::vector<std::vector<std::string>>> witness_type_sets(const NormalForm& nf) {
  std::vector<std::vector<std::vector<std::string>>> out(nf.letters.size());
  for (int a = 0; a < static_cast<int>(nf.letters.size()); ++a) {
    std::set<std::vector<std::string>> sets;
    for_each_choice(nf, a, [&](const std::vector<const ExistsEntry*>& pick) {
      std::set<TwoType> types;
      std::vector<std::string> ids;
      for (const auto* e : pick)
        if (types.insert(e->type).second) ids.push_back(default_id(*e));
      std::sort(ids.begin(), ids.end());
      sets.insert(ids);
    });
    out[a].assign(sets.begin(), sets.end());
  }
  return out;
}

Sentence::Sentence(NormalForm nf) : nf_(std::move(nf)) {
  auto problems = validate(nf_);
  if (nf_.B < 1) problems.push_back("B must be positive");
  if (!problems.empty()) throw FormatError("invalid normal form: " + problems.front());
  for (const auto& e : nf_.exists)
    if (exists_index(e.type) < 0) {
      exists_.push_back(e.type);
      exists_ids_.push_back(default_id(e));
    }
  if (exists_.size() > 64) throw FormatError("more than 64 existential 2-types");
  for (int a = 0; a < static_cast<int>(nf_.letters.size()); ++a) {
    std::set<std::uint64_t> sets;
    for_each_choice(nf_, a, [&](const std::vector<const ExistsEntry*>& pick) {
      std::uint64_t bits = 0;
      for (const auto* e : pick) bits |= std::uint64_t{1} << exists_index(e->type);
      sets.insert(bits);
    });
    for (auto bits : sets) omegas_.push_back({a, bits});
  }
  forall_sorted_ = nf_.forall;
  std::sort(forall_sorted_.begin(), forall_sorted_.end());
  forall_sorted_.erase(std::unique(forall_sorted_.begin(), forall_sorted_.end()), forall_sorted_.end());
}

int Sentence::letter_index(const Letter& l) const {
  auto it = std::find(nf_.letters.begin(), nf_.letters.end(), l);
  return it == nf_.letters.end() ? -1 : static_cast<int>(it - nf_.letters.begin());
}

int Sentence::exists_index(const TwoType& t) const {
  auto it = std::find(exists_.begin(), exists_.end(), t);
  return it == exists_.end() ? -1 : static_cast<int>(it - exists_.begin());
}

std::vector<int> Sentence::omegas_of(int letter) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(omegas_.size()); ++i)
    if (omegas_[i].letter == letter) out.push_back(i);
  return out;
}

int Sentence::omega_index(std::uint64_t types) const {
  for (int i = 0; i < static_cast<int>(omegas_.size()); ++i)
    if (omegas_[i].types == types) return i;
  return -1;
}

bool Sentence::allowed(const TwoType& t) const {
  return std::binary_search(forall_sorted_.begin(), forall_sorted_.end(), t);
}

std::vector<TaskSet> Sentence::task_sets() const {
  std::vector<TaskSet> out;
  for (int i = 0; i < static_cast<int>(omegas_.size()); ++i) {
    const std::uint64_t full = omegas_[i].types;
    // Enumerate subsets of `full` in increasing order.
    std::uint64_t sub = 0;
    do {
      out.push_back({i, sub});
      sub = (sub - full) & full;
    } while (sub != 0);
  }
  return out;
}

Formula Sentence::formula() const {
  const auto& L = nf_.letters;
  std::vector<Formula> universal{Formula::eq(Var::X, Var::Y)};
  for (const auto& t : forall_sorted_) universal.push_back(to_formula(t, L));
  const Formula phi_forall = Formula::forall(Var::X, Formula::forall(Var::Y, Formula::any_of(std::move(universal))));

  std::vector<Formula> per_letter;
  for (int a = 0; a < static_cast<int>(L.size()); ++a) {
    std::vector<Formula> per_b;
    for (int b = 1; b <= nf_.B; ++b) {
      std::vector<Formula> options;
      for (const auto& e : nf_.exists)
        if (e.a == a + 1 && e.b == b) options.push_back(to_formula(e.type, L));
      per_b.push_back(Formula::exists(Var::Y, Formula::any_of(std::move(options))));
    }
    per_letter.push_back(Formula::implies(Formula::letter(L[a], Var::X), Formula::all_of(std::move(per_b))));
  }
  const Formula phi_eps = nf_.epsilon ? Formula::truth() : Formula::exists(Var::X, Formula::truth());
  const Formula phi_exists = Formula::all_of({phi_eps, Formula::forall(Var::X, Formula::all_of(std::move(per_letter)))});
  return Formula::all_of({phi_forall, phi_exists});
}

namespace {

void require_top(const GammaLetter& alpha, const GammaLetter& beta) {
  if (alpha.layer != Layer::Top1 && beta.layer != Layer::Top1)
    throw NeitherTop("perf needs a letter from the top layer");
}

}  // namespace

Formula perf(const Sentence& s, const GammaLetter& alpha, const GammaLetter& beta) {
  require_top(alpha, beta);
  const auto& L = s.letters();
  std::vector<Formula> parts{Formula::letter(L[s.letter_of(alpha)], Var::X),
                             Formula::letter(L[s.letter_of(beta)], Var::Y), Formula::lt1(Var::X, Var::Y)};
  if (alpha.layer != Layer::Top1)
    parts.push_back(Formula::lt2(Var::X, Var::Y));
  else if (beta.layer != Layer::Top1)
    parts.push_back(Formula::lt2(Var::Y, Var::X));
  else
    parts.push_back(Formula::sim2(Var::X, Var::Y));
  if (alpha.layer == Layer::Top2)
    parts.push_back(Formula::succ2(Var::X, Var::Y));
  else if (beta.layer == Layer::Top2)
    parts.push_back(Formula::succ2(Var::Y, Var::X));
  else if (alpha.layer == Layer::Rest)
    parts.push_back(!Formula::succ2(Var::X, Var::Y));
  else if (beta.layer == Layer::Rest)
    parts.push_back(!Formula::succ2(Var::Y, Var::X));
  return Formula::all_of(std::move(parts));
}

TwoType perf_two_type(const Sentence& s, const GammaLetter& alpha, const GammaLetter& beta) {
  require_top(alpha, beta);
  ValueRel rel = ValueRel::Equal;
  if (alpha.layer == Layer::Top2) rel = ValueRel::XSuccY;
  else if (alpha.layer == Layer::Rest) rel = ValueRel::XBelowY;
  else if (beta.layer == Layer::Top2) rel = ValueRel::YSuccX;
  else if (beta.layer == Layer::Rest) rel = ValueRel::YBelowX;
  return {s.letter_of(alpha), s.letter_of(beta), true, rel};
}

bool is_perfect_string(const Sentence& s, const GammaString& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i].layer != Layer::Top1 && w[j].layer != Layer::Top1) continue;
      const TwoType t = perf_two_type(s, w[i], w[j]);
      if (!s.allowed(t) || !s.allowed(swapped(t))) return false;
    }
  return true;
}

std::string to_string(Layer h) {
  switch (h) {
    case Layer::Top1: return "1top";
    case Layer::Top2: return "2top";
    case Layer::Rest: return "rest";
  }
  return {};
}

std::string to_string(const Sentence& s, const TaskSet& ts) {
  std::string out = "{";
  bool first = true;
  const std::uint64_t types = s.omegas()[ts.omega].types;
  for (int t = 0; t < static_cast<int>(s.exists_types().size()); ++t) {
    if (!((types >> t) & 1U)) continue;
    if (!first) out += ",";
    out += (((ts.completed >> t) & 1U) ? "C_" : "P_") + s.exists_id(t);
    first = false;
  }
  return out + "}";
}

std::string to_string(const Sentence& s, const GammaLetter& g) {
  return "(" + to_string(g.layer) + "," + to_string(s, g.tasks) + ")";
}

std::string to_string(const Sentence& s, const GammaString& w) {
  if (w.empty()) return "ε";
  std::string out;
  for (const auto& g : w) out += to_string(s, g);
  return out;
}

}  // namespace pia
