#include "pia/dataword.hpp"

#include <algorithm>
#include <array>

namespace pia {

DataWord::DataWord(std::vector<Letter> letters, std::vector<int> values) : letters_(std::move(letters)) {
  if (letters_.size() != values.size()) throw FormatError("data word has different numbers of letters and values");
  std::vector<int> distinct = values;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (!distinct.empty() && distinct.front() < 1) throw FormatError("data values must be positive");
  values_.reserve(values.size());
  for (int v : values)
    values_.push_back(static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), v) - distinct.begin()) + 1);
}

int DataWord::maxval() const { return values_.empty() ? 0 : *std::max_element(values_.begin(), values_.end()); }

Word string_projection(const DataWord& d) { return d.letters(); }

DataWord trim(const DataWord& d) {
  const int top = d.maxval();
  std::vector<Letter> letters;
  std::vector<int> values;
  for (std::size_t p = 0; p < d.size(); ++p) {
    if (d.value(p) == top) continue;
    letters.push_back(d.letter(p));
    values.push_back(d.value(p));
  }
  return DataWord(std::move(letters), std::move(values));
}

namespace {

bool eval(const DataWord& d, const Formula& f, std::array<int, 2>& env) {
  using K = Formula::Kind;
  auto at = [&](Var v) {
    const int p = env[static_cast<int>(v)];
    if (p < 0) throw FreeVariable("variable " + to_string(v) + " is unbound");
    return static_cast<std::size_t>(p);
  };
  switch (f.kind()) {
    case K::True: return true;
    case K::False: return false;
    case K::Lt1: return at(f.left()) < at(f.right());
    case K::Le1: return at(f.left()) <= at(f.right());
    case K::Le2: return d.le2(at(f.left()), at(f.right()));
    case K::Succ2: return d.succ2(at(f.left()), at(f.right()));
    case K::Eq: return at(f.left()) == at(f.right());
    case K::Letter: return d.letter(at(f.left())) == f.letter_name();
    case K::Not: return !eval(d, f.children().front(), env);
    case K::And:
      return std::all_of(f.children().begin(), f.children().end(), [&](const Formula& g) { return eval(d, g, env); });
    case K::Or:
      return std::any_of(f.children().begin(), f.children().end(), [&](const Formula& g) { return eval(d, g, env); });
    case K::Implies: return !eval(d, f.children()[0], env) || eval(d, f.children()[1], env);
    case K::Exists:
    case K::Forall: {
      const int slot = static_cast<int>(f.bound());
      const int saved = env[slot];
      const bool want = f.kind() == K::Exists;
      bool result = !want;
      for (std::size_t p = 0; p < d.size(); ++p) {
        env[slot] = static_cast<int>(p);
        if (eval(d, f.children().front(), env) == want) {
          result = want;
          break;
        }
      }
      env[slot] = saved;
      return result;
    }
  }
  return false;
}

}  // namespace

bool evaluate(const DataWord& d, const Formula& f, int x, int y) {
  std::array<int, 2> env{x, y};
  return eval(d, f, env);
}

bool model_check(const DataWord& d, const Formula& f) {
  const auto free = free_variables(f);
  if (!free.empty()) throw FreeVariable("formula has free variable " + to_string(*free.begin()));
  return evaluate(d, f, -1, -1);
}

std::vector<std::vector<int>> value_patterns(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(n, 1);
  if (n == 0) return {{}};
  // Odometer over [n]^n, keeping surjective maps onto an initial segment.
  while (true) {
    const int top = *std::max_element(v.begin(), v.end());
    std::vector<bool> seen(top + 1, false);
    for (int x : v) seen[x] = true;
    if (std::all_of(seen.begin() + 1, seen.end(), [](bool b) { return b; })) out.push_back(v);
    int i = n - 1;
    while (i >= 0 && v[i] == n) v[i--] = 1;
    if (i < 0) break;
    ++v[i];
  }
  return out;
}

void for_each_dataword(const std::vector<Letter>& alphabet, int n, const std::function<void(const DataWord&)>& visit) {
  if (alphabet.empty() && n > 0) return;
  const auto patterns = value_patterns(n);
  std::vector<int> idx(n, 0);
  while (true) {
    std::vector<Letter> letters;
    letters.reserve(n);
    for (int i : idx) letters.push_back(alphabet[i]);
    for (const auto& vals : patterns) visit(DataWord(letters, vals));
    int i = n - 1;
    while (i >= 0 && idx[i] + 1 == static_cast<int>(alphabet.size())) idx[i--] = 0;
    if (i < 0) break;
    ++idx[i];
  }
}

std::vector<DataWord> enumerate_datawords(const std::vector<Letter>& alphabet, int max_n) {
  std::vector<DataWord> out;
  for (int n = 0; n <= max_n; ++n) for_each_dataword(alphabet, n, [&](const DataWord& d) { out.push_back(d); });
  return out;
}

}  // namespace pia
