#include "pia/formula.hpp"

namespace pia {

std::string to_string(Var v) { return v == Var::X ? "x" : "y"; }

Formula Formula::letter(Letter name, Var v) {
  Formula f(Kind::Letter);
  f.letter_ = std::move(name);
  f.a_ = v;
  return f;
}

Formula Formula::negate(Formula g) {
  Formula f(Kind::Not);
  f.kids_.push_back(std::move(g));
  return f;
}

Formula Formula::all_of(std::vector<Formula> fs) {
  if (fs.size() == 1) return std::move(fs.front());
  Formula f(Kind::And);
  // Flatten nested conjunctions so structurally equal conjunctions compare equal.
  for (auto& g : fs) {
    if (g.kind_ == Kind::And)
      for (auto& h : g.kids_) f.kids_.push_back(std::move(h));
    else
      f.kids_.push_back(std::move(g));
  }
  return f;
}

Formula Formula::any_of(std::vector<Formula> fs) {
  if (fs.size() == 1) return std::move(fs.front());
  Formula f(Kind::Or);
  for (auto& g : fs) {
    if (g.kind_ == Kind::Or)
      for (auto& h : g.kids_) f.kids_.push_back(std::move(h));
    else
      f.kids_.push_back(std::move(g));
  }
  return f;
}

Formula Formula::implies(Formula premise, Formula conclusion) {
  Formula f(Kind::Implies);
  f.kids_.push_back(std::move(premise));
  f.kids_.push_back(std::move(conclusion));
  return f;
}

Formula Formula::exists(Var v, Formula body) {
  Formula f(Kind::Exists);
  f.a_ = v;
  f.kids_.push_back(std::move(body));
  return f;
}

Formula Formula::forall(Var v, Formula body) {
  Formula f(Kind::Forall);
  f.a_ = v;
  f.kids_.push_back(std::move(body));
  return f;
}

std::set<Var> free_variables(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True:
    case K::False: return {};
    case K::Letter: return {f.left()};
    case K::Lt1:
    case K::Le1:
    case K::Le2:
    case K::Succ2:
    case K::Eq: return {f.left(), f.right()};
    case K::Exists:
    case K::Forall: {
      auto inner = free_variables(f.children().front());
      inner.erase(f.bound());
      return inner;
    }
    default: {
      std::set<Var> out;
      for (const auto& g : f.children()) out.merge(free_variables(g));
      return out;
    }
  }
}

bool is_sentence(const Formula& f) { return free_variables(f).empty(); }

namespace {

std::string join(const std::vector<Formula>& fs, const std::string& op) {
  std::string out = "(";
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += " " + op + " ";
    out += to_string(fs[i]);
  }
  return out + ")";
}

}  // namespace

std::string to_string(const Formula& f) {
  using K = Formula::Kind;
  const std::string a = to_string(f.left());
  const std::string b = to_string(f.right());
  switch (f.kind()) {
    case K::True: return "True";
    case K::False: return "False";
    case K::Lt1: return a + "<1" + b;
    case K::Le1: return a + "<=1" + b;
    case K::Le2: return a + "<=2" + b;
    case K::Succ2: return "S2(" + a + "," + b + ")";
    case K::Eq: return a + "=" + b;
    case K::Letter: return f.letter_name() + "(" + a + ")";
    case K::Not: return "¬" + to_string(f.children().front());
    case K::And: return join(f.children(), "∧");
    case K::Or: return join(f.children(), "∨");
    case K::Implies: return join(f.children(), "→");
    case K::Exists: return "∃" + a + " " + to_string(f.children().front());
    case K::Forall: return "∀" + a + " " + to_string(f.children().front());
  }
  return {};
}

}  // namespace pia
