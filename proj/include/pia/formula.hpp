#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "pia/pia.hpp"

namespace pia {

enum class Var : std::uint8_t { X, Y };

inline Var other(Var v) { return v == Var::X ? Var::Y : Var::X; }
std::string to_string(Var v);

// Two-variable first-order formulas over a linear order, a total preorder,
// its successor relation and unary letter predicates.
class Formula {
 public:
  enum class Kind { True, False, Lt1, Le1, Le2, Succ2, Eq, Letter, Not, And, Or, Implies, Exists, Forall };

  static Formula truth() { return Formula(Kind::True); }
  static Formula falsity() { return Formula(Kind::False); }
  static Formula lt1(Var a, Var b) { return binary(Kind::Lt1, a, b); }
  static Formula le1(Var a, Var b) { return binary(Kind::Le1, a, b); }
  static Formula le2(Var a, Var b) { return binary(Kind::Le2, a, b); }
  static Formula succ2(Var a, Var b) { return binary(Kind::Succ2, a, b); }
  static Formula eq(Var a, Var b) { return binary(Kind::Eq, a, b); }
  static Formula letter(Letter name, Var v);
  static Formula negate(Formula f);
  static Formula all_of(std::vector<Formula> fs);
  static Formula any_of(std::vector<Formula> fs);
  static Formula implies(Formula premise, Formula conclusion);
  static Formula exists(Var v, Formula body);
  static Formula forall(Var v, Formula body);

  // x ~2 y and x strictly below y in the preorder.
  static Formula sim2(Var a, Var b) { return all_of({le2(a, b), le2(b, a)}); }
  static Formula lt2(Var a, Var b) { return all_of({le2(a, b), negate(le2(b, a))}); }

  Kind kind() const { return kind_; }
  Var left() const { return a_; }
  Var right() const { return b_; }
  Var bound() const { return a_; }
  const Letter& letter_name() const { return letter_; }
  const std::vector<Formula>& children() const { return kids_; }

  bool operator==(const Formula&) const = default;

 private:
  explicit Formula(Kind k) : kind_(k) {}
  static Formula binary(Kind k, Var a, Var b) {
    Formula f(k);
    f.a_ = a;
    f.b_ = b;
    return f;
  }

  Kind kind_;
  Var a_ = Var::X;
  Var b_ = Var::Y;
  Letter letter_;
  std::vector<Formula> kids_;
};

inline Formula operator!(Formula f) { return Formula::negate(std::move(f)); }
inline Formula operator&&(Formula a, Formula b) { return Formula::all_of({std::move(a), std::move(b)}); }
inline Formula operator||(Formula a, Formula b) { return Formula::any_of({std::move(a), std::move(b)}); }

std::set<Var> free_variables(const Formula& f);
bool is_sentence(const Formula& f);
std::string to_string(const Formula& f);

}  // namespace pia
