#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pia/dataword.hpp"
#include "pia/formula.hpp"

namespace pia {

// How the data value of y relates to that of x.
enum class ValueRel : std::uint8_t {
  XSuccY,   // S2(x,y)
  XBelowY,  // x strictly below y, not its successor
  Equal,    // x ~2 y
  YSuccX,   // S2(y,x)
  YBelowX,
};

// 2-type of a pair of distinct elements. Letters index the sentence alphabet.
struct TwoType {
  int x_letter = 0;
  int y_letter = 0;
  bool x_first = true;  // x <1 y
  ValueRel rel = ValueRel::Equal;

  auto operator<=>(const TwoType&) const = default;
};

// The same pair seen from the other side: θ(y,x).
TwoType swapped(const TwoType& t);

// Basis atoms over distinct pairs.
enum class Atom : std::uint8_t { XLt1Y, YLt1X, XLe2Y, YLe2X, S2XY, S2YX };
inline constexpr Atom kAtoms[] = {Atom::XLt1Y, Atom::YLt1X, Atom::XLe2Y, Atom::YLe2X, Atom::S2XY, Atom::S2YX};
std::string atom_tag(Atom a);
bool holds(const TwoType& t, Atom a);

// All 10 * |letters|^2 consistent 2-types.
std::vector<TwoType> all_two_types(int letters);

// The 2-type realized by elements p != q of d; letters looked up in `alphabet`.
TwoType two_type_of(const DataWord& d, std::size_t p, std::size_t q, const std::vector<Letter>& alphabet);

// Signed literal tags: positive order and preorder atoms, then negated ones,
// then the two letter atoms.
std::vector<std::string> literals(const TwoType& t, const std::vector<Letter>& alphabet);

// Conjunction of the signed literals, as a formula in x and y.
Formula to_formula(const TwoType& t, const std::vector<Letter>& alphabet);

// Consistent 2-types that satisfy a quantifier-free formula in x and y.
// Equality atoms are false since 2-types describe distinct pairs.
std::vector<TwoType> expand_to_two_types(const Formula& qf, const std::vector<Letter>& alphabet);

// A data word with at most three elements in which elements x and y realize t.
struct Realization {
  DataWord word;
  std::size_t x = 0;
  std::size_t y = 1;
};
Realization realize(const TwoType& t, const std::vector<Letter>& alphabet);

// A literal list read as a 2-type. When several types match, the one with the
// fewest positive atoms wins (atoms left out count as negated). Throws
// FormatError for unknown tags, contradictions or ties.
TwoType parse_two_type(const std::vector<std::string>& tags, const std::vector<Letter>& alphabet);

struct ExistsEntry {
  int a = 1, b = 1, c = 1;  // 1-based as in θ_abc
  std::string id;
  TwoType type;
  bool operator==(const ExistsEntry&) const = default;
};

struct NormalForm {
  std::vector<Letter> letters;      // Ξ
  int B = 1;
  int C = 1;
  std::vector<ExistsEntry> exists;  // θ_abc table
  std::vector<TwoType> forall;      // Θ_∀
  bool epsilon = true;              // φ_ε is True (otherwise ∃x True)
  std::map<Letter, Letter> projection;  // h; empty means identity

  bool operator==(const NormalForm&) const = default;
};

// Problems with the table: missing or duplicate (a,b,c), wrong x-letter, etc.
std::vector<std::string> validate(const NormalForm& nf);

// A set of tasks realizing witness type set `omega`: each θ of the set is
// either completed (bit set) or promised.
struct TaskSet {
  int omega = 0;
  std::uint64_t completed = 0;  // bits over Θ_∃, subset of the omega's set
  auto operator<=>(const TaskSet&) const = default;
};

enum class Layer : std::uint8_t { Top1, Top2, Rest };
std::string to_string(Layer h);

struct GammaLetter {
  Layer layer = Layer::Top1;
  TaskSet tasks;
  auto operator<=>(const GammaLetter&) const = default;
};

using GammaString = std::vector<GammaLetter>;

// Derived tables of a validated normal form.
class Sentence {
 public:
  struct Omega {
    int letter;           // index into Ξ
    std::uint64_t types;  // bits over Θ_∃
  };

  // Throws FormatError when validate() reports problems or B = 0.
  explicit Sentence(NormalForm nf);

  const NormalForm& form() const { return nf_; }
  const std::vector<Letter>& letters() const { return nf_.letters; }
  int letter_index(const Letter& l) const;

  // Θ_∃ without duplicates, in table order.
  const std::vector<TwoType>& exists_types() const { return exists_; }
  const std::string& exists_id(int theta) const { return exists_ids_[theta]; }
  int exists_index(const TwoType& t) const;  // -1 when absent

  const std::vector<Omega>& omegas() const { return omegas_; }
  // Ω_a for letter index a.
  std::vector<int> omegas_of(int letter) const;
  int omega_letter(int omega) const { return omegas_[omega].letter; }
  int omega_index(std::uint64_t types) const;  // -1 when absent

  bool allowed(const TwoType& t) const;  // t ∈ Θ_∀

  // All Ω-realizations, completed ones, promised ones.
  std::vector<TaskSet> task_sets() const;
  bool is_completed(const TaskSet& ts) const { return ts.completed == omegas_[ts.omega].types; }
  TaskSet promised(int omega) const { return {omega, 0}; }

  int letter_of(const GammaLetter& g) const { return omegas_[g.tasks.omega].letter; }

  // The sentence φ as a formula, for model checking.
  Formula formula() const;

 private:
  NormalForm nf_;
  std::vector<TwoType> exists_;
  std::vector<std::string> exists_ids_;
  std::vector<Omega> omegas_;
  std::vector<TwoType> forall_sorted_;
};

// Ω_a per letter, as sets of θ ids; valid for any B including 0.
std::vector<std::vector<std::vector<std::string>>> witness_type_sets(const NormalForm& nf);

// Table-driven perf formula. Throws NeitherTop unless a letter is in the top layer.
Formula perf(const Sentence& s, const GammaLetter& alpha, const GammaLetter& beta);
TwoType perf_two_type(const Sentence& s, const GammaLetter& alpha, const GammaLetter& beta);

bool is_perfect_string(const Sentence& s, const GammaString& w);

std::string to_string(const Sentence& s, const TaskSet& ts);
std::string to_string(const Sentence& s, const GammaLetter& g);
std::string to_string(const Sentence& s, const GammaString& w);

}  // namespace pia
