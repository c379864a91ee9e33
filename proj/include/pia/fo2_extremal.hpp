#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pia/dataword.hpp"
#include "pia/fo2_logic.hpp"

namespace pia {

// A data word annotated with one task set per element.
struct TaskWord {
  DataWord data;
  std::vector<TaskSet> tasks;
  bool operator==(const TaskWord&) const = default;
};

// Marks computed from the data word; nullopt when some chosen Ω entry does
// not belong to the element's letter.
std::optional<TaskWord> make_task_word(const Sentence& s, const DataWord& d, const std::vector<int>& omegas);

// Drops the top value class and recomputes the marks.
TaskWord trim_task_word(const Sentence& s, const TaskWord& t);

// Every task completed, and φ_ε holds when the word is empty.
bool is_completed(const Sentence& s, const TaskWord& t);

// Every trimming has a perfect abstraction.
bool is_perfect(const Sentence& s, const TaskWord& t);

GammaString abst(const TaskWord& t);

// 1-based extremal positions in increasing order.
std::vector<std::size_t> ext_positions(const Sentence& s, const GammaString& w);
GammaString ext(const Sentence& s, const GammaString& w);
bool is_extremal(const Sentence& s, const GammaString& w);
bool is_completed(const Sentence& s, const GammaString& w);

GammaString down(const GammaString& w);

// r interleaved into down(s0) at the 1-based positions g, with completed
// tasks upgraded. Throws NonMonotoneG when g is not strictly increasing or
// leaves [|r|+|s0|].
GammaString rcon(const Sentence& s, const GammaString& r, const std::vector<std::size_t>& g, const GammaString& s0);

struct Successor {
  GammaString r;
  std::vector<std::size_t> g;
  GammaString s1;
  // emb[ℓ-1] is the s0 position of s1 position ℓ, or 0 on top positions.
  std::vector<std::size_t> emb;
};

// Every distinct (s1, emb) with s1 = ext(rcon(r, g, s0)) and |r| <= max_r.
// r is nonempty unless s0 is empty. Only r whose letters are all extremal are
// tried; other ones give no new (s1, emb). With require_perfect, only
// perfect rcon strings are kept.
std::vector<Successor> successors(const Sentence& s, const GammaString& s0, std::size_t max_r,
                                  bool require_perfect = true);

// Some (r, g) with s1 = ext(rcon(r, g, s0)) and every r letter kept by ext.
struct Witness {
  GammaString r;
  std::vector<std::size_t> g;
};
std::optional<Witness> consecutive(const Sentence& s, const GammaString& s0, const GammaString& s1);

// Throws NotConsecutive unless s1 = ext(rcon(r, g, s0)).
std::vector<std::size_t> partial_embedding(const Sentence& s, const GammaString& s0, const GammaString& s1,
                                           const GammaString& r, const std::vector<std::size_t>& g);

// Letters whose insertion before position ℓ (1-based) leaves ext(w) unchanged.
std::vector<GammaLetter> gamma_notext(const Sentence& s, const GammaString& w, std::size_t ell);

// Upper bound on extremal string length: 7 |Θ_∃|.
std::size_t ext_bound(const Sentence& s);

}  // namespace pia
