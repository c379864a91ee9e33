#pragma once

#include <map>

#include "pia/pia.hpp"

namespace pia {

// All constructions take the union of the operand alphabets and emit only
// states reachable from the new initial state. Operand states keep their
// names behind a prefix ("L." / "R." for binary operations).

Pia union_of(const Pia& a, const Pia& b);

// One extra frontier pebble marks the first position of the right factor.
Pia concat(const Pia& a, const Pia& b);

// Blocks are delimited by two alternating frontier pebbles, so the result
// uses a.pebbles + 2 pebbles.
Pia star(const Pia& a);

Pia shuffle(const Pia& a, const Pia& b);

// Includes the empty word.
Pia shuffle_star(const Pia& a);

// Letter-to-letter relabelling. Throws PartialMap if h misses a letter.
Pia substitute(const Pia& a, const std::map<Letter, Letter>& h);

// Accepts exactly the empty word.
Pia epsilon_pia(std::vector<Letter> alphabet);

// Accepts exactly the given word, reading it left to right.
Pia word_pia(const Word& w, std::vector<Letter> alphabet = {});

}  // namespace pia
