#pragma once

#include <string>
#include <vector>

#include "pia/dataword.hpp"
#include "pia/fo2_logic.hpp"
#include "pia/pia.hpp"

// Hand-built automata and sentences used by tests, the CLI and fixtures.
namespace pia::catalog {

// Well-nested words over "[" "]".
Pia dyck();
// Two bracket kinds, each balanced on its own: "(" ")" "[" "]".
Pia two_brackets();
// a^n $ b^n # c^n, n >= 0.
Pia abc_counting();
// w $ w for nonempty w over "0" "1".
Pia copy_language();

bool is_dyck(const Word& w);
bool is_two_brackets(const Word& w);
bool is_abc_counting(const Word& w);
bool is_copy(const Word& w);

// Two letters ξ1, ξ2; every ξ1 has a later ξ2 one value up (θ1) or further
// up (θ3), every ξ2 an earlier ξ1 one value down (θ2) or further down (θ4),
// and all ξ2 share one value.
NormalForm running_example();
// The six-element model of it (elements a..f).
DataWord running_example_word();
// θ ids chosen per element of running_example_word().
std::vector<std::string> running_example_choice();

// One letter that always needs a later element of the same value; no
// nonempty model, and φ_ε = ∃x True.
NormalForm unsatisfiable_example();
// The same constraints with φ_ε = True: only the empty model.
NormalForm epsilon_only_example();
// a needs a b one value up, b needs an a one value down, all a share one
// value. Models need two value classes.
NormalForm two_classes_example();
// The running example with both letters projected to "σ".
NormalForm projected_example();

}  // namespace pia::catalog
