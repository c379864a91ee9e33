#pragma once

#include <optional>

#include "pia/pia.hpp"
#include "pia/search.hpp"

namespace pia {

bool is_empty(const Pia& pia);

// A shortest-run accepted word, or nothing when the language is empty.
std::optional<Word> witness(const Pia& pia);

// Full report including explored node count and witness depth.
EmptinessReport emptiness_report(const Pia& pia);

// |Q| * sum_{k<=m} C(m,k) * k!, the number of (state, arrangement) pairs.
unsigned long long arrangement_node_bound(std::size_t states, int pebbles);

}  // namespace pia
