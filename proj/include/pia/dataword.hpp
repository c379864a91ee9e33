#pragma once

#include <functional>
#include <vector>

#include "pia/formula.hpp"
#include "pia/pia.hpp"

namespace pia {

// Elements are 0-indexed in linear order; data values are normalized so that
// they cover 1..maxval without gaps.
class DataWord {
 public:
  DataWord() = default;
  // Normalizes values by rank. Throws FormatError on a length mismatch or a
  // non-positive value.
  DataWord(std::vector<Letter> letters, std::vector<int> values);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  const std::vector<int>& values() const { return values_; }
  const Letter& letter(std::size_t p) const { return letters_[p]; }
  int value(std::size_t p) const { return values_[p]; }
  int maxval() const;

  bool le2(std::size_t p, std::size_t q) const { return values_[p] <= values_[q]; }
  bool succ2(std::size_t p, std::size_t q) const { return values_[q] == values_[p] + 1; }

  bool operator==(const DataWord&) const = default;

 private:
  std::vector<Letter> letters_;
  std::vector<int> values_;
};

Word string_projection(const DataWord& d);

// Drops the elements carrying the maximal value.
DataWord trim(const DataWord& d);

// Tarskian evaluation. Throws FreeVariable unless f is a sentence.
bool model_check(const DataWord& d, const Formula& f);

// Evaluates a formula with free variables bound to elements (-1 = unbound).
bool evaluate(const DataWord& d, const Formula& f, int x, int y);

// Every data word with exactly n elements, up to renaming of values.
void for_each_dataword(const std::vector<Letter>& alphabet, int n, const std::function<void(const DataWord&)>& visit);

// Every surjective value map [n] -> [k], for some k, in lexicographic order.
std::vector<std::vector<int>> value_patterns(int n);

std::vector<DataWord> enumerate_datawords(const std::vector<Letter>& alphabet, int max_n);

}  // namespace pia
