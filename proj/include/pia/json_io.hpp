#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "pia/dataword.hpp"
#include "pia/fo2_logic.hpp"
#include "pia/formula.hpp"
#include "pia/pia.hpp"
#include "pia/regular.hpp"

// JSON encodings of the public types. Readers throw FormatError with the
// offending field (and line/column for syntax errors).
namespace pia::io {

using Json = nlohmann::json;

Json parse(const std::string& text);
Json read_file(const std::string& path);

Json to_json(const Pia& p);
Pia pia_from_json(const Json& j);

Json to_json(const Nfa& n);
Nfa nfa_from_json(const Json& j);

Json to_json(const DataWord& d);
DataWord dataword_from_json(const Json& j);

Json to_json(const Formula& f);
Formula formula_from_json(const Json& j);

Json to_json(const NormalForm& nf);
NormalForm normal_form_from_json(const Json& j);

Json to_json(const Sentence& s, const GammaString& w);
GammaString gamma_string_from_json(const Sentence& s, const Json& j);

// Built-in automata, sentences and data words by name.
const std::vector<std::string>& catalog_names();
std::optional<Json> catalog_entry(const std::string& name);

}  // namespace pia::io
