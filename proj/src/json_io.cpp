#include "pia/json_io.hpp"

#include <fstream>
#include <sstream>

#include "pia/catalog.hpp"
#include "pia/errors.hpp"

namespace pia::io {

namespace {

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("field '") + key + "': " + e.what());
  }
}

Json anchor_json(Anchor a) {
  if (a.is_left_end()) return "▷";
  if (a.is_right_end()) return "◁";
  return a.pebble_index();
}

Anchor anchor_from(const Json& j, bool left) {
  if (j.is_number_integer()) return Anchor::pebble(j.get<int>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (left && (s == "▷" || s == "|>" || s == "left")) return Anchor::left_end();
    if (!left && (s == "◁" || s == "<|" || s == "right")) return Anchor::right_end();
  }
  throw FormatError("bad interval endpoint " + j.dump());
}

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse(buf.str());
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

Json to_json(const Pia& p) {
  Json ts = Json::array();
  for (const auto& t : p.transitions) {
    if (t.is_silent()) {
      ts.push_back({{"kind", "silent"}, {"from", t.from}, {"to", t.to}});
    } else {
      ts.push_back({{"kind", "move"},
                    {"from", t.from},
                    {"pebble", t.move->pebble},
                    {"left", anchor_json(t.move->left)},
                    {"right", anchor_json(t.move->right)},
                    {"letter", t.letter},
                    {"to", t.to}});
    }
  }
  return {{"alphabet", p.alphabet}, {"pebbles", p.pebbles}, {"states", p.states},
          {"initial", p.initial},   {"accepting", p.accepting}, {"transitions", ts}};
}

Pia pia_from_json(const Json& j) {
  Pia p;
  p.alphabet = field<std::vector<Letter>>(j, "alphabet");
  p.pebbles = field<int>(j, "pebbles");
  p.states = field<std::vector<StateName>>(j, "states");
  p.initial = field<StateName>(j, "initial");
  p.accepting = field<std::vector<StateName>>(j, "accepting");
  for (const auto& t : field<Json>(j, "transitions")) {
    const auto kind = field<std::string>(t, "kind");
    if (kind == "silent") {
      p.transitions.push_back(Transition::silent(field<StateName>(t, "from"), field<StateName>(t, "to")));
    } else if (kind == "move") {
      MoveSpec m{field<int>(t, "pebble"), anchor_from(field<Json>(t, "left"), true),
                 anchor_from(field<Json>(t, "right"), false)};
      p.transitions.push_back(
          Transition::make_move(field<StateName>(t, "from"), m, field<Letter>(t, "letter"), field<StateName>(t, "to")));
    } else {
      throw FormatError("unknown transition kind '" + kind + "'");
    }
  }
  return p;
}

Json to_json(const Nfa& n) {
  Json ts = Json::array();
  for (const auto& t : n.transitions)
    ts.push_back({{"from", t.from}, {"letter", t.letter ? Json(*t.letter) : Json(nullptr)}, {"to", t.to}});
  return {{"alphabet", n.alphabet}, {"states", n.states},       {"initial", n.initial},
          {"accepting", n.accepting}, {"transitions", ts}};
}

Nfa nfa_from_json(const Json& j) {
  Nfa n;
  n.alphabet = field<std::vector<Letter>>(j, "alphabet");
  n.states = field<std::vector<StateName>>(j, "states");
  n.initial = field<StateName>(j, "initial");
  n.accepting = field<std::vector<StateName>>(j, "accepting");
  for (const auto& t : field<Json>(j, "transitions")) {
    NfaTransition nt{field<StateName>(t, "from"), std::nullopt, field<StateName>(t, "to")};
    if (t.contains("letter") && !t.at("letter").is_null()) nt.letter = field<Letter>(t, "letter");
    n.transitions.push_back(std::move(nt));
  }
  return n;
}

Json to_json(const DataWord& d) { return {{"letters", d.letters()}, {"values", d.values()}}; }

DataWord dataword_from_json(const Json& j) {
  return DataWord(field<std::vector<Letter>>(j, "letters"), field<std::vector<int>>(j, "values"));
}

namespace {

Var var_of(char c) {
  if (c == 'x') return Var::X;
  if (c == 'y') return Var::Y;
  throw FormatError(std::string("unknown variable '") + c + "'");
}

Formula atom_from(const std::string& s) {
  // a<1b, a<=1b, a<=2b, a~2b, a=b, S2(a,b), name(a)
  if (s.size() == 4 && s.substr(1, 2) == "<1") return Formula::lt1(var_of(s[0]), var_of(s[3]));
  if (s.size() == 5 && s.substr(1, 3) == "<=1") return Formula::le1(var_of(s[0]), var_of(s[4]));
  if (s.size() == 5 && s.substr(1, 3) == "<=2") return Formula::le2(var_of(s[0]), var_of(s[4]));
  if (s.size() == 4 && s.substr(1, 2) == "~2") return Formula::sim2(var_of(s[0]), var_of(s[3]));
  if (s.size() == 3 && s[1] == '=') return Formula::eq(var_of(s[0]), var_of(s[2]));
  if (s.size() == 7 && s.starts_with("S2(") && s[4] == ',' && s[6] == ')')
    return Formula::succ2(var_of(s[3]), var_of(s[5]));
  if (s.size() > 3 && s.ends_with(")") && s[s.size() - 3] == '(')
    return Formula::letter(s.substr(0, s.size() - 3), var_of(s[s.size() - 2]));
  throw FormatError("unknown atom '" + s + "'");
}

std::string atom_text(const Formula& f) {
  const std::string a = to_string(f.left()), b = to_string(f.right());
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Lt1: return a + "<1" + b;
    case K::Le1: return a + "<=1" + b;
    case K::Le2: return a + "<=2" + b;
    case K::Succ2: return "S2(" + a + "," + b + ")";
    case K::Eq: return a + "=" + b;
    case K::Letter: return f.letter_name() + "(" + a + ")";
    default: return {};
  }
}

std::vector<std::string> tags_of(const TwoType& t, const std::vector<Letter>& letters) { return literals(t, letters); }

}  // namespace

Json to_json(const Formula& f) {
  using K = Formula::Kind;
  auto kids = [&] {
    Json out = Json::array();
    for (const auto& g : f.children()) out.push_back(to_json(g));
    return out;
  };
  switch (f.kind()) {
    case K::True: return true;
    case K::False: return false;
    case K::Not: return {{"not", to_json(f.children().front())}};
    case K::And: return {{"and", kids()}};
    case K::Or: return {{"or", kids()}};
    case K::Implies: return {{"implies", kids()}};
    case K::Exists: return {{"exists", to_string(f.bound())}, {"body", to_json(f.children().front())}};
    case K::Forall: return {{"forall", to_string(f.bound())}, {"body", to_json(f.children().front())}};
    default: return atom_text(f);
  }
}

Formula formula_from_json(const Json& j) {
  if (j.is_boolean()) return j.get<bool>() ? Formula::truth() : Formula::falsity();
  if (j.is_string()) return atom_from(j.get<std::string>());
  if (!j.is_object()) throw FormatError("bad formula " + j.dump());
  auto list = [&](const char* key) {
    std::vector<Formula> out;
    for (const auto& g : field<Json>(j, key)) out.push_back(formula_from_json(g));
    return out;
  };
  if (j.contains("not")) return !formula_from_json(j.at("not"));
  if (j.contains("and")) {
    auto parts = list("and");
    return parts.empty() ? Formula::truth() : Formula::all_of(std::move(parts));
  }
  if (j.contains("or")) {
    auto parts = list("or");
    return parts.empty() ? Formula::falsity() : Formula::any_of(std::move(parts));
  }
  if (j.contains("implies")) {
    auto parts = list("implies");
    if (parts.size() != 2) throw FormatError("'implies' takes two formulas");
    return Formula::implies(std::move(parts[0]), std::move(parts[1]));
  }
  for (const char* q : {"exists", "forall"})
    if (j.contains(q)) {
      const auto v = field<std::string>(j, q);
      if (v.size() != 1) throw FormatError("bad variable '" + v + "'");
      Formula body = formula_from_json(field<Json>(j, "body"));
      return std::string(q) == "exists" ? Formula::exists(var_of(v[0]), std::move(body))
                                        : Formula::forall(var_of(v[0]), std::move(body));
    }
  throw FormatError("bad formula " + j.dump());
}

Json to_json(const NormalForm& nf) {
  Json ex = Json::array();
  for (const auto& e : nf.exists)
    ex.push_back({{"a", e.a}, {"b", e.b}, {"c", e.c}, {"id", e.id}, {"type", tags_of(e.type, nf.letters)}});
  Json types = Json::array();
  for (const auto& t : nf.forall) types.push_back(tags_of(t, nf.letters));
  Json out = {{"letters", nf.letters}, {"B", nf.B},
              {"C", nf.C},             {"exists", ex},
              {"forall", {{"types", types}}}, {"epsilon", nf.epsilon}};
  if (!nf.projection.empty()) out["projection"] = nf.projection;
  return out;
}

NormalForm normal_form_from_json(const Json& j) {
  NormalForm nf;
  nf.letters = field<std::vector<Letter>>(j, "letters");
  nf.B = field<int>(j, "B");
  nf.C = field<int>(j, "C");
  for (const auto& e : field<Json>(j, "exists")) {
    ExistsEntry entry{field<int>(e, "a"), field<int>(e, "b"), field<int>(e, "c"), {}, {}};
    if (e.contains("id")) entry.id = field<std::string>(e, "id");
    entry.type = parse_two_type(field<std::vector<std::string>>(e, "type"), nf.letters);
    nf.exists.push_back(std::move(entry));
  }
  const Json fa = field<Json>(j, "forall");
  if (fa.contains("formula")) {
    nf.forall = expand_to_two_types(formula_from_json(fa.at("formula")), nf.letters);
  } else {
    for (const auto& t : field<Json>(fa, "types"))
      nf.forall.push_back(parse_two_type(t.get<std::vector<std::string>>(), nf.letters));
  }
  nf.epsilon = field<bool>(j, "epsilon");
  if (j.contains("projection")) nf.projection = field<std::map<Letter, Letter>>(j, "projection");
  const auto problems = validate(nf);
  if (!problems.empty()) throw FormatError("normal form: " + problems.front());
  return nf;
}

Json to_json(const Sentence& s, const GammaString& w) {
  Json out = Json::array();
  for (const auto& g : w) {
    Json tasks = Json::object();
    const auto types = s.omegas()[g.tasks.omega].types;
    for (int t = 0; t < static_cast<int>(s.exists_types().size()); ++t)
      if ((types >> t) & 1U) tasks[s.exists_id(t)] = ((g.tasks.completed >> t) & 1U) ? "C" : "P";
    out.push_back({{"layer", to_string(g.layer)}, {"tasks", tasks}});
  }
  return out;
}

GammaString gamma_string_from_json(const Sentence& s, const Json& j) {
  GammaString out;
  for (const auto& g : j) {
    GammaLetter letter;
    const auto layer = field<std::string>(g, "layer");
    if (layer == "1top") letter.layer = Layer::Top1;
    else if (layer == "2top") letter.layer = Layer::Top2;
    else if (layer == "rest") letter.layer = Layer::Rest;
    else throw FormatError("unknown layer '" + layer + "'");
    std::uint64_t types = 0, completed = 0;
    const auto tasks = field<Json>(g, "tasks");
    for (const auto& [id, mark] : tasks.items()) {
      int t = -1;
      for (int i = 0; i < static_cast<int>(s.exists_types().size()); ++i)
        if (s.exists_id(i) == id) t = i;
      if (t < 0) throw FormatError("unknown task '" + id + "'");
      types |= std::uint64_t{1} << t;
      if (mark == "C") completed |= std::uint64_t{1} << t;
      else if (mark != "P") throw FormatError("task mark must be P or C");
    }
    letter.tasks.omega = s.omega_index(types);
    if (letter.tasks.omega < 0) throw FormatError("task set does not realize a witness type set");
    letter.tasks.completed = completed;
    out.push_back(letter);
  }
  return out;
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"dyck",          "two_brackets",         "abc_counting",
                                              "copy",          "running_example",      "running_example_word",
                                              "unsatisfiable", "epsilon_only",         "two_classes",
                                              "projected"};
  return names;
}

std::optional<Json> catalog_entry(const std::string& name) {
  if (name == "dyck") return to_json(catalog::dyck());
  if (name == "two_brackets") return to_json(catalog::two_brackets());
  if (name == "abc_counting") return to_json(catalog::abc_counting());
  if (name == "copy") return to_json(catalog::copy_language());
  if (name == "running_example") return to_json(catalog::running_example());
  if (name == "running_example_word") return to_json(catalog::running_example_word());
  if (name == "unsatisfiable") return to_json(catalog::unsatisfiable_example());
  if (name == "epsilon_only") return to_json(catalog::epsilon_only_example());
  if (name == "two_classes") return to_json(catalog::two_classes_example());
  if (name == "projected") return to_json(catalog::projected_example());
  return std::nullopt;
}

}  // namespace pia::io
