#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pia/closure.hpp"
#include "pia/differential.hpp"
#include "pia/emptiness.hpp"
#include "pia/errors.hpp"
#include "pia/fo2_automaton.hpp"
#include "pia/json_io.hpp"
#include "pia/regular.hpp"
#include "pia/run.hpp"

namespace {

using namespace pia;

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

Word word_arg(const std::string& text) { return text == "ε" ? Word{} : parse_word(text); }

std::string show(const Word& w) { return w.empty() ? "ε" : format_word(w); }

void emit(const io::Json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error("cannot write " + out);
  f << j.dump(2) << "\n";
}

Pia load_pia(const std::string& path) {
  Pia p = io::pia_from_json(io::read_file(path));
  require_valid(p);
  return p;
}

NormalForm load_nf(const std::string& path) { return io::normal_form_from_json(io::read_file(path)); }

std::map<Letter, Letter> parse_map(const std::vector<std::string>& pairs) {
  std::map<Letter, Letter> h;
  for (const auto& p : pairs) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw FormatError("bad mapping '" + p + "', expected from=to");
    h[p.substr(0, eq)] = p.substr(eq + 1);
  }
  return h;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pebble-intervals automata and FO2 data-word toolkit"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "Seed for randomized corpora");

  int code = kTrue;
  std::string automaton, word_text, out;

  auto* check = app.add_subcommand("check", "Membership of a word");
  check->add_option("automaton", automaton)->required();
  check->add_option("word", word_text, "Whitespace-separated letters; \"\" or ε for the empty word");
  check->callback([&] {
    const bool ok = accepts(load_pia(automaton), word_arg(word_text));
    std::cout << (ok ? "ACCEPT" : "REJECT") << "\n";
    code = ok ? kTrue : kFalse;
  });

  int max_len = 6;
  auto* enumerate = app.add_subcommand("enumerate", "Accepted words up to a length");
  enumerate->add_option("automaton", automaton)->required();
  enumerate->add_option("--max-len", max_len)->check(CLI::Range(0, 20));
  enumerate->callback([&] {
    const auto found = enumerate_accepted(load_pia(automaton), max_len);
    std::vector<Word> words(found.begin(), found.end());
    std::stable_sort(words.begin(), words.end(), [](const Word& a, const Word& b) { return a.size() < b.size(); });
    for (const auto& w : words) std::cout << show(w) << "\n";
  });

  auto* empty = app.add_subcommand("empty", "Emptiness with a witness");
  empty->add_option("automaton", automaton)->required();
  empty->callback([&] {
    const auto w = witness(load_pia(automaton));
    if (!w) {
      std::cout << "EMPTY\n";
      return;
    }
    std::cout << "NONEMPTY\nwitness: " << show(*w) << "\n";
    code = kFalse;
  });

  auto* wit = app.add_subcommand("witness", "A shortest-run accepted word");
  wit->add_option("automaton", automaton)->required();
  wit->callback([&] {
    const auto w = witness(load_pia(automaton));
    std::cout << (w ? show(*w) : "NONE") << "\n";
    code = w ? kTrue : kFalse;
  });

  std::string op_name;
  std::vector<std::string> inputs, mapping;
  auto* op = app.add_subcommand("op", "Closure constructions");
  op->add_option("operation", op_name, "union|concat|star|shuffle|shufflestar|subst")->required();
  op->add_option("inputs", inputs)->required();
  op->add_option("--map", mapping, "Letter mapping from=to for subst, repeated or comma-separated")->delimiter(',');
  op->add_option("-o,--output", out);
  op->callback([&] {
    std::vector<Pia> ps;
    for (const auto& f : inputs) ps.push_back(load_pia(f));
    auto need = [&](std::size_t n) {
      if (ps.size() != n) throw CLI::ValidationError(op_name + " takes " + std::to_string(n) + " automata");
    };
    Pia r;
    if (op_name == "union") need(2), r = union_of(ps[0], ps[1]);
    else if (op_name == "concat") need(2), r = concat(ps[0], ps[1]);
    else if (op_name == "shuffle") need(2), r = shuffle(ps[0], ps[1]);
    else if (op_name == "star") need(1), r = star(ps[0]);
    else if (op_name == "shufflestar" || op_name == "shuffle_star") need(1), r = shuffle_star(ps[0]);
    else if (op_name == "subst" || op_name == "substitute") need(1), r = substitute(ps[0], parse_map(mapping));
    else throw CLI::ValidationError("unknown operation " + op_name);
    emit(io::to_json(r), out);
  });

  auto* n2p = app.add_subcommand("nfa2pia", "NFA to unidirectional PIA");
  n2p->add_option("nfa", automaton)->required();
  n2p->add_option("-o,--output", out);
  n2p->callback([&] { emit(io::to_json(nfa_to_pia(io::nfa_from_json(io::read_file(automaton)))), out); });

  auto* p2n = app.add_subcommand("pia2nfa", "Unidirectional PIA to NFA");
  p2n->add_option("automaton", automaton)->required();
  p2n->add_option("-o,--output", out);
  p2n->callback([&] {
    const Pia p = load_pia(automaton);
    if (auto why = unidirectional_violation(p)) {
      std::cerr << "not unidirectional: " << *why << "\n";
      code = kFalse;
      return;
    }
    emit(io::to_json(pia_to_nfa(p)), out);
  });

  auto* fo2 = app.add_subcommand("fo2", "Normal-form sentences");
  fo2->require_subcommand(1);
  std::string nf_path;
  auto* sat = fo2->add_subcommand("sat", "Finite satisfiability");
  sat->add_option("sentence", nf_path)->required();
  sat->callback([&] {
    const auto r = satisfiable(load_nf(nf_path));
    if (r.satisfiable) {
      std::cout << "SAT\n";
      if (r.witness) std::cout << "witness: " << show(*r.witness) << "\n";
    } else {
      std::cout << "UNSAT\n";
    }
    code = r.satisfiable ? kTrue : kFalse;
  });
  auto* member = fo2->add_subcommand("member", "Membership in the projected language");
  member->add_option("sentence", nf_path)->required();
  member->add_option("word", word_text);
  member->callback([&] {
    const bool ok = projection_member(load_nf(nf_path), word_arg(word_text));
    std::cout << (ok ? "ACCEPT" : "REJECT") << "\n";
    code = ok ? kTrue : kFalse;
  });
  std::size_t cap = 5000;
  auto* exp = fo2->add_subcommand("export", "Reachable part of the automaton as a PIA");
  exp->add_option("sentence", nf_path)->required();
  exp->add_option("--cap", cap, "Reachable-state cap");
  exp->add_option("-o,--output", out);
  exp->callback([&] {
    const auto r = export_automaton(load_nf(nf_path), cap);
    io::Json j = io::to_json(r.pia);
    j["complete"] = r.complete;
    emit(j, out);
    if (!r.complete) std::cerr << "state cap " << cap << " reached; automaton is partial\n";
  });

  auto* oracle = app.add_subcommand("oracle", "Differential suites");
  oracle->require_subcommand(1);
  std::string suite = "all";
  int count = 50;
  int oracle_len = -1;
  auto* compare = oracle->add_subcommand("compare", "Run differential suites against brute-force oracles");
  compare->add_option("--suite", suite)->check(CLI::IsMember({"all", "emptiness", "closure", "regular", "fo2"}));
  compare->add_option("--count", count, "Random cases per suite")->check(CLI::PositiveNumber);
  compare->add_option("--max-len", oracle_len, "Word length bound (suite default when omitted)");
  compare->callback([&] {
    auto len = [&](int dflt) { return oracle_len >= 0 ? oracle_len : dflt; };
    std::vector<differential::SuiteReport> reps;
    if (suite == "all" || suite == "emptiness") reps.push_back(differential::compare_emptiness(seed, count, len(8)));
    if (suite == "all" || suite == "closure")
      reps.push_back(differential::compare_closure(seed, count, len(6), std::min(len(6), 6)));
    if (suite == "all" || suite == "regular") reps.push_back(differential::compare_regular(seed, count, len(10)));
    if (suite == "all" || suite == "fo2") reps.push_back(differential::compare_fo2(len(4)));
    for (const auto& r : reps) {
      std::cout << r.name << ": " << (r.ok() ? "PASS" : "FAIL") << " cases=" << r.cases << " checks=" << r.checks
                << "\n";
      for (std::size_t i = 0; i < r.mismatches.size() && i < 10; ++i) std::cout << "  " << r.mismatches[i] << "\n";
      if (!r.ok()) code = kFalse;
    }
  });

  std::string entry;
  auto* cat = app.add_subcommand("catalog", "Print a built-in automaton or sentence as JSON");
  cat->add_option("name", entry)->required();
  cat->add_option("-o,--output", out);
  cat->callback([&] {
    const auto j = io::catalog_entry(entry);
    if (!j) throw CLI::ValidationError("unknown catalog entry " + entry);
    emit(*j, out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kTrue : kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}
