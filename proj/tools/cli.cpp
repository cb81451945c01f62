#include "cli.hpp"

#include "json_io.hpp"

#include "pbraid/closure.hpp"
#include "pbraid/desingularization.hpp"
#include "pbraid/error.hpp"
#include "pbraid/garside.hpp"
#include "pbraid/markov.hpp"
#include "pbraid/rewriting.hpp"
#include "pbraid/word.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <random>

namespace pbraid::cli {

namespace {

using nlohmann::json;

Word random_word(std::mt19937_64 &rng, int strands, std::size_t length, std::size_t max_pre) {
  std::uniform_int_distribution<int> index(1, strands - 1);
  std::uniform_int_distribution<int> kind(0, 2);
  std::vector<Letter> letters;
  std::size_t pres = 0;
  while (letters.size() < length) {
    auto k = static_cast<LetterKind>(kind(rng));
    if (k == LetterKind::Pre && pres == max_pre)
      continue;
    pres += k == LetterKind::Pre;
    letters.push_back({k, index(rng)});
  }
  return Word(strands, std::move(letters));
}

int selftest(int max_n, int trials, std::uint64_t seed, std::ostream &out) {
  bool ok = true;
  for (int n = 2; n <= max_n; ++n) {
    const auto relations = relation_set(n);
    std::size_t failures = 0;
    for (const auto &r : relations) {
      if (!equal_pm(r.lhs, r.rhs)) {
        ++failures;
        out << "FAIL " << tag_name(r.tag) << " n=" << n << ": " << render(r.lhs) << " = "
            << render(r.rhs) << "\n";
      }
    }
    out << "relations n=" << n << ": " << relations.size() - failures << "/" << relations.size()
        << " hold\n";
    ok = ok && failures == 0;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> strands(2, 4);
  std::uniform_int_distribution<std::size_t> length(0, 6);
  int passed = 0;
  for (int t = 0; t < trials; ++t) {
    const int n = strands(rng);
    const auto u = random_word(rng, n, length(rng), 3);
    const auto v = random_word(rng, n, length(rng), 3);
    const bool hom = eta(concat(u, v)) == ring_mul(eta(u), eta(v));
    const auto su = relabel(u, RelabelDirection::PseudoToSingular);
    const auto sv = relabel(v, RelabelDirection::PseudoToSingular);
    const bool flavor = equal_pm(u, v) == equal_pm(su, sv) &&
                        relabel(su, RelabelDirection::SingularToPseudo) == u;
    if (hom && flavor) {
      ++passed;
    } else {
      out << "FAIL random trial " << t << ": n=" << n << " u=\"" << render(u) << "\" v=\""
          << render(v) << "\"\n";
    }
  }
  out << "random trials: " << passed << "/" << trials << " hold (seed " << seed << ")\n";
  ok = ok && passed == trials;
  out << (ok ? "selftest passed\n" : "selftest FAILED\n");
  return ok ? kOk : kError;
}

std::string diagnostic(const std::exception &e) {
  if (dynamic_cast<const ParseError *>(&e))
    return std::string("error: parse: ") + e.what();
  if (dynamic_cast<const StrandMismatch *>(&e))
    return std::string("error: strand mismatch: ") + e.what();
  if (dynamic_cast<const PreCrossingError *>(&e))
    return std::string("error: pre-crossing: ") + e.what();
  if (dynamic_cast<const CapExceeded *>(&e))
    return std::string("error: cap exceeded: ") + e.what();
  if (dynamic_cast<const InvalidMove *>(&e))
    return std::string("error: invalid move: ") + e.what();
  return std::string("error: ") + e.what();
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Pseudo braid monoid toolkit: canonical forms, equality, Markov moves and "
               "closure invariants"};
  app.name("pbraid");
  app.require_subcommand(1);

  int strands = 0;
  bool as_json = false;
  std::size_t cap = ExpansionLimits{}.max_terms;
  std::string word_a, word_b;
  std::function<int()> action;

  auto add_strands = [&](CLI::App *cmd) {
    cmd->add_option("-n,--strands", strands, "Strand count")->required()->check(CLI::Range(2, Word::kMaxStrands));
  };

  // parse
  auto *parse_cmd = app.add_subcommand("parse", "Validate and canonically render a word");
  add_strands(parse_cmd);
  parse_cmd->add_option("WORD", word_a, "Word text")->required();
  bool keep_singular = false, reduce = false;
  std::string relabel_to;
  parse_cmd->add_flag("--singular", keep_singular, "Keep t<i> letters instead of reading them as p<i>");
  parse_cmd->add_option("--relabel", relabel_to, "Relabel crossing markers")
      ->check(CLI::IsMember({"pseudo", "singular"}));
  parse_cmd->add_flag("--reduce", reduce, "Cancel adjacent sigma pairs");
  parse_cmd->add_flag("--json", as_json, "JSON output");
  parse_cmd->callback([&] {
    action = [&] {
      auto w = parse(word_a, strands, keep_singular || relabel_to == "singular");
      if (relabel_to == "pseudo")
        w = relabel(w, RelabelDirection::SingularToPseudo);
      else if (relabel_to == "singular")
        w = relabel(w, RelabelDirection::PseudoToSingular);
      if (reduce)
        w = free_reduce(w);
      if (as_json) {
        const auto s = stats(w);
        out << json{{"strands", w.strands()},
                    {"word", render(w)},
                    {"sigma_exponent_sum", s.sigma_exponent_sum},
                    {"pre_count", s.pre_count},
                    {"permutation", underlying_permutation(w).images()}}
                   .dump()
            << "\n";
      } else {
        out << render(w) << "\n";
      }
      return kOk;
    };
  });

  // nf
  auto *nf_cmd = app.add_subcommand("nf", "Garside normal form of a classical braid word");
  add_strands(nf_cmd);
  nf_cmd->add_option("WORD", word_a, "Word text")->required();
  bool print_word = false;
  nf_cmd->add_flag("--word", print_word, "Also print a word spelling the normal form");
  nf_cmd->callback([&] {
    action = [&] {
      const auto nf = normal_form(parse(word_a, strands));
      out << serialize(nf) << "\n";
      if (print_word)
        out << render(nf_to_word(nf)) << "\n";
      return kOk;
    };
  });

  // eq
  auto *eq_cmd = app.add_subcommand("eq", "Decide equality in PM_n");
  add_strands(eq_cmd);
  eq_cmd->add_option("LHS", word_a, "Left word")->required();
  eq_cmd->add_option("RHS", word_b, "Right word")->required();
  eq_cmd->add_option("--cap", cap, "Term cap for the expansion");
  eq_cmd->add_flag("--json", as_json, "JSON output");
  eq_cmd->callback([&] {
    action = [&] {
      const auto u = parse(word_a, strands), v = parse(word_b, strands);
      const bool equal = equal_pm(u, v, ExpansionLimits{cap});
      if (as_json)
        out << json{{"strands", strands}, {"lhs", render(u)}, {"rhs", render(v)}, {"equal", equal}}
                   .dump()
            << "\n";
      else
        out << (equal ? "equal" : "unequal") << "\n";
      return equal ? kOk : kUnequal;
    };
  });

  // oracle-eq
  auto *oracle_cmd = app.add_subcommand("oracle-eq", "Bounded rewriting search for an equality proof");
  add_strands(oracle_cmd);
  oracle_cmd->add_option("LHS", word_a, "Left word")->required();
  oracle_cmd->add_option("RHS", word_b, "Right word")->required();
  int depth = 6;
  std::optional<std::size_t> maxlen;
  oracle_cmd->add_option("--depth", depth, "Rewrite budget")->check(CLI::NonNegativeNumber);
  oracle_cmd->add_option("--maxlen", maxlen, "Longest intermediate word (default: input length + 4)");
  oracle_cmd->callback([&] {
    action = [&] {
      const auto u = parse(word_a, strands), v = parse(word_b, strands);
      const auto limit = maxlen.value_or(std::max(u.size(), v.size()) + 4);
      const auto verdict = bfs_equal(u, v, depth, limit);
      out << (verdict == OracleVerdict::Equal ? "equal" : "unknown") << "\n";
      return verdict == OracleVerdict::Equal ? kOk : kUnknown;
    };
  });

  // eta
  auto *eta_cmd = app.add_subcommand("eta", "Image in the group ring Z[B_n]");
  add_strands(eta_cmd);
  eta_cmd->add_option("WORD", word_a, "Word text")->required();
  eta_cmd->add_option("--cap", cap, "Term cap for the expansion");
  eta_cmd->add_flag("--json", as_json, "JSON output");
  eta_cmd->callback([&] {
    action = [&] {
      const auto e = eta(parse(word_a, strands), ExpansionLimits{cap});
      if (as_json)
        out << to_json(e).dump() << "\n";
      else
        out << render(e);
      return kOk;
    };
  });

  // pm2
  auto *pm2_cmd = app.add_subcommand("pm2", "Canonical pair of a PM_2 word");
  add_strands(pm2_cmd);
  pm2_cmd->add_option("WORD", word_a, "Word text")->required();
  pm2_cmd->add_flag("--json", as_json, "JSON output");
  pm2_cmd->callback([&] {
    action = [&] {
      const auto f = pm2_canonical(parse(word_a, strands));
      if (as_json)
        out << json{{"sigma_exponent", f.sigma_exponent}, {"pre_count", f.pre_count}}.dump() << "\n";
      else
        out << f.sigma_exponent << " " << f.pre_count << "\n";
      return kOk;
    };
  });

  // markov
  auto *markov_cmd = app.add_subcommand("markov", "Markov moves");
  markov_cmd->require_subcommand(1);
  auto *apply_cmd = markov_cmd->add_subcommand("apply", "Apply moves in order");
  add_strands(apply_cmd);
  std::vector<std::string> move_specs;
  apply_cmd->add_option("WORD", word_a, "Word text")->required();
  apply_cmd->add_option("MOVES", move_specs, "Moves: M1:s1 M2:3 M3:+ M3:-d M4 M4:d");
  apply_cmd->add_flag("--json", as_json, "JSON output");
  apply_cmd->callback([&] {
    action = [&] {
      auto w = parse(word_a, strands);
      for (const auto &spec : move_specs)
        w = apply_move(w, parse_move(spec, w.strands()));
      if (as_json)
        out << json{{"strands", w.strands()}, {"word", render(w)}}.dump() << "\n";
      else
        out << "n=" << w.strands() << ": " << render(w) << "\n";
      return kOk;
    };
  });

  auto *search_cmd = markov_cmd->add_subcommand("search", "Bounded search for a move certificate");
  add_strands(search_cmd);
  int target_strands = 0;
  MarkovSearchOptions search;
  search_cmd->add_option("WORD", word_a, "Source word")->required();
  search_cmd->add_option("-m,--target-strands", target_strands, "Strand count of the target")
      ->required()
      ->check(CLI::Range(2, Word::kMaxStrands));
  search_cmd->add_option("TARGET", word_b, "Target word")->required();
  search_cmd->add_option("--budget", search.move_budget, "Maximum number of moves")
      ->check(CLI::NonNegativeNumber);
  search_cmd->add_option("--cap", search.size_cap, "Longest intermediate word");
  search_cmd->add_option("--max-states", search.max_states, "Explored-state limit");
  search_cmd->callback([&] {
    action = [&] {
      const auto from = parse(word_a, strands), to = parse(word_b, target_strands);
      const auto found = markov_search(from, to, search);
      if (!found) {
        out << "unknown\n";
        return kUnknown;
      }
      out << "found";
      for (const auto &m : *found)
        out << " " << render(m);
      out << "\n";
      return kOk;
    };
  });

  // closure
  auto *closure_cmd = app.add_subcommand("closure", "Closure invariants");
  closure_cmd->require_subcommand(1);
  auto *inv_cmd = closure_cmd->add_subcommand("inv", "Component count and linking profile (JSON)");
  add_strands(inv_cmd);
  std::size_t resolution_cap = kDefaultResolutionCap;
  inv_cmd->add_option("WORD", word_a, "Word text")->required();
  inv_cmd->add_option("--cap", resolution_cap, "Maximum number of pre-crossings");
  inv_cmd->callback([&] {
    action = [&] {
      const auto w = parse(word_a, strands);
      out << json{{"strands", w.strands()},
                  {"word", render(w)},
                  {"components", component_count(w)},
                  {"profile", to_json(linking_profile(w, resolution_cap))}}
                 .dump()
          << "\n";
      return kOk;
    };
  });

  // selftest
  auto *self_cmd = app.add_subcommand("selftest", "Check every defining relation and random identities");
  int max_n = 6, trials = 200;
  std::uint64_t seed = 1;
  self_cmd->add_option("--max-n", max_n, "Largest strand count for the relation suite")
      ->check(CLI::Range(2, 12));
  self_cmd->add_option("--trials", trials, "Random identity trials")->check(CLI::NonNegativeNumber);
  self_cmd->add_option("--seed", seed, "64-bit RNG seed");
  self_cmd->callback([&] { action = [&] { return selftest(max_n, trials, seed, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    err << "error: usage: " << e.what() << "\n";
    return kError;
  }

  try {
    return action ? action() : kError;
  } catch (const std::exception &e) {
    err << diagnostic(e) << "\n";
    return kError;
  }
}

} // namespace pbraid::cli
