#include "pbraid/markov.hpp"

#include "pbraid/error.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <unordered_set>

namespace pbraid {

namespace {

bool uses_index(std::span<const Letter> letters, int index) {
  return std::any_of(letters.begin(), letters.end(),
                     [index](Letter l) { return l.index == index; });
}

std::optional<std::string> destab_violation(const Word &beta, Letter expected) {
  if (beta.strands() < 3)
    return "cannot destabilize a word on " + std::to_string(beta.strands()) + " strands";
  if (beta.empty() || beta[beta.size() - 1] != expected)
    return "destabilization needs the word to end with " + render(expected);
  if (uses_index(beta.letters().first(beta.size() - 1), expected.index))
    return "destabilization needs index " + std::to_string(expected.index) +
           " to occur only in the final letter";
  return std::nullopt;
}

Word drop_last(const Word &beta) {
  auto letters = beta.letters();
  return Word(beta.strands() - 1, {letters.begin(), letters.end() - 1});
}

Word append_on_new_strand(const Word &beta, Letter l) {
  std::vector<Letter> letters(beta.begin(), beta.end());
  letters.push_back(l);
  return Word(beta.strands() + 1, std::move(letters));
}

struct SearchKey {
  int strands;
  std::vector<Letter> letters;
  friend bool operator==(const SearchKey &, const SearchKey &) = default;
};

struct SearchKeyHash {
  std::size_t operator()(const SearchKey &k) const {
    std::size_t h = static_cast<std::size_t>(k.strands);
    for (const auto &l : k.letters)
      h = h * 1000003u ^ (static_cast<std::size_t>(l.index) * 4 + static_cast<std::size_t>(l.kind));
    return h;
  }
};

// Fewest stabilization-type moves that could still reconcile strand count,
// pre-crossing count and exponent sum with the target.
int stabilization_lower_bound(const Word &w, const WordStats &s, const Word &target,
                              const WordStats &t) {
  const int dn = std::abs(w.strands() - target.strands());
  const int dp = static_cast<int>(s.pre_count > t.pre_count ? s.pre_count - t.pre_count
                                                             : t.pre_count - s.pre_count);
  const int de = static_cast<int>(std::labs(s.sigma_exponent_sum - t.sigma_exponent_sum));
  int h = std::max(dn, dp + de);
  if ((h - dn) % 2 != 0)
    ++h;
  return h;
}

} // namespace

Word inverse(const Word &a) {
  std::vector<Letter> letters;
  letters.reserve(a.size());
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) {
    if (is_crossing_marker(*it))
      throw PreCrossingError("pre-crossing " + render(*it) + " has no inverse in PM_n");
    letters.push_back(it->kind == LetterKind::SigmaPos ? sigma_inv(it->index) : sigma(it->index));
  }
  return Word(a.strands(), std::move(letters));
}

std::optional<std::string> move_violation(const Word &beta, const MarkovMove &m) {
  if (const auto *c = std::get_if<Conjugation>(&m)) {
    if (c->conjugator.strands() != beta.strands())
      return "conjugator lives on " + std::to_string(c->conjugator.strands()) +
             " strands, word on " + std::to_string(beta.strands());
    if (!is_classical(c->conjugator))
      return std::string("conjugator must be a classical braid");
    return std::nullopt;
  }
  if (const auto *s = std::get_if<CyclicShift>(&m)) {
    if (s->split > beta.size())
      return "split " + std::to_string(s->split) + " outside [0, " + std::to_string(beta.size()) +
             "]";
    return std::nullopt;
  }
  if (const auto *s = std::get_if<SigmaStabilization>(&m)) {
    if (s->sign != 1 && s->sign != -1)
      return std::string("M3 sign must be +1 or -1");
    if (s->direction == StabDirection::Stabilize)
      return beta.strands() < Word::kMaxStrands
                 ? std::nullopt
                 : std::optional<std::string>("strand limit reached");
    const int i = beta.strands() - 1;
    return destab_violation(beta, s->sign > 0 ? sigma(i) : sigma_inv(i));
  }
  const auto &p = std::get<PreStabilization>(m);
  if (p.direction == StabDirection::Stabilize)
    return beta.strands() < Word::kMaxStrands ? std::nullopt
                                              : std::optional<std::string>("strand limit reached");
  return destab_violation(beta, pre(beta.strands() - 1));
}

Word apply_move(const Word &beta, const MarkovMove &m) {
  if (auto why = move_violation(beta, m))
    throw InvalidMove(render(m) + ": " + *why);

  if (const auto *c = std::get_if<Conjugation>(&m))
    return concat(concat(inverse(c->conjugator), beta), c->conjugator);
  if (const auto *s = std::get_if<CyclicShift>(&m)) {
    std::vector<Letter> letters(beta.begin(), beta.end());
    std::rotate(letters.begin(), letters.begin() + static_cast<long>(s->split), letters.end());
    return Word(beta.strands(), std::move(letters));
  }
  if (const auto *s = std::get_if<SigmaStabilization>(&m)) {
    if (s->direction == StabDirection::Destabilize)
      return drop_last(beta);
    const int i = beta.strands();
    return append_on_new_strand(beta, s->sign > 0 ? sigma(i) : sigma_inv(i));
  }
  if (std::get<PreStabilization>(m).direction == StabDirection::Destabilize)
    return drop_last(beta);
  return append_on_new_strand(beta, pre(beta.strands()));
}

Word apply_moves(const Word &beta, const std::vector<MarkovMove> &moves) {
  Word w = beta;
  for (const auto &m : moves)
    w = apply_move(w, m);
  return w;
}

MarkovMove parse_move(std::string_view spec, int strands) {
  auto fail = [&]() -> ParseError {
    return ParseError("malformed move '" + std::string(spec) + "'");
  };
  if (spec.size() < 2 || spec[0] != 'M')
    throw fail();
  const char kind = spec[1];
  std::string_view arg;
  if (spec.size() > 2) {
    if (spec[2] != ':')
      throw fail();
    arg = spec.substr(3);
  }

  switch (kind) {
  case '1': {
    std::string text(arg);
    std::replace(text.begin(), text.end(), ',', ' ');
    return Conjugation{parse(text, strands)};
  }
  case '2': {
    std::size_t split = 0;
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), split);
    if (arg.empty() || ec != std::errc{} || ptr != arg.data() + arg.size())
      throw fail();
    return CyclicShift{split};
  }
  case '3': {
    if (arg == "+" || arg == "-")
      return SigmaStabilization{arg == "+" ? 1 : -1, StabDirection::Stabilize};
    if (arg == "+d" || arg == "-d")
      return SigmaStabilization{arg == "+d" ? 1 : -1, StabDirection::Destabilize};
    throw fail();
  }
  case '4':
    if (spec.size() == 2)
      return PreStabilization{StabDirection::Stabilize};
    if (arg == "d")
      return PreStabilization{StabDirection::Destabilize};
    throw fail();
  default:
    throw fail();
  }
}

std::string render(const MarkovMove &m) {
  if (const auto *c = std::get_if<Conjugation>(&m)) {
    std::string text = render(c->conjugator);
    std::replace(text.begin(), text.end(), ' ', ',');
    return "M1:" + text;
  }
  if (const auto *s = std::get_if<CyclicShift>(&m))
    return "M2:" + std::to_string(s->split);
  if (const auto *s = std::get_if<SigmaStabilization>(&m))
    return std::string("M3:") + (s->sign > 0 ? "+" : "-") +
           (s->direction == StabDirection::Destabilize ? "d" : "");
  return std::get<PreStabilization>(m).direction == StabDirection::Destabilize ? "M4:d" : "M4";
}

std::optional<std::vector<MarkovMove>> markov_search(const Word &from, const Word &to,
                                                     const MarkovSearchOptions &options) {
  struct Node {
    Word word;
    std::size_t parent;
    MarkovMove move;
    int depth;
  };

  const auto target_stats = stats(to);
  const auto target_perm = underlying_permutation(to);
  const int max_strands =
      std::min(std::max(from.strands(), to.strands()) + std::max(options.move_budget, 0),
               Word::kMaxStrands);

  auto is_goal = [&](const Word &w, const WordStats &s) {
    return w.strands() == to.strands() && s == target_stats &&
           underlying_permutation(w) == target_perm && equal_pm(w, to, options.expansion);
  };

  std::vector<Node> nodes;
  auto certificate = [&](std::size_t k) {
    std::vector<MarkovMove> moves;
    for (; k != 0; k = nodes[k].parent)
      moves.push_back(nodes[k].move);
    std::reverse(moves.begin(), moves.end());
    return moves;
  };

  if (is_goal(from, stats(from)))
    return std::vector<MarkovMove>{};

  std::unordered_set<SearchKey, SearchKeyHash> visited;
  auto key_of = [](const Word &w) {
    return SearchKey{w.strands(), std::vector<Letter>(w.begin(), w.end())};
  };
  visited.insert(key_of(from));
  nodes.push_back({from, 0, CyclicShift{0}, 0});

  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (nodes[k].depth >= options.move_budget)
      break;
    const Word current = nodes[k].word;
    const int depth = nodes[k].depth + 1;
    const int remaining = options.move_budget - depth;

    std::vector<MarkovMove> moves;
    for (int i = 1; i < current.strands(); ++i) {
      moves.push_back(Conjugation{Word(current.strands(), {sigma(i)})});
      moves.push_back(Conjugation{Word(current.strands(), {sigma_inv(i)})});
    }
    for (std::size_t split = 1; split < current.size(); ++split)
      moves.push_back(CyclicShift{split});
    if (current.strands() < max_strands) {
      moves.push_back(SigmaStabilization{1, StabDirection::Stabilize});
      moves.push_back(SigmaStabilization{-1, StabDirection::Stabilize});
      moves.push_back(PreStabilization{StabDirection::Stabilize});
    }
    moves.push_back(SigmaStabilization{1, StabDirection::Destabilize});
    moves.push_back(SigmaStabilization{-1, StabDirection::Destabilize});
    moves.push_back(PreStabilization{StabDirection::Destabilize});

    for (auto &m : moves) {
      if (move_violation(current, m))
        continue;
      Word next = apply_move(current, m);
      if (next.size() > options.size_cap)
        continue;
      const auto s = stats(next);
      if (stabilization_lower_bound(next, s, to, target_stats) > remaining)
        continue;
      if (!visited.insert(key_of(next)).second)
        continue;
      nodes.push_back({std::move(next), k, std::move(m), depth});
      if (is_goal(nodes.back().word, s))
        return certificate(nodes.size() - 1);
      if (nodes.size() >= options.max_states)
        return std::nullopt;
    }
  }
  return std::nullopt;
}

} // namespace pbraid
