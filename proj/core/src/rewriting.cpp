#include "pbraid/rewriting.hpp"

#include "pbraid/error.hpp"

#include <string>
#include <unordered_set>
#include <utility>

namespace pbraid {

namespace {

// One byte per letter: 3 * (index - 1) + kind, with tau folded into p.
using Code = std::string;

char encode(Letter l) {
  const int kind = l.kind == LetterKind::Singular ? 2 : static_cast<int>(l.kind);
  return static_cast<char>(3 * (l.index - 1) + kind);
}

Letter decode(char c) {
  const int v = static_cast<unsigned char>(c);
  return {static_cast<LetterKind>(v % 3), v / 3 + 1};
}

Code encode(const Word &w) {
  Code out;
  out.reserve(w.size());
  for (const auto &l : w)
    out.push_back(encode(l));
  return out;
}

Word decode(const Code &c, int strands) {
  std::vector<Letter> letters;
  letters.reserve(c.size());
  for (char ch : c)
    letters.push_back(decode(ch));
  return Word(strands, std::move(letters));
}

struct Rule {
  Code from;
  Code to;
};

std::vector<Rule> directed_rules(int strands) {
  std::vector<Rule> rules;
  for (const auto &r : relation_set(strands)) {
    rules.push_back({encode(r.lhs), encode(r.rhs)});
    rules.push_back({encode(r.rhs), encode(r.lhs)});
  }
  return rules;
}

class Search {
public:
  Search(int strands, std::size_t maxlen) : rules_(directed_rules(strands)), maxlen_(maxlen) {}

  // Visits layers up to `depth`; stops early once `stop` returns true.
  template <class Stop>
  void run(const Code &start, int depth, Stop stop) {
    visited_.insert(start);
    order_.push_back(start);
    if (stop(start))
      return;
    std::size_t layer_begin = 0;
    for (int d = 0; d < depth; ++d) {
      const std::size_t layer_end = order_.size();
      for (std::size_t k = layer_begin; k < layer_end; ++k) {
        // order_ may reallocate while expanding
        const Code word = order_[k];
        if (expand(word, stop))
          return;
      }
      if (order_.size() == layer_end)
        return;
      layer_begin = layer_end;
    }
  }

  const std::vector<Code> &order() const { return order_; }

private:
  template <class Stop>
  bool expand(const Code &word, Stop &stop) {
    for (const auto &rule : rules_) {
      if (rule.from.size() > word.size() ||
          word.size() - rule.from.size() + rule.to.size() > maxlen_)
        continue;
      for (std::size_t pos = 0; pos + rule.from.size() <= word.size(); ++pos) {
        if (word.compare(pos, rule.from.size(), rule.from) != 0)
          continue;
        Code next;
        next.reserve(word.size() - rule.from.size() + rule.to.size());
        next.append(word, 0, pos);
        next.append(rule.to);
        next.append(word, pos + rule.from.size());
        if (visited_.insert(next).second) {
          order_.push_back(next);
          if (stop(order_.back()))
            return true;
        }
      }
    }
    return false;
  }

  std::vector<Rule> rules_;
  std::size_t maxlen_;
  std::unordered_set<Code> visited_;
  std::vector<Code> order_;
};

void require_same_strands(const Word &u, const Word &v) {
  if (u.strands() != v.strands())
    throw StrandMismatch("cannot compare words on " + std::to_string(u.strands()) + " and " +
                         std::to_string(v.strands()) + " strands");
}

} // namespace

std::string_view tag_name(RelationTag tag) {
  switch (tag) {
  case RelationTag::CommuteP: return "R-commute-p";
  case RelationTag::CommuteMixed: return "R-commute-mixed";
  case RelationTag::PSigma: return "R-p-sigma";
  case RelationTag::Triple1: return "R-triple-1";
  case RelationTag::Triple2: return "R-triple-2";
  case RelationTag::BraidFar: return "R-braid-far";
  case RelationTag::BraidAdjacent: return "R-braid-adjacent";
  case RelationTag::Cancel: return "R-cancel";
  }
  return "?";
}

std::vector<RelationInstance> relation_set(int strands) {
  if (strands < 2)
    throw ParseError("strand count must be at least 2, got " + std::to_string(strands));
  const int n = strands;
  std::vector<RelationInstance> out;
  auto add = [&](std::vector<Letter> lhs, std::vector<Letter> rhs, RelationTag tag) {
    out.push_back({Word(n, std::move(lhs)), Word(n, std::move(rhs)), tag});
  };
  auto sigma_signed = [](int i, bool positive) { return positive ? sigma(i) : sigma_inv(i); };

  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      add({pre(i), pre(j)}, {pre(j), pre(i)}, RelationTag::CommuteP);

  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      if (i - j >= 2 || j - i >= 2)
        for (bool pos : {true, false})
          add({pre(i), sigma_signed(j, pos)}, {sigma_signed(j, pos), pre(i)},
              RelationTag::CommuteMixed);

  for (int i = 1; i < n; ++i)
    for (bool pos : {true, false})
      add({pre(i), sigma_signed(i, pos)}, {sigma_signed(i, pos), pre(i)}, RelationTag::PSigma);

  for (int i = 1; i + 1 < n; ++i)
    add({sigma(i), sigma(i + 1), pre(i)}, {pre(i + 1), sigma(i), sigma(i + 1)},
        RelationTag::Triple1);

  for (int i = 1; i + 1 < n; ++i)
    add({sigma(i + 1), sigma(i), pre(i + 1)}, {pre(i), sigma(i + 1), sigma(i)},
        RelationTag::Triple2);

  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      for (bool a : {true, false})
        for (bool b : {true, false})
          add({sigma_signed(i, a), sigma_signed(j, b)}, {sigma_signed(j, b), sigma_signed(i, a)},
              RelationTag::BraidFar);

  for (int i = 1; i + 1 < n; ++i)
    add({sigma(i + 1), sigma(i), sigma(i + 1)}, {sigma(i), sigma(i + 1), sigma(i)},
        RelationTag::BraidAdjacent);

  for (int i = 1; i < n; ++i) {
    add({sigma(i), sigma_inv(i)}, {}, RelationTag::Cancel);
    add({sigma_inv(i), sigma(i)}, {}, RelationTag::Cancel);
  }
  return out;
}

OracleVerdict bfs_equal(const Word &u, const Word &v, int depth, std::size_t maxlen) {
  require_same_strands(u, v);
  const Code target = encode(v);
  if (encode(u) == target)
    return OracleVerdict::Equal;
  if (depth <= 0 || u.size() > maxlen || v.size() > maxlen)
    return OracleVerdict::Unknown;
  Search search(u.strands(), maxlen);
  bool found = false;
  search.run(encode(u), depth, [&](const Code &c) { return found = (c == target); });
  return found ? OracleVerdict::Equal : OracleVerdict::Unknown;
}

std::vector<Word> bfs_reachable(const Word &u, int depth, std::size_t maxlen,
                                std::size_t report_len) {
  std::vector<Word> out;
  if (u.size() > maxlen) {
    if (u.size() <= report_len)
      out.push_back(relabel(u, RelabelDirection::SingularToPseudo));
    return out;
  }
  Search search(u.strands(), maxlen);
  search.run(encode(u), depth, [](const Code &) { return false; });
  for (const auto &c : search.order())
    if (c.size() <= report_len)
      out.push_back(decode(c, u.strands()));
  return out;
}

} // namespace pbraid
