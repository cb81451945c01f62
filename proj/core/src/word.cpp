#include "pbraid/word.hpp"

#include "pbraid/error.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace pbraid {

namespace {

std::string strand_range_message(int index, int strands) {
  return "letter index " + std::to_string(index) + " out of range [1, " +
         std::to_string(strands - 1) + "]";
}

Letter parse_token(std::string_view token, int strands, bool keep_singular) {
  if (token.size() < 2)
    throw ParseError("malformed token '" + std::string(token) + "'");

  LetterKind kind;
  switch (token.front()) {
  case 's': kind = LetterKind::SigmaPos; break;
  case 'S': kind = LetterKind::SigmaNeg; break;
  case 'p': kind = LetterKind::Pre; break;
  case 't': kind = keep_singular ? LetterKind::Singular : LetterKind::Pre; break;
  default:
    throw ParseError("malformed token '" + std::string(token) + "'");
  }

  auto digits = token.substr(1);
  if (digits.front() == '0' ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError("malformed token '" + std::string(token) + "'");

  int index = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || index >= strands)
    throw ParseError(strand_range_message(ec == std::errc{} ? index : strands, strands) +
                     " in token '" + std::string(token) + "'");
  return {kind, index};
}

} // namespace

Word::Word(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 2 || strands > kMaxStrands)
    throw ParseError("strand count " + std::to_string(strands) + " outside [2, " +
                     std::to_string(kMaxStrands) + "]");
  for (const auto &l : letters_)
    if (l.index < 1 || l.index >= strands)
      throw ParseError(strand_range_message(l.index, strands));
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int i) {
  auto p = identity(n);
  std::swap(p.images_[i - 1], p.images_[i]);
  return p;
}

Permutation Permutation::from_images(std::span<const int> one_based) {
  const int n = static_cast<int>(one_based.size());
  std::vector<int> images(n);
  std::vector<bool> seen(n, false);
  for (int j = 0; j < n; ++j) {
    int v = one_based[j] - 1;
    if (v < 0 || v >= n || seen[v])
      throw Error("not a permutation of 1.." + std::to_string(n));
    seen[v] = true;
    images[j] = v;
  }
  return Permutation(std::move(images));
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(images_.size());
  std::transform(images_.begin(), images_.end(), out.begin(), [](int v) { return v + 1; });
  return out;
}

Permutation Permutation::then(const Permutation &next) const {
  if (next.size() != size())
    throw StrandMismatch("permutation sizes differ");
  std::vector<int> out(images_.size());
  for (std::size_t j = 0; j < images_.size(); ++j)
    out[j] = next.images_[images_[j]];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (std::size_t j = 0; j < images_.size(); ++j)
    out[images_[j]] = static_cast<int>(j);
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
  for (std::size_t j = 0; j < images_.size(); ++j)
    if (images_[j] != static_cast<int>(j))
      return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start])
      continue;
    auto &cycle = out.emplace_back();
    for (int j = static_cast<int>(start); !seen[j]; j = images_[j]) {
      seen[j] = true;
      cycle.push_back(j + 1);
    }
  }
  return out;
}

Word parse(std::string_view text, int strands, bool keep_singular) {
  if (strands < 2)
    throw ParseError("strand count must be at least 2, got " + std::to_string(strands));
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    auto end = text.find(' ', pos);
    if (end == std::string_view::npos)
      end = text.size();
    letters.push_back(parse_token(text.substr(pos, end - pos), strands, keep_singular));
    pos = end;
  }
  return Word(strands, std::move(letters));
}

std::string render(Letter l) {
  static constexpr char prefix[] = {'s', 'S', 'p', 't'};
  return prefix[static_cast<int>(l.kind)] + std::to_string(l.index);
}

std::string render(const Word &w) {
  std::string out;
  for (const auto &l : w) {
    if (!out.empty())
      out += ' ';
    out += render(l);
  }
  return out;
}

Word concat(const Word &u, const Word &v) {
  if (u.strands() != v.strands())
    throw StrandMismatch("cannot concatenate words on " + std::to_string(u.strands()) +
                         " and " + std::to_string(v.strands()) + " strands");
  std::vector<Letter> letters(u.begin(), u.end());
  letters.insert(letters.end(), v.begin(), v.end());
  return Word(u.strands(), std::move(letters));
}

Word relabel(const Word &w, RelabelDirection direction) {
  const auto from = direction == RelabelDirection::SingularToPseudo ? LetterKind::Singular
                                                                    : LetterKind::Pre;
  const auto to = direction == RelabelDirection::SingularToPseudo ? LetterKind::Pre
                                                                  : LetterKind::Singular;
  std::vector<Letter> letters(w.begin(), w.end());
  for (auto &l : letters)
    if (l.kind == from)
      l.kind = to;
  return Word(w.strands(), std::move(letters));
}

Permutation underlying_permutation(const Word &w) {
  // position -> strand, then inverted
  std::vector<int> at(w.strands());
  std::iota(at.begin(), at.end(), 1);
  for (const auto &l : w)
    std::swap(at[l.index - 1], at[l.index]);
  std::vector<int> images(w.strands());
  for (int pos = 0; pos < w.strands(); ++pos)
    images[at[pos] - 1] = pos + 1;
  return Permutation::from_images(images);
}

Word free_reduce(const Word &w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const auto &l : w) {
    if (!stack.empty() && is_sigma(l) && is_sigma(stack.back()) &&
        stack.back().index == l.index && stack.back().kind != l.kind) {
      stack.pop_back();
      continue;
    }
    stack.push_back(l);
  }
  return Word(w.strands(), std::move(stack));
}

WordStats stats(const Word &w) {
  WordStats s;
  for (const auto &l : w) {
    switch (l.kind) {
    case LetterKind::SigmaPos: ++s.sigma_exponent_sum; break;
    case LetterKind::SigmaNeg: --s.sigma_exponent_sum; break;
    default: ++s.pre_count; break;
    }
  }
  return s;
}

bool is_classical(const Word &w) {
  return std::none_of(w.begin(), w.end(), is_crossing_marker);
}

} // namespace pbraid
