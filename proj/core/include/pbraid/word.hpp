#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pbraid {

/// Generator kinds of the pseudo braid monoid. `Singular` is the singular
/// braid monoid's crossing marker; it behaves exactly like `Pre` in every
/// algebraic operation and only survives parsing when explicitly requested.
enum class LetterKind : std::uint8_t { SigmaPos, SigmaNeg, Pre, Singular };

struct Letter {
  LetterKind kind = LetterKind::SigmaPos;
  int index = 1;

  friend auto operator<=>(const Letter &, const Letter &) = default;
};

constexpr Letter sigma(int i) { return {LetterKind::SigmaPos, i}; }
constexpr Letter sigma_inv(int i) { return {LetterKind::SigmaNeg, i}; }
constexpr Letter pre(int i) { return {LetterKind::Pre, i}; }
constexpr Letter singular(int i) { return {LetterKind::Singular, i}; }

/// True for p_i and tau_i.
constexpr bool is_crossing_marker(Letter l) {
  return l.kind == LetterKind::Pre || l.kind == LetterKind::Singular;
}
constexpr bool is_sigma(Letter l) { return !is_crossing_marker(l); }

/// An element of PM_n spelled as a word. The strand count is part of the
/// value: the empty word of PM_2 differs from the empty word of PM_3.
class Word {
public:
  static constexpr int kMaxStrands = 255;

  explicit Word(int strands, std::vector<Letter> letters = {});

  int strands() const { return strands_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  friend bool operator==(const Word &, const Word &) = default;
  friend auto operator<=>(const Word &, const Word &) = default;

private:
  int strands_;
  std::vector<Letter> letters_;
};

/// A bijection of {1..n}. `image(j)` is the bottom position reached by the
/// strand that starts at top position j.
class Permutation {
public:
  static Permutation identity(int n);
  /// The exchange of positions i and i+1 (1-based).
  static Permutation transposition(int n, int i);
  static Permutation from_images(std::span<const int> one_based);

  int size() const { return static_cast<int>(images_.size()); }
  int image(int j) const { return images_[j - 1] + 1; }
  std::vector<int> images() const;

  /// `*this` first, then `next`.
  Permutation then(const Permutation &next) const;
  Permutation inverse() const;
  bool is_identity() const;
  /// Cycles as 1-based point lists, each starting at its smallest point,
  /// ordered by that point.
  std::vector<std::vector<int>> cycles() const;

  /// 0-based images, for algorithms that index arrays directly.
  std::span<const int> zero_based() const { return images_; }

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  explicit Permutation(std::vector<int> zero_based) : images_(std::move(zero_based)) {}
  std::vector<int> images_;
};

enum class RelabelDirection { SingularToPseudo, PseudoToSingular };

struct WordStats {
  long sigma_exponent_sum = 0;
  std::size_t pre_count = 0;

  friend bool operator==(const WordStats &, const WordStats &) = default;
};

/// Parses whitespace-separated tokens `s<i>`, `S<i>`, `p<i>` and `t<i>`.
/// `t` tokens become `p` unless `keep_singular` is set.
Word parse(std::string_view text, int strands, bool keep_singular = false);
std::string render(const Word &w);
std::string render(Letter l);

Word concat(const Word &u, const Word &v);
Word relabel(const Word &w, RelabelDirection direction);
Permutation underlying_permutation(const Word &w);
/// Cancels adjacent sigma_i sigma_i^-1 pairs until none remain.
Word free_reduce(const Word &w);
WordStats stats(const Word &w);

bool is_classical(const Word &w);

} // namespace pbraid
