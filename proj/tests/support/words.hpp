#pragma once

#include "pbraid/word.hpp"

#include <cstddef>
#include <random>
#include <vector>

namespace pbraid::testing {

inline std::vector<Letter> alphabet(int strands, bool with_pre) {
  std::vector<Letter> out;
  for (int i = 1; i < strands; ++i) {
    out.push_back(sigma(i));
    out.push_back(sigma_inv(i));
    if (with_pre)
      out.push_back(pre(i));
  }
  return out;
}

/// Calls f(word) for every word of length 0..max_len over `letters`.
template <class F>
void for_each_word(int strands, const std::vector<Letter> &letters, std::size_t max_len, F &&f) {
  std::vector<Letter> current;
  auto rec = [&](auto &self) -> void {
    f(Word(strands, current));
    if (current.size() == max_len)
      return;
    for (const auto &l : letters) {
      current.push_back(l);
      self(self);
      current.pop_back();
    }
  };
  rec(rec);
}

template <class F>
void for_each_word(int strands, std::size_t max_len, bool with_pre, F &&f) {
  for_each_word(strands, alphabet(strands, with_pre), max_len, std::forward<F>(f));
}

inline Word random_word(std::mt19937_64 &rng, int strands, std::size_t length,
                        std::size_t max_pre = static_cast<std::size_t>(-1)) {
  std::uniform_int_distribution<int> index(1, strands - 1);
  std::uniform_int_distribution<int> kind(0, 2);
  std::vector<Letter> letters;
  std::size_t pres = 0;
  while (letters.size() < length) {
    auto k = static_cast<LetterKind>(kind(rng));
    if (k == LetterKind::Pre) {
      if (pres == max_pre)
        continue;
      ++pres;
    }
    letters.push_back({k, index(rng)});
  }
  return Word(strands, std::move(letters));
}

inline Word random_classical_word(std::mt19937_64 &rng, int strands, std::size_t length) {
  return random_word(rng, strands, length, 0);
}

} // namespace pbraid::testing
