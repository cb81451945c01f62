#pragma once

#include "pbraid/word.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace pbraid {

/// A positive braid in which every pair of strands crosses at most once,
/// identified with its strand permutation.
struct PermutationBraid {
  Permutation perm;

  friend bool operator==(const PermutationBraid &, const PermutationBraid &) = default;
  friend auto operator<=>(const PermutationBraid &, const PermutationBraid &) = default;
};

/// Left-greedy normal form Delta^inf * A_1 ... A_r of a braid group element.
/// Every A_k is neither trivial nor Delta, and each consecutive pair is
/// left-weighted, so equal braids have identical normal forms.
struct NormalForm {
  int strands = 2;
  long inf = 0;
  std::vector<PermutationBraid> factors;

  friend bool operator==(const NormalForm &, const NormalForm &) = default;
  friend auto operator<=>(const NormalForm &, const NormalForm &) = default;
};

NormalForm identity_normal_form(int strands);
NormalForm delta_power(int strands, long k);

/// Throws PreCrossingError if `w` contains p_i or tau_i.
NormalForm normal_form(const Word &w);
bool nf_equal(const Word &u, const Word &v);

/// Normal form of the product of two braids on the same strands.
NormalForm multiply(const NormalForm &a, const NormalForm &b);
NormalForm multiply(const NormalForm &a, Letter sigma_letter);

/// A classical word spelling `nf`. Delta is written as s1 s2 s1 s3 s2 s1 ...
Word nf_to_word(const NormalForm &nf);
/// Positive word of a single permutation braid, smallest-index-first.
Word simple_word(const PermutationBraid &b);
Word delta_word(int strands);

/// "inf|a,b,c/d,e,f" with each factor written as its 1-based image
/// sequence, factors in order.
std::string serialize(const NormalForm &nf);
/// Inverse of `serialize`; rejects keys that are not canonical normal forms.
NormalForm deserialize(std::string_view key, int strands);

} // namespace pbraid
