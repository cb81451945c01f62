#pragma once

#include "pbraid/word.hpp"

#include <boost/rational.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace pbraid {

/// Over/under choice (+1 or -1) for each pre-crossing, in word order.
struct Resolution {
  std::vector<int> choices;
};

/// Number of components of the closure, i.e. cycles of the strand permutation.
int component_count(const Word &beta);

/// Replaces the k-th pre-crossing p_i by sigma_i^{choices[k]}.
Word resolve(const Word &beta, const Resolution &r);

/// Twice the linking number of every unordered pair of distinct closure
/// components, ascending. Crossing sign: sigma_i is positive.
std::vector<long> doubled_linking_numbers(const Word &beta);

using Weight = boost::rational<std::int64_t>;

struct ProfileEntry {
  int component_count = 0;
  std::vector<long> doubled_linkings;

  friend bool operator==(const ProfileEntry &, const ProfileEntry &) = default;
  friend auto operator<=>(const ProfileEntry &, const ProfileEntry &) = default;
};

/// Distribution of (component count, pairwise linking) over uniformly random
/// resolutions of the pre-crossings. Iteration order is by component count,
/// then lexicographic linking data.
struct LinkingProfile {
  std::map<ProfileEntry, Weight> entries;

  friend bool operator==(const LinkingProfile &, const LinkingProfile &) = default;
};

inline constexpr std::size_t kDefaultResolutionCap = 20;

/// Throws CapExceeded when the word has more than `max_pre_crossings`.
LinkingProfile linking_profile(const Word &beta, std::size_t max_pre_crossings = kDefaultResolutionCap);

} // namespace pbraid
