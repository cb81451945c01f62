#include "pbraid/closure.hpp"

#include "pbraid/error.hpp"

#include <algorithm>
#include <numeric>

namespace pbraid {

namespace {

// strand (0-based start position) -> component id
std::vector<int> component_ids(const Word &beta) {
  std::vector<int> ids(beta.strands());
  int c = 0;
  for (const auto &cycle : underlying_permutation(beta).cycles()) {
    for (int j : cycle)
      ids[j - 1] = c;
    ++c;
  }
  return ids;
}

} // namespace

int component_count(const Word &beta) {
  return static_cast<int>(underlying_permutation(beta).cycles().size());
}

Word resolve(const Word &beta, const Resolution &r) {
  std::vector<Letter> letters(beta.begin(), beta.end());
  std::size_t k = 0;
  for (auto &l : letters) {
    if (!is_crossing_marker(l))
      continue;
    if (k >= r.choices.size())
      break;
    const int choice = r.choices[k++];
    if (choice != 1 && choice != -1)
      throw Error("resolution choices must be +1 or -1");
    l = choice > 0 ? sigma(l.index) : sigma_inv(l.index);
  }
  if (k != r.choices.size() || !is_classical(Word(beta.strands(), letters)))
    throw Error("resolution has " + std::to_string(r.choices.size()) + " choices for " +
                std::to_string(stats(beta).pre_count) + " pre-crossings");
  return Word(beta.strands(), std::move(letters));
}

std::vector<long> doubled_linking_numbers(const Word &beta) {
  const auto ids = component_ids(beta);
  const int components = ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
  std::vector<long> pair_sum(static_cast<std::size_t>(components * components), 0);

  std::vector<int> at(beta.strands());
  std::iota(at.begin(), at.end(), 0);
  for (const auto &l : beta) {
    if (is_crossing_marker(l))
      throw PreCrossingError("linking numbers need a classical braid word, found " + render(l));
    const int a = ids[at[l.index - 1]];
    const int b = ids[at[l.index]];
    if (a != b) {
      const int sign = l.kind == LetterKind::SigmaPos ? 1 : -1;
      pair_sum[static_cast<std::size_t>(std::min(a, b) * components + std::max(a, b))] += sign;
    }
    std::swap(at[l.index - 1], at[l.index]);
  }

  std::vector<long> out;
  for (int a = 0; a < components; ++a)
    for (int b = a + 1; b < components; ++b)
      out.push_back(pair_sum[static_cast<std::size_t>(a * components + b)]);
  std::sort(out.begin(), out.end());
  return out;
}

LinkingProfile linking_profile(const Word &beta, std::size_t max_pre_crossings) {
  const std::size_t k = stats(beta).pre_count;
  if (k > max_pre_crossings || k >= 62)
    throw CapExceeded("linking profile of " + std::to_string(k) +
                      " pre-crossings exceeds the cap of " + std::to_string(max_pre_crossings));
  const int components = component_count(beta);

  std::map<ProfileEntry, std::int64_t> counts;
  const std::uint64_t total = std::uint64_t{1} << k;
  Resolution r{std::vector<int>(k)};
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t bit = 0; bit < k; ++bit)
      r.choices[bit] = (mask >> bit) & 1u ? -1 : 1;
    ++counts[{components, doubled_linking_numbers(resolve(beta, r))}];
  }

  LinkingProfile profile;
  for (auto &[entry, count] : counts)
    profile.entries.emplace(entry, Weight(count, static_cast<std::int64_t>(total)));
  return profile;
}

} // namespace pbraid
