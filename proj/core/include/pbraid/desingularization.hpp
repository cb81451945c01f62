#pragma once

#include "pbraid/garside.hpp"
#include "pbraid/word.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pbraid {

struct ExpansionLimits {
  /// Upper bound on term products formed by a single multiplication, and on
  /// the 2^k resolution count of a word with k pre-crossings.
  std::size_t max_terms = std::size_t{1} << 20;
};

/// An element of the integral group ring Z[B_n]: a finite sum of braids
/// (in normal form) with nonzero integer coefficients.
class RingElement {
public:
  using Terms = std::map<NormalForm, std::int64_t>;

  explicit RingElement(int strands) : strands_(strands) {}
  /// Merges repeated keys and drops zero coefficients.
  static RingElement from_terms(int strands, std::vector<std::pair<NormalForm, std::int64_t>> terms);
  static RingElement one(int strands);
  static RingElement basis(const NormalForm &nf, std::int64_t coefficient = 1);

  int strands() const { return strands_; }
  const Terms &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(const NormalForm &nf) const;

  friend bool operator==(const RingElement &, const RingElement &) = default;

private:
  friend RingElement ring_add(const RingElement &, const RingElement &);
  friend RingElement ring_mul(const RingElement &, const RingElement &, const ExpansionLimits &);

  int strands_;
  Terms terms_;
};

RingElement ring_add(const RingElement &a, const RingElement &b);
RingElement ring_mul(const RingElement &a, const RingElement &b, const ExpansionLimits &limits = {});

/// sigma_i^{+-1} maps to itself; p_i (and tau_i) maps to sigma_i - sigma_i^-1.
RingElement letter_image(Letter l, int strands);
/// Left-to-right product of letter images, cancelling after every step.
RingElement eta(const Word &w, const ExpansionLimits &limits = {});

/// Decides equality in PM_n by comparing desingularization images. Relies on
/// Paris's theorem that the map embeds the singular braid monoid into the
/// group algebra.
bool equal_pm(const Word &u, const Word &v, const ExpansionLimits &limits = {});

/// Canonical pair for PM_2 = Z x Z+.
struct Pm2Form {
  long sigma_exponent = 0;
  std::size_t pre_count = 0;

  friend bool operator==(const Pm2Form &, const Pm2Form &) = default;
};
Pm2Form pm2_canonical(const Word &w);

/// One "coeff*key" line per term, keys sorted lexicographically.
std::string render(const RingElement &e);
/// (serialized key, coefficient) pairs in the rendering order.
std::vector<std::pair<std::string, std::int64_t>> sorted_terms(const RingElement &e);

} // namespace pbraid
