#include "pbraid/desingularization.hpp"

#include "pbraid/error.hpp"

#include <algorithm>

namespace pbraid {

namespace {

void require_same_strands(int a, int b, const char *what) {
  if (a != b)
    throw StrandMismatch(std::string("cannot ") + what + " elements on " + std::to_string(a) +
                         " and " + std::to_string(b) + " strands");
}

void check_resolution_count(std::size_t pre_count, const ExpansionLimits &limits) {
  if (pre_count >= 63 || (std::size_t{1} << pre_count) > limits.max_terms)
    throw CapExceeded("expansion of " + std::to_string(pre_count) +
                      " pre-crossings exceeds the cap of " + std::to_string(limits.max_terms) +
                      " terms");
}

} // namespace

RingElement RingElement::from_terms(int strands,
                                    std::vector<std::pair<NormalForm, std::int64_t>> terms) {
  RingElement out(strands);
  for (auto &[nf, c] : terms) {
    require_same_strands(strands, nf.strands, "collect");
    out.terms_[std::move(nf)] += c;
  }
  std::erase_if(out.terms_, [](const auto &t) { return t.second == 0; });
  return out;
}

RingElement RingElement::one(int strands) { return basis(identity_normal_form(strands)); }

RingElement RingElement::basis(const NormalForm &nf, std::int64_t coefficient) {
  RingElement out(nf.strands);
  if (coefficient != 0)
    out.terms_.emplace(nf, coefficient);
  return out;
}

std::int64_t RingElement::coefficient(const NormalForm &nf) const {
  auto it = terms_.find(nf);
  return it == terms_.end() ? 0 : it->second;
}

RingElement ring_add(const RingElement &a, const RingElement &b) {
  require_same_strands(a.strands(), b.strands(), "add");
  RingElement out = a;
  for (const auto &[nf, c] : b.terms_) {
    auto [it, inserted] = out.terms_.emplace(nf, c);
    if (!inserted && (it->second += c) == 0)
      out.terms_.erase(it);
  }
  return out;
}

RingElement ring_mul(const RingElement &a, const RingElement &b, const ExpansionLimits &limits) {
  require_same_strands(a.strands(), b.strands(), "multiply");
  if (!a.terms_.empty() && b.terms_.size() > limits.max_terms / a.terms_.size())
    throw CapExceeded("product of " + std::to_string(a.size()) + " and " +
                      std::to_string(b.size()) + " terms exceeds the cap of " +
                      std::to_string(limits.max_terms) + " terms");
  RingElement out(a.strands());
  for (const auto &[x, cx] : a.terms_) {
    for (const auto &[y, cy] : b.terms_) {
      auto [it, inserted] = out.terms_.emplace(multiply(x, y), cx * cy);
      if (!inserted)
        it->second += cx * cy;
    }
  }
  std::erase_if(out.terms_, [](const auto &t) { return t.second == 0; });
  return out;
}

RingElement letter_image(Letter l, int strands) {
  const auto base = identity_normal_form(strands);
  if (is_sigma(l))
    return RingElement::basis(multiply(base, l));
  return RingElement::from_terms(strands, {{multiply(base, sigma(l.index)), 1},
                                           {multiply(base, sigma_inv(l.index)), -1}});
}

RingElement eta(const Word &w, const ExpansionLimits &limits) {
  check_resolution_count(stats(w).pre_count, limits);
  auto acc = RingElement::one(w.strands());
  for (const auto &l : w)
    acc = ring_mul(acc, letter_image(l, w.strands()), limits);
  return acc;
}

bool equal_pm(const Word &u, const Word &v, const ExpansionLimits &limits) {
  require_same_strands(u.strands(), v.strands(), "compare");
  // eta(w) is never zero: its extreme exponent-sum terms e +- k carry
  // coefficient +-1. Equal images therefore force equal stats, and every
  // term of eta(w) has underlying permutation perm(w).
  if (stats(u) != stats(v) || underlying_permutation(u) != underlying_permutation(v)) {
    check_resolution_count(stats(u).pre_count, limits);
    check_resolution_count(stats(v).pre_count, limits);
    return false;
  }
  return eta(u, limits) == eta(v, limits);
}

Pm2Form pm2_canonical(const Word &w) {
  if (w.strands() != 2)
    throw StrandMismatch("PM_2 canonical form needs 2 strands, got " + std::to_string(w.strands()));
  const auto s = stats(w);
  return {s.sigma_exponent_sum, s.pre_count};
}

std::vector<std::pair<std::string, std::int64_t>> sorted_terms(const RingElement &e) {
  std::vector<std::pair<std::string, std::int64_t>> out;
  out.reserve(e.size());
  for (const auto &[nf, c] : e.terms())
    out.emplace_back(serialize(nf), c);
  std::sort(out.begin(), out.end());
  return out;
}

std::string render(const RingElement &e) {
  std::string out;
  for (const auto &[key, c] : sorted_terms(e))
    out += std::to_string(c) + "*" + key + "\n";
  return out;
}

} // namespace pbraid
