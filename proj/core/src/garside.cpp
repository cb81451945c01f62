#include "pbraid/garside.hpp"

#include "pbraid/error.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <utility>

namespace pbraid {

namespace {

// 0-based strand -> final position.
using Perm = std::vector<int>;

struct Work {
  int n;
  long inf = 0;
  std::vector<Perm> factors;
};

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm delta_perm(int n) {
  Perm p(n);
  for (int j = 0; j < n; ++j)
    p[j] = n - 1 - j;
  return p;
}

bool is_identity(const Perm &p) {
  for (std::size_t j = 0; j < p.size(); ++j)
    if (p[j] != static_cast<int>(j))
      return false;
  return true;
}

bool is_delta(const Perm &p) {
  const int n = static_cast<int>(p.size());
  for (int j = 0; j < n; ++j)
    if (p[j] != n - 1 - j)
      return false;
  return true;
}

// Conjugation by Delta: sigma_i <-> sigma_{n-i}.
void flip(Perm &p) {
  const int n = static_cast<int>(p.size());
  Perm q(n);
  for (int j = 0; j < n; ++j)
    q[j] = n - 1 - p[n - 1 - j];
  p = std::move(q);
}

// i (0-based) is a left descent: the strands starting at i, i+1 cross.
bool starts_with(const Perm &p, int i) { return p[i] > p[i + 1]; }

// The strands ending at positions i, i+1 have crossed.
bool ends_with(const Perm &p, int i) {
  int left = -1, right = -1;
  for (int j = 0; j < static_cast<int>(p.size()); ++j) {
    if (p[j] == i)
      left = j;
    else if (p[j] == i + 1)
      right = j;
  }
  return left > right;
}

// Moves generators from the head of b onto the tail of a until S(b) is
// contained in F(a). Returns whether anything moved.
bool left_weight(Perm &a, Perm &b) {
  const int n = static_cast<int>(a.size());
  bool changed = false;
  for (bool again = true; again;) {
    again = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (starts_with(b, i) && !ends_with(a, i)) {
        // a <- a sigma_i : swap values i, i+1
        for (auto &v : a) {
          if (v == i)
            v = i + 1;
          else if (v == i + 1)
            v = i;
        }
        // b <- sigma_i^-1 b : swap entries i, i+1
        std::swap(b[i], b[i + 1]);
        changed = again = true;
        break;
      }
    }
  }
  return changed;
}

void append_simple(Work &w, Perm b) {
  w.factors.push_back(std::move(b));
  for (std::size_t j = w.factors.size() - 1; j > 0; --j)
    if (!left_weight(w.factors[j - 1], w.factors[j]))
      break;

  std::size_t leading = 0;
  while (leading < w.factors.size() && is_delta(w.factors[leading]))
    ++leading;
  if (leading > 0) {
    w.inf += static_cast<long>(leading);
    w.factors.erase(w.factors.begin(), w.factors.begin() + static_cast<long>(leading));
  }
  while (!w.factors.empty() && is_identity(w.factors.back()))
    w.factors.pop_back();
}

void append_letter(Work &w, Letter l) {
  const int i = l.index - 1;
  if (l.kind == LetterKind::SigmaPos) {
    auto s = identity_perm(w.n);
    std::swap(s[i], s[i + 1]);
    append_simple(w, std::move(s));
  } else {
    // sigma_i^-1 = Delta^-1 (Delta sigma_i^-1); slide Delta^-1 to the front.
    for (auto &f : w.factors)
      flip(f);
    --w.inf;
    auto c = delta_perm(w.n);
    for (auto &v : c) {
      if (v == i)
        v = i + 1;
      else if (v == i + 1)
        v = i;
    }
    append_simple(w, std::move(c));
  }
}

Work to_work(const NormalForm &nf) {
  Work w{nf.strands, nf.inf, {}};
  w.factors.reserve(nf.factors.size());
  for (const auto &f : nf.factors) {
    auto z = f.perm.zero_based();
    w.factors.emplace_back(z.begin(), z.end());
  }
  return w;
}

NormalForm from_work(const Work &w) {
  NormalForm nf{w.n, w.inf, {}};
  nf.factors.reserve(w.factors.size());
  for (const auto &f : w.factors) {
    std::vector<int> one_based(f.size());
    std::transform(f.begin(), f.end(), one_based.begin(), [](int v) { return v + 1; });
    nf.factors.push_back({Permutation::from_images(one_based)});
  }
  return nf;
}

void append_positive_word(std::vector<Letter> &out, Perm p) {
  const int n = static_cast<int>(p.size());
  for (bool again = true; again;) {
    again = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (starts_with(p, i)) {
        out.push_back(sigma(i + 1));
        std::swap(p[i], p[i + 1]);
        again = true;
        break;
      }
    }
  }
}

void append_inverse(std::vector<Letter> &out, std::vector<Letter> positive) {
  for (auto it = positive.rbegin(); it != positive.rend(); ++it)
    out.push_back(sigma_inv(it->index));
}

std::vector<Letter> delta_letters(int n) {
  std::vector<Letter> out;
  for (int k = 1; k < n; ++k)
    for (int i = k; i >= 1; --i)
      out.push_back(sigma(i));
  return out;
}

} // namespace

NormalForm identity_normal_form(int strands) { return NormalForm{strands, 0, {}}; }

NormalForm delta_power(int strands, long k) { return NormalForm{strands, k, {}}; }

NormalForm normal_form(const Word &w) {
  Work work{w.strands(), 0, {}};
  for (const auto &l : w) {
    if (is_crossing_marker(l))
      throw PreCrossingError("normal form needs a classical braid word, found " + render(l));
    append_letter(work, l);
  }
  return from_work(work);
}

bool nf_equal(const Word &u, const Word &v) {
  if (u.strands() != v.strands())
    throw StrandMismatch("cannot compare braids on " + std::to_string(u.strands()) + " and " +
                         std::to_string(v.strands()) + " strands");
  return normal_form(u) == normal_form(v);
}

NormalForm multiply(const NormalForm &a, const NormalForm &b) {
  if (a.strands != b.strands)
    throw StrandMismatch("cannot multiply braids on " + std::to_string(a.strands) + " and " +
                         std::to_string(b.strands) + " strands");
  auto work = to_work(a);
  work.inf += b.inf;
  if (b.inf % 2 != 0)
    for (auto &f : work.factors)
      flip(f);
  for (const auto &f : b.factors) {
    auto z = f.perm.zero_based();
    append_simple(work, Perm(z.begin(), z.end()));
  }
  return from_work(work);
}

NormalForm multiply(const NormalForm &a, Letter sigma_letter) {
  if (is_crossing_marker(sigma_letter))
    throw PreCrossingError("cannot multiply a braid by " + render(sigma_letter));
  if (sigma_letter.index < 1 || sigma_letter.index >= a.strands)
    throw ParseError("letter " + render(sigma_letter) + " out of range");
  auto work = to_work(a);
  append_letter(work, sigma_letter);
  return from_work(work);
}

Word simple_word(const PermutationBraid &b) {
  std::vector<Letter> out;
  auto z = b.perm.zero_based();
  append_positive_word(out, Perm(z.begin(), z.end()));
  return Word(b.perm.size(), std::move(out));
}

Word delta_word(int strands) { return Word(strands, delta_letters(strands)); }

Word nf_to_word(const NormalForm &nf) {
  const int n = nf.strands;
  std::vector<Letter> out;
  const auto delta = delta_letters(n);
  std::size_t first_positive = 0;

  if (nf.inf >= 0) {
    for (long k = 0; k < nf.inf; ++k)
      out.insert(out.end(), delta.begin(), delta.end());
  } else {
    long pure = -nf.inf;
    if (!nf.factors.empty())
      --pure;
    for (long k = 0; k < pure; ++k)
      append_inverse(out, delta);
    if (!nf.factors.empty()) {
      // Delta^-1 A = C^-1 where A C = Delta.
      auto a = nf.factors.front().perm.zero_based();
      Perm c(n);
      for (int j = 0; j < n; ++j)
        c[a[j]] = n - 1 - j;
      std::vector<Letter> positive;
      append_positive_word(positive, std::move(c));
      append_inverse(out, std::move(positive));
      first_positive = 1;
    }
  }
  for (std::size_t k = first_positive; k < nf.factors.size(); ++k) {
    auto z = nf.factors[k].perm.zero_based();
    append_positive_word(out, Perm(z.begin(), z.end()));
  }
  return Word(n, std::move(out));
}

std::string serialize(const NormalForm &nf) {
  std::string out = std::to_string(nf.inf) + "|";
  for (std::size_t k = 0; k < nf.factors.size(); ++k) {
    if (k > 0)
      out += '/';
    const auto images = nf.factors[k].perm.images();
    for (std::size_t j = 0; j < images.size(); ++j) {
      if (j > 0)
        out += ',';
      out += std::to_string(images[j]);
    }
  }
  return out;
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  for (;;) {
    auto end = text.find(sep, pos);
    out.push_back(text.substr(pos, end == std::string_view::npos ? text.npos : end - pos));
    if (end == std::string_view::npos)
      return out;
    pos = end + 1;
  }
}

template <class Int>
Int parse_int(std::string_view text, std::string_view key) {
  Int value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw ParseError("malformed normal form key '" + std::string(key) + "'");
  return value;
}

} // namespace

NormalForm deserialize(std::string_view key, int strands) {
  auto bar = key.find('|');
  if (bar == std::string_view::npos)
    throw ParseError("malformed normal form key '" + std::string(key) + "'");
  NormalForm nf{strands, parse_int<long>(key.substr(0, bar), key), {}};
  auto rest = key.substr(bar + 1);
  if (!rest.empty()) {
    for (auto factor : split(rest, '/')) {
      std::vector<int> images;
      for (auto v : split(factor, ','))
        images.push_back(parse_int<int>(v, key));
      if (static_cast<int>(images.size()) != strands)
        throw ParseError("normal form key '" + std::string(key) + "' has a factor on " +
                         std::to_string(images.size()) + " strands");
      try {
        nf.factors.push_back({Permutation::from_images(images)});
      } catch (const Error &) {
        throw ParseError("normal form key '" + std::string(key) + "' has a non-permutation factor");
      }
    }
  }
  // Canonical iff re-normalizing the spelled braid reproduces it.
  if (normal_form(nf_to_word(nf)) != nf)
    throw ParseError("normal form key '" + std::string(key) + "' is not canonical");
  return nf;
}

} // namespace pbraid
