#pragma once

#include "pbraid/desingularization.hpp"
#include "pbraid/word.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pbraid {

enum class StabDirection { Stabilize, Destabilize };

/// M1: beta -> a^-1 beta a for a classical braid a on the same strands.
struct Conjugation {
  Word conjugator;
  friend bool operator==(const Conjugation &, const Conjugation &) = default;
};

/// M2: beta_1 beta_2 -> beta_2 beta_1, beta_1 being the first `split` letters.
struct CyclicShift {
  std::size_t split = 0;
  friend bool operator==(const CyclicShift &, const CyclicShift &) = default;
};

/// M3: beta in PM_n <-> beta sigma_n^{sign} in PM_{n+1}.
struct SigmaStabilization {
  int sign = 1;
  StabDirection direction = StabDirection::Stabilize;
  friend bool operator==(const SigmaStabilization &, const SigmaStabilization &) = default;
};

/// M4: beta in PM_n <-> beta p_n in PM_{n+1}.
struct PreStabilization {
  StabDirection direction = StabDirection::Stabilize;
  friend bool operator==(const PreStabilization &, const PreStabilization &) = default;
};

using MarkovMove = std::variant<Conjugation, CyclicShift, SigmaStabilization, PreStabilization>;

/// Inverse of a classical braid word; throws PreCrossingError on p letters.
Word inverse(const Word &a);

/// Why `m` cannot be applied to `beta`, or nullopt when it can.
std::optional<std::string> move_violation(const Word &beta, const MarkovMove &m);
/// Throws InvalidMove when `move_violation` reports a problem.
Word apply_move(const Word &beta, const MarkovMove &m);
Word apply_moves(const Word &beta, const std::vector<MarkovMove> &moves);

/// Mini-language: "M1:s1" (conjugator letters joined by ','), "M2:3",
/// "M3:+", "M3:-", "M3:+d", "M3:-d", "M4", "M4:d". The strand count is the
/// one of the word the move will act on and is only used by M1.
MarkovMove parse_move(std::string_view spec, int strands);
std::string render(const MarkovMove &m);

struct MarkovSearchOptions {
  int move_budget = 5;
  std::size_t size_cap = 16;
  /// Hard bound on explored states; reaching it ends the search inconclusively.
  std::size_t max_states = 2'000'000;
  ExpansionLimits expansion;
};

/// Breadth-first search for a move sequence taking `from` to a word that is
/// equal in PM_n to `to`. Conjugators are single generators. nullopt means
/// no certificate was found within budget, not that none exists.
std::optional<std::vector<MarkovMove>> markov_search(const Word &from, const Word &to,
                                                     const MarkovSearchOptions &options = {});

} // namespace pbraid
