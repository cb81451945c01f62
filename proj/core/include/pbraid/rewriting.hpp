#pragma once

#include "pbraid/word.hpp"

#include <cstddef>
#include <limits>
#include <string_view>
#include <vector>

namespace pbraid {

enum class RelationTag {
  CommuteP,       // p_i p_j = p_j p_i, |i-j| >= 2
  CommuteMixed,   // p_i s_j^{+-1} = s_j^{+-1} p_i, |i-j| >= 2
  PSigma,         // p_i s_i^{+-1} = s_i^{+-1} p_i
  Triple1,        // s_i s_{i+1} p_i = p_{i+1} s_i s_{i+1}
  Triple2,        // s_{i+1} s_i p_{i+1} = p_i s_{i+1} s_i
  BraidFar,       // s_i^a s_j^b = s_j^b s_i^a, |i-j| >= 2
  BraidAdjacent,  // s_{i+1} s_i s_{i+1} = s_i s_{i+1} s_i
  Cancel,         // s_i s_i^-1 = 1, s_i^-1 s_i = 1
};

std::string_view tag_name(RelationTag tag);

struct RelationInstance {
  Word lhs;
  Word rhs;
  RelationTag tag;
};

/// Every instance of the defining relations of PM_n, in a fixed order.
std::vector<RelationInstance> relation_set(int strands);

enum class OracleVerdict { Equal, Unknown };

/// Breadth-first search for a chain of at most `depth` relation applications
/// (either direction, any position) from u to v, never exceeding `maxlen`
/// letters. Equal is always a proof; Unknown proves nothing. tau letters are
/// read as p letters.
OracleVerdict bfs_equal(const Word &u, const Word &v, int depth, std::size_t maxlen);

/// All words reachable from u under the same budget, including u itself,
/// restricted to those with at most `report_len` letters. Order is by
/// distance, then discovery.
std::vector<Word> bfs_reachable(const Word &u, int depth, std::size_t maxlen,
                                std::size_t report_len = std::numeric_limits<std::size_t>::max());

} // namespace pbraid
