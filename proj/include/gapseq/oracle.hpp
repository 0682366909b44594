#pragma once

#include <map>
#include <set>
#include <span>
#include <vector>

#include "gapseq/gap.hpp"
#include "gapseq/sdb.hpp"

// Brute-force reference implementations of the gap-constrained subsequence
// relation, support, right extensions and mining. Everything here enumerates
// candidate position chains exhaustively and shares no code with the
// incremental engine, so it can serve as ground truth in tests. Deliberately
// slow; keep inputs at desk scale (a few dozen short sequences).

namespace gapseq::oracle {

/// True iff pattern occurs in seq with every consecutive position pair
/// inside the gap window.
bool matches(std::span<const ItemId> pattern, const Sequence& seq, const GapSpec& gap);

/// All distinct [j1, jm] occurrence intervals, lexicographically ordered.
std::vector<Occurrence> all_occurrences(std::span<const ItemId> pattern, const Sequence& seq,
                                        const GapSpec& gap);

std::vector<int> cover(std::span<const ItemId> pattern, const SequenceDatabase& db,
                       const GapSpec& gap);
int support(std::span<const ItemId> pattern, const SequenceDatabase& db, const GapSpec& gap);

/// Decoded right pattern extensions of pattern within one sequence: one
/// window per occurrence, or the single window from the minimal jm when
/// N >= #s. Empty windows are dropped.
std::set<std::vector<ItemId>> right_extensions_naive(std::span<const ItemId> pattern,
                                                     const Sequence& seq, const GapSpec& gap);

/// Every pattern of length <= maxlen with support >= minsup. DFS that only
/// extends frequent prefixes; sound because an occurrence of an extension
/// contains an occurrence of the prefix.
std::map<std::vector<ItemId>, int> mine_naive(const SequenceDatabase& db, int minsup,
                                              const GapSpec& gap, int maxlen);

}  // namespace gapseq::oracle
