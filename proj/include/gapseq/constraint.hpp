#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "gapseq/domain.hpp"
#include "gapseq/occurrence.hpp"

// The GAP-SEQ global constraint: frequency check on the current prefix plus
// forward-checking filtering of the next pattern variable. Filtering keeps
// exactly the items locally frequent within the right pattern extensions
// (and never touches the epsilon value or variables beyond the next one).

namespace gapseq {

/// item id -> number of sequences whose extension windows contain it
using ItemSupportMap = std::map<ItemId, int>;

/// Support of the prefix the index was built for: one entry per sequence
/// containing it.
int support_of(const ExtensionIndex& ext);

/// Items appearing in the extension windows of at least minsup sequences,
/// with their counts. Each sequence contributes at most once per item.
ItemSupportMap locally_frequent_items(const SequenceDatabase& db, const ExtensionIndex& ext,
                                      int minsup);

struct FilterOutcome {
  bool frequent = false;
  int support = 0;
  /// Values retained for the next variable; absent when infrequent or when
  /// there is no next variable.
  std::optional<Domain> pruned_domain;
};

/// One propagation step for the prefix sigma = <P_1..P_j> (last value not
/// epsilon). occ_stack holds the indexes for depths 0..j-1; on a frequent
/// outcome the depth-j index is pushed, otherwise the stack is untouched and
/// the caller backtracks. next_domain is D(P_{j+1}), or nullptr when j is the
/// last variable (frequency is still checked, pruning is skipped).
FilterOutcome filter(const SequenceDatabase& db, std::span<const ItemId> sigma, int j,
                     const Domain* next_domain, int minsup, const GapSpec& gap,
                     std::vector<AllOccIndex>& occ_stack,
                     RedundancyCut cut = RedundancyCut::enabled);

}  // namespace gapseq
