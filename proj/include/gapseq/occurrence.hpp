#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gapseq/gap.hpp"
#include "gapseq/sdb.hpp"

namespace gapseq {

/// Per-depth occurrence index: for every sequence that still contains the
/// current prefix, the list of its [j1, jm] intervals in generation order.
/// Depth 0 holds one sentinel [1, #s] interval per sequence; those seed the
/// depth-1 scan and are never reported as pattern occurrences.
struct AllOccIndex {
  using Entry = std::pair<int, std::vector<Occurrence>>;  // (sid, occurrences)

  int depth = 0;
  std::vector<Entry> entries;
};

/// A right pattern extension stored as the positions of its first and last
/// items; the subsequence itself is never materialized.
struct ExtensionRange {
  int lo = 0;
  int hi = 0;

  friend bool operator==(const ExtensionRange& a, const ExtensionRange& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

/// Right pattern extensions per sequence. A sid is listed iff the prefix
/// occurs in it (even with an empty range set), so the entry count is the
/// prefix's support.
struct ExtensionIndex {
  using Entry = std::pair<int, std::vector<ExtensionRange>>;

  std::vector<Entry> entries;

  int support() const { return static_cast<int>(entries.size()); }
};

/// The scan may stop early in a sequence once a recorded match can only be
/// followed by extension windows contained in one already recorded. Disabled
/// only to cross-check that the cut does not change mining results.
enum class RedundancyCut { enabled, disabled };

/// Depth-0 index: {(sid, [1, #s])} for every sequence.
AllOccIndex initial_index(const SequenceDatabase& db);

/// Incremental occurrence computation: extends every interval of `prev` by
/// `last_item` within its gap window. `depth` is the length of the extended
/// prefix; at depth 1 the scan window is the whole sequence. Sequences with
/// no new occurrence are dropped.
AllOccIndex extend_index(const SequenceDatabase& db, const AllOccIndex& prev, ItemId last_item,
                         int depth, const GapSpec& gap,
                         RedundancyCut cut = RedundancyCut::enabled);

/// Extends the index by sigma's last item, then derives the extension window
/// (jm+M+1, min(jm+N+1, #s)) of every occurrence. Windows with lo > hi are
/// skipped but the sid entry is kept, so support stays the entry count.
std::pair<AllOccIndex, ExtensionIndex> right_extensions(const SequenceDatabase& db,
                                                        const AllOccIndex& prev,
                                                        std::span<const ItemId> sigma,
                                                        const GapSpec& gap,
                                                        RedundancyCut cut = RedundancyCut::enabled);

/// Materializes the items of one stored extension window.
std::vector<ItemId> decode_range(const SequenceDatabase& db, int sid, ExtensionRange range);

// Debug dump formats used by golden tests: one line per sid,
// "sid: [j1,jm] [j1,jm]" resp. "sid: (lo,hi) (lo,hi)", 1-based.
std::string dump(const AllOccIndex& index);
std::string dump(const ExtensionIndex& index);

}  // namespace gapseq
