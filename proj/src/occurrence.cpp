#include "gapseq/occurrence.hpp"

#include <algorithm>
#include <stdexcept>

namespace gapseq {

AllOccIndex initial_index(const SequenceDatabase& db) {
  AllOccIndex out;
  out.depth = 0;
  out.entries.reserve(db.sequences().size());
  for (const Sequence& s : db.sequences()) {
    out.entries.emplace_back(s.sid, std::vector<Occurrence>{Occurrence{1, s.length()}});
  }
  return out;
}

AllOccIndex extend_index(const SequenceDatabase& db, const AllOccIndex& prev, ItemId last_item,
                         int depth, const GapSpec& gap, RedundancyCut cut) {
  if (depth != prev.depth + 1) throw std::invalid_argument("extend_index: depth mismatch");

  AllOccIndex out;
  out.depth = depth;
  for (const auto& [sid, occs] : prev.entries) {
    const Sequence& s = db[sid];
    const int n = s.length();
    std::vector<Occurrence> fresh;
    bool redundant = false;
    for (const Occurrence& occ : occs) {
      if (redundant) break;
      const int lo = depth == 1 ? 1 : gap.window_lo(occ.last);
      const int hi = depth == 1 ? n : gap.window_hi(occ.last, n);
      for (int k = lo; k <= hi && !redundant; ++k) {
        if (s.item_at(k) != last_item) continue;
        fresh.push_back(depth == 1 ? Occurrence{k, k} : Occurrence{occ.first, k});
        // Once a match lands in a window that reaches the end of s (or the
        // gap spans s entirely), every later match in this sequence yields
        // an extension window inside one already recorded.
        if (cut == RedundancyCut::enabled &&
            ((hi == n && depth > 1) || gap.spans_sequence(n))) {
          redundant = true;
        }
      }
    }
    if (!fresh.empty()) out.entries.emplace_back(sid, std::move(fresh));
  }
  return out;
}

std::pair<AllOccIndex, ExtensionIndex> right_extensions(const SequenceDatabase& db,
                                                        const AllOccIndex& prev,
                                                        std::span<const ItemId> sigma,
                                                        const GapSpec& gap, RedundancyCut cut) {
  if (sigma.empty()) throw std::invalid_argument("right_extensions: empty prefix");

  const int depth = static_cast<int>(sigma.size());
  AllOccIndex index = extend_index(db, prev, sigma.back(), depth, gap, cut);

  ExtensionIndex ext;
  ext.entries.reserve(index.entries.size());
  for (const auto& [sid, occs] : index.entries) {
    const int n = db[sid].length();
    std::vector<ExtensionRange> ranges;
    for (const Occurrence& occ : occs) {
      ExtensionRange r{gap.window_lo(occ.last), gap.window_hi(occ.last, n)};
      if (r.lo > r.hi) continue;
      if (std::find(ranges.begin(), ranges.end(), r) == ranges.end()) ranges.push_back(r);
    }
    ext.entries.emplace_back(sid, std::move(ranges));  // kept even when empty
  }
  return {std::move(index), std::move(ext)};
}

std::vector<ItemId> decode_range(const SequenceDatabase& db, int sid, ExtensionRange range) {
  const Sequence& s = db[sid];
  if (range.lo < 1 || range.lo > range.hi || range.hi > s.length())
    throw std::out_of_range("range (" + std::to_string(range.lo) + "," + std::to_string(range.hi) +
                            ") outside sequence " + std::to_string(sid));
  std::vector<ItemId> out;
  out.reserve(static_cast<std::size_t>(range.hi - range.lo + 1));
  for (int p = range.lo; p <= range.hi; ++p) out.push_back(s.item_at(p));
  return out;
}

std::string dump(const AllOccIndex& index) {
  std::string out;
  for (const auto& [sid, occs] : index.entries) {
    out += std::to_string(sid) + ":";
    for (const Occurrence& o : occs) {
      out += " [" + std::to_string(o.first) + "," + std::to_string(o.last) + "]";
    }
    out += '\n';
  }
  return out;
}

std::string dump(const ExtensionIndex& index) {
  std::string out;
  for (const auto& [sid, ranges] : index.entries) {
    out += std::to_string(sid) + ":";
    for (const ExtensionRange& r : ranges) {
      out += " (" + std::to_string(r.lo) + "," + std::to_string(r.hi) + ")";
    }
    out += '\n';
  }
  return out;
}

}  // namespace gapseq
