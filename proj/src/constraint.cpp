#include "gapseq/constraint.hpp"

#include <stdexcept>

namespace gapseq {

int support_of(const ExtensionIndex& ext) { return ext.support(); }

ItemSupportMap locally_frequent_items(const SequenceDatabase& db, const ExtensionIndex& ext,
                                      int minsup) {
  if (minsup < 1) throw std::invalid_argument("minsup must be >= 1");

  const int d = db.catalog().size();
  std::vector<int> count(static_cast<std::size_t>(d), 0);
  std::vector<int> mark(static_cast<std::size_t>(d), -1);  // last sid generation seen per item
  int gen = 0;
  for (const auto& [sid, ranges] : ext.entries) {
    const Sequence& s = db[sid];
    for (const ExtensionRange& r : ranges) {
      for (int p = r.lo; p <= r.hi; ++p) {
        const ItemId v = s.item_at(p);
        if (mark[static_cast<std::size_t>(v)] != gen) {
          mark[static_cast<std::size_t>(v)] = gen;
          ++count[static_cast<std::size_t>(v)];
        }
      }
    }
    ++gen;
  }

  ItemSupportMap out;
  for (ItemId v = 0; v < d; ++v) {
    if (count[static_cast<std::size_t>(v)] >= minsup) out.emplace(v, count[static_cast<std::size_t>(v)]);
  }
  return out;
}

FilterOutcome filter(const SequenceDatabase& db, std::span<const ItemId> sigma, int j,
                     const Domain* next_domain, int minsup, const GapSpec& gap,
                     std::vector<AllOccIndex>& occ_stack, RedundancyCut cut) {
  if (sigma.empty()) throw std::invalid_argument("filter: sigma must be non-empty");
  if (sigma.size() != static_cast<std::size_t>(j)) throw std::invalid_argument("filter: |sigma| != j");
  if (occ_stack.size() != static_cast<std::size_t>(j)) throw std::invalid_argument("filter: occurrence stack depth mismatch");
  if (sigma.back() == kEpsilon) throw std::invalid_argument("filter: sigma must not end in epsilon");

  auto [index, ext] = right_extensions(db, occ_stack.back(), sigma, gap, cut);

  FilterOutcome out;
  out.support = support_of(ext);
  if (out.support < minsup) return out;
  out.frequent = true;

  if (next_domain != nullptr) {
    const ItemSupportMap rf = locally_frequent_items(db, ext, minsup);
    Domain pruned = *next_domain;
    for (ItemId v = 0; v < db.catalog().size(); ++v) {
      if (pruned.contains(v) && !rf.contains(v)) pruned.remove(v);
    }
    // epsilon is never pruned by this constraint
    out.pruned_domain = std::move(pruned);
  }

  occ_stack.push_back(std::move(index));
  return out;
}

}  // namespace gapseq
