#include "gapseq/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace gapseq::oracle {

namespace {

bool match_from(std::span<const ItemId> pattern, std::size_t idx, const Sequence& seq,
                int prev_pos, const GapSpec& gap) {
  if (idx == pattern.size()) return true;
  int n = seq.length();
  int lo = idx == 0 ? 1 : gap.window_lo(prev_pos);
  int hi = idx == 0 ? n : gap.window_hi(prev_pos, n);
  for (int k = lo; k <= hi; ++k) {
    if (seq.item_at(k) == pattern[idx] && match_from(pattern, idx + 1, seq, k, gap)) return true;
  }
  return false;
}

void collect_occurrences(std::span<const ItemId> pattern, std::size_t idx, const Sequence& seq,
                         int j1, int prev_pos, const GapSpec& gap,
                         std::set<std::pair<int, int>>& out) {
  if (idx == pattern.size()) {
    out.emplace(j1, prev_pos);
    return;
  }
  int n = seq.length();
  int lo = idx == 0 ? 1 : gap.window_lo(prev_pos);
  int hi = idx == 0 ? n : gap.window_hi(prev_pos, n);
  for (int k = lo; k <= hi; ++k) {
    if (seq.item_at(k) != pattern[idx]) continue;
    collect_occurrences(pattern, idx + 1, seq, idx == 0 ? k : j1, k, gap, out);
  }
}

}  // namespace

bool matches(std::span<const ItemId> pattern, const Sequence& seq, const GapSpec& gap) {
  if (pattern.empty()) throw std::invalid_argument("pattern must be non-empty");
  return match_from(pattern, 0, seq, 0, gap);
}

std::vector<Occurrence> all_occurrences(std::span<const ItemId> pattern, const Sequence& seq,
                                        const GapSpec& gap) {
  if (pattern.empty()) throw std::invalid_argument("pattern must be non-empty");
  std::set<std::pair<int, int>> found;
  collect_occurrences(pattern, 0, seq, 0, 0, gap, found);
  std::vector<Occurrence> out;
  out.reserve(found.size());
  for (auto [j1, jm] : found) out.push_back(Occurrence{j1, jm});
  return out;
}

std::vector<int> cover(std::span<const ItemId> pattern, const SequenceDatabase& db,
                       const GapSpec& gap) {
  std::vector<int> sids;
  for (const Sequence& s : db.sequences()) {
    if (matches(pattern, s, gap)) sids.push_back(s.sid);
  }
  return sids;
}

int support(std::span<const ItemId> pattern, const SequenceDatabase& db, const GapSpec& gap) {
  return static_cast<int>(cover(pattern, db, gap).size());
}

std::set<std::vector<ItemId>> right_extensions_naive(std::span<const ItemId> pattern,
                                                     const Sequence& seq, const GapSpec& gap) {
  const int n = seq.length();
  auto subseq = [&](int lo, int hi) {
    std::vector<ItemId> sub;
    if (lo <= hi && hi <= n) {
      for (int p = lo; p <= hi; ++p) sub.push_back(seq.item_at(p));
    }
    return sub;  // empty when the window falls outside the sequence
  };

  std::vector<Occurrence> occs = all_occurrences(pattern, seq, gap);
  std::set<std::vector<ItemId>> out;
  if (occs.empty()) return out;

  if (gap.spans_sequence(n)) {
    // Every window reaches the end of s, so they aggregate into the single
    // window started from the minimal jm.
    int min_jm = occs.front().last;
    for (const Occurrence& o : occs) min_jm = std::min(min_jm, o.last);
    std::vector<ItemId> sub = subseq(gap.window_lo(min_jm), gap.window_hi(min_jm, n));
    if (!sub.empty()) out.insert(std::move(sub));
    return out;
  }

  for (const Occurrence& o : occs) {
    std::vector<ItemId> sub = subseq(gap.window_lo(o.last), gap.window_hi(o.last, n));
    if (!sub.empty()) out.insert(std::move(sub));
  }
  return out;
}

namespace {

void mine_rec(const SequenceDatabase& db, int minsup, const GapSpec& gap, int maxlen,
              std::vector<ItemId>& prefix, std::map<std::vector<ItemId>, int>& out) {
  for (ItemId v = 0; v < db.catalog().size(); ++v) {
    prefix.push_back(v);
    int sup = support(prefix, db, gap);
    if (sup >= minsup) {
      out.emplace(prefix, sup);
      if (static_cast<int>(prefix.size()) < maxlen) mine_rec(db, minsup, gap, maxlen, prefix, out);
    }
    prefix.pop_back();
  }
}

}  // namespace

std::map<std::vector<ItemId>, int> mine_naive(const SequenceDatabase& db, int minsup,
                                              const GapSpec& gap, int maxlen) {
  if (maxlen < 1) throw std::invalid_argument("maxlen must be >= 1");
  if (minsup < 1) throw std::invalid_argument("minsup must be >= 1");
  std::map<std::vector<ItemId>, int> out;
  std::vector<ItemId> prefix;
  mine_rec(db, minsup, gap, maxlen, prefix, out);
  return out;
}

}  // namespace gapseq::oracle
