#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gapseq {

/// Dense item identifier, 0..d-1 within one database catalog.
using ItemId = std::int32_t;

/// Bidirectional token <-> dense id mapping. Ids are assigned in
/// first-appearance order and never change afterwards.
class ItemCatalog {
 public:
  ItemId intern(std::string_view token);
  std::optional<ItemId> find(std::string_view token) const;
  const std::string& token(ItemId id) const;
  int size() const { return static_cast<int>(tokens_.size()); }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, ItemId> index_;
};

/// One database row: an ordered list of items. Positions are 1-based in
/// all public contracts (item_at, occurrence intervals, dumps).
struct Sequence {
  int sid = 0;
  std::vector<ItemId> items;

  int length() const { return static_cast<int>(items.size()); }
  ItemId item_at(int pos) const { return items[static_cast<std::size_t>(pos - 1)]; }
};

struct DbStats {
  int num_sequences = 0;
  int num_items = 0;
  double avg_length = 0.0;
  int max_length = 0;
};

/// Immutable store of sequences plus the item catalog. Safe for concurrent
/// reads once built.
class SequenceDatabase {
 public:
  SequenceDatabase() = default;
  SequenceDatabase(std::vector<Sequence> sequences, ItemCatalog catalog);

  int size() const { return static_cast<int>(sequences_.size()); }
  bool empty() const { return sequences_.empty(); }
  int max_length() const { return max_length_; }
  const ItemCatalog& catalog() const { return catalog_; }
  const std::vector<Sequence>& sequences() const { return sequences_; }

  bool contains_sid(int sid) const { return pos_by_sid_.count(sid) != 0; }
  const Sequence& operator[](int sid) const;

 private:
  std::vector<Sequence> sequences_;
  ItemCatalog catalog_;
  std::unordered_map<int, int> pos_by_sid_;
  int max_length_ = 0;
};

/// Incremental construction; sids default to insertion order (0,1,2,...)
/// but may be set explicitly as long as they stay unique.
class SequenceDatabaseBuilder {
 public:
  ItemId intern(std::string_view token) { return catalog_.intern(token); }
  int add(std::vector<ItemId> items);
  int add(int sid, std::vector<ItemId> items);
  int add_tokens(const std::vector<std::string>& tokens);
  SequenceDatabase build();

 private:
  std::vector<Sequence> sequences_;
  ItemCatalog catalog_;
};

// Loaders. Both intern tokens in first-appearance order and assign sids
// 0,1,2,... by line order. Parse failures throw std::runtime_error with the
// offending line number.
SequenceDatabase parse_spmf(std::istream& in);
SequenceDatabase parse_plain(std::istream& in);
SequenceDatabase parse_spmf(std::string_view text);
SequenceDatabase parse_plain(std::string_view text);

/// k copies of every sequence under fresh sids 0..k*m-1; catalog unchanged.
SequenceDatabase replicate(const SequenceDatabase& db, int k);

DbStats stats(const SequenceDatabase& db);

/// Plain-format serialization; re-parsing the result reproduces the database
/// exactly (tokens, interning order, 0-based sids).
std::string to_plain(const SequenceDatabase& db);

}  // namespace gapseq
