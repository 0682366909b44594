#pragma once

#include <vector>

#include "gapseq/sdb.hpp"

namespace gapseq {

/// End-of-pattern sentinel filling trailing pattern variables. Not an item;
/// deliberately outside the dense id range 0..d-1.
constexpr ItemId kEpsilon = -1;

/// Value set of one pattern variable over {epsilon} union the item range.
class Domain {
 public:
  Domain() = default;

  static Domain all_items(int num_items) {
    Domain d(num_items);
    for (int v = 0; v < num_items; ++v) d.insert(v);
    return d;
  }
  static Domain items_and_epsilon(int num_items) {
    Domain d = all_items(num_items);
    d.insert(kEpsilon);
    return d;
  }
  static Domain epsilon_only(int num_items) {
    Domain d(num_items);
    d.insert(kEpsilon);
    return d;
  }

  int universe() const { return static_cast<int>(mask_.size()) - 1; }
  int size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool contains(ItemId v) const { return mask_[slot(v)] != 0; }
  bool has_epsilon() const { return contains(kEpsilon); }

  void insert(ItemId v) {
    if (!mask_[slot(v)]) {
      mask_[slot(v)] = 1;
      ++size_;
    }
  }
  void remove(ItemId v) {
    if (mask_[slot(v)]) {
      mask_[slot(v)] = 0;
      --size_;
    }
  }

  friend bool operator==(const Domain& a, const Domain& b) { return a.mask_ == b.mask_; }

 private:
  explicit Domain(int num_items) : mask_(static_cast<std::size_t>(num_items) + 1, 0) {}

  // slot 0 holds epsilon, slot v+1 holds item v
  std::size_t slot(ItemId v) const { return static_cast<std::size_t>(v + 1); }

  std::vector<char> mask_;
  int size_ = 0;
};

}  // namespace gapseq
