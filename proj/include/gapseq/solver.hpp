#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "gapseq/constraint.hpp"

// Minimal CSP kernel for the pattern variables <P_1..P_ell>: depth-first
// search with chronological backtracking, epsilon padding for short patterns,
// and the auxiliary size/membership constraints.

namespace gapseq {

struct AuxConstraint {
  enum class Kind { min_size, max_size, membership };

  Kind kind = Kind::min_size;
  int size_bound = 0;               // min_size / max_size
  std::vector<ItemId> items;        // membership targets
  int min_count = 0;                // membership: each item at least this often
  std::optional<int> max_count;     // membership: at most this often; absent = unbounded

  static AuxConstraint min_size(int bound) {
    AuxConstraint c;
    c.kind = Kind::min_size;
    c.size_bound = bound;
    return c;
  }
  static AuxConstraint max_size(int bound) {
    AuxConstraint c;
    c.kind = Kind::max_size;
    c.size_bound = bound;
    return c;
  }
  static AuxConstraint membership(std::vector<ItemId> items, int lo, std::optional<int> hi) {
    AuxConstraint c;
    c.kind = Kind::membership;
    c.items = std::move(items);
    c.min_count = lo;
    c.max_count = hi;
    return c;
  }
};

struct PatternModel {
  int ell = 0;  // number of pattern variables
  GapSpec gap;
  int minsup = 1;  // absolute count
  std::vector<AuxConstraint> aux;
  RedundancyCut cut = RedundancyCut::enabled;  // verification knob, normally enabled

  /// ell defaults to the longest sequence; an override can only shrink it
  /// (and thereby bounds the length of mined patterns).
  static PatternModel for_db(const SequenceDatabase& db, int minsup, GapSpec gap,
                             std::optional<int> ell_override = std::nullopt);
};

struct SearchStats {
  std::int64_t nodes = 0;         // value assignments tried, failed ones included
  std::int64_t propagations = 0;  // filter invocations
  std::int64_t patterns = 0;      // emitted solutions
  bool aborted = false;           // interrupted before exhausting the search
};

struct MinedPattern {
  std::vector<ItemId> items;
  int support = 0;
};

/// Receives each solution in canonical search order: the epsilon-free item
/// prefix and its support.
using PatternSink = std::function<void(std::span<const ItemId>, int)>;

/// Polled once per search node; returning true stops the search with partial
/// results and sets SearchStats::aborted.
using InterruptFn = std::function<bool()>;

/// True iff the (epsilon-free) pattern satisfies every auxiliary constraint.
bool check_aux(std::span<const ItemId> pattern, std::span<const AuxConstraint> aux);

/// Throws std::invalid_argument on malformed models (minsup < 1, max_size 0,
/// min_size beyond ell, membership bounds out of order or unknown items).
void validate(const PatternModel& model, const SequenceDatabase& db);

/// Enumerates every frequent pattern of length 1..ell satisfying the
/// auxiliary constraints. Deterministic: variables are assigned in index
/// order and values tried epsilon first, then items by ascending id, so two
/// runs emit identical pattern streams.
SearchStats solve(const SequenceDatabase& db, const PatternModel& model, const PatternSink& sink,
                  const InterruptFn& interrupt = {});

/// Convenience wrapper collecting the emitted patterns.
std::vector<MinedPattern> mine(const SequenceDatabase& db, const PatternModel& model,
                               SearchStats* stats_out = nullptr);

}  // namespace gapseq
