#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace gapseq {

/// The gap[M,N] constraint: for consecutive matched positions j_k, j_{k+1},
/// M <= j_{k+1} - j_k - 1 <= N. An absent N means unbounded, which behaves
/// as N >= #s for every sequence; the arithmetic j_m+N+1 is never evaluated
/// for it.
struct GapSpec {
  int min_gap = 0;
  std::optional<int> max_gap;  // nullopt: unbounded

  static GapSpec bounded(int m, int n) {
    if (m < 0 || n < m) throw std::invalid_argument("gap bounds require 0 <= M <= N");
    return GapSpec{m, n};
  }
  static GapSpec min_only(int m) {
    if (m < 0) throw std::invalid_argument("minimum gap must be >= 0");
    return GapSpec{m, std::nullopt};
  }
  static GapSpec unconstrained() { return GapSpec{0, std::nullopt}; }

  bool is_unbounded() const { return !max_gap.has_value(); }

  /// True when N >= #s, i.e. any window started inside s reaches its end.
  bool spans_sequence(int seq_len) const { return !max_gap || *max_gap >= seq_len; }

  /// First position eligible to follow a match ending at jm (1-based).
  int window_lo(int jm) const { return jm + min_gap + 1; }

  /// Last eligible position: min(jm+N+1, #s), or #s when unbounded.
  int window_hi(int jm, int seq_len) const {
    if (!max_gap) return seq_len;
    long long hi = static_cast<long long>(jm) + *max_gap + 1;
    return hi < seq_len ? static_cast<int>(hi) : seq_len;
  }
};

/// Positions of the first and last matched items of one pattern embedding,
/// 1-based.
struct Occurrence {
  int first = 0;
  int last = 0;

  friend bool operator==(const Occurrence& a, const Occurrence& b) {
    return a.first == b.first && a.last == b.last;
  }
};

}  // namespace gapseq
