#include "gapseq/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gapseq {

PatternModel PatternModel::for_db(const SequenceDatabase& db, int minsup, GapSpec gap,
                                  std::optional<int> ell_override) {
  PatternModel m;
  m.minsup = minsup;
  m.gap = gap;
  m.ell = db.max_length();
  if (ell_override) {
    if (*ell_override < 1) throw std::invalid_argument("ell override must be >= 1");
    m.ell = std::min(m.ell, *ell_override);
  }
  return m;
}

bool check_aux(std::span<const ItemId> pattern, std::span<const AuxConstraint> aux) {
  const int len = static_cast<int>(pattern.size());
  for (const AuxConstraint& c : aux) {
    switch (c.kind) {
      case AuxConstraint::Kind::min_size:
        if (len < c.size_bound) return false;
        break;
      case AuxConstraint::Kind::max_size:
        if (len > c.size_bound) return false;
        break;
      case AuxConstraint::Kind::membership:
        for (ItemId t : c.items) {
          const int n = static_cast<int>(std::count(pattern.begin(), pattern.end(), t));
          if (n < c.min_count || (c.max_count && n > *c.max_count)) return false;
        }
        break;
    }
  }
  return true;
}

void validate(const PatternModel& model, const SequenceDatabase& db) {
  if (model.minsup < 1) throw std::invalid_argument("minsup must be >= 1");
  if (model.ell < 0) throw std::invalid_argument("ell must be >= 0");
  if (model.ell > db.max_length())
    throw std::invalid_argument("ell exceeds the longest sequence length");

  std::optional<int> min_size, max_size;
  for (const AuxConstraint& c : model.aux) {
    switch (c.kind) {
      case AuxConstraint::Kind::min_size:
        if (c.size_bound < 1) throw std::invalid_argument("min-size bound must be >= 1");
        if (c.size_bound > model.ell)
          throw std::invalid_argument("min-size bound exceeds the pattern length ell");
        min_size = c.size_bound;
        break;
      case AuxConstraint::Kind::max_size:
        if (c.size_bound < 1) throw std::invalid_argument("max-size bound must be >= 1");
        max_size = c.size_bound;
        break;
      case AuxConstraint::Kind::membership:
        if (c.min_count < 0) throw std::invalid_argument("membership lower count must be >= 0");
        if (c.max_count && *c.max_count < c.min_count)
          throw std::invalid_argument("membership counts must satisfy l <= u");
        for (ItemId t : c.items) {
          if (t < 0 || t >= db.catalog().size())
            throw std::invalid_argument("membership item " + std::to_string(t) +
                                        " is not in the catalog");
        }
        break;
    }
  }
  if (min_size && max_size && *min_size > *max_size)
    throw std::invalid_argument("min-size bound exceeds max-size bound");
}

namespace {

// Static per-variable domains after the safe aux prunings: min-size removes
// epsilon from the first l_min variables, max-size fixes the tail to epsilon,
// and an excluded membership item disappears from every domain. These never
// change the solution set relative to checking aux on emission.
std::vector<Domain> build_domains(const PatternModel& model, int num_items) {
  std::vector<Domain> domains;
  domains.reserve(static_cast<std::size_t>(model.ell) + 1);
  domains.push_back(Domain());  // index 0 unused; variables are 1-based
  for (int i = 1; i <= model.ell; ++i) {
    domains.push_back(i == 1 ? Domain::all_items(num_items)
                             : Domain::items_and_epsilon(num_items));
  }
  for (const AuxConstraint& c : model.aux) {
    switch (c.kind) {
      case AuxConstraint::Kind::min_size:
        for (int i = 2; i <= std::min(c.size_bound, model.ell); ++i)
          domains[static_cast<std::size_t>(i)].remove(kEpsilon);
        break;
      case AuxConstraint::Kind::max_size:
        for (int i = c.size_bound + 1; i <= model.ell; ++i)
          domains[static_cast<std::size_t>(i)] = Domain::epsilon_only(num_items);
        break;
      case AuxConstraint::Kind::membership:
        if (c.max_count && *c.max_count == 0) {
          for (int i = 1; i <= model.ell; ++i)
            for (ItemId t : c.items) domains[static_cast<std::size_t>(i)].remove(t);
        }
        break;
    }
  }
  return domains;
}

class Search {
 public:
  Search(const SequenceDatabase& db, const PatternModel& model, const PatternSink& sink,
         const InterruptFn& interrupt)
      : db_(db), model_(model), sink_(sink), interrupt_(interrupt) {}

  SearchStats run() {
    if (model_.ell == 0 || db_.empty() || db_.catalog().size() == 0) return stats_;
    static_domains_ = build_domains(model_, db_.catalog().size());
    occ_stack_.push_back(initial_index(db_));
    descend(1, static_domains_[1]);
    return stats_;
  }

 private:
  void emit() {
    if (!check_aux(sigma_, model_.aux)) return;
    ++stats_.patterns;
    if (sink_) sink_(sigma_, support_stack_.back());
  }

  // dom_j: domain of P_j, already narrowed by the parent's filtering.
  void descend(int j, const Domain& dom_j) {
    if (dom_j.has_epsilon()) {
      // Epsilon first: the current prefix is emitted before its extensions.
      // Only reachable for j >= 2 since D(P_1) never holds epsilon; the
      // padding rule makes the remaining variables epsilon implicitly.
      ++stats_.nodes;
      emit();
    }
    for (ItemId v = 0; v < db_.catalog().size() && !stats_.aborted; ++v) {
      if (!dom_j.contains(v)) continue;
      if (interrupt_ && interrupt_()) {
        stats_.aborted = true;
        break;
      }
      ++stats_.nodes;
      sigma_.push_back(v);
      const Domain* next = j < model_.ell ? &static_domains_[static_cast<std::size_t>(j) + 1] : nullptr;
      FilterOutcome outcome =
          filter(db_, sigma_, j, next, model_.minsup, model_.gap, occ_stack_, model_.cut);
      ++stats_.propagations;
      if (outcome.frequent) {
        support_stack_.push_back(outcome.support);
        if (j == model_.ell) {
          emit();  // full-length solution, no epsilon assigned
        } else {
          descend(j + 1, *outcome.pruned_domain);
        }
        support_stack_.pop_back();
        occ_stack_.pop_back();
      }
      sigma_.pop_back();
    }
  }

  const SequenceDatabase& db_;
  const PatternModel& model_;
  const PatternSink& sink_;
  const InterruptFn& interrupt_;

  SearchStats stats_;
  std::vector<Domain> static_domains_;
  std::vector<AllOccIndex> occ_stack_;
  std::vector<ItemId> sigma_;
  std::vector<int> support_stack_;
};

}  // namespace

SearchStats solve(const SequenceDatabase& db, const PatternModel& model, const PatternSink& sink,
                  const InterruptFn& interrupt) {
  validate(model, db);
  Search search(db, model, sink, interrupt);
  return search.run();
}

std::vector<MinedPattern> mine(const SequenceDatabase& db, const PatternModel& model,
                               SearchStats* stats_out) {
  std::vector<MinedPattern> out;
  SearchStats stats = solve(db, model, [&](std::span<const ItemId> items, int support) {
    out.push_back(MinedPattern{std::vector<ItemId>(items.begin(), items.end()), support});
  });
  if (stats_out) *stats_out = stats;
  return out;
}

}  // namespace gapseq
