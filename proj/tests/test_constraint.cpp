#include "doctest.h"

#include "gapseq/constraint.hpp"
#include "gapseq/oracle.hpp"
#include "test_util.hpp"

using namespace gapseq;

namespace {

// Builds the occurrence stack for sigma and runs one filter step on its last
// variable, against a fresh item+epsilon next domain.
struct FilterRun {
  std::vector<AllOccIndex> occ_stack;
  FilterOutcome outcome;
};

FilterRun run_filter(const SequenceDatabase& db, std::span<const ItemId> sigma, int minsup,
                     const GapSpec& gap, bool last_variable = false) {
  FilterRun r;
  r.occ_stack.push_back(initial_index(db));
  for (std::size_t j = 1; j + 1 <= sigma.size(); ++j) {
    FilterOutcome step = filter(db, sigma.first(j), static_cast<int>(j), nullptr, 1, gap, r.occ_stack);
    REQUIRE(step.frequent);
  }
  Domain next = Domain::items_and_epsilon(db.catalog().size());
  r.outcome = filter(db, sigma, static_cast<int>(sigma.size()), last_variable ? nullptr : &next,
                     minsup, gap, r.occ_stack);
  return r;
}

ExtensionIndex ext_of(const SequenceDatabase& db, std::span<const ItemId> sigma,
                      const GapSpec& gap) {
  AllOccIndex idx = initial_index(db);
  ExtensionIndex ext;
  for (std::size_t j = 1; j <= sigma.size(); ++j) {
    auto [next, next_ext] = right_extensions(db, idx, sigma.first(j), gap);
    idx = std::move(next);
    ext = std::move(next_ext);
  }
  return ext;
}

}  // namespace

TEST_CASE("locally frequent items") {
  SequenceDatabase db = testutil::sdb1();

  SUBCASE("extensions of <AC> under gap[0,1] at minsup 2") {
    ExtensionIndex ext = ext_of(db, testutil::ids(db, "AC"), GapSpec::bounded(0, 1));
    ItemSupportMap rf = locally_frequent_items(db, ext, 2);
    ItemSupportMap expected{{*db.catalog().find("B"), 3}, {*db.catalog().find("C"), 2}};
    CHECK(rf == expected);
  }

  SUBCASE("extensions of <A> under gap[1,2] keep only B and C") {
    ExtensionIndex ext = ext_of(db, testutil::ids(db, "A"), GapSpec::bounded(1, 2));
    ItemSupportMap rf = locally_frequent_items(db, ext, 2);
    REQUIRE(rf.size() == 2);
    CHECK(rf.count(*db.catalog().find("B")) == 1);
    CHECK(rf.count(*db.catalog().find("C")) == 1);
    CHECK(rf.count(*db.catalog().find("A")) == 0);
    CHECK(rf.count(*db.catalog().find("D")) == 0);
    CHECK(rf.count(*db.catalog().find("E")) == 0);
  }

  SUBCASE("unattainable threshold yields the empty map") {
    ExtensionIndex ext = ext_of(db, testutil::ids(db, "A"), GapSpec::bounded(0, 1));
    CHECK(locally_frequent_items(db, ext, db.size() + 1).empty());
  }

  SUBCASE("minsup below one is rejected") {
    ExtensionIndex ext;
    CHECK_THROWS_AS(locally_frequent_items(db, ext, 0), std::invalid_argument);
  }
}

TEST_CASE("support_of") {
  SequenceDatabase db = testutil::sdb1();
  GapSpec gap01 = GapSpec::bounded(0, 1);

  CHECK(support_of(ext_of(db, testutil::ids(db, "AC"), gap01)) == 4);
  CHECK(support_of(ext_of(db, testutil::ids(db, "EA"), gap01)) == 0);

  SequenceDatabase doubled = replicate(parse_plain(testutil::kSdb1Plain), 2);
  auto ac = testutil::ids(doubled, "AC");
  CHECK(support_of(ext_of(doubled, ac, gap01)) == 8);
  CHECK(oracle::support(ac, doubled, gap01) == 8);
}

TEST_CASE("filter on hand-checked cases") {
  SequenceDatabase db = testutil::sdb1();

  SUBCASE("sigma=<A> under gap[1,2] prunes D(P2) down to {B, C, epsilon}") {
    FilterRun r = run_filter(db, testutil::ids(db, "A"), 2, GapSpec::bounded(1, 2));
    REQUIRE(r.outcome.frequent);
    REQUIRE(r.outcome.pruned_domain.has_value());
    const Domain& d2 = *r.outcome.pruned_domain;
    CHECK(d2.has_epsilon());
    CHECK(d2.contains(*db.catalog().find("B")));
    CHECK(d2.contains(*db.catalog().find("C")));
    CHECK_FALSE(d2.contains(*db.catalog().find("A")));
    CHECK_FALSE(d2.contains(*db.catalog().find("D")));
    CHECK_FALSE(d2.contains(*db.catalog().find("E")));
    CHECK(d2.size() == 3);
    CHECK(r.occ_stack.size() == 2);  // depth-1 index pushed
  }

  SUBCASE("sigma=<AB> under gap[0,1] is infrequent at minsup 3") {
    FilterRun r = run_filter(db, testutil::ids(db, "AB"), 3, GapSpec::bounded(0, 1));
    CHECK_FALSE(r.outcome.frequent);
    CHECK_FALSE(r.outcome.pruned_domain.has_value());
    CHECK(r.occ_stack.size() == 2);  // failed step pushes nothing
  }

  SUBCASE("sigma=<ACB> under gap[0,1] is frequent at minsup 3") {
    FilterRun r = run_filter(db, testutil::ids(db, "ACB"), 3, GapSpec::bounded(0, 1));
    CHECK(r.outcome.frequent);
    CHECK(r.outcome.support == 3);
  }

  SUBCASE("no pruning on the last variable") {
    FilterRun r = run_filter(db, testutil::ids(db, "AC"), 2, GapSpec::bounded(0, 1), true);
    CHECK(r.outcome.frequent);
    CHECK(r.outcome.support == 4);
    CHECK_FALSE(r.outcome.pruned_domain.has_value());
  }

  SUBCASE("contract violations") {
    std::vector<AllOccIndex> stack;
    auto a = testutil::ids(db, "A");
    CHECK_THROWS_AS(filter(db, a, 1, nullptr, 1, GapSpec::bounded(0, 1), stack),
                    std::invalid_argument);  // stack missing depth 0
    stack.push_back(initial_index(db));
    std::vector<ItemId> eps{kEpsilon};
    CHECK_THROWS_AS(filter(db, eps, 1, nullptr, 1, GapSpec::bounded(0, 1), stack),
                    std::invalid_argument);
  }
}

TEST_CASE("filtering is exactly forward checking") {
  // A non-epsilon value survives iff appending it keeps the pattern frequent
  // (oracle-checked), and epsilon always survives.
  std::mt19937 rng(53);
  for (int round = 0; round < 25; ++round) {
    SequenceDatabase db = testutil::random_db(rng, 7, 8, 3);
    GapSpec gap = round % 4 == 0 ? GapSpec::unconstrained()
                                 : GapSpec::bounded(round % 2, round % 2 + round % 3);
    int minsup = 1 + round % 3;
    auto frequent = oracle::mine_naive(db, minsup, gap, 2);
    for (const auto& [sigma, sup] : frequent) {
      (void)sup;
      FilterRun r = run_filter(db, sigma, minsup, gap);
      REQUIRE(r.outcome.frequent);
      const Domain& pruned = *r.outcome.pruned_domain;
      CHECK(pruned.has_epsilon());
      for (ItemId v = 0; v < db.catalog().size(); ++v) {
        std::vector<ItemId> grown = sigma;
        grown.push_back(v);
        bool keeps = oracle::support(grown, db, gap) >= minsup;
        CAPTURE(v);
        CHECK(pruned.contains(v) == keeps);
      }
    }
  }
}

TEST_CASE("local supports equal the grown pattern supports") {
  std::mt19937 rng(59);
  for (int round = 0; round < 25; ++round) {
    SequenceDatabase db = testutil::random_db(rng, 6, 8, 3);
    GapSpec gap = round % 3 == 2 ? GapSpec::unconstrained() : GapSpec::bounded(0, round % 4);
    auto frequent = oracle::mine_naive(db, 1, gap, 2);
    for (const auto& [sigma, sup] : frequent) {
      (void)sup;
      ExtensionIndex ext = ext_of(db, sigma, gap);
      ItemSupportMap counts = locally_frequent_items(db, ext, 1);
      for (ItemId v = 0; v < db.catalog().size(); ++v) {
        std::vector<ItemId> grown = sigma;
        grown.push_back(v);
        int truth = oracle::support(grown, db, gap);
        auto it = counts.find(v);
        CHECK((it == counts.end() ? 0 : it->second) == truth);
      }
    }
  }
}
