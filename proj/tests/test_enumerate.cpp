#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "ucycle/enumerate.hpp"

using namespace ucycle;

namespace {

ExactRational q(std::int64_t p, std::int64_t r) { return {BigCount(p), BigCount(r)}; }

EnumerateOptions opts(unsigned workers, std::uint64_t chunks) { return {workers, chunks, kDefaultWorkCap}; }

}  // namespace

TEST_CASE("small exact probabilities", "[enumerate]") {
  CHECK(exact_probability(2, 2, 2, UKind::cycle).probability == q(1, 6));
  CHECK(exact_probability(3, 2, 4, UKind::cycle).probability == q(3, 70));
  auto r = exact_probability(4, 2, 6, UKind::word);
  CHECK(r.probability == q(355, 8008));
  CHECK(r.total == 8008);
  CHECK(r.favorable == 355);
  CHECK(r.params.s == 6);
}

TEST_CASE("favorable counts match brute force", "[enumerate][oracle]") {
  for (auto [n, k] : {std::pair{2, 2}, {3, 2}, {2, 3}, {4, 2}}) {
    int universe = static_cast<int>(oracle::ipow(k, n));
    for (int s = 0; s <= universe; ++s) {
      if (n == 4 && s > 6) break;  // brute force gets slow past here
      auto [cycles, words] = oracle::favorable_counts(n, k, s);
      INFO("n=" << n << " k=" << k << " s=" << s);
      REQUIRE(exact_probability(n, k, s, UKind::cycle, opts(1, 3)).favorable == cycles);
      REQUIRE(exact_probability(n, k, s, UKind::word, opts(1, 3)).favorable == words);
    }
  }
}

TEST_CASE("one removal", "[enumerate][property]") {
  for (auto [n, k] : {std::pair{2, 2}, {3, 2}, {5, 2}, {2, 3}, {3, 3}, {2, 4}}) {
    auto c = exact_probability(n, k, 1, UKind::cycle);
    auto w = exact_probability(n, k, 1, UKind::word);
    CHECK(c.favorable == k);  // exactly the loop words
    CHECK(w.probability == ExactRational(1));
  }
}

TEST_CASE("chunking does not change counts", "[enumerate][property]") {
  for (auto kind : {UKind::cycle, UKind::word}) {
    auto base = exact_probability(4, 2, 5, kind, opts(1, 1));
    for (std::uint64_t chunks : {3u, 7u, 100u, 5000u}) CHECK(exact_probability(4, 2, 5, kind, opts(1, chunks)).favorable == base.favorable);
    for (unsigned workers : {2u, 4u}) CHECK(exact_probability(4, 2, 5, kind, opts(workers, 11)).favorable == base.favorable);
  }
}

TEST_CASE("chunk ranges", "[enumerate]") {
  CHECK(count_favorable_chunk(3, 2, 2, UKind::word, 5, 5) == 0);
  auto half = binomial(8, 2) / 2;
  auto lo = count_favorable_chunk(3, 2, 2, UKind::word, 0, half);
  auto hi = count_favorable_chunk(3, 2, 2, UKind::word, half, binomial(8, 2));
  CHECK(lo + hi == 20);
  CHECK_THROWS_AS(count_favorable_chunk(3, 2, 2, UKind::word, 4, 3), InvalidArgument);
  CHECK_THROWS_AS(count_favorable_chunk(3, 2, 2, UKind::word, 0, 29), InvalidArgument);
}

TEST_CASE("serial visitor sees the same sets", "[enumerate]") {
  std::vector<std::vector<Code>> seen;
  for_each_favorable(3, 2, 2, UKind::cycle, [&](std::span<const Code> r) { seen.emplace_back(r.begin(), r.end()); });
  // colex order: the 2-cycle 010/101, then the two loops
  CHECK(seen == std::vector<std::vector<Code>>{{2, 5}, {0, 7}});
}

TEST_CASE("tables", "[enumerate]") {
  auto cells = probability_table(2, 3, UKind::word, 1, 3);
  REQUIRE(cells.size() == 3);
  CHECK(cells[0].result->probability == ExactRational(1));
  CHECK(cells[1].result->probability == q(5, 6));
  CHECK(cells[2].result->probability == q(5, 7));

  auto capped = probability_table(3, 3, UKind::cycle, 1, 3, {1, 0, 2000});
  CHECK(capped[0].result.has_value());
  CHECK(capped[1].result.has_value());
  CHECK_FALSE(capped[2].result.has_value());
  CHECK_FALSE(capped[2].error.empty());
}

TEST_CASE("work cap and argument checks", "[enumerate]") {
  CHECK_THROWS_AS(exact_probability(4, 4, 10, UKind::word), WorkCapExceeded);
  CHECK_THROWS_AS(exact_probability(3, 2, 4, UKind::word, {1, 0, 69}), WorkCapExceeded);
  CHECK_NOTHROW(exact_probability(3, 2, 4, UKind::word, {1, 0, 70}));
  CHECK_THROWS_AS(exact_probability(3, 2, 9, UKind::word), InvalidArgument);
  CHECK_THROWS_AS(exact_probability(1, 2, 1, UKind::word), InvalidArgument);
}

TEST_CASE("removing everything or nothing", "[enumerate]") {
  CHECK(exact_probability(3, 2, 0, UKind::cycle).probability == ExactRational(1));
  CHECK(exact_probability(3, 2, 8, UKind::word).probability == ExactRational(0));
  CHECK(exact_probability(3, 2, 6, UKind::cycle).probability == ExactRational(0));
}
