#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "ucycle/bounds.hpp"
#include "ucycle/universal.hpp"

using namespace ucycle;

namespace {

ExactRational q(std::int64_t p, std::int64_t r) { return {BigCount(p), BigCount(r)}; }

ExactRational oracle_probability(int n, int k, int s, UKind kind) {
  auto [cycles, words] = oracle::favorable_counts(n, k, s);
  auto total = oracle::pascal(16)[static_cast<std::size_t>(oracle::ipow(k, n))][static_cast<std::size_t>(s)];
  return {BigCount(kind == UKind::cycle ? cycles : words), BigCount(total)};
}

}  // namespace

TEST_CASE("cycle removal counts", "[bounds]") {
  CHECK(s_count(3, 3, 2) == 3);
  CHECK(s_count(4, 3, 2) == 6);
  for (int k = 3; k <= 6; ++k)
    for (int n = 3; n <= 5; ++n) CHECK(s_count(n, k, 1) == k);
  CHECK(s_count(3, 3, 0) == 1);
  CHECK(s_count(3, 3, -1) == 0);
  CHECK(s_count(3, 3, 4) == 0);
}

TEST_CASE("general lower bounds", "[bounds]") {
  CHECK(pc_lower_general(3, 3, 2) == q(1, 117));
  CHECK(pc_lower_general(4, 3, 2) == q(1, 540));
  CHECK(pw_lower_general(3, 3, 2) == q(25, 117));
  CHECK(pw_lower_general(4, 3, 1) == ExactRational(1));
  CHECK(pc_lower_general(3, 3, 1) == pc_exact_s1(3, 3));
}

TEST_CASE("circular counts match brute force", "[bounds][oracle]") {
  for (int k = 2; k <= 14; ++k)
    for (int i = 0; i <= k; ++i) {
      INFO("k=" << k << " i=" << i);
      REQUIRE(circular_count(k, i) == oracle::circular_no_adjacent(k, i));
    }
  CHECK_THROWS_AS(circular_count(1, 0), InvalidArgument);
  CHECK(h_count(5, 2) == 6);
}

TEST_CASE("n = 2 ingredients", "[bounds]") {
  CHECK(f_count(3, 2) == 3);
  CHECK(f_count(4, 2) == 8);
  for (int s = -2; s <= 9; ++s) {
    CHECK(g_count(3, s) == 0);
    CHECK(v_count(3, s) == 0);
  }
  CHECK(u_count(3, -1) == 0);
  CHECK(u_count(4, -3) == 0);
  CHECK(pc_lower_n2(3, 2) == q(1, 12));
  CHECK(pw_lower_n2(3, 2) == q(3, 4));
  CHECK(pc_lower_n2(3, 1) == q(1, 3));
  CHECK(pw_lower_n2(3, 1) == ExactRational(1));
}

TEST_CASE("binary ingredients", "[bounds]") {
  for (int n = 5; n <= 9; ++n) {
    CHECK(t_count(n, 1) == 2);
    CHECK(t_count(n, 2) == 2);
  }
  CHECK(t_count(5, 4) == 3);
  CHECK(pc_lower_k2(5, 1) == q(1, 16));
  CHECK(pc_lower_k2(5, 2) == q(2, 496));
  CHECK(pw_lower_k2(5, 1) == ExactRational(1));
}

TEST_CASE("exact values for one and two removals", "[bounds]") {
  CHECK(pc_exact_s2(3, 2) == q(1, 14));
  CHECK(pw_exact_s2(4, 2) == q(13, 30));
  CHECK(pw_exact_s2(2, 3) == q(5, 6));
  CHECK(pc_exact_s2(2, 2) == q(1, 6));
  CHECK(pw_exact_s2(2, 2) == q(5, 6));
  CHECK(pc_exact_s1(5, 2) == q(1, 16));
  CHECK(pw_exact_s1(7, 5) == ExactRational(1));
}

TEST_CASE("exact values match brute force", "[bounds][oracle]") {
  for (auto [n, k] : {std::pair{2, 2}, {3, 2}, {4, 2}, {2, 3}}) {
    INFO("n=" << n << " k=" << k);
    CHECK(pc_exact_s1(n, k) == oracle_probability(n, k, 1, UKind::cycle));
    CHECK(pw_exact_s1(n, k) == oracle_probability(n, k, 1, UKind::word));
    CHECK(pc_exact_s2(n, k) == oracle_probability(n, k, 2, UKind::cycle));
    CHECK(pw_exact_s2(n, k) == oracle_probability(n, k, 2, UKind::word));
  }
}

TEST_CASE("n = 2 bounds never exceed brute force", "[bounds][oracle]") {
  for (int s = 1; s < 9; ++s) {
    INFO("s=" << s);
    CHECK(pc_lower_n2(3, s) <= oracle_probability(2, 3, s, UKind::cycle));
    CHECK(pw_lower_n2(3, s) <= oracle_probability(2, 3, s, UKind::word));
  }
}

TEST_CASE("report and best bound selection", "[bounds]") {
  auto r = bounds_report(3, 3, 2);
  CHECK(r.entry(FormulaId::pc_lower_general).applicable);
  CHECK(r.entry(FormulaId::pc_lower_general).value == q(1, 117));
  CHECK(r.entry(FormulaId::pc_lower_general).counts.at("S") == 3);
  CHECK(r.entry(FormulaId::pc_exact_s2).value == q(2, 117));
  CHECK(r.entry(FormulaId::pw_exact_s2).value == q(46, 117));
  CHECK_FALSE(r.entry(FormulaId::pc_lower_n2).applicable);
  CHECK_FALSE(r.entry(FormulaId::pc_lower_k2).applicable);
  CHECK_FALSE(r.entry(FormulaId::pc_exact_s1).applicable);

  CHECK(best_lower_bound(3, 3, 2, UKind::cycle) == q(2, 117));
  CHECK(best_lower_bound(3, 3, 3, UKind::cycle) == pc_lower_general(3, 3, 3));
  CHECK(best_lower_bound(5, 2, 3, UKind::word) == pw_lower_k2(5, 3));
  CHECK_FALSE(best_lower_bound(3, 2, 3, UKind::cycle).has_value());
  CHECK_FALSE(formula_lower_bound(4, 2, 2, UKind::word).has_value());
  CHECK_THROWS_AS(bounds_report(2, 2, 5), InvalidArgument);

  for (FormulaId id : kAllFormulas) CHECK_FALSE(to_string(id).empty());
}

TEST_CASE("domain errors", "[bounds]") {
  CHECK_THROWS_AS(s_count(2, 3, 1), NotApplicable);
  CHECK_THROWS_AS(s_count(3, 2, 1), NotApplicable);
  CHECK_THROWS_AS(pc_lower_general(3, 2, 1), NotApplicable);
  CHECK_THROWS_AS(pc_lower_general(3, 3, 27), NotApplicable);
  CHECK_THROWS_AS(pw_lower_general(3, 3, 0), NotApplicable);
  CHECK_THROWS_AS(pc_lower_n2(2, 1), NotApplicable);
  CHECK_THROWS_AS(f_count(2, 1), NotApplicable);
  CHECK_THROWS_AS(t_count(4, 1), NotApplicable);
  CHECK_THROWS_AS(pw_lower_k2(5, 32), NotApplicable);
  CHECK_THROWS_AS(pc_exact_s1(1, 2), InvalidArgument);
}

TEST_CASE("removal families are counted and sound", "[bounds][property]") {
  struct Row { int n, k, s; };
  for (auto row : {Row{3, 3, 2}, Row{4, 3, 2}, Row{4, 3, 4}, Row{5, 3, 5}, Row{4, 4, 3}}) {
    auto fams = enumerate_removal_families(row.n, row.k, row.s, FamilyKind::general);
    INFO("n=" << row.n << " k=" << row.k << " s=" << row.s);
    REQUIRE(BigCount(fams.size()) == s_count(row.n, row.k, row.s));
    for (const auto& f : fams) {
      REQUIRE(f.removal.size() == static_cast<std::size_t>(row.s));
      auto survivors = WordSet::complement_of(row.n, row.k, f.removal.members());
      REQUIRE(u_cycle_exists(survivors));
      REQUIRE(is_strongly_connected_on_support(build_from_survivors(survivors)));
    }
  }
  for (auto [n, s] : {std::pair{5, 3}, {5, 6}, {6, 7}, {7, 9}}) {
    auto fams = enumerate_removal_families(n, 2, s, FamilyKind::k2);
    INFO("n=" << n << " s=" << s);
    REQUIRE(BigCount(fams.size()) == t_count(n, s));
    for (const auto& f : fams) REQUIRE(u_cycle_exists(WordSet::complement_of(n, 2, f.removal.members())));
  }
  CHECK(enumerate_removal_families(4, 3, 2, FamilyKind::general).size() == 6);
  CHECK_THROWS_AS(enumerate_removal_families(3, 2, 1, FamilyKind::general), NotApplicable);
  CHECK_THROWS_AS(enumerate_removal_families(4, 2, 1, FamilyKind::k2), NotApplicable);
}
