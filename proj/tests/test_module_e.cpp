#include <random>

#include <catch2/catch_amalgamated.hpp>

#include <scrollbetti/module_e.hpp>

using scrollbetti::betti_e;
using scrollbetti::betti_rnc_module;
using scrollbetti::betti_scroll_surface;
using scrollbetti::BettiTable;
using scrollbetti::binom;
using scrollbetti::Int;
using scrollbetti::ModuleESpec;
using scrollbetti::regularity_e;
using scrollbetti::split_twist;

TEST_CASE("the twist splits uniquely as t = p + l*s with 2 <= p <= s+1") {
  for (int s = 1; s <= 9; ++s)
    for (long t = 2; t <= 60; ++t) {
      const auto [p, l] = split_twist(s, t);
      REQUIRE(p >= 2);
      REQUIRE(p <= s + 1);
      REQUIRE(l >= 0);
      REQUIRE(p + l * s == t);
    }
  CHECK(split_twist(2, 3).p == 3);
  CHECK(split_twist(2, 3).l == 0);
  CHECK(split_twist(2, 14).p == 2);
  CHECK(split_twist(2, 14).l == 6);
  CHECK(split_twist(1, 5).p == 2);
  CHECK(split_twist(1, 5).l == 3);
}

TEST_CASE("module spec validation") {
  CHECK_THROWS_AS(betti_e({2, 1, 3}), scrollbetti::InvalidModuleSpec);
  CHECK_THROWS_AS(betti_e({6, 0, 3}), scrollbetti::InvalidModuleSpec);
  CHECK_THROWS_AS(betti_e({6, 7, 3}), scrollbetti::InvalidModuleSpec);
  CHECK_THROWS_AS(betti_e({6, 2, 1}), scrollbetti::InvalidModuleSpec);
  CHECK_NOTHROW(betti_e({3, 3, 2}));
}

TEST_CASE("regularity of E(r,s,t)") {
  CHECK(regularity_e({6, 2, 3}) == 2);
  CHECK(regularity_e({4, 1, 2}) == 2);
  CHECK(regularity_e({6, 2, 14}) == 8);
  // always the index of the second row of the table
  for (int s = 1; s <= 6; ++s)
    for (long t = 2; t <= 30; ++t)
      REQUIRE(regularity_e({7, s, t}) == split_twist(s, t).l + 2);
}

TEST_CASE("betti_e known tables") {
  SECTION("E(4,1,2): one row of C(3,i)") {
    const BettiTable t = betti_e({4, 1, 2});
    const long expect[] = {1, 3, 3, 1, 0};
    for (int i = 0; i < 5; ++i) {
      CHECK(t.entry(i, 1) == 0);
      CHECK(t.entry(i, 2) == expect[i]);
    }
    CHECK(t.rows_present() == std::vector<long>{2});
  }
  SECTION("E(6,2,2): rows C(4,i) and C(4,i-1)") {
    const BettiTable t = betti_e({6, 2, 2});
    for (int i = 0; i <= 6; ++i) {
      CHECK(t.entry(i, 1) == binom(4, i));
      CHECK(t.entry(i, 2) == binom(4, i - 1));
    }
  }
  SECTION("E(6,2,3): first row empty, second row 2*C(5,i)") {
    const BettiTable t = betti_e({6, 2, 3});
    for (int i = 0; i <= 6; ++i) {
      CHECK(t.entry(i, 1) == 0);
      CHECK(t.entry(i, 2) == Int(2) * binom(5, i));
    }
  }
  SECTION("E(6,3,3)") {
    const BettiTable t = betti_e({6, 3, 3});
    const long row1[] = {1, 3, 3, 1, 0, 0, 0};
    const long row2[] = {0, 3, 11, 15, 9, 2, 0};
    for (int i = 0; i < 7; ++i) {
      CHECK(t.entry(i, 1) == row1[i]);
      CHECK(t.entry(i, 2) == row2[i]);
    }
    // mirror of E(6,3,2), whose first row is 2*C(3,i) + 3*C(3,i-1)
    const BettiTable d = betti_e({6, 3, 2});
    for (int i = 0; i < 6; ++i) {
      CHECK(d.entry(i, 1) == Int(2) * binom(3, i) + Int(3) * binom(3, i - 1));
      CHECK(t.entry(i, 2) == d.entry(5 - i, 1));
      CHECK(t.entry(i, 1) == d.entry(5 - i, 2));
    }
  }
  SECTION("E(r,s,s+1): single row s*C(r-1,i)") {
    for (int r = 3; r <= 9; ++r)
      for (int s = 1; s <= r; ++s) {
        const BettiTable t = betti_e({r, s, s + 1});
        for (int i = 0; i <= r; ++i) {
          REQUIRE(t.entry(i, 1) == 0);
          REQUIRE(t.entry(i, 2) == Int(s) * binom(r - 1, i));
        }
      }
  }
}

TEST_CASE("betti_e shift law: raising t by s shifts both rows down") {
  std::mt19937_64 rng(52409);
  for (int rep = 0; rep < 80; ++rep) {
    const int r = 3 + static_cast<int>(rng() % 7);
    const int s = 1 + static_cast<int>(rng() % r);
    const long t = 2 + static_cast<long>(rng() % 12);
    const long n = static_cast<long>(rng() % 5);
    REQUIRE(betti_e({r, s, t + n * s}) == betti_e({r, s, t}).shifted(n));
  }
  CHECK(betti_e({4, 1, 5}) == betti_e({4, 1, 2}).shifted(3));
}

TEST_CASE("betti_e support: two rows at l+1, l+2; first empty iff t = 1 mod s") {
  for (int r = 3; r <= 8; ++r)
    for (int s = 1; s <= r; ++s)
      for (long t = 2; t <= 2 * s + 6; ++t) {
        const BettiTable tab = betti_e({r, s, t});
        const auto [p, l] = split_twist(s, t);
        for (long j : tab.rows_present()) {
          REQUIRE(j >= l + 1);
          REQUIRE(j <= l + 2);
        }
        bool first_row_empty = true;
        for (int i = 0; i <= r; ++i)
          if (tab.entry(i, l + 1) != 0) first_row_empty = false;
        REQUIRE(first_row_empty == (t % s == 1 % s));
        REQUIRE(tab.nonnegative());
        REQUIRE(tab.columns() == r + 1);
        for (long j : tab.rows_present()) REQUIRE(tab.entry(r, j) == 0);
      }
}

TEST_CASE("betti_rnc_module known tables") {
  SECTION("p = 3 against r = 4") {
    const BettiTable t = betti_rnc_module(4, 3);
    const long row1[] = {1, 0, 0, 0, 0};
    const long row2[] = {0, 3, 2, 0, 0};
    for (int i = 0; i < 5; ++i) {
      CHECK(t.entry(i, 1) == row1[i]);
      CHECK(t.entry(i, 2) == row2[i]);
    }
  }
  SECTION("p = 5 against r = 6") {
    const BettiTable t = betti_rnc_module(6, 5);
    const long row1[] = {1, 0, 0, 0, 0, 0, 0};
    const long row2[] = {0, 10, 20, 15, 4, 0, 0};
    for (int i = 0; i < 7; ++i) {
      CHECK(t.entry(i, 1) == row1[i]);
      CHECK(t.entry(i, 2) == row2[i]);
    }
  }
  SECTION("p = r: one full second row") {
    for (int r = 3; r <= 8; ++r) {
      const BettiTable t = betti_rnc_module(r, r);
      for (int i = 0; i <= r; ++i) {
        REQUIRE(t.entry(i, 1) == 0);
        REQUIRE(t.entry(i, 2) == Int(i + 1) * binom(r - 1, i + 1));
      }
    }
  }
}

TEST_CASE("betti_rnc_module equals the padded hyperplane curve module") {
  for (int r = 4; r <= 9; ++r)
    for (int p = 2; p <= r; ++p)
      REQUIRE(betti_rnc_module(r, p) ==
              betti_e({r - 1, r - 1, p}).with_columns(r + 1));
}

TEST_CASE("betti_rnc_module rejects p outside [2, r]") {
  CHECK_THROWS_AS(betti_rnc_module(5, 1), scrollbetti::POutOfRange);
  CHECK_THROWS_AS(betti_rnc_module(5, 6), scrollbetti::POutOfRange);
  CHECK_THROWS_AS(betti_rnc_module(2, 2), scrollbetti::InvalidModuleSpec);
}

TEST_CASE("betti_scroll_surface") {
  SECTION("r = 3: a single quadric") {
    const BettiTable t = betti_scroll_surface(3);
    CHECK(t.rows_present() == std::vector<long>{2});
    CHECK(t.entry(0, 2) == 1);
    CHECK(t.support_size() == 1);
  }
  SECTION("r = 4") {
    const BettiTable t = betti_scroll_surface(4);
    const long expect[] = {3, 2, 0, 0, 0};
    for (int i = 0; i < 5; ++i) CHECK(t.entry(i, 2) == expect[i]);
  }
  SECTION("r = 6") {
    const BettiTable t = betti_scroll_surface(6);
    const long expect[] = {10, 20, 15, 4, 0, 0, 0};
    for (int i = 0; i < 7; ++i) CHECK(t.entry(i, 2) == expect[i]);
  }
  SECTION("single row, nonnegative, correct width") {
    for (int r = 3; r <= 12; ++r) {
      const BettiTable t = betti_scroll_surface(r);
      REQUIRE(t.rows_present() == std::vector<long>{2});
      REQUIRE(t.nonnegative());
      REQUIRE(t.columns() == r + 1);
    }
  }
}
