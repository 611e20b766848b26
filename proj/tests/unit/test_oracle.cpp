#include "rlslp/builder.hpp"
#include "rlslp/oracle.hpp"
#include "support.hpp"

using namespace rlslp;

TEST_CASE("naive occurrences") {
  const std::u32string t = U"abaab";
  CHECK(oracle::naive_occ(t, Fragment{0, 2}, Fragment{0, 5}) == std::vector<Pos>{0, 3});
  CHECK(oracle::naive_occ(t, Fragment{1, 3}, Fragment{1, 3}) == std::vector<Pos>{1});
  CHECK(oracle::naive_occ(t, Fragment{0, 5}, Fragment{0, 4}).empty());
  CHECK_ERROR(oracle::naive_occ(t, Fragment{0, 6}, Fragment{0, 5}), ErrorCode::OutOfRange);
}

TEST_CASE("naive lce") {
  const std::u32string t = U"abab";
  CHECK(oracle::naive_lce(t, 1, 1) == 3);
  CHECK(oracle::naive_lce(t, 0, 2) == 2);
  CHECK(oracle::naive_rev_lce(t, 0, 3) == 0);
  CHECK(oracle::naive_rev_lce(t, 4, 2) == 2);
  CHECK_ERROR(oracle::naive_lce(t, 5, 0), ErrorCode::OutOfRange);
}

TEST_CASE("naive popped sequence") {
  const std::u32string t = U"abaababaabab";
  const Grammar g = build(t, 5);
  const oracle::LevelContext ctx(g);
  const auto one = oracle::naive_pseq_levels(ctx, Fragment{4, 5});
  CHECK(one.q == 0);
  CHECK(one.ell == 0);
  CHECK(one.levels[0].xbar.size() == 1);

  for (Pos b = 0; b < t.size(); ++b) {
    for (Pos e = b + 1; e <= t.size(); ++e) {
      const auto ps = oracle::naive_pseq_levels(ctx, Fragment{b, e});
      std::u32string joined;
      for (const auto& lv : ps.levels) {
        for (SymbolId a : lv.left) joined += expand(g, a);
      }
      for (auto it = ps.levels.rbegin(); it != ps.levels.rend(); ++it) {
        for (SymbolId a : it->right) joined += expand(g, a);
      }
      CHECK(joined == t.substr(b, e - b));
      CHECK(ps.levels[ps.ell].xbar.size() > ps.ell);
    }
  }
}

TEST_CASE("oracle refuses large texts") {
  const std::u32string big(oracle::kMaxText + 1, U'a');
  CHECK_THROWS_AS(oracle::naive_lce(big, 0, 1), std::invalid_argument);
}
