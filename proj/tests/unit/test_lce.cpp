#include <random>

#include "rlslp/builder.hpp"
#include "rlslp/lce.hpp"
#include "rlslp/oracle.hpp"
#include "rlslp/selftest.hpp"
#include "support.hpp"

using namespace rlslp;

TEST_CASE("lce examples") {
  const Grammar abab = build(U"abab", 1);
  CHECK(lce(abab, 0, 2) == 2);
  CHECK(lce(abab, 1, 1) == 3);
  CHECK(lce(abab, 4, 0) == 0);
  CHECK(lce(abab, 4, 4) == 0);
  const Grammar ab = build(U"ab", 1);
  CHECK(lce(ab, 0, 1) == 0);
  CHECK_ERROR(lce(abab, 5, 0), ErrorCode::OutOfRange);
}

TEST_CASE("rev_lce examples") {
  const Grammar abab = build(U"abab", 1);
  CHECK(rev_lce(abab, 4, 2) == 2);
  CHECK(rev_lce(abab, 3, 3) == 3);
  CHECK(rev_lce(abab, 0, 3) == 0);
  CHECK_ERROR(rev_lce(abab, 0, 5), ErrorCode::OutOfRange);
}

TEST_CASE("all pairs against brute force") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const std::u32string text = selftest::random_text(rng, 1 + rng() % 96, std::vector{1u, 2u, 4u, 26u}[rng() % 4]);
    const Grammar g = build(text, rng());
    Navigator fwd(g), mir(g, Orientation::Mirrored);
    for (Pos i = 0; i <= text.size(); ++i) {
      for (Pos j = 0; j <= text.size(); ++j) {
        const Pos f = lce(fwd, i, j);
        CHECK(f == oracle::naive_lce(text, i, j));
        CHECK(f == lce(fwd, j, i));
        CHECK(rev_lce(mir, i, j) == oracle::naive_rev_lce(text, i, j));
      }
    }
  }
}

TEST_CASE("step count stays within 64 (r + 1)") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    const std::u32string text = selftest::random_text(rng, 1 + rng() % 256, 1 + rng() % 4);
    const Grammar g = build(text, rng());
    for (int q = 0; q < 50; ++q) {
      StepCounter c;
      lce(g, rng() % (text.size() + 1), rng() % (text.size() + 1), &c);
      CHECK(c.steps <= 64 * (g.rounds() + 1));
    }
  }
}
