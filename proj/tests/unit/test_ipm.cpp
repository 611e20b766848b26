#include <random>

#include "rlslp/builder.hpp"
#include "rlslp/ipm.hpp"
#include "rlslp/oracle.hpp"
#include "rlslp/selftest.hpp"
#include "support.hpp"

using namespace rlslp;

namespace {

RleSeq rle(std::initializer_list<Run> runs) {
  RleSeq s;
  for (const Run& r : runs) s.push(r);
  return s;
}

std::u32string spell(const Grammar& g, const RleSeq& s) {
  std::u32string out;
  for (const Run& r : s.runs) {
    for (Pos t = 0; t < r.exponent; ++t) out += expand(g, r.sym);
  }
  return out;
}

}  // namespace

TEST_CASE("rle_match examples") {
  const SymbolId a = 0, b = 1;
  auto m = rle_match(rle({{a, 3}}), rle({{b, 1}, {a, 5}, {b, 2}}));
  REQUIRE(m.size() == 1);
  CHECK(m[0] == Progression{1, 1, 3});

  const RleSeq s = rle({{a, 2}, {b, 1}, {a, 1}});
  m = rle_match(s, s);
  REQUIRE(m.size() == 1);
  CHECK(m[0] == Progression{0, 1, 1});

  m = rle_match(rle({{a, 1}, {b, 1}}), rle({{a, 1}, {b, 1}, {a, 1}, {b, 1}, {a, 1}, {b, 1}}));
  REQUIRE(m.size() == 1);
  CHECK(m[0] == Progression{0, 2, 3});

  CHECK(rle_match(rle({{a, 1}, {b, 2}, {a, 1}}), rle({{a, 2}, {b, 1}, {a, 1}})).empty());
  CHECK_ERROR(rle_match(RleSeq{}, s), ErrorCode::EmptyPattern);
}

TEST_CASE("rle_match against brute force") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto problem =
        selftest::check_rle_match(selftest::random_rle(rng, 5, 4, 3), selftest::random_rle(rng, 16, 5, 3));
    CHECK_MESSAGE(!problem, *problem);
  }
}

TEST_CASE("proxy pattern of a single character") {
  const Grammar g = build(U"abcabcab", 4);
  const ProxyPattern pp = proxy_pattern(g, Fragment{4, 5});
  CHECK(pp.level == 0);
  CHECK(pp.rle == rle({{*g.symbols().find_terminal('b'), 1}}));
  CHECK(pp.left_off == 0);
  CHECK(pp.right_cut == 1);
  CHECK(pp.exp_len == 1);
  CHECK_ERROR(proxy_pattern(g, Fragment{2, 2}), ErrorCode::EmptyFragment);
}

TEST_CASE("proxy pattern spells X[c̄, c)") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const std::u32string text = selftest::random_text(rng, 1 + rng() % 128, 1 + rng() % 4);
    const Grammar g = build(text, rng());
    for (int q = 0; q < 40; ++q) {
      const Pos b = rng() % text.size();
      const Pos e = b + 1 + rng() % (text.size() - b);
      const ProxyPattern pp = proxy_pattern(g, Fragment{b, e});
      CHECK(pp.rle.length() > pp.level);
      CHECK(pp.exp_len == pp.right_cut - pp.left_off);
      CHECK(spell(g, pp.rle) == text.substr(b + pp.left_off, pp.exp_len));
    }
  }
}

TEST_CASE("proxy text covers every induced occurrence") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const std::u32string text = selftest::random_text(rng, 1 + rng() % 128, 1 + rng() % 3);
    const Grammar g = build(text, rng());
    const oracle::LevelContext ctx(g);
    for (int q = 0; q < 30; ++q) {
      const auto [x, y] = selftest::sample_ipm_pair(rng, text);
      const ProxyPattern pp = proxy_pattern(g, x);
      const ProxyText pt = proxy_text(g, y, pp);
      if (!pt.empty()) {
        CHECK(pt.text_start >= y.begin);
        CHECK(pt.text_start + pt.exp_len <= y.end);
        CHECK(pt.exp_len == pt.rle.exp_length(g));
        CHECK(pt.rle.length() < 2 * pp.rle.length() + 2 * pp.level);
        CHECK(spell(g, pt.rle) == text.substr(pt.text_start, pt.exp_len));
      }
      for (Pos p : oracle::naive_occ(text, x, y)) {
        // Where the oracle puts X̄_ℓ of this occurrence inside T_ℓ.
        const Pos at = p + pp.left_off;
        REQUIRE_FALSE(pt.empty());
        CHECK(at >= pt.text_start);
        CHECK(at + pp.exp_len <= pt.text_start + pt.exp_len);
        CHECK(pt.rle.length() < 4 * pp.rle.length());
        CHECK(rle_match(pp.rle, pt.rle).size() <= 4);
      }
    }
  }
  const Grammar g = build(U"abc", 0);
  CHECK_ERROR(proxy_text(g, Fragment{1, 1}, proxy_pattern(g, Fragment{0, 1})), ErrorCode::EmptyFragment);
}

TEST_CASE("lifted progressions are occurrences of the proxy") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    const std::u32string text = selftest::random_text(rng, 1 + rng() % 128, 1 + rng() % 3);
    const Grammar g = build(text, rng());
    for (int q = 0; q < 30; ++q) {
      const auto [x, y] = selftest::sample_ipm_pair(rng, text);
      const ProxyPattern pp = proxy_pattern(g, x);
      const ProxyText pt = proxy_text(g, y, pp);
      if (pt.empty()) continue;
      const std::u32string proxy = text.substr(x.begin + pp.left_off, pp.exp_len);
      for (const Progression& v : rle_match(pp.rle, pt.rle)) {
        const LiftedProgression lp = lift_progression(g, v, pt, pp);
        CHECK(lp.step <= pp.exp_len);
        if (v.count == 1) CHECK(lp.step == pp.exp_len);
        for (Pos p : lp.occurrences.positions()) CHECK(text.substr(p, pp.exp_len) == proxy);
      }
    }
  }
}

TEST_CASE("verify_progression") {
  const Grammar g = build(U"aaaa", 0);
  const Fragment x{0, 2}, y{0, 3};
  const ProxyPattern pp = proxy_pattern(g, x);
  REQUIRE(pp.left_off == 0);
  const Progression got = verify_progression(g, LiftedProgression{Progression{0, 1, 2}, 1}, pp, x, y);
  CHECK(got.positions() == std::vector<Pos>{0, 1});

  // A lone candidate whose alignment would start before Y.
  const Grammar h = build(U"abcabcx", 0);
  const Fragment hx{3, 7}, hy{0, 6};
  const ProxyPattern hp = proxy_pattern(h, hx);
  if (hp.left_off > 0) {
    const Progression none =
        verify_progression(h, LiftedProgression{Progression::single(0), hp.exp_len}, hp, hx, hy);
    CHECK(none.empty());
  }
}

TEST_CASE("ipm_query examples") {
  const Grammar g = build(U"aaaaaa", 0);
  CHECK(ipm_query(g, Fragment{0, 2}, Fragment{1, 4}) == Progression{1, 1, 2});
  CHECK(ipm_query(g, Fragment{2, 5}, Fragment{2, 5}) == Progression{2, 1, 1});
  CHECK_ERROR(ipm_query(g, Fragment{0, 2}, Fragment{0, 4}), ErrorCode::RatioViolation);
  CHECK_ERROR(ipm_query(g, Fragment{1, 1}, Fragment{0, 1}), ErrorCode::EmptyPattern);
  CHECK_ERROR(ipm_query(g, Fragment{0, 7}, Fragment{0, 6}), ErrorCode::OutOfRange);
  CHECK(ipm_query(g, Fragment{0, 3}, Fragment{0, 2}).empty());

  const Grammar h = build(U"abaababaab", 3);
  CHECK(ipm_query(h, Fragment{0, 3}, Fragment{0, 5}) == Progression{0, 1, 1});
  CHECK(ipm_query(h, Fragment{0, 3}, Fragment{3, 8}) == Progression{3, 2, 2});
  CHECK(ipm_query(h, Fragment{5, 8}, Fragment{2, 4}).empty());
}

TEST_CASE("X equal to Y always matches at y") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 40; ++trial) {
    const std::u32string text = selftest::random_text(rng, 1 + rng() % 200, 1 + rng() % 26);
    const Grammar g = build(text, rng());
    for (int q = 0; q < 20; ++q) {
      const Pos b = rng() % text.size();
      const Pos e = b + 1 + rng() % (text.size() - b);
      CHECK(ipm_query(g, Fragment{b, e}, Fragment{b, e}) == Progression{b, 1, 1});
    }
  }
}

TEST_CASE("ipm against brute force") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 150; ++trial) {
    const std::u32string text = selftest::random_text(rng, 1 + rng() % 256, std::vector{1u, 2u, 4u, 26u}[rng() % 4]);
    const Grammar g = build(text, rng());
    for (int q = 0; q < 40; ++q) {
      const auto [x, y] = selftest::sample_ipm_pair(rng, text);
      const auto problem = selftest::check_ipm(g, text, x, y);
      CHECK_MESSAGE(!problem, *problem);
    }
  }
}

TEST_CASE("union of progressions") {
  CHECK(union_progressions({}).empty());
  CHECK(union_progressions({Progression{4, 3, 2}, Progression{10, 3, 2}}) == Progression{4, 3, 4});
  CHECK(union_progressions({Progression::single(0), Progression::single(10)}) == Progression{0, 10, 2});
  CHECK(union_progressions({Progression::single(7)}) == Progression::single(7));
  CHECK_THROWS_AS(union_progressions({Progression::single(0), Progression::single(4), Progression::single(10)}),
                  std::logic_error);
}
