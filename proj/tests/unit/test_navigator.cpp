#include <random>

#include "rlslp/builder.hpp"
#include "rlslp/navigator.hpp"
#include "rlslp/selftest.hpp"
#include "support.hpp"

using namespace rlslp;

namespace {

// b^5 a^3 as Pair(Power(b,5), Power(a,3)).
Grammar b5a3() {
  SymbolTable t;
  const SymbolId a = t.intern_terminal('a'), b = t.intern_terminal('b');
  const SymbolId start = t.intern_pair(t.intern_power(b, 5, 1), t.intern_power(a, 3, 1), 2);
  return Grammar(std::move(t), start, 2, 0);
}

// c^10 followed by Pair(a^2, b^3).
Grammar c10_a2b3() {
  SymbolTable t;
  const SymbolId a = t.intern_terminal('a'), b = t.intern_terminal('b'), c = t.intern_terminal('c');
  const SymbolId inner = t.intern_pair(t.intern_power(a, 2, 1), t.intern_power(b, 3, 1), 2);
  const SymbolId start = t.intern_pair(t.intern_power(c, 10, 1), inner, 4);
  return Grammar(std::move(t), start, 4, 0);
}

std::vector<Grammar> corpus(std::vector<std::u32string>& texts, int count, std::uint64_t seed, Pos max_len = 64) {
  std::mt19937_64 rng(seed);
  std::vector<Grammar> out;
  for (int i = 0; i < count; ++i) {
    texts.push_back(selftest::random_text(rng, 1 + rng() % max_len, 1 + rng() % 4));
    out.push_back(build(texts.back(), rng()));
  }
  return out;
}

}  // namespace

TEST_CASE("root") {
  const Grammar g = build(U"a", 0);
  Navigator nav(g);
  const NodeHandle r = nav.root();
  CHECK(r.pos() == 0);
  CHECK(r.sym() == g.start());
  CHECK(nav.parent(r).is_nil());
  const Grammar h = build(U"abcabc", 0);
  Navigator nh(h);
  CHECK(nh.explen(nh.root()) == 6);
}

TEST_CASE("child") {
  const Grammar g = b5a3();
  Navigator nav(g);
  const NodeHandle a3 = nav.child(nav.root(), 1);
  CHECK(a3.pos() == 5);
  const NodeHandle third = nav.child(a3, 2);
  CHECK(third.pos() == 7);
  CHECK(g[third.sym()].is_terminal());
  CHECK(nav.child(third, 0).is_nil());
  CHECK(nav.child(a3, 3).is_nil());
  CHECK(nav.child(a3, -1).is_nil());
  CHECK(nav.child(nav.root(), 2).is_nil());

  SymbolTable t;
  const SymbolId a = t.intern_terminal('a'), b = t.intern_terminal('b');
  const SymbolId start = t.intern_pair(a, t.intern_power(b, 2, 1), 2);
  const Grammar h(std::move(t), start, 2, 0);
  Navigator nh(h);
  const NodeHandle right = nh.child(nh.root(), 1);
  CHECK(right.pos() == 1);
  CHECK(h[right.sym()].is_power());
}

TEST_CASE("index_of") {
  SymbolTable t;
  const SymbolId a4 = t.intern_power(t.intern_terminal('a'), 4, 1);
  const Grammar p(std::move(t), a4, 1, 0);
  Navigator np(p);
  CHECK(np.index_of(np.root(), 3) == 3);
  CHECK(np.index_of(np.root(), 0) == 0);
  CHECK_ERROR(np.index_of(np.root(), 4), ErrorCode::OutOfRange);

  const Grammar g = c10_a2b3();
  Navigator nav(g);
  const NodeHandle inner = nav.child(nav.root(), 1);
  REQUIRE(inner.pos() == 10);
  CHECK(nav.index_of(inner, 12) == 1);
  CHECK(nav.index_of(inner, 11) == 0);
  CHECK_ERROR(nav.index_of(inner, 9), ErrorCode::OutOfRange);
  CHECK_ERROR(nav.index_of(inner, 15), ErrorCode::OutOfRange);
  CHECK_ERROR(nav.index_of(nav.leaf(0), 0), ErrorCode::OutOfRange);
}

TEST_CASE("sibling") {
  const Grammar g = b5a3();
  Navigator nav(g);
  const NodeHandle a3 = nav.child(nav.root(), 1);
  const NodeHandle mid = nav.child(a3, 1);
  CHECK(nav.sibling(mid, 0) == mid);
  CHECK(nav.sibling(mid, -1) == nav.child(a3, 0));
  CHECK(nav.sibling(mid, 1) == nav.child(a3, 2));
  CHECK(nav.sibling(mid, 2).is_nil());
  CHECK(nav.sibling(nav.root(), 1).is_nil());
}

TEST_CASE("children partition their parent's fragment") {
  std::vector<std::u32string> texts;
  for (const Grammar& g : corpus(texts, 20, 5)) {
    Navigator nav(g);
    std::vector<NodeHandle> todo{nav.root()};
    while (!todo.empty()) {
      const NodeHandle v = todo.back();
      todo.pop_back();
      Pos at = v.pos();
      for (Pos i = 0; i < nav.arity(v); ++i) {
        const NodeHandle c = nav.child(v, static_cast<std::int64_t>(i));
        CHECK(c.pos() == at);
        CHECK(nav.parent(c) == v);
        at += nav.explen(c);
        todo.push_back(c);
      }
      if (nav.arity(v) > 0) CHECK(at == v.pos() + nav.explen(v));
    }
  }
}

TEST_CASE("leaf") {
  const Grammar one = build(U"a", 0);
  Navigator n1(one);
  CHECK(n1.leaf(0) == n1.root());
  CHECK_ERROR(n1.leaf(1), ErrorCode::OutOfRange);

  std::vector<std::u32string> texts;
  const auto gs = corpus(texts, 30, 6);
  for (std::size_t t = 0; t < gs.size(); ++t) {
    Navigator nav(gs[t]);
    Navigator mir(gs[t], Orientation::Mirrored);
    const Pos n = texts[t].size();
    for (Pos j = 0; j < n; ++j) {
      const NodeHandle l = nav.leaf(j);
      CHECK(l.pos() == j);
      CHECK(gs[t][l.sym()].codepoint() == texts[t][j]);
      CHECK(gs[t][mir.leaf(j).sym()].codepoint() == texts[t][n - 1 - j]);
    }
  }
}

TEST_CASE("handles are persistent") {
  const Grammar g = b5a3();
  Navigator nav(g);
  const NodeHandle a3 = nav.child(nav.root(), 1);
  const NodeHandle x = nav.child(a3, 0);
  const NodeHandle y = nav.child(a3, 2);
  CHECK(nav.parent(x) == a3);
  CHECK(nav.parent(y) == a3);
  CHECK(x.pos() == 5);
  CHECK(y.pos() == 7);
}

TEST_CASE("uncompressed tree parent and child") {
  // Power(b,5) has level 1 and the root pair level 2.
  const Grammar g = b5a3();
  Navigator nav(g);
  const UNodeHandle leaf = nav.u_leaf(0);
  const UNodeHandle up = nav.u_parent(leaf);
  CHECK(up.level == 1);
  CHECK(g[up.node.sym()].is_power());
  CHECK(nav.u_child(up, 3) == UNodeHandle{nav.child(up.node, 3), 0});
  CHECK(nav.u_child(leaf, 0).is_nil());

  // A terminal directly under a level-2 pair sits on a subdivided edge.
  SymbolTable t;
  const SymbolId a = t.intern_terminal('a'), b = t.intern_terminal('b');
  const SymbolId start = t.intern_pair(a, b, 2);
  const Grammar h(std::move(t), start, 2, 0);
  Navigator nh(h);
  const UNodeHandle l0 = nh.u_leaf(0);
  const UNodeHandle l1 = nh.u_parent(l0);
  CHECK(l1.node == l0.node);
  CHECK(l1.level == 1);
  CHECK(nh.u_child(l1, 0) == l0);
  CHECK(nh.u_child(l1, 1).is_nil());
  const UNodeHandle l2 = nh.u_parent(l1);
  CHECK(l2.node == nh.root());
  CHECK(l2.level == 2);
  CHECK(nh.u_parent(l2).level == 3);
}

TEST_CASE("u_next and u_prev enumerate level strings") {
  std::vector<std::u32string> texts;
  for (const Grammar& g : corpus(texts, 25, 8, 256)) {
    Navigator nav(g);
    UNodeHandle first = nav.u_leaf(0);
    for (Level k = 0; k <= g.rounds(); ++k) {
      const std::vector<SymbolId> want = level_string(g, k).symbols;
      std::vector<SymbolId> got;
      UNodeHandle last;
      for (UNodeHandle u = first; !u.is_nil(); u = nav.u_next(u)) {
        CHECK(u.level == k);
        got.push_back(u.node.sym());
        last = u;
      }
      CHECK(got == want);
      std::vector<SymbolId> back;
      for (UNodeHandle u = last; !u.is_nil(); u = nav.u_prev(u)) back.insert(back.begin(), u.node.sym());
      CHECK(back == want);
      CHECK(nav.u_prev(first).is_nil());
      first = nav.u_parent(first);
    }
  }
}

TEST_CASE("traversal chains cost O(r + s) steps") {
  std::mt19937_64 rng(2024);
  std::vector<std::u32string> texts;
  const auto gs = corpus(texts, 50, 12, 256);
  std::uint64_t worst_ratio_num = 0, worst_ratio_den = 1;
  for (int chain = 0; chain < 1000; ++chain) {
    const Grammar& g = gs[chain % gs.size()];
    StepCounter counter;
    Navigator nav(g, Orientation::Forward, &counter);
    UNodeHandle u = nav.u_leaf(rng() % g.text_len());
    const Level start_level = static_cast<Level>(rng() % (g.rounds() + 1));
    for (Level k = 0; k < start_level; ++k) u = nav.u_parent(u);
    counter.steps = 0;
    const std::uint64_t s = 1 + rng() % 64;
    for (std::uint64_t op = 0; op < s && !u.is_nil(); ++op) {
      const auto pick = rng() % 4;
      UNodeHandle next;
      if (pick == 0 && u.level < g.rounds()) {
        next = nav.u_parent(u);
      } else if (pick == 1 && u.level > 0) {
        next = nav.u_child(u, 0);
      } else {
        next = nav.u_next(u);
      }
      if (next.is_nil()) break;
      u = next;
    }
    const std::uint64_t bound = 8 * (g.rounds() + s);
    CHECK(counter.steps <= bound);
    if (counter.steps * worst_ratio_den > worst_ratio_num * (g.rounds() + s)) {
      worst_ratio_num = counter.steps;
      worst_ratio_den = g.rounds() + s;
    }
  }
  MESSAGE("worst steps/(r+s) = " << static_cast<double>(worst_ratio_num) / static_cast<double>(worst_ratio_den));
}
