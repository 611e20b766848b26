#include "rlslp/lce.hpp"

#include <algorithm>
#include <cassert>

#include "rlslp/error.hpp"

namespace rlslp {

namespace {

void check_positions(Pos n, Pos i, Pos i2) {
  if (i > n || i2 > n) {
    throw Error(ErrorCode::OutOfRange, "LCE position past the text end (" + std::to_string(i) + ", " +
                                           std::to_string(i2) + ", n = " + std::to_string(n) + ")");
  }
}

// Highest node whose fragment starts at i; nil for i = n.
NodeHandle highest_at(Navigator& nav, Pos i) {
  if (i == nav.text_len()) return {};
  NodeHandle v = nav.root();
  while (v.pos() < i) v = nav.child(v, static_cast<std::int64_t>(nav.index_of(v, i)));
  return v;
}

// Highest node whose fragment starts right after v's fragment.
NodeHandle next_highest(Navigator& nav, NodeHandle v) {
  for (;;) {
    NodeHandle p = nav.parent(v);
    if (p.is_nil()) return {};
    Pos idx = nav.index_of(p, v.pos());
    if (idx + 1 < nav.arity(p)) return nav.child(p, static_cast<std::int64_t>(idx + 1));
    v = p;
  }
}

struct SiblingSpan {
  NodeHandle parent;
  Pos index = 0;
  Pos to_the_right = 0;
};

SiblingSpan sibling_span(Navigator& nav, NodeHandle v) {
  SiblingSpan s;
  s.parent = nav.parent(v);
  if (s.parent.is_nil()) return s;
  s.index = nav.index_of(s.parent, v.pos());
  s.to_the_right = nav.arity(s.parent) - 1 - s.index;
  return s;
}

}  // namespace

Pos lce(Navigator& nav, Pos i, Pos i2) {
  check_positions(nav.text_len(), i, i2);
  NodeHandle a = highest_at(nav, i);
  NodeHandle b = highest_at(nav, i2);
  Pos acc = 0;
  while (!a.is_nil() && !b.is_nil()) {
    const Pos la = nav.explen(a);
    const Pos lb = nav.explen(b);
    const bool same = a.sym() == b.sym();
    if (!same && la == 1 && lb == 1) break;
    if (!same && la == lb) {
      a = nav.child(a, 0);
      b = nav.child(b, 0);
    } else if (la > lb) {
      a = nav.child(a, 0);
    } else if (la < lb) {
      b = nav.child(b, 0);
    } else {
      SiblingSpan sa = sibling_span(nav, a);
      SiblingSpan sb = sibling_span(nav, b);
      if (sa.to_the_right == 0 || sb.to_the_right == 0) {
        acc += la;
        a = next_highest(nav, a);
        b = next_highest(nav, b);
      } else {
        // Both parents have a right sibling; with more than one, both are
        // powers of this symbol, so skip as many copies as both share.
        Pos d = std::min(sa.to_the_right, sb.to_the_right);
        acc += d * la;
        a = nav.child(sa.parent, static_cast<std::int64_t>(sa.index + d));
        b = nav.child(sb.parent, static_cast<std::int64_t>(sb.index + d));
      }
    }
  }
  return acc;
}

Pos lce(const Grammar& g, Pos i, Pos i2, StepCounter* counter) {
  Navigator nav(g, Orientation::Forward, counter);
  return lce(nav, i, i2);
}

Pos rev_lce(Navigator& mirrored, Pos i, Pos i2) {
  assert(mirrored.orientation() == Orientation::Mirrored);
  const Pos n = mirrored.text_len();
  check_positions(n, i, i2);
  return lce(mirrored, n - i, n - i2);
}

Pos rev_lce(const Grammar& g, Pos i, Pos i2, StepCounter* counter) {
  Navigator nav(g, Orientation::Mirrored, counter);
  return rev_lce(nav, i, i2);
}

}  // namespace rlslp
