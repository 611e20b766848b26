#include "rlslp/popped.hpp"

#include <algorithm>

#include "rlslp/error.hpp"

namespace rlslp {

void RleSeq::push(SymbolId sym, Pos exponent) {
  if (exponent == 0) return;
  if (!runs.empty() && runs.back().sym == sym) {
    runs.back().exponent += exponent;
  } else {
    runs.push_back(Run{sym, exponent});
  }
}

void RleSeq::append(const RleSeq& other) {
  for (const Run& r : other.runs) push(r);
}

Pos RleSeq::length() const {
  Pos total = 0;
  for (const Run& r : runs) total += r.exponent;
  return total;
}

Pos RleSeq::exp_length(const Grammar& g) const {
  Pos total = 0;
  for (const Run& r : runs) total += r.exponent * g.explen(r.sym);
  return total;
}

Pos RleSeq::exp_prefix(const Grammar& g, Pos count) const {
  Pos total = 0;
  for (const Run& r : runs) {
    if (count == 0) break;
    Pos take = std::min(count, r.exponent);
    total += take * g.explen(r.sym);
    count -= take;
  }
  return total;
}

RleSeq PoppedSeq::flatten() const {
  RleSeq out;
  for (const PoppedLevel& lv : levels) {
    if (lv.left) out.push(*lv.left);
  }
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    if (it->right) out.push(*it->right);
  }
  return out;
}

PoppedSeq pseq(Navigator& nav, Pos x_start, Pos x_end) {
  const Grammar& g = nav.grammar();
  if (x_end > g.text_len() || x_start > x_end) {
    throw Error(ErrorCode::OutOfRange, "fragment [" + std::to_string(x_start) + ", " +
                                           std::to_string(x_end) + ") is not inside the text");
  }
  if (x_start == x_end) throw Error(ErrorCode::EmptyFragment, "popped sequence of an empty fragment");

  PoppedSeq out;
  UNodeHandle first = nav.u_leaf(x_start);
  UNodeHandle last = nav.u_leaf(x_end - 1);
  Pos left_offset = 0;
  Pos right_offset = 0;

  for (;;) {
    PoppedLevel lv;
    lv.first = first;
    lv.last = last;
    lv.left_offset = left_offset;
    lv.right_offset = right_offset;

    UNodeHandle first_up = nav.u_parent(first);
    UNodeHandle last_up = nav.u_parent(last);
    // A parent that is a distinct parse tree node collapses a block of length >= 2.
    const bool first_real = first_up.node.frame() != first.node.frame();
    const bool last_real = last_up.node.frame() != last.node.frame();
    const Pos first_idx = first_real ? nav.index_of(first_up.node, first.node.pos()) : 0;
    const Pos last_idx = last_real ? nav.index_of(last_up.node, last.node.pos()) : 0;
    const Pos first_arity = first_real ? nav.arity(first_up.node) : 1;
    const bool single = first == last;
    const bool same_block = first_up == last_up;

    const bool left_in_pair = first_real && g[first_up.node.sym()].is_pair() && first_idx == 0 && !single;
    if (!left_in_pair && same_block) {
      // X̄_k is a single block without two distinct symbols: all of it is popped.
      lv.left = Run{first.node.sym(), last_idx - first_idx + 1};
      out.levels.push_back(lv);
      break;
    }
    if (!left_in_pair) lv.left = Run{first.node.sym(), first_arity - first_idx};

    const bool right_in_pair = last_real && g[last_up.node.sym()].is_pair() && last_idx == 1;
    if (!right_in_pair) lv.right = Run{last.node.sym(), last_idx + 1};

    UNodeHandle next_first = lv.left ? nav.u_next(first_up) : first_up;
    const bool exhausted = lv.left && lv.right && next_first == last_up;

    if (lv.left) left_offset += lv.left->exponent * g.explen(lv.left->sym);
    if (lv.right) right_offset += lv.right->exponent * g.explen(lv.right->sym);
    out.levels.push_back(lv);
    if (exhausted) break;

    first = next_first;
    last = lv.right ? nav.u_prev(last_up) : last_up;
  }
  return out;
}

PoppedSeq pseq(const Grammar& g, Pos x_start, Pos x_end, StepCounter* counter) {
  Navigator nav(g, Orientation::Forward, counter);
  PoppedSeq out = pseq(nav, x_start, x_end);
  for (PoppedLevel& lv : out.levels) {
    lv.first = {};
    lv.last = {};
  }
  return out;
}

}  // namespace rlslp
