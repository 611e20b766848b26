#include <algorithm>
#include <cassert>
#include <cstdint>

#include "rlslp/ipm.hpp"
#include "rlslp/lce.hpp"

namespace rlslp {

namespace {

Pos ceil_div(Pos a, Pos b) { return (a + b - 1) / b; }

}  // namespace

Progression verify_progression(Navigator& forward, Navigator& mirrored, const LiftedProgression& v,
                               const ProxyPattern& pp, Fragment x, Fragment y) {
  const Progression& cand = v.occurrences;
  if (cand.empty()) return {};
  const Pos xl = x.length();
  const Pos cbar = pp.left_off;
  const Pos c = pp.right_cut;
  const Pos abar = cand.start;

  // Does X occur at p (given as abar - cbar + shift) inside Y?
  auto check = [&](std::int64_t p) -> Progression {
    if (p < static_cast<std::int64_t>(y.begin)) return {};
    const Pos at = static_cast<Pos>(p);
    if (at + xl > y.end) return {};
    if (lce(forward, at, x.begin) < xl) return {};
    return Progression::single(at);
  };
  const std::int64_t base = static_cast<std::int64_t>(abar) - static_cast<std::int64_t>(cbar);

  if (cand.count == 1) return check(base);

  const Pos g = v.step;
  const Pos s = cand.count;
  const Pos a = abar + (s - 1) * g + pp.exp_len;
  const Pos ubar = std::min(rev_lce(mirrored, x.begin + cbar, x.begin + cbar + g), cbar);
  const Pos u = std::min(lce(forward, x.begin + c, x.begin + c - g), xl - c);
  const Pos vbar = std::min(rev_lce(mirrored, abar, abar + g), abar - y.begin);
  const Pos vv = std::min(lce(forward, a, a - g), y.end - a);

  if (ubar == cbar && u == xl - c) {
    const Pos lo = ubar > vbar ? ceil_div(ubar - vbar, g) : 0;
    const Pos drop = u > vv ? ceil_div(u - vv, g) : 0;
    if (drop >= s || lo >= s - drop) return {};
    const Pos first = abar - cbar + lo * g;
    assert(first >= y.begin && first + (s - drop - lo - 1) * g + xl <= y.end);
    return Progression::make(first, g, s - drop - lo);
  }
  if (ubar < cbar) {
    return check(base + static_cast<std::int64_t>(ubar) - static_cast<std::int64_t>(vbar));
  }
  return check(static_cast<std::int64_t>(a) - static_cast<std::int64_t>(c) + static_cast<std::int64_t>(vv) -
               static_cast<std::int64_t>(u));
}

Progression verify_progression(const Grammar& g, const LiftedProgression& v, const ProxyPattern& pp,
                               Fragment x, Fragment y, StepCounter* counter) {
  Navigator forward(g, Orientation::Forward, counter);
  Navigator mirrored(g, Orientation::Mirrored, counter);
  return verify_progression(forward, mirrored, v, pp, x, y);
}

}  // namespace rlslp
