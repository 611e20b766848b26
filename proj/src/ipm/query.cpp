#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rlslp/error.hpp"
#include "rlslp/ipm.hpp"

namespace rlslp {

LiftedProgression lift_progression(const Grammar& g, const Progression& v, const ProxyText& pt,
                                   const ProxyPattern& pp) {
  LiftedProgression out;
  if (v.empty()) return out;
  const Pos start = pt.text_start + pt.rle.exp_prefix(g, v.start);
  out.step = v.count > 1 ? pp.rle.exp_prefix(g, v.diff) : pp.exp_len;
  out.occurrences = Progression::make(start, out.step, v.count);
  return out;
}

Progression union_progressions(const std::vector<Progression>& pieces) {
  Pos lo = 0, hi = 0, total = 0;
  bool any = false;
  for (const Progression& p : pieces) {
    if (p.empty()) continue;
    lo = any ? std::min(lo, p.start) : p.start;
    hi = any ? std::max(hi, p.last()) : p.last();
    total += p.count;
    any = true;
  }
  if (!any) return {};
  Pos d = 0;
  for (const Progression& p : pieces) {
    if (p.empty()) continue;
    d = std::gcd(d, p.start - lo);
    if (p.count > 1) d = std::gcd(d, p.diff);
  }
  if (d == 0) return Progression::single(lo);
  const Pos count = (hi - lo) / d + 1;
  if (count > total) throw std::logic_error("occurrence pieces do not cover a single progression");
  return Progression::make(lo, d, count);
}

Progression ipm_query(const Grammar& g, Fragment x, Fragment y, StepCounter* counter) {
  const Pos n = g.text_len();
  if (x.begin > x.end || x.end > n || y.begin > y.end || y.end > n) {
    throw Error(ErrorCode::OutOfRange, "query fragment is not inside the text of length " + std::to_string(n));
  }
  if (x.empty()) throw Error(ErrorCode::EmptyPattern, "pattern fragment is empty");
  if (y.length() >= 2 * x.length()) {
    throw Error(ErrorCode::RatioViolation, "|Y| = " + std::to_string(y.length()) + " is not below 2|X| = " +
                                               std::to_string(2 * x.length()));
  }
  if (y.length() < x.length()) return {};

  Navigator forward(g, Orientation::Forward, counter);
  Navigator mirrored(g, Orientation::Mirrored, counter);
  const ProxyPattern pp = proxy_pattern(forward, x);
  const ProxyText pt = proxy_text(forward, y, pp);
  if (pt.empty()) return {};

  std::vector<Progression> found;
  for (const Progression& v : rle_match(pp.rle, pt.rle, counter)) {
    Progression r = verify_progression(forward, mirrored, lift_progression(g, v, pt, pp), pp, x, y);
    if (!r.empty()) found.push_back(r);
  }
  return union_progressions(found);
}

}  // namespace rlslp
