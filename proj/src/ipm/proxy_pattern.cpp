#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rlslp/error.hpp"
#include "rlslp/ipm.hpp"

namespace rlslp {

namespace {

// Appends the expansion of A^e down to symbols of level <= limit.
void expand_to_level(const Grammar& g, Navigator& nav, const Run& run, Level limit, std::size_t cap,
                     std::vector<SymbolId>& out) {
  std::vector<SymbolId> stack;
  for (Pos copy = 0; copy < run.exponent; ++copy) {
    stack.push_back(run.sym);
    while (!stack.empty()) {
      const SymbolId a = stack.back();
      stack.pop_back();
      nav.tick();
      const SymbolRecord& rec = g[a];
      if (rec.level() <= limit) {
        out.push_back(a);
        if (out.size() > cap) throw std::logic_error("proxy pattern: X̄ grew past its level bound");
        continue;
      }
      if (rec.is_pair()) {
        stack.push_back(rec.right());
        stack.push_back(rec.left());
      } else {
        for (Pos t = 0; t < rec.exponent(); ++t) stack.push_back(rec.base());
      }
    }
  }
}

}  // namespace

ProxyPattern proxy_pattern(Navigator& nav, Fragment x) {
  const Grammar& g = nav.grammar();
  const PoppedSeq ps = pseq(nav, x.begin, x.end);
  const Level q = ps.q();

  // M_k as buckets by symbol level; entries carry multiplicities.
  std::vector<std::vector<Run>> buckets(static_cast<std::size_t>(q) + 2);
  Pos size = 0;
  auto insert = [&](SymbolId s, Pos mult) {
    buckets[g.level(s)].push_back(Run{s, mult});
    size += mult;
    nav.tick();
  };

  std::optional<Level> found;
  for (Level k = q + 1; k-- > 0 && !found;) {
    std::vector<Run>& top = buckets[k + 1];
    for (std::size_t t = 0; t < top.size() && size <= k; ++t) {
      const Run run = top[t];
      const SymbolRecord& rec = g[run.sym];
      size -= run.exponent;
      if (rec.is_pair()) {
        insert(rec.left(), run.exponent);
        insert(rec.right(), run.exponent);
      } else {
        insert(rec.base(), run.exponent * rec.exponent());
      }
    }
    top.clear();
    const PoppedLevel& lv = ps.levels[k];
    if (size <= k && lv.left) insert(lv.left->sym, lv.left->exponent);
    if (size <= k && lv.right) insert(lv.right->sym, lv.right->exponent);
    if (size > k) found = k;
  }
  if (!found) throw std::logic_error("proxy pattern: no level with |X̄_k| > k");
  const Level ell = *found;

  // X̄_{ℓ+1}: expand the popped blocks above ℓ+1 down to level ℓ+1.
  std::vector<SymbolId> upper;
  const std::size_t cap = static_cast<std::size_t>(ell) + 1;
  for (Level k = ell + 1; k <= q; ++k) {
    if (ps.levels[k].left) expand_to_level(g, nav, *ps.levels[k].left, ell + 1, cap, upper);
  }
  for (Level k = q + 1; k-- > ell + 1;) {
    if (ps.levels[k].right) expand_to_level(g, nav, *ps.levels[k].right, ell + 1, cap, upper);
  }

  ProxyPattern pp;
  pp.level = ell;
  const PoppedLevel& at = ps.levels[ell];
  if (at.left) pp.rle.push(*at.left);
  for (SymbolId a : upper) {
    nav.tick();
    const SymbolRecord& rec = g[a];
    if (rec.level() != ell + 1) {
      pp.rle.push(a, 1);
    } else if (rec.is_pair()) {
      pp.rle.push(rec.left(), 1);
      pp.rle.push(rec.right(), 1);
    } else {
      pp.rle.push(rec.base(), rec.exponent());
    }
  }
  if (at.right) pp.rle.push(*at.right);

  pp.left_off = at.left_offset;
  pp.right_cut = x.length() - at.right_offset;
  pp.exp_len = pp.right_cut - pp.left_off;
  assert(pp.exp_len == pp.rle.exp_length(g));
  assert(pp.rle.length() > ell);
  return pp;
}

ProxyPattern proxy_pattern(const Grammar& g, Fragment x, StepCounter* counter) {
  Navigator nav(g, Orientation::Forward, counter);
  return proxy_pattern(nav, x);
}

}  // namespace rlslp
