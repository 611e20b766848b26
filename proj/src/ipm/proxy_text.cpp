#include <algorithm>
#include <vector>

#include "rlslp/error.hpp"
#include "rlslp/ipm.hpp"

namespace rlslp {

namespace {

// A run of equal T_ℓ characters, all children of one T_{ℓ+1} character.
struct Piece {
  SymbolId sym;
  Pos count;
  Pos text_start;
};

Pos ceil_div(Pos a, Pos b) { return (a + b - 1) / b; }

}  // namespace

ProxyText proxy_text(Navigator& nav, Fragment y, const ProxyPattern& pp) {
  const Grammar& g = nav.grammar();
  if (y.begin > y.end || y.end > g.text_len()) {
    throw Error(ErrorCode::OutOfRange, "text fragment is not inside the text");
  }
  if (y.empty()) throw Error(ErrorCode::EmptyFragment, "proxy text of an empty fragment");
  const Level ell = pp.level;

  const Pos m = y.begin + y.length() / 2;
  UNodeHandle m_ell = nav.u_leaf(m);
  for (Level k = 0; k < ell; ++k) m_ell = nav.u_parent(m_ell);
  const UNodeHandle m_up = nav.u_parent(m_ell);

  // T_{ℓ+1}[m' - 2ℓ - 2, m' + 2ℓ + 3) around m' = m̄_{ℓ+1}.
  const Pos reach = 2 * static_cast<Pos>(ell) + 2;
  std::vector<UNodeHandle> window;
  for (UNodeHandle w = m_up; window.size() < reach;) {
    w = nav.u_prev(w);
    if (w.is_nil()) break;
    window.push_back(w);
  }
  std::reverse(window.begin(), window.end());
  const std::size_t center_block = window.size();
  window.push_back(m_up);
  for (UNodeHandle w = m_up; window.size() < center_block + 1 + reach;) {
    w = nav.u_next(w);
    if (w.is_nil()) break;
    window.push_back(w);
  }

  // Split into T_ℓ characters, remembering the index of m̄_ℓ.
  std::vector<Piece> pieces;
  Pos index = 0;
  Pos center = 0;
  for (std::size_t b = 0; b < window.size(); ++b) {
    const NodeHandle v = window[b].node;
    const SymbolRecord& rec = g[v.sym()];
    nav.tick();
    if (b == center_block) {
      const bool real = m_up.node.frame() != m_ell.node.frame();
      center = index + (real ? nav.index_of(v, m_ell.node.pos()) : 0);
    }
    if (rec.level() != ell + 1) {
      pieces.push_back({v.sym(), 1, v.pos()});
      index += 1;
    } else if (rec.is_pair()) {
      pieces.push_back({rec.left(), 1, v.pos()});
      pieces.push_back({rec.right(), 1, v.pos() + g.explen(rec.left())});
      index += 2;
    } else {
      pieces.push_back({rec.base(), rec.exponent(), v.pos()});
      index += rec.exponent();
    }
  }

  // At most K characters on either side of m̄_ℓ, and only those inside Y.
  const Pos reach_l = pp.rle.length() + ell - 1;
  const Pos lo = center - std::min(center, reach_l);
  const Pos hi = center + reach_l;  // inclusive
  ProxyText pt;
  bool started = false;
  Pos piece_index = 0;
  for (const Piece& pc : pieces) {
    nav.tick();
    const Pos len = g.explen(pc.sym);
    Pos t_lo = lo > piece_index ? lo - piece_index : 0;
    Pos t_end = hi >= piece_index ? std::min(pc.count, hi - piece_index + 1) : 0;
    if (y.begin > pc.text_start) t_lo = std::max(t_lo, ceil_div(y.begin - pc.text_start, len));
    const Pos fit = y.end >= pc.text_start ? (y.end - pc.text_start) / len : 0;
    t_end = std::min(t_end, fit);
    if (t_lo < t_end) {
      if (!started) {
        pt.text_start = pc.text_start + t_lo * len;
        started = true;
      }
      pt.rle.push(pc.sym, t_end - t_lo);
      pt.exp_len += (t_end - t_lo) * len;
    }
    piece_index += pc.count;
  }
  return pt;
}

ProxyText proxy_text(const Grammar& g, Fragment y, const ProxyPattern& pp, StepCounter* counter) {
  Navigator nav(g, Orientation::Forward, counter);
  return proxy_text(nav, y, pp);
}

}  // namespace rlslp
