#include "rlslp/selftest.hpp"

#include <algorithm>
#include <sstream>

#include "rlslp/builder.hpp"
#include "rlslp/error.hpp"
#include "rlslp/ipm.hpp"
#include "rlslp/lce.hpp"
#include "rlslp/navigator.hpp"
#include "rlslp/text_codec.hpp"

namespace rlslp::selftest {

namespace {

Pos uniform(std::mt19937_64& rng, Pos lo, Pos hi) { return std::uniform_int_distribution<Pos>(lo, hi)(rng); }

std::string show(std::u32string_view text) { return "\"" + encode_utf8(text) + "\""; }

std::string show(const std::vector<Pos>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  os << "]";
  return os.str();
}

std::optional<Run> as_run(const std::vector<SymbolId>& block) {
  if (block.empty()) return std::nullopt;
  return Run{block.front(), block.size()};
}

std::string show(const std::optional<Run>& r) {
  if (!r) return "eps";
  return std::to_string(r->sym) + "^" + std::to_string(r->exponent);
}

}  // namespace

std::u32string random_text(std::mt19937_64& rng, Pos len, unsigned alphabet) {
  std::u32string out;
  out.reserve(len);
  auto letter = [&] { return static_cast<char32_t>(U'a' + uniform(rng, 0, alphabet - 1)); };
  if (uniform(rng, 0, 1) == 0) {
    for (Pos i = 0; i < len; ++i) out.push_back(letter());
    return out;
  }
  std::u32string unit;
  const Pos period = uniform(rng, 1, std::min<Pos>(8, std::max<Pos>(1, len)));
  for (Pos i = 0; i < period; ++i) unit.push_back(letter());
  for (Pos i = 0; i < len; ++i) out.push_back(unit[i % period]);
  const Pos mutations = uniform(rng, 0, 3);
  for (Pos t = 0; t < mutations && len > 0; ++t) out[uniform(rng, 0, len - 1)] = letter();
  return out;
}

std::pair<Fragment, Fragment> sample_ipm_pair(std::mt19937_64& rng, std::u32string_view text) {
  const Pos n = text.size();
  const Pos xl = uniform(rng, 1, n);
  const Pos xb = uniform(rng, 0, n - xl);
  const Fragment x{xb, xb + xl};
  const Pos y_max = std::min(2 * xl - 1, n);
  if (uniform(rng, 0, 1) == 0) {
    const std::vector<Pos> occ = oracle::naive_occ(text, x, Fragment{0, n});
    const Pos at = occ[uniform(rng, 0, occ.size() - 1)];
    const Pos yl = uniform(rng, xl, y_max);
    const Pos lo = at + xl > yl ? at + xl - yl : 0;
    const Pos hi = std::min(at, n - yl);
    const Pos yb = uniform(rng, lo, hi);
    return {x, Fragment{yb, yb + yl}};
  }
  const Pos yl = uniform(rng, 1, y_max);
  const Pos yb = uniform(rng, 0, n - yl);
  return {x, Fragment{yb, yb + yl}};
}

RleSeq random_rle(std::mt19937_64& rng, std::size_t max_runs, Pos max_exponent, SymbolId alphabet) {
  RleSeq out;
  const Pos runs = uniform(rng, 1, max_runs);
  for (Pos i = 0; i < runs; ++i) {
    out.push(static_cast<SymbolId>(uniform(rng, 0, alphabet - 1)), uniform(rng, 1, max_exponent));
  }
  return out;
}

std::optional<std::string> check_ipm(const Grammar& g, std::u32string_view text, Fragment x, Fragment y) {
  const std::vector<Pos> want = oracle::naive_occ(text, x, y);
  std::vector<Pos> got;
  std::string err;
  try {
    got = ipm_query(g, x, y).positions();
  } catch (const std::exception& e) {
    err = e.what();
  }
  if (err.empty() && got == want) return std::nullopt;
  std::ostringstream os;
  os << "ipm mismatch: text=" << show(text) << " seed=" << g.seed() << " X=" << x << " Y=" << y
     << " expected=" << show(want) << " got=" << (err.empty() ? show(got) : "exception: " + err);
  return os.str();
}

std::optional<std::string> check_lce(const Grammar& g, std::u32string_view text, Pos i, Pos i2) {
  const Pos f = lce(g, i, i2), fw = oracle::naive_lce(text, i, i2);
  const Pos r = rev_lce(g, i, i2), rw = oracle::naive_rev_lce(text, i, i2);
  if (f == fw && r == rw) return std::nullopt;
  std::ostringstream os;
  os << "lce mismatch: text=" << show(text) << " i=" << i << " i'=" << i2 << " lce=" << f << " (want " << fw
     << ") rev_lce=" << r << " (want " << rw << ")";
  return os.str();
}

std::optional<std::string> check_pseq(const oracle::LevelContext& ctx, std::u32string_view text, Fragment x) {
  const Grammar& g = ctx.grammar();
  std::ostringstream os;
  os << "pseq mismatch: text=" << show(text) << " seed=" << g.seed() << " X=" << x << ": ";
  const oracle::NaivePopped want = oracle::naive_pseq_levels(ctx, x);
  Navigator nav(g);
  const PoppedSeq got = pseq(nav, x.begin, x.end);
  if (got.q() != want.q) {
    os << "q=" << got.q() << " want " << want.q;
    return os.str();
  }
  std::u32string joined;
  for (Level k = 0; k <= want.q; ++k) {
    const PoppedLevel& lv = got.levels[k];
    const oracle::NaiveLevel& wl = want.levels[k];
    const auto wl_left = as_run(wl.left), wl_right = as_run(wl.right);
    if (lv.left != wl_left || lv.right != wl_right) {
      os << "level " << k << " L=" << show(lv.left) << " R=" << show(lv.right) << " want L=" << show(wl_left)
         << " R=" << show(wl_right);
      return os.str();
    }
    if (lv.left_offset != wl.left_offset || lv.right_offset != wl.right_offset) {
      os << "level " << k << " offsets differ";
      return os.str();
    }
    const std::size_t last_index = wl.first_index + wl.xbar.size() - 1;
    const bool first_ok = lv.first.level == k && lv.first.node.sym() == wl.xbar.front() &&
                          lv.first.node.pos() == ctx.start_of(k, wl.first_index);
    const bool last_ok = lv.last.level == k && lv.last.node.sym() == wl.xbar.back() &&
                         lv.last.node.pos() == ctx.start_of(k, last_index);
    if (!first_ok || !last_ok) {
      os << "level " << k << " induced occurrence is misplaced";
      return os.str();
    }
  }
  for (const Run& r : got.flatten().runs) {
    for (Pos t = 0; t < r.exponent; ++t) joined += expand(g, r.sym);
  }
  if (joined != text.substr(x.begin, x.length())) {
    os << "exp(pseq) does not spell X";
    return os.str();
  }

  // The proxy pattern must be rle(X̄_ℓ) with the matching offsets.
  const ProxyPattern pp = proxy_pattern(g, x);
  RleSeq want_rle;
  for (SymbolId a : want.levels[want.ell].xbar) want_rle.push(a, 1);
  if (pp.level != want.ell || pp.rle != want_rle || pp.left_off != want.levels[want.ell].left_offset ||
      pp.right_cut != x.length() - want.levels[want.ell].right_offset) {
    os << "proxy pattern: level " << pp.level << " want " << want.ell;
    return os.str();
  }
  return std::nullopt;
}

std::optional<std::string> check_rle_match(const RleSeq& pattern, const RleSeq& text) {
  std::vector<SymbolId> p, s;
  for (const Run& r : pattern.runs) p.insert(p.end(), r.exponent, r.sym);
  for (const Run& r : text.runs) s.insert(s.end(), r.exponent, r.sym);
  std::vector<Pos> want;
  for (std::size_t i = 0; i + p.size() <= s.size(); ++i) {
    if (std::equal(p.begin(), p.end(), s.begin() + static_cast<std::ptrdiff_t>(i))) want.push_back(i);
  }
  const std::vector<Progression> got = rle_match(pattern, text);
  std::vector<Pos> flat;
  std::string problem;
  const Pos bound = std::min<Pos>(text.runs.size(), s.size() / p.size());
  if (got.size() > bound) problem = "too many progressions";
  for (const Progression& pr : got) {
    if (pr.empty()) problem = "empty progression";
    if (pr.count > 1 && pr.diff > p.size()) problem = "difference exceeds |P|";
    for (Pos q : pr.positions()) flat.push_back(q);
  }
  std::sort(flat.begin(), flat.end());
  if (flat != want) problem = "occurrences differ: got " + show(flat) + " want " + show(want);
  if (problem.empty()) return std::nullopt;
  std::ostringstream os;
  os << "rle_match: P=";
  for (const Run& r : pattern.runs) os << r.sym << "^" << r.exponent << " ";
  os << "S=";
  for (const Run& r : text.runs) os << r.sym << "^" << r.exponent << " ";
  os << ": " << problem;
  return os.str();
}

Report run(const Options& opts) {
  Report rep;
  std::mt19937_64 rng(opts.seed);
  const Pos max_len = std::clamp<Pos>(opts.max_len, 1, oracle::kMaxText);
  auto fail = [&rep](std::optional<std::string> msg) {
    ++rep.checks;
    if (!msg) return false;
    rep.ok = false;
    rep.failure = std::move(*msg);
    return true;
  };
  for (std::uint64_t t = 0; t < opts.trials; ++t) {
    const unsigned sigma = opts.alphabets[uniform(rng, 0, opts.alphabets.size() - 1)];
    const std::u32string text = random_text(rng, uniform(rng, 1, max_len), sigma);
    const Grammar g = build(text, rng());
    const oracle::LevelContext ctx(g);
    const Pos n = text.size();
    ++rep.texts;
    for (int k = 0; k < 16; ++k) {
      if (fail(check_lce(g, text, uniform(rng, 0, n), uniform(rng, 0, n)))) return rep;
      const Pos b = uniform(rng, 0, n - 1);
      if (fail(check_pseq(ctx, text, Fragment{b, uniform(rng, b + 1, n)}))) return rep;
      const auto [x, y] = sample_ipm_pair(rng, text);
      if (fail(check_ipm(g, text, x, y))) return rep;
      if (fail(check_rle_match(random_rle(rng, 4, 4, 3), random_rle(rng, 12, 5, 3)))) return rep;
    }
  }
  return rep;
}

}  // namespace rlslp::selftest
