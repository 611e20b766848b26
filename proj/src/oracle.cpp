#include "rlslp/oracle.hpp"

#include <stdexcept>

#include "rlslp/error.hpp"

namespace rlslp::oracle {

namespace {

void check_size(Pos n) {
  if (n > kMaxText) throw std::invalid_argument("oracle used on a text longer than " + std::to_string(kMaxText));
}

void check_fragment(Pos n, Fragment f) {
  if (f.begin > f.end || f.end > n) throw Error(ErrorCode::OutOfRange, "fragment outside the text");
}

// Block decomposition of s under round k: lengths of consecutive blocks.
std::vector<std::size_t> blocks_of(const std::vector<SymbolId>& s, Level k, const LevelContext& ctx) {
  std::vector<std::size_t> out;
  const bool pair_round = k % 2 == 0;
  for (std::size_t i = 0; i < s.size();) {
    std::size_t len = 1;
    if (!pair_round) {
      while (i + len < s.size() && s[i + len] == s[i]) ++len;
    } else if (i + 1 < s.size()) {
      const Partition& p = ctx.partition(k);
      if (p.side_of(s[i]) == Side::Left && p.side_of(s[i + 1]) == Side::Right) len = 2;
    }
    out.push_back(len);
    i += len;
  }
  return out;
}

bool two_distinct(const std::vector<SymbolId>& s, std::size_t from, std::size_t len) {
  return len == 2 && s[from] != s[from + 1];
}

SymbolId collapse(const Grammar& g, const std::vector<SymbolId>& s, std::size_t from, std::size_t len) {
  if (len == 1) return s[from];
  const auto found = two_distinct(s, from, len) ? g.symbols().find_pair(s[from], s[from + 1])
                                                : g.symbols().find_power(s[from], len);
  if (!found) throw std::logic_error("oracle: collapsed block has no symbol in the grammar");
  return *found;
}

Pos exp_of(const Grammar& g, const std::vector<SymbolId>& s) {
  Pos total = 0;
  for (SymbolId a : s) total += g.explen(a);
  return total;
}

}  // namespace

std::vector<Pos> naive_occ(std::u32string_view text, Fragment x, Fragment y) {
  check_size(text.size());
  check_fragment(text.size(), x);
  check_fragment(text.size(), y);
  std::vector<Pos> out;
  if (x.empty() || y.length() < x.length()) return out;
  const std::u32string_view pat = text.substr(x.begin, x.length());
  for (Pos p = y.begin; p + x.length() <= y.end; ++p) {
    if (text.substr(p, x.length()) == pat) out.push_back(p);
  }
  return out;
}

Pos naive_lce(std::u32string_view text, Pos i, Pos i2) {
  check_size(text.size());
  if (i > text.size() || i2 > text.size()) throw Error(ErrorCode::OutOfRange, "LCE position past the text end");
  Pos d = 0;
  while (i + d < text.size() && i2 + d < text.size() && text[i + d] == text[i2 + d]) ++d;
  return d;
}

Pos naive_rev_lce(std::u32string_view text, Pos i, Pos i2) {
  check_size(text.size());
  if (i > text.size() || i2 > text.size()) throw Error(ErrorCode::OutOfRange, "LCE position past the text end");
  Pos d = 0;
  while (d < i && d < i2 && text[i - d - 1] == text[i2 - d - 1]) ++d;
  return d;
}

LevelContext::LevelContext(const Grammar& g) : g_(g) {
  check_size(g.text_len());
  for (Level k = 0; k <= g.rounds(); ++k) {
    levels_.push_back(level_string(g, k));
    std::vector<Pos> starts{0};
    for (SymbolId a : levels_.back().symbols) starts.push_back(starts.back() + g.explen(a));
    starts_.push_back(std::move(starts));
  }
  partitions_.resize(g.rounds() + 1);
  for (Level k = 2; k <= g.rounds(); k += 2) partitions_[k] = draw_partition(levels_[k - 1], k, g.seed());
}

NaivePopped naive_pseq_levels(const LevelContext& ctx, Fragment x) {
  const Grammar& g = ctx.grammar();
  check_fragment(g.text_len(), x);
  if (x.empty()) throw Error(ErrorCode::EmptyFragment, "popped sequence of an empty fragment");

  NaivePopped out;
  std::vector<SymbolId> cur(ctx.level(0).symbols.begin() + static_cast<std::ptrdiff_t>(x.begin),
                            ctx.level(0).symbols.begin() + static_cast<std::ptrdiff_t>(x.end));
  std::size_t first_index = x.begin;
  Pos left_offset = 0, right_offset = 0;

  for (Level k = 0; !cur.empty(); ++k) {
    NaiveLevel lv;
    lv.xbar = cur;
    lv.first_index = first_index;
    lv.left_offset = left_offset;
    lv.right_offset = right_offset;

    // Round k + 1 acts on T_k; once T_k is a single symbol there is nothing left to pair.
    const std::vector<std::size_t> blocks =
        cur.size() == 1 ? std::vector<std::size_t>{1} : blocks_of(cur, k + 1, ctx);
    std::size_t b_lo = 0, b_hi = blocks.size();
    std::size_t from = 0;
    if (!two_distinct(cur, 0, blocks.front())) {
      lv.left.assign(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(blocks.front()));
      from = blocks.front();
      b_lo = 1;
    }
    if (blocks.size() >= 2 && !two_distinct(cur, cur.size() - blocks.back(), blocks.back())) {
      lv.right.assign(cur.end() - static_cast<std::ptrdiff_t>(blocks.back()), cur.end());
      b_hi = blocks.size() - 1;
    }

    // The middle blocks are blocks of T_k too; locate the first of them in T_{k+1}.
    std::vector<SymbolId> next;
    std::size_t pos = from;
    for (std::size_t b = b_lo; b < b_hi; ++b) {
      next.push_back(collapse(g, cur, pos, blocks[b]));
      pos += blocks[b];
    }
    if (!next.empty()) {
      const std::size_t t_from = first_index + from;
      const std::vector<std::size_t> all = blocks_of(ctx.level(k).symbols, k + 1, ctx);
      std::size_t acc = 0, idx = 0;
      while (acc < t_from) acc += all[idx++];
      if (acc != t_from) throw std::logic_error("oracle: middle blocks are not aligned with T_k's blocks");
      first_index = idx;
    }

    left_offset += exp_of(g, lv.left);
    right_offset += exp_of(g, lv.right);
    out.levels.push_back(std::move(lv));
    cur = std::move(next);
  }
  out.q = static_cast<Level>(out.levels.size() - 1);
  for (Level k = 0; k <= out.q; ++k) {
    if (out.levels[k].xbar.size() > k) out.ell = k;
  }
  return out;
}

}  // namespace rlslp::oracle
