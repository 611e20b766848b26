#include "rlslp/builder.hpp"

#include <bit>

#include "rlslp/error.hpp"

namespace rlslp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Side coin(std::uint64_t seed, Level k, std::uint64_t rank) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ k);
  h = splitmix64(h ^ rank);
  return (h >> 63) ? Side::Left : Side::Right;
}

}  // namespace

Side Partition::side_of(SymbolId id) const {
  auto it = classes.find(id);
  if (it == classes.end()) {
    throw Error(ErrorCode::UnclassifiedSymbol, "symbol " + std::to_string(id) + " has no side");
  }
  return it->second;
}

LevelString shrink_rle(const LevelString& s, Level k, SymbolTable& table) {
  LevelString out{k, {}};
  out.symbols.reserve(s.symbols.size());
  const auto& in = s.symbols;
  for (std::size_t i = 0; i < in.size();) {
    std::size_t j = i + 1;
    while (j < in.size() && in[j] == in[i]) ++j;
    if (j - i == 1) {
      out.symbols.push_back(in[i]);
    } else {
      out.symbols.push_back(table.intern_power(in[i], j - i, k));
    }
    i = j;
  }
  return out;
}

LevelString shrink_pc(const LevelString& s, Level k, const Partition& p, SymbolTable& table) {
  LevelString out{k, {}};
  out.symbols.reserve(s.symbols.size());
  const auto& in = s.symbols;
  for (std::size_t i = 0; i < in.size();) {
    Side here = p.side_of(in[i]);
    if (i + 1 < in.size() && here == Side::Left && p.side_of(in[i + 1]) == Side::Right) {
      out.symbols.push_back(table.intern_pair(in[i], in[i + 1], k));
      i += 2;
    } else {
      out.symbols.push_back(in[i]);
      i += 1;
    }
  }
  return out;
}

Partition draw_partition(const LevelString& s, Level k, std::uint64_t seed) {
  Partition p;
  std::uint64_t rank = 0;
  for (SymbolId id : s.symbols) {
    if (p.classes.contains(id)) continue;
    p.classes.emplace(id, coin(seed, k, rank++));
  }
  return p;
}

Level round_cap(Pos text_len) {
  // ceil(log2(n + 1)) equals the bit width of n.
  auto log_ceil = static_cast<Level>(std::bit_width(text_len));
  return 8 * log_ceil + 32;
}

Grammar build(std::u32string_view text, std::uint64_t seed) {
  if (text.empty()) throw Error(ErrorCode::EmptyText, "cannot build a grammar for an empty text");
  const Level cap = round_cap(text.size());

  for (std::uint64_t attempt_seed = seed;; ++attempt_seed) {
    SymbolTable table;
    LevelString current{0, {}};
    current.symbols.reserve(text.size());
    for (char32_t ch : text) current.symbols.push_back(table.intern_terminal(ch));

    Level k = 0;
    bool capped = false;
    while (current.symbols.size() > 1) {
      if (k == cap) {
        capped = true;
        break;
      }
      ++k;
      if (k % 2 == 1) {
        current = shrink_rle(current, k, table);
      } else {
        current = shrink_pc(current, k, draw_partition(current, k, attempt_seed), table);
      }
    }
    if (capped) continue;
    SymbolId start = current.symbols.front();
    return Grammar(std::move(table), start, k, attempt_seed);
  }
}

LevelString level_string(const Grammar& g, Level k) {
  if (k > g.rounds()) {
    throw Error(ErrorCode::BadLevel,
                "level " + std::to_string(k) + " exceeds round count " + std::to_string(g.rounds()));
  }
  LevelString out{k, {}};
  std::vector<SymbolId> stack{g.start()};
  while (!stack.empty()) {
    SymbolId s = stack.back();
    stack.pop_back();
    const SymbolRecord& rec = g[s];
    if (rec.level() <= k) {
      out.symbols.push_back(s);
    } else if (rec.is_pair()) {
      stack.push_back(rec.right());
      stack.push_back(rec.left());
    } else {
      for (Pos i = 0; i < rec.exponent(); ++i) stack.push_back(rec.base());
    }
  }
  return out;
}

}  // namespace rlslp
