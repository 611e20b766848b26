#ifndef RLSLP_ORACLE_HPP
#define RLSLP_ORACLE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "rlslp/builder.hpp"
#include "rlslp/grammar.hpp"
#include "rlslp/progression.hpp"

/// Brute-force reference implementations, for testing only. They work on
/// explicit strings and refuse texts longer than kMaxText.
namespace rlslp::oracle {

inline constexpr Pos kMaxText = 512;

/// Sorted starting positions of occurrences of X inside Y.
std::vector<Pos> naive_occ(std::u32string_view text, Fragment x, Fragment y);
Pos naive_lce(std::u32string_view text, Pos i, Pos i2);
Pos naive_rev_lce(std::u32string_view text, Pos i, Pos i2);

/// Level strings T_0 .. T_r of a grammar and the partitions used for its pair
/// rounds, materialised once.
class LevelContext {
 public:
  explicit LevelContext(const Grammar& g);

  const Grammar& grammar() const { return g_; }
  const LevelString& level(Level k) const { return levels_.at(k); }
  /// Text position where T_k[i] starts; i = |T_k| gives n.
  Pos start_of(Level k, std::size_t i) const { return starts_.at(k).at(i); }
  /// Partition of round k (k even, 2 <= k <= r).
  const Partition& partition(Level k) const { return partitions_.at(k); }

 private:
  const Grammar& g_;
  std::vector<LevelString> levels_;
  std::vector<std::vector<Pos>> starts_;
  std::vector<Partition> partitions_;
};

struct NaiveLevel {
  std::vector<SymbolId> xbar;   // X̄_k
  std::vector<SymbolId> left;   // L_k, empty for ε
  std::vector<SymbolId> right;  // R_k, empty for ε
  std::size_t first_index = 0;  // index of X̄_k[0] in T_k
  Pos left_offset = 0;          // |exp(L_0 ... L_{k-1})|
  Pos right_offset = 0;         // |exp(R_{k-1} ... R_0)|
};

struct NaivePopped {
  std::vector<NaiveLevel> levels;  // k = 0 .. q
  Level q = 0;
  Level ell = 0;  // max { k : |X̄_k| > k }
};

/// Popped sequence of X computed straight from its definition on explicit level strings.
NaivePopped naive_pseq_levels(const LevelContext& ctx, Fragment x);

}  // namespace rlslp::oracle

#endif
