#ifndef RLSLP_BUILDER_HPP
#define RLSLP_BUILDER_HPP

#include <cstdint>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rlslp/grammar.hpp"

namespace rlslp {

/// The string T_k produced after k recompression rounds.
struct LevelString {
  Level level = 0;
  std::vector<SymbolId> symbols;
};

enum class Side : std::uint8_t { Left, Right };

/// Left/right classification used by one pair-compression round.
struct Partition {
  std::unordered_map<SymbolId, Side> classes;

  Side side_of(SymbolId id) const;
};

/// Run-length round: maximal runs of length m >= 2 become powers at level k.
LevelString shrink_rle(const LevelString& s, Level k, SymbolTable& table);

/// Pair round: every adjacent (Left, Right) pair becomes a pair symbol at level k.
LevelString shrink_pc(const LevelString& s, Level k, const Partition& p, SymbolTable& table);

/// Fair coin per distinct symbol of s, in first-occurrence order, drawn from a
/// counter-based stream keyed by (seed, k, rank of first occurrence).
Partition draw_partition(const LevelString& s, Level k, std::uint64_t seed);

/// Largest round count accepted before the builder retries with the next seed.
Level round_cap(Pos text_len);

/// Recompression RLSLP of a non-empty text. Runs until |T_k| = 1; if the round
/// count would exceed round_cap, rebuilds from scratch with seed + 1, and the
/// resulting grammar records the seed actually used.
Grammar build(std::u32string_view text, std::uint64_t seed);

/// Reconstructs T_k by expanding exactly the symbols whose level exceeds k.
LevelString level_string(const Grammar& g, Level k);

}  // namespace rlslp

#endif
