#ifndef RLSLP_POPPED_HPP
#define RLSLP_POPPED_HPP

#include <optional>
#include <vector>

#include "rlslp/grammar.hpp"
#include "rlslp/navigator.hpp"

namespace rlslp {

/// A block A^m of a level string (m >= 1).
struct Run {
  SymbolId sym;
  Pos exponent;

  friend bool operator==(const Run&, const Run&) = default;
};

/// Run-length encoded symbol sequence; adjacent runs always differ in symbol.
struct RleSeq {
  std::vector<Run> runs;

  /// Appends a run, merging it into the last one when the symbols agree.
  void push(SymbolId sym, Pos exponent);
  void push(const Run& run) { push(run.sym, run.exponent); }
  void append(const RleSeq& other);

  /// Total number of symbols (sum of exponents).
  Pos length() const;
  /// Length of the expansion, given expansion lengths from g.
  Pos exp_length(const Grammar& g) const;
  /// Expansion length of the first `count` symbols.
  Pos exp_prefix(const Grammar& g, Pos count) const;
  bool empty() const { return runs.empty(); }

  friend bool operator==(const RleSeq&, const RleSeq&) = default;
};

/// The blocks popped at one level k of the virtual recompression of X.
struct PoppedLevel {
  std::optional<Run> left;   // L_k
  std::optional<Run> right;  // R_k
  UNodeHandle first;         // leftmost character of the induced occurrence of X̄_k in T_k
  UNodeHandle last;          // rightmost one
  Pos left_offset = 0;       // |exp(L_0 ... L_{k-1})|
  Pos right_offset = 0;      // |exp(R_{k-1} ... R_0)|
};

/// Popped sequence L_0 ... L_q R_q ... R_0 of a fragment, split by level.
/// levels.size() == q + 1, and X̄_{q+1} is empty.
struct PoppedSeq {
  std::vector<PoppedLevel> levels;

  Level q() const { return static_cast<Level>(levels.size() - 1); }
  /// The whole popped sequence as one run-length encoding.
  RleSeq flatten() const;
};

/// Popped sequence of X = T[x_start, x_end). The handles stored in the result
/// belong to `nav`, which must read the grammar in Forward orientation.
PoppedSeq pseq(Navigator& nav, Pos x_start, Pos x_end);

/// Convenience overload with a private navigator; handles in the result are
/// nil because their navigator does not outlive the call.
PoppedSeq pseq(const Grammar& g, Pos x_start, Pos x_end, StepCounter* counter = nullptr);

}  // namespace rlslp

#endif
