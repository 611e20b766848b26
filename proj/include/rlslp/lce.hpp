#ifndef RLSLP_LCE_HPP
#define RLSLP_LCE_HPP

#include "rlslp/grammar.hpp"
#include "rlslp/navigator.hpp"

namespace rlslp {

/// Longest common prefix of the suffixes starting at i and i2 of the text as
/// seen by `nav` (the reversed text for a Mirrored navigator). Positions equal
/// to the text length are allowed and yield 0.
Pos lce(Navigator& nav, Pos i, Pos i2);

/// max d with T[i, i+d) = T[i2, i2+d).
Pos lce(const Grammar& g, Pos i, Pos i2, StepCounter* counter = nullptr);

/// max d <= min(i, i2) with T[i-d, i) = T[i2-d, i2), computed on the mirrored
/// view of the grammar.
Pos rev_lce(const Grammar& g, Pos i, Pos i2, StepCounter* counter = nullptr);

/// rev_lce through an existing Mirrored navigator; i and i2 are forward positions.
Pos rev_lce(Navigator& mirrored, Pos i, Pos i2);

}  // namespace rlslp

#endif
