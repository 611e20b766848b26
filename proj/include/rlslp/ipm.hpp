#ifndef RLSLP_IPM_HPP
#define RLSLP_IPM_HPP

#include <vector>

#include "rlslp/grammar.hpp"
#include "rlslp/navigator.hpp"
#include "rlslp/popped.hpp"
#include "rlslp/progression.hpp"

namespace rlslp {

/// Level-ℓ stand-in for the pattern X, where ℓ is the highest level whose
/// virtual recompression X̄_ℓ still has more than ℓ symbols.
struct ProxyPattern {
  Level level = 0;
  RleSeq rle;           // rle(X̄_ℓ)
  Pos left_off = 0;     // |exp(L_0 ... L_{ℓ-1})|
  Pos right_cut = 0;    // |X| - |exp(R_{ℓ-1} ... R_0)|
  Pos exp_len = 0;      // |exp(X̄_ℓ)| = right_cut - left_off
};

/// Window of T_ℓ around the middle of Y, trimmed so that its expansion stays
/// inside Y. Contains the level-ℓ image of every occurrence of X in Y.
struct ProxyText {
  RleSeq rle;
  Pos text_start = 0;
  Pos exp_len = 0;

  bool empty() const { return rle.empty(); }
};

/// A progression of text positions where exp(X̄_ℓ) occurs, plus the period
/// `step` between consecutive members (exp_len of the proxy when count is 1).
struct LiftedProgression {
  Progression occurrences;
  Pos step = 0;
};

ProxyPattern proxy_pattern(Navigator& nav, Fragment x);
ProxyPattern proxy_pattern(const Grammar& g, Fragment x, StepCounter* counter = nullptr);

ProxyText proxy_text(Navigator& nav, Fragment y, const ProxyPattern& pp);
ProxyText proxy_text(const Grammar& g, Fragment y, const ProxyPattern& pp, StepCounter* counter = nullptr);

/// Occurrences of P in S (as symbol strings), grouped greedily into
/// progressions whose differences never exceed |P|. Positions count symbols.
std::vector<Progression> rle_match(const RleSeq& pattern, const RleSeq& text, StepCounter* counter = nullptr);

/// Maps a progression of symbol offsets inside the proxy text to text positions.
LiftedProgression lift_progression(const Grammar& g, const Progression& v, const ProxyText& pt,
                                   const ProxyPattern& pp);

/// Keeps the members of `v` (shifted by left_off) that start an occurrence of
/// X contained in Y. Uses at most five LCE queries. `forward` and `mirrored`
/// are navigators over the same grammar in the two orientations.
Progression verify_progression(Navigator& forward, Navigator& mirrored, const LiftedProgression& v,
                               const ProxyPattern& pp, Fragment x, Fragment y);
Progression verify_progression(const Grammar& g, const LiftedProgression& v, const ProxyPattern& pp,
                               Fragment x, Fragment y, StepCounter* counter = nullptr);

/// Union of sub-progressions of one arithmetic progression. Throws
/// std::logic_error when the pieces cannot form a single progression.
Progression union_progressions(const std::vector<Progression>& pieces);

/// All starting positions of occurrences of X contained in Y, for |Y| < 2|X|.
Progression ipm_query(const Grammar& g, Fragment x, Fragment y, StepCounter* counter = nullptr);

}  // namespace rlslp

#endif
