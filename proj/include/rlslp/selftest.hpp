#ifndef RLSLP_SELFTEST_HPP
#define RLSLP_SELFTEST_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rlslp/grammar.hpp"
#include "rlslp/oracle.hpp"
#include "rlslp/popped.hpp"
#include "rlslp/progression.hpp"

/// Randomised cross-checks of the index against the brute-force oracle.
namespace rlslp::selftest {

/// Random text over the first `alphabet` lowercase letters. Half of the texts
/// are uniform, the rest repeat a short random seed with sparse mutations so
/// that periodic fragments are common.
std::u32string random_text(std::mt19937_64& rng, Pos len, unsigned alphabet);

/// Random valid IPM query (|Y| < 2|X|). Half of the time Y is placed around an
/// occurrence of X.
std::pair<Fragment, Fragment> sample_ipm_pair(std::mt19937_64& rng, std::u32string_view text);

/// Random run-length sequence over symbol ids [0, alphabet).
RleSeq random_rle(std::mt19937_64& rng, std::size_t max_runs, Pos max_exponent, SymbolId alphabet);

// Each check returns a description of the first disagreement, or nothing.
std::optional<std::string> check_ipm(const Grammar& g, std::u32string_view text, Fragment x, Fragment y);
std::optional<std::string> check_lce(const Grammar& g, std::u32string_view text, Pos i, Pos i2);
std::optional<std::string> check_pseq(const oracle::LevelContext& ctx, std::u32string_view text, Fragment x);
std::optional<std::string> check_rle_match(const RleSeq& pattern, const RleSeq& text);

struct Options {
  std::uint64_t trials = 1000;
  Pos max_len = 128;
  std::vector<unsigned> alphabets{1, 2, 4, 26};
  std::uint64_t seed = 1;
};

struct Report {
  bool ok = true;
  std::uint64_t texts = 0;
  std::uint64_t checks = 0;
  std::string failure;
};

Report run(const Options& opts);

}  // namespace rlslp::selftest

#endif
