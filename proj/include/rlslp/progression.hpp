#ifndef RLSLP_PROGRESSION_HPP
#define RLSLP_PROGRESSION_HPP

#include <ostream>
#include <vector>

#include "rlslp/grammar.hpp"

namespace rlslp {

/// Half-open fragment T[begin, end) of the indexed text.
struct Fragment {
  Pos begin = 0;
  Pos end = 0;

  Pos length() const { return end - begin; }
  bool empty() const { return begin == end; }

  friend bool operator==(const Fragment&, const Fragment&) = default;
};

/// Arithmetic progression {start + i * diff : 0 <= i < count}. An empty set has
/// count 0; with count <= 1 the difference is normalised to 1.
struct Progression {
  Pos start = 0;
  Pos diff = 1;
  Pos count = 0;

  static Progression single(Pos p) { return {p, 1, 1}; }
  static Progression make(Pos start, Pos diff, Pos count) {
    if (count == 0) return {};
    if (count == 1) return single(start);
    return {start, diff, count};
  }

  bool empty() const { return count == 0; }
  Pos at(Pos i) const { return start + i * diff; }
  Pos last() const { return at(count - 1); }
  std::vector<Pos> positions() const;

  friend bool operator==(const Progression&, const Progression&) = default;
};

std::ostream& operator<<(std::ostream& os, const Progression& p);
std::ostream& operator<<(std::ostream& os, const Fragment& f);

}  // namespace rlslp

#endif
