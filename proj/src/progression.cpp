#include "rlslp/progression.hpp"

namespace rlslp {

std::vector<Pos> Progression::positions() const {
  std::vector<Pos> out;
  out.reserve(count);
  for (Pos i = 0; i < count; ++i) out.push_back(at(i));
  return out;
}

std::ostream& operator<<(std::ostream& os, const Progression& p) {
  return os << "{start=" << p.start << ", diff=" << p.diff << ", count=" << p.count << "}";
}

std::ostream& operator<<(std::ostream& os, const Fragment& f) {
  return os << "[" << f.begin << ", " << f.end << ")";
}

}  // namespace rlslp
