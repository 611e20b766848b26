#include <vector>

#include "rlslp/error.hpp"
#include "rlslp/ipm.hpp"

namespace rlslp {

namespace {

// Greedy grouping of increasing occurrences into progressions with diff <= |P|.
class Grouper {
 public:
  explicit Grouper(Pos max_diff) : max_diff_(max_diff) {}

  void add(Pos o) {
    if (!out_.empty()) {
      Progression& cur = out_.back();
      if (cur.count == 1 && o - cur.start <= max_diff_) {
        cur.diff = o - cur.start;
        cur.count = 2;
        return;
      }
      if (cur.count >= 2 && o - cur.last() == cur.diff) {
        ++cur.count;
        return;
      }
    }
    out_.push_back(Progression::single(o));
  }

  std::vector<Progression> take() { return std::move(out_); }

 private:
  Pos max_diff_;
  std::vector<Progression> out_;
};

}  // namespace

std::vector<Progression> rle_match(const RleSeq& pattern, const RleSeq& text, StepCounter* counter) {
  if (pattern.empty()) throw Error(ErrorCode::EmptyPattern, "run-length match with an empty pattern");
  auto tick = [counter] {
    if (counter) ++counter->steps;
  };
  const std::vector<Run>& p = pattern.runs;
  const std::vector<Run>& s = text.runs;

  std::vector<Pos> starts(s.size());
  Pos acc = 0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    starts[j] = acc;
    acc += s[j].exponent;
  }

  std::vector<Progression> out;
  if (p.size() == 1) {
    const Run& only = p.front();
    for (std::size_t j = 0; j < s.size(); ++j) {
      tick();
      if (s[j].sym == only.sym && s[j].exponent >= only.exponent) {
        out.push_back(Progression::make(starts[j], 1, s[j].exponent - only.exponent + 1));
      }
    }
    return out;
  }
  if (s.size() < p.size()) return out;

  const std::size_t t = p.size();
  Grouper grouper(pattern.length());
  auto try_at = [&](std::size_t j) {
    tick();
    const Run& head = p.front();
    const Run& tail = p.back();
    if (s[j].sym != head.sym || s[j].exponent < head.exponent) return;
    if (s[j + t - 1].sym != tail.sym || s[j + t - 1].exponent < tail.exponent) return;
    grouper.add(starts[j] + s[j].exponent - head.exponent);
  };

  if (t == 2) {
    for (std::size_t j = 0; j + 1 < s.size(); ++j) try_at(j);
    return grouper.take();
  }

  // Interior runs must match exactly: KMP over the run tokens.
  const std::vector<Run> mid(p.begin() + 1, p.end() - 1);
  std::vector<std::size_t> fail(mid.size(), 0);
  for (std::size_t i = 1, k = 0; i < mid.size(); ++i) {
    tick();
    while (k > 0 && !(mid[i] == mid[k])) k = fail[k - 1];
    if (mid[i] == mid[k]) ++k;
    fail[i] = k;
  }
  for (std::size_t h = 0, k = 0; h < s.size(); ++h) {
    tick();
    while (k > 0 && !(s[h] == mid[k])) k = fail[k - 1];
    if (s[h] == mid[k]) ++k;
    if (k == mid.size()) {
      const std::size_t first = h + 1 - mid.size();
      if (first >= 1 && first + mid.size() < s.size()) try_at(first - 1);
      k = fail[k - 1];
    }
  }
  return grouper.take();
}

}  // namespace rlslp
