#include "rlslp/grammar.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#include "rlslp/error.hpp"

namespace rlslp {

namespace {

Pos checked_mul(Pos a, Pos b) {
  if (a != 0 && b > std::numeric_limits<Pos>::max() / a) {
    throw Error(ErrorCode::OutOfRange, "expansion length overflows 64 bits");
  }
  return a * b;
}

Pos checked_add(Pos a, Pos b) {
  if (b > std::numeric_limits<Pos>::max() - a) {
    throw Error(ErrorCode::OutOfRange, "expansion length overflows 64 bits");
  }
  return a + b;
}

}  // namespace

SymbolRecord SymbolRecord::terminal(Codepoint ch) {
  return SymbolRecord(SymbolKind::Terminal, ch, 0, 0, 1);
}

SymbolRecord SymbolRecord::pair(SymbolId left, SymbolId right, Level level, Pos explen) {
  return SymbolRecord(SymbolKind::Pair, left, right, level, explen);
}

SymbolRecord SymbolRecord::power(SymbolId base, Pos exponent, Level level, Pos explen) {
  return SymbolRecord(SymbolKind::Power, base, exponent, level, explen);
}

Pos SymbolRecord::arity() const {
  switch (kind_) {
    case SymbolKind::Terminal: return 0;
    case SymbolKind::Pair: return 2;
    case SymbolKind::Power: return second_;
  }
  return 0;
}

std::size_t SymbolTable::KeyHash::operator()(const Key& k) const noexcept {
  std::uint64_t h = k.second * 0x9E3779B97F4A7C15ULL;
  h ^= (static_cast<std::uint64_t>(k.first) << 2) ^ static_cast<std::uint64_t>(k.kind);
  h ^= h >> 31;
  h *= 0xBF58476D1CE4E5B9ULL;
  h ^= h >> 29;
  return static_cast<std::size_t>(h);
}

SymbolId SymbolTable::insert(const Key& key, SymbolRecord record) {
  if (records_.size() >= std::numeric_limits<SymbolId>::max()) {
    throw Error(ErrorCode::UnknownSymbol, "symbol table is full");
  }
  auto id = static_cast<SymbolId>(records_.size());
  records_.push_back(record);
  index_.emplace(key, id);
  return id;
}

const SymbolRecord& SymbolTable::at(SymbolId id) const {
  if (!contains(id)) {
    throw Error(ErrorCode::UnknownSymbol, "symbol id " + std::to_string(id) + " is not interned");
  }
  return records_[id];
}

SymbolId SymbolTable::intern_terminal(Codepoint ch) {
  Key key{SymbolKind::Terminal, ch, 0};
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  return insert(key, SymbolRecord::terminal(ch));
}

SymbolId SymbolTable::intern_pair(SymbolId b, SymbolId c, Level level) {
  const SymbolRecord& rb = at(b);
  const SymbolRecord& rc = at(c);
  if (b == c) {
    throw Error(ErrorCode::EqualChildren, "pair production needs two distinct symbols");
  }
  Key key{SymbolKind::Pair, b, c};
  if (auto it = index_.find(key); it != index_.end()) {
    // The level is fixed at first creation; a recompression never re-creates a
    // pair at a different level.
    assert(records_[it->second].level() == level);
    return it->second;
  }
  if (level <= std::max(rb.level(), rc.level())) {
    throw Error(ErrorCode::BadLevel, "pair level must exceed the levels of its children");
  }
  Pos len = checked_add(rb.explen(), rc.explen());
  return insert(key, SymbolRecord::pair(b, c, level, len));
}

SymbolId SymbolTable::intern_power(SymbolId b, Pos m, Level level) {
  const SymbolRecord& rb = at(b);
  if (m < 2) {
    throw Error(ErrorCode::BadExponent, "power exponent must be at least 2");
  }
  Key key{SymbolKind::Power, b, m};
  if (auto it = index_.find(key); it != index_.end()) {
    assert(records_[it->second].level() == level);
    return it->second;
  }
  if (level <= rb.level()) {
    throw Error(ErrorCode::BadLevel, "power level must exceed the level of its base");
  }
  Pos len = checked_mul(rb.explen(), m);
  return insert(key, SymbolRecord::power(b, m, level, len));
}

std::optional<SymbolId> SymbolTable::find_terminal(Codepoint ch) const {
  if (auto it = index_.find(Key{SymbolKind::Terminal, ch, 0}); it != index_.end()) return it->second;
  return std::nullopt;
}

std::optional<SymbolId> SymbolTable::find_pair(SymbolId b, SymbolId c) const {
  if (auto it = index_.find(Key{SymbolKind::Pair, b, c}); it != index_.end()) return it->second;
  return std::nullopt;
}

std::optional<SymbolId> SymbolTable::find_power(SymbolId b, Pos m) const {
  if (auto it = index_.find(Key{SymbolKind::Power, b, m}); it != index_.end()) return it->second;
  return std::nullopt;
}

Grammar::Grammar(SymbolTable symbols, SymbolId start, Level rounds, std::uint64_t seed)
    : symbols_(std::move(symbols)), start_(start), rounds_(rounds), seed_(seed) {
  symbols_.at(start_);
}

std::u32string expand(const SymbolTable& table, SymbolId id) {
  std::u32string out;
  out.reserve(table.at(id).explen());
  // Explicit stack: grammars may be deep for adversarial inputs.
  std::vector<SymbolId> stack{id};
  while (!stack.empty()) {
    SymbolId s = stack.back();
    stack.pop_back();
    const SymbolRecord& rec = table[s];
    switch (rec.kind()) {
      case SymbolKind::Terminal:
        out.push_back(rec.codepoint());
        break;
      case SymbolKind::Pair:
        stack.push_back(rec.right());
        stack.push_back(rec.left());
        break;
      case SymbolKind::Power:
        for (Pos i = 0; i < rec.exponent(); ++i) stack.push_back(rec.base());
        break;
    }
  }
  return out;
}

std::u32string expand(const Grammar& g, SymbolId id) { return expand(g.symbols(), id); }

}  // namespace rlslp
