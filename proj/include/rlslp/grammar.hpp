#ifndef RLSLP_GRAMMAR_HPP
#define RLSLP_GRAMMAR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace rlslp {

using SymbolId = std::uint32_t;
using Pos = std::uint64_t;
using Level = std::uint32_t;
using Codepoint = std::uint32_t;

enum class SymbolKind : std::uint8_t { Terminal, Pair, Power };

/// One interned symbol of a run-length straight-line program.
///
/// Terminals carry a codepoint; pairs A -> BC carry two distinct child ids;
/// powers A -> B^m carry a base id and an exponent m >= 2. The expansion
/// length and the creation level are fixed when the symbol is interned.
class SymbolRecord {
 public:
  static SymbolRecord terminal(Codepoint ch);
  static SymbolRecord pair(SymbolId left, SymbolId right, Level level, Pos explen);
  static SymbolRecord power(SymbolId base, Pos exponent, Level level, Pos explen);

  SymbolKind kind() const { return kind_; }
  Level level() const { return level_; }
  Pos explen() const { return explen_; }

  bool is_terminal() const { return kind_ == SymbolKind::Terminal; }
  bool is_pair() const { return kind_ == SymbolKind::Pair; }
  bool is_power() const { return kind_ == SymbolKind::Power; }

  Codepoint codepoint() const { return static_cast<Codepoint>(first_); }
  SymbolId left() const { return first_; }
  SymbolId right() const { return static_cast<SymbolId>(second_); }
  SymbolId base() const { return first_; }
  Pos exponent() const { return second_; }

  /// Number of children in the parse tree: 0, 2 or the exponent.
  Pos arity() const;

 private:
  SymbolRecord(SymbolKind kind, std::uint32_t first, std::uint64_t second, Level level, Pos explen)
      : kind_(kind), level_(level), first_(first), second_(second), explen_(explen) {}

  SymbolKind kind_;
  Level level_;
  std::uint32_t first_;
  std::uint64_t second_;
  Pos explen_;
};

/// Hash-consed symbol universe. Ids are dense and assigned in creation order,
/// so arguments of every symbol always have smaller ids than the symbol.
class SymbolTable {
 public:
  SymbolId intern_terminal(Codepoint ch);
  SymbolId intern_pair(SymbolId b, SymbolId c, Level level);
  SymbolId intern_power(SymbolId b, Pos m, Level level);

  std::optional<SymbolId> find_terminal(Codepoint ch) const;
  std::optional<SymbolId> find_pair(SymbolId b, SymbolId c) const;
  std::optional<SymbolId> find_power(SymbolId b, Pos m) const;

  std::size_t size() const { return records_.size(); }
  bool contains(SymbolId id) const { return id < records_.size(); }
  const SymbolRecord& operator[](SymbolId id) const { return records_[id]; }
  const SymbolRecord& at(SymbolId id) const;

 private:
  struct Key {
    SymbolKind kind;
    std::uint32_t first;
    std::uint64_t second;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  SymbolId insert(const Key& key, SymbolRecord record);

  std::vector<SymbolRecord> records_;
  std::unordered_map<Key, SymbolId, KeyHash> index_;
};

/// An immutable RLSLP: symbol table, start symbol, round count and the seed
/// that produced it. Safe for concurrent reads.
class Grammar {
 public:
  Grammar(SymbolTable symbols, SymbolId start, Level rounds, std::uint64_t seed);

  const SymbolTable& symbols() const { return symbols_; }
  const SymbolRecord& operator[](SymbolId id) const { return symbols_[id]; }
  const SymbolRecord& at(SymbolId id) const { return symbols_.at(id); }
  std::size_t size() const { return symbols_.size(); }

  SymbolId start() const { return start_; }
  Level rounds() const { return rounds_; }
  std::uint64_t seed() const { return seed_; }
  Pos text_len() const { return symbols_[start_].explen(); }

  Pos explen(SymbolId id) const { return symbols_[id].explen(); }
  Level level(SymbolId id) const { return symbols_[id].level(); }

 private:
  SymbolTable symbols_;
  SymbolId start_;
  Level rounds_;
  std::uint64_t seed_;
};

/// Expansion of a symbol as a plain string. Output length equals explen, so
/// this is only meant for tests and small inputs.
std::u32string expand(const SymbolTable& table, SymbolId id);
std::u32string expand(const Grammar& g, SymbolId id);

}  // namespace rlslp

#endif
