#ifndef RLSLP_NAVIGATOR_HPP
#define RLSLP_NAVIGATOR_HPP

#include <cstdint>
#include <deque>

#include "rlslp/grammar.hpp"

namespace rlslp {

/// One entry of a persistent ancestor stack. Frames are immutable; children
/// point at their parent frame, so descents from a common node share a prefix.
struct NodeFrame {
  Pos pos;
  SymbolId sym;
  const NodeFrame* parent;
};

/// Pointer to a node of the parse tree: (position, symbol, parent). A default
/// constructed handle is nil. Handles are valid for the lifetime of the
/// Navigator that created them.
class NodeHandle {
 public:
  NodeHandle() = default;
  explicit NodeHandle(const NodeFrame* frame) : frame_(frame) {}

  bool is_nil() const { return frame_ == nullptr; }
  explicit operator bool() const { return frame_ != nullptr; }

  Pos pos() const { return frame_->pos; }
  SymbolId sym() const { return frame_->sym; }
  const NodeFrame* frame() const { return frame_; }

  /// (pos, sym) equality; sufficient for handles descending from one root.
  friend bool operator==(NodeHandle a, NodeHandle b) {
    if (a.is_nil() || b.is_nil()) return a.is_nil() == b.is_nil();
    return a.pos() == b.pos() && a.sym() == b.sym();
  }

 private:
  const NodeFrame* frame_ = nullptr;
};

/// Node of the uncompressed parse tree: a parse tree node together with the
/// level k at which it stands for a character of T_k.
struct UNodeHandle {
  NodeHandle node;
  Level level = 0;

  bool is_nil() const { return node.is_nil(); }
  explicit operator bool() const { return !node.is_nil(); }

  friend bool operator==(const UNodeHandle& a, const UNodeHandle& b) {
    return a.node == b.node && (a.is_nil() || a.level == b.level);
  }
};

/// Forward walks the grammar as written; Mirrored walks every right-hand side
/// backwards, which presents the reversed text with mirrored positions.
enum class Orientation : std::uint8_t { Forward, Mirrored };

/// Counts primitive node operations (parent, child, index) for complexity checks.
struct StepCounter {
  std::uint64_t steps = 0;
};

class Navigator {
 public:
  explicit Navigator(const Grammar& g, Orientation orientation = Orientation::Forward,
                     StepCounter* counter = nullptr);
  Navigator(const Navigator&) = delete;
  Navigator& operator=(const Navigator&) = delete;

  const Grammar& grammar() const { return g_; }
  Orientation orientation() const { return orientation_; }
  Pos text_len() const { return g_.text_len(); }

  NodeHandle root() const { return root_; }
  NodeHandle parent(NodeHandle v);
  NodeHandle child(NodeHandle v, std::int64_t i);
  /// Index of the child of v whose fragment contains position j; throws
  /// OutOfRange when j lies outside v's fragment or v is a leaf.
  Pos index_of(NodeHandle v, Pos j);
  NodeHandle sibling(NodeHandle v, std::int64_t d);
  /// Terminal node covering position j, with its full ancestor stack.
  NodeHandle leaf(Pos j);

  Pos arity(NodeHandle v) const { return g_[v.sym()].arity(); }
  Pos explen(NodeHandle v) const { return g_[v.sym()].explen(); }
  Level sym_level(NodeHandle v) const { return g_[v.sym()].level(); }

  UNodeHandle u_leaf(Pos j) { return {leaf(j), 0}; }
  UNodeHandle u_parent(const UNodeHandle& u);
  UNodeHandle u_child(const UNodeHandle& u, std::int64_t i);
  /// Node for T_k[i+1] (resp. T_k[i-1]), or nil at the end of T_k.
  UNodeHandle u_next(const UNodeHandle& u);
  UNodeHandle u_prev(const UNodeHandle& u);

  /// Number of primitive operations attributed to this navigator's counter.
  std::uint64_t steps() const { return counter_ ? counter_->steps : 0; }
  void tick(std::uint64_t n = 1) {
    if (counter_) counter_->steps += n;
  }

 private:
  NodeHandle make(Pos pos, SymbolId sym, const NodeFrame* parent);
  /// Children of a pair in this navigator's reading order.
  SymbolId view_first(const SymbolRecord& rec) const;
  SymbolId view_second(const SymbolRecord& rec) const;

  const Grammar& g_;
  Orientation orientation_;
  StepCounter* counter_;
  std::deque<NodeFrame> arena_;
  NodeHandle root_;
};

}  // namespace rlslp

#endif
