#include "rlslp/navigator.hpp"

#include "rlslp/error.hpp"

namespace rlslp {

Navigator::Navigator(const Grammar& g, Orientation orientation, StepCounter* counter)
    : g_(g), orientation_(orientation), counter_(counter) {
  root_ = make(0, g_.start(), nullptr);
}

NodeHandle Navigator::make(Pos pos, SymbolId sym, const NodeFrame* parent) {
  arena_.push_back(NodeFrame{pos, sym, parent});
  return NodeHandle(&arena_.back());
}

SymbolId Navigator::view_first(const SymbolRecord& rec) const {
  return orientation_ == Orientation::Forward ? rec.left() : rec.right();
}

SymbolId Navigator::view_second(const SymbolRecord& rec) const {
  return orientation_ == Orientation::Forward ? rec.right() : rec.left();
}

NodeHandle Navigator::parent(NodeHandle v) {
  tick();
  if (v.is_nil()) return {};
  return NodeHandle(v.frame()->parent);
}

NodeHandle Navigator::child(NodeHandle v, std::int64_t i) {
  tick();
  if (v.is_nil() || i < 0) return {};
  const SymbolRecord& rec = g_[v.sym()];
  auto idx = static_cast<Pos>(i);
  switch (rec.kind()) {
    case SymbolKind::Terminal:
      return {};
    case SymbolKind::Pair:
      if (idx == 0) return make(v.pos(), view_first(rec), v.frame());
      if (idx == 1) return make(v.pos() + g_.explen(view_first(rec)), view_second(rec), v.frame());
      return {};
    case SymbolKind::Power:
      if (idx >= rec.exponent()) return {};
      return make(v.pos() + idx * g_.explen(rec.base()), rec.base(), v.frame());
  }
  return {};
}

Pos Navigator::index_of(NodeHandle v, Pos j) {
  tick();
  if (v.is_nil()) throw Error(ErrorCode::OutOfRange, "index_of on a nil node");
  const SymbolRecord& rec = g_[v.sym()];
  if (j < v.pos() || j - v.pos() >= rec.explen() || rec.is_terminal()) {
    throw Error(ErrorCode::OutOfRange, "position " + std::to_string(j) + " is not inside a child");
  }
  Pos offset = j - v.pos();
  if (rec.is_pair()) return offset < g_.explen(view_first(rec)) ? 0 : 1;
  return offset / g_.explen(rec.base());
}

NodeHandle Navigator::sibling(NodeHandle v, std::int64_t d) {
  NodeHandle p = parent(v);
  if (p.is_nil()) return {};
  auto i = static_cast<std::int64_t>(index_of(p, v.pos()));
  return child(p, i + d);
}

NodeHandle Navigator::leaf(Pos j) {
  if (j >= text_len()) {
    throw Error(ErrorCode::OutOfRange, "leaf position " + std::to_string(j) + " is past the text end");
  }
  NodeHandle v = root_;
  while (!g_[v.sym()].is_terminal()) {
    v = child(v, static_cast<std::int64_t>(index_of(v, j)));
  }
  return v;
}

UNodeHandle Navigator::u_parent(const UNodeHandle& u) {
  if (u.is_nil()) return {};
  NodeHandle p = parent(u.node);
  if (!p.is_nil() && sym_level(p) == u.level + 1) return {p, u.level + 1};
  return {u.node, u.level + 1};
}

UNodeHandle Navigator::u_child(const UNodeHandle& u, std::int64_t i) {
  if (u.is_nil() || u.level == 0) return {};
  Level own = sym_level(u.node);
  if (u.level > own) {
    if (i == 0) return {u.node, u.level - 1};
    return {};
  }
  NodeHandle c = child(u.node, i);
  if (c.is_nil()) return {};
  return {c, u.level - 1};
}

UNodeHandle Navigator::u_next(const UNodeHandle& u) {
  if (u.is_nil()) return {};
  NodeHandle v = u.node;
  for (;;) {
    NodeHandle p = parent(v);
    if (p.is_nil()) return {};
    Pos idx = index_of(p, v.pos());
    if (idx + 1 < arity(p)) {
      v = child(p, static_cast<std::int64_t>(idx + 1));
      break;
    }
    v = p;
  }
  while (sym_level(v) > u.level) v = child(v, 0);
  return {v, u.level};
}

UNodeHandle Navigator::u_prev(const UNodeHandle& u) {
  if (u.is_nil()) return {};
  NodeHandle v = u.node;
  for (;;) {
    NodeHandle p = parent(v);
    if (p.is_nil()) return {};
    Pos idx = index_of(p, v.pos());
    if (idx > 0) {
      v = child(p, static_cast<std::int64_t>(idx - 1));
      break;
    }
    v = p;
  }
  while (sym_level(v) > u.level) v = child(v, static_cast<std::int64_t>(arity(v) - 1));
  return {v, u.level};
}

}  // namespace rlslp
