#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "wreathcert/group.hpp"

namespace wreathcert {

/// A finitely supported tuple (g_x)_{x in H} over G in canonical sparse form:
/// identity entries are never stored.
class SupportedTuple {
 public:
  SupportedTuple(GroupPtr g, GroupPtr h);
  SupportedTuple(GroupPtr g, GroupPtr h, const std::map<Elem, Elem>& entries);

  const GroupPtr& base() const noexcept { return g_; }
  const GroupPtr& index() const noexcept { return h_; }
  const std::map<Elem, Elem>& entries() const noexcept { return entries_; }

  Elem at(Elem x) const;
  std::set<Elem> support() const;
  bool empty() const noexcept { return entries_.empty(); }

  /// Componentwise product.
  SupportedTuple operator*(const SupportedTuple& other) const;
  SupportedTuple inverse() const;

  bool same_ambient(const SupportedTuple& other) const noexcept {
    return g_ == other.g_ && h_ == other.h_;
  }
  friend bool operator==(const SupportedTuple& a, const SupportedTuple& b) {
    return a.same_ambient(b) && a.entries_ == b.entries_;
  }

  std::string to_string() const;

 private:
  GroupPtr g_;
  GroupPtr h_;
  std::map<Elem, Elem> entries_;
};

/// alpha_h(g)_x = g_{h^{-1} x}.
SupportedTuple alpha_shift(Elem h, const SupportedTuple& g);

/// Element (g, h) of the regular wreath product G wr H.
class WreathElem {
 public:
  WreathElem(SupportedTuple tuple, Elem top);
  static WreathElem identity(GroupPtr g, GroupPtr h);

  const SupportedTuple& tuple() const noexcept { return tuple_; }
  Elem top() const noexcept { return top_; }
  const GroupPtr& base() const noexcept { return tuple_.base(); }
  const GroupPtr& index() const noexcept { return tuple_.index(); }
  bool is_identity() const noexcept { return tuple_.empty() && top_ == index()->identity(); }

  WreathElem inverse() const;

  friend bool operator==(const WreathElem& a, const WreathElem& b) {
    return a.tuple_ == b.tuple_ && a.top_ == b.top_;
  }
  /// Literal form "{x1:g1, x2:g2}; h".
  std::string to_string() const;

 private:
  SupportedTuple tuple_;
  Elem top_;
};

/// (g, h)(g', h') = (g alpha_h(g'), h h').
WreathElem wreath_mul(const WreathElem& x, const WreathElem& y);

inline const SupportedTuple& proj_G(const WreathElem& x) { return x.tuple(); }
inline Elem proj_H(const WreathElem& x) { return x.top(); }

/// Total order used to keep element sets deterministic.
bool wreath_less(const WreathElem& a, const WreathElem& b);

}  // namespace wreathcert
