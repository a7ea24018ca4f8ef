#include "wreathcert/wreath.hpp"

#include <sstream>

#include "wreathcert/errors.hpp"

namespace wreathcert {

SupportedTuple::SupportedTuple(GroupPtr g, GroupPtr h) : g_(std::move(g)), h_(std::move(h)) {
  if (!g_ || !h_) throw DomainError("supported tuple needs both ambient groups");
}

SupportedTuple::SupportedTuple(GroupPtr g, GroupPtr h, const std::map<Elem, Elem>& entries)
    : SupportedTuple(std::move(g), std::move(h)) {
  for (auto [x, v] : entries) {
    if (!h_->contains(x)) throw DomainError("index " + std::to_string(x) + " not in H");
    if (!g_->contains(v)) throw DomainError("value " + std::to_string(v) + " not in G");
    if (v != g_->identity()) entries_.emplace(x, v);
  }
}

Elem SupportedTuple::at(Elem x) const {
  auto it = entries_.find(x);
  return it == entries_.end() ? g_->identity() : it->second;
}

std::set<Elem> SupportedTuple::support() const {
  std::set<Elem> s;
  for (const auto& [x, v] : entries_) s.insert(x);
  return s;
}

SupportedTuple SupportedTuple::operator*(const SupportedTuple& other) const {
  if (!same_ambient(other)) throw DomainError("multiplying tuples over different groups");
  SupportedTuple r(g_, h_);
  r.entries_ = entries_;
  for (const auto& [x, v] : other.entries_) {
    auto it = r.entries_.find(x);
    if (it == r.entries_.end()) {
      r.entries_.emplace(x, v);
    } else {
      it->second = g_->mul(it->second, v);
      if (it->second == g_->identity()) r.entries_.erase(it);
    }
  }
  return r;
}

SupportedTuple SupportedTuple::inverse() const {
  SupportedTuple r(g_, h_);
  for (const auto& [x, v] : entries_) r.entries_.emplace(x, g_->inv(v));
  return r;
}

std::string SupportedTuple::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [x, v] : entries_) {
    out << (first ? "" : ", ") << h_->name(x) << ':' << g_->name(v);
    first = false;
  }
  out << '}';
  return out.str();
}

SupportedTuple alpha_shift(Elem h, const SupportedTuple& g) {
  if (!g.index()->contains(h)) throw DomainError("shift element is not in the index group");
  // r_x = g_{h^{-1} x}, i.e. the entry at y moves to h y.
  std::map<Elem, Elem> shifted;
  for (const auto& [y, v] : g.entries()) shifted.emplace(g.index()->mul(h, y), v);
  return SupportedTuple(g.base(), g.index(), shifted);
}

WreathElem::WreathElem(SupportedTuple tuple, Elem top) : tuple_(std::move(tuple)), top_(top) {
  if (!tuple_.index()->contains(top_)) throw DomainError("top element is not in H");
}

WreathElem WreathElem::identity(GroupPtr g, GroupPtr h) {
  Elem one = h->identity();
  return WreathElem(SupportedTuple(std::move(g), std::move(h)), one);
}

WreathElem WreathElem::inverse() const {
  Elem hinv = index()->inv(top_);
  return WreathElem(alpha_shift(hinv, tuple_.inverse()), hinv);
}

std::string WreathElem::to_string() const {
  return tuple_.to_string() + "; " + index()->name(top_);
}

WreathElem wreath_mul(const WreathElem& x, const WreathElem& y) {
  if (!x.tuple().same_ambient(y.tuple()))
    throw DomainError("multiplying wreath elements over different groups");
  return WreathElem(x.tuple() * alpha_shift(x.top(), y.tuple()),
                    x.index()->mul(x.top(), y.top()));
}

bool wreath_less(const WreathElem& a, const WreathElem& b) {
  if (a.top() != b.top()) return a.top() < b.top();
  return a.tuple().entries() < b.tuple().entries();
}

}  // namespace wreathcert
