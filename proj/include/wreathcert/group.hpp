#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "wreathcert/permutation.hpp"

namespace wreathcert {

/// Opaque element id. Finite groups use 0..order-1 with 0 the identity;
/// the integers use the integer itself.
using Elem = std::int64_t;

enum class GroupKind { finite_table, finite_permutation, integers };

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// A group usable as G or H: a finite group given by a multiplication table or
/// by permutation generators, or the infinite cyclic group.
class Group {
 public:
  /// Z/n with elements named 1, g, g^2, ..., g^(n-1).
  static GroupPtr cyclic(std::size_t n, std::string generator = "a");
  static GroupPtr symmetric(std::size_t degree);
  /// Closure of the generators under composition (orbit algorithm on the group itself).
  static GroupPtr from_generators(std::size_t degree, const std::vector<Permutation>& generators);
  /// Validates the group axioms exhaustively. Row 0 / name 0 must be the identity.
  static GroupPtr from_table(std::vector<std::vector<std::uint32_t>> table,
                             std::vector<std::string> names);
  static GroupPtr quaternion();
  static GroupPtr integers();

  GroupKind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ != GroupKind::integers; }
  /// Order of a finite group; throws DomainError for the integers.
  std::size_t order() const;
  const std::string& description() const noexcept { return description_; }

  Elem identity() const noexcept { return 0; }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  bool contains(Elem a) const noexcept;

  /// All elements of a finite group, identity first.
  std::vector<Elem> elements() const;
  /// Elements lo..hi of the integers, or all elements of a finite group.
  std::vector<Elem> window(std::int64_t lo, std::int64_t hi) const;

  std::string name(Elem a) const;
  /// Inverse of name(); throws ParseError for unknown names.
  Elem parse(std::string_view text) const;

  /// Permutation realizing `a` (finite_permutation kind only).
  const Permutation& permutation(Elem a) const;

 private:
  Group() = default;
  void check(Elem a) const;

  GroupKind kind_ = GroupKind::integers;
  std::string description_;
  std::size_t order_ = 0;
  std::size_t modulus_ = 0;  // nonzero for the arithmetic fast path of Z/n
  std::string generator_;
  std::vector<std::vector<std::uint32_t>> table_;
  std::vector<std::uint32_t> inverses_;
  std::vector<std::string> names_;
  std::map<std::string, Elem, std::less<>> by_name_;
  std::vector<Permutation> perms_;
  std::map<Permutation, Elem> perm_index_;
};

}  // namespace wreathcert
