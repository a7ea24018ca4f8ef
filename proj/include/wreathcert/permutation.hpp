#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wreathcert/rational.hpp"

namespace wreathcert {

/// A bijection of {0, ..., n-1} stored as its image array.
///
/// Products follow function composition: `(p * q)(x) == p(q(x))`.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);  // identity
  explicit Permutation(std::vector<std::uint32_t> images);  // validates bijectivity

  static Permutation identity(std::size_t degree) { return Permutation(degree); }
  /// Parses one-line cycle notation such as "(0 1 2)(3 4)"; "()" or "1" is the identity.
  static Permutation from_cycles(std::size_t degree, std::string_view text);
  static Permutation from_cycle_list(std::size_t degree,
                                     const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
  std::span<const std::uint32_t> images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  std::size_t fixed_points() const noexcept;
  std::size_t moved_points() const noexcept { return degree() - fixed_points(); }
  /// Cycles of length at least two.
  std::vector<std::vector<std::uint32_t>> cycles() const;
  std::size_t nontrivial_cycle_count() const;

  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// Normalized Hamming length |{a : p(a) != a}| / |A|.
Rational hamming_length(const Permutation& p);

/// Normalized Hamming distance between two permutations of the same set.
Rational hamming_distance(const Permutation& p, const Permutation& q);

}  // namespace wreathcert
