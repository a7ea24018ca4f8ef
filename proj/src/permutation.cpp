#include "wreathcert/permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "wreathcert/errors.hpp"

namespace wreathcert {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto y : images_) {
    if (y >= images_.size() || seen[y]) throw DomainError("image array is not a bijection");
    seen[y] = true;
  }
}

Permutation Permutation::from_cycle_list(std::size_t degree,
                                         const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      auto x = cycle[i];
      if (x >= degree) throw DomainError("cycle point " + std::to_string(x) + " out of range");
      if (used[x]) throw DomainError("point " + std::to_string(x) + " repeated in cycles");
      used[x] = true;
      img[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(std::size_t degree, std::string_view text) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (text.substr(i) == "1" || text.substr(i) == "id") return Permutation(degree);
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation", i + 1);
    ++i;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip();
      if (i >= text.size()) throw ParseError("unterminated cycle", i + 1);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected a point in cycle notation", i + 1);
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + static_cast<std::uint64_t>(text[i++] - '0');
      cycle.push_back(static_cast<std::uint32_t>(v));
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip();
  }
  return from_cycle_list(degree, cycles);
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::uint32_t x = 0; x < images_.size(); ++x) inv[images_[x]] = x;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::uint32_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::size_t Permutation::fixed_points() const noexcept {
  std::size_t n = 0;
  for (std::uint32_t x = 0; x < images_.size(); ++x) n += images_[x] == x;
  return n;
}

std::vector<std::vector<std::uint32_t>> Permutation::cycles() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    std::vector<std::uint32_t> cycle;
    for (auto y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      cycle.push_back(y);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::size_t Permutation::nontrivial_cycle_count() const {
  std::size_t count = 0;
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    ++count;
    for (auto y = x; !seen[y]; y = images_[y]) seen[y] = true;
  }
  return count;
}

std::string Permutation::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& c : cs) {
    out << '(';
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
    out << ')';
  }
  return out.str();
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw DomainError("composing permutations of different degree");
  Permutation r;
  r.images_.resize(q.degree());
  for (std::size_t x = 0; x < q.degree(); ++x) r.images_[x] = p.images_[q.images_[x]];
  return r;
}

Rational hamming_length(const Permutation& p) {
  if (p.degree() == 0) throw DomainError("Hamming length on an empty carrier");
  return ratio(static_cast<std::int64_t>(p.moved_points()), static_cast<std::int64_t>(p.degree()));
}

Rational hamming_distance(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw DomainError("Hamming distance across different carriers");
  if (p.degree() == 0) throw DomainError("Hamming distance on an empty carrier");
  std::size_t differ = 0;
  for (std::uint32_t x = 0; x < p.degree(); ++x) differ += p(x) != q(x);
  return ratio(static_cast<std::int64_t>(differ), static_cast<std::int64_t>(p.degree()));
}

}  // namespace wreathcert
