#include "wreathcert/group.hpp"

#include <cctype>
#include <charconv>
#include <deque>

#include "wreathcert/errors.hpp"

namespace wreathcert {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_int(std::string_view s, std::int64_t& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

GroupPtr Group::cyclic(std::size_t n, std::string generator) {
  if (n == 0) throw DomainError("cyclic group of order 0");
  if (generator.empty() || std::isdigit(static_cast<unsigned char>(generator.front())))
    throw DomainError("generator name must start with a non-digit");
  auto g = std::shared_ptr<Group>(new Group());
  g->kind_ = GroupKind::finite_table;
  g->order_ = n;
  g->modulus_ = n;
  g->generator_ = std::move(generator);
  g->description_ = "Z/" + std::to_string(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::string nm = k == 0 ? "1" : k == 1 ? g->generator_ : g->generator_ + "^" + std::to_string(k);
    g->by_name_.emplace(nm, static_cast<Elem>(k));
    g->names_.push_back(std::move(nm));
  }
  return g;
}

GroupPtr Group::from_generators(std::size_t degree, const std::vector<Permutation>& generators) {
  for (const auto& p : generators)
    if (p.degree() != degree) throw DomainError("generator degree mismatch");
  auto g = std::shared_ptr<Group>(new Group());
  g->kind_ = GroupKind::finite_permutation;
  g->description_ = "permutation group of degree " + std::to_string(degree);
  Permutation id(degree);
  g->perms_.push_back(id);
  g->perm_index_.emplace(id, 0);
  std::deque<Elem> frontier{0};
  while (!frontier.empty()) {
    Elem cur = frontier.front();
    frontier.pop_front();
    for (const auto& gen : generators) {
      Permutation next = gen * g->perms_[static_cast<std::size_t>(cur)];
      if (g->perm_index_.count(next)) continue;
      Elem id_next = static_cast<Elem>(g->perms_.size());
      g->perm_index_.emplace(next, id_next);
      g->perms_.push_back(std::move(next));
      frontier.push_back(id_next);
    }
  }
  g->order_ = g->perms_.size();
  for (std::size_t i = 0; i < g->order_; ++i) {
    std::string nm = i == 0 ? "1" : g->perms_[i].to_cycle_string();
    g->by_name_.emplace(nm, static_cast<Elem>(i));
    g->names_.push_back(std::move(nm));
  }
  g->by_name_.emplace("()", 0);
  return g;
}

GroupPtr Group::symmetric(std::size_t degree) {
  if (degree == 0) throw DomainError("symmetric group of degree 0");
  std::vector<Permutation> gens;
  if (degree > 1) {
    gens.push_back(Permutation::from_cycle_list(degree, {{0, 1}}));
    std::vector<std::uint32_t> cycle(degree);
    for (std::uint32_t i = 0; i < degree; ++i) cycle[i] = i;
    if (degree > 2) gens.push_back(Permutation::from_cycle_list(degree, {cycle}));
  }
  auto g = from_generators(degree, gens);
  std::const_pointer_cast<Group>(g)->description_ = "Sym(" + std::to_string(degree) + ")";
  return g;
}

GroupPtr Group::from_table(std::vector<std::vector<std::uint32_t>> table,
                           std::vector<std::string> names) {
  const std::size_t n = table.size();
  if (n == 0) throw DomainError("empty multiplication table");
  if (names.size() != n) throw DomainError("table and name list differ in size");
  for (const auto& row : table) {
    if (row.size() != n) throw DomainError("multiplication table is not square");
    std::vector<bool> seen(n, false);
    for (auto v : row) {
      if (v >= n) throw DomainError("table entry out of range");
      if (seen[v]) throw DomainError("table row is not a permutation (cancellation fails)");
      seen[v] = true;
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    if (table[0][x] != x || table[x][0] != x)
      throw DomainError("element 0 is not a two-sided identity");
  std::vector<std::uint32_t> inverses(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    bool found = false;
    for (std::uint32_t y = 0; y < n && !found; ++y)
      if (table[x][y] == 0 && table[y][x] == 0) {
        inverses[x] = y;
        found = true;
      }
    if (!found) throw DomainError("element " + names[x] + " has no two-sided inverse");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw DomainError("multiplication is not associative at (" + names[a] + ", " +
                            names[b] + ", " + names[c] + ")");
  auto g = std::shared_ptr<Group>(new Group());
  g->kind_ = GroupKind::finite_table;
  g->order_ = n;
  g->description_ = "table group of order " + std::to_string(n);
  g->table_ = std::move(table);
  g->inverses_ = std::move(inverses);
  for (std::size_t i = 0; i < n; ++i) {
    if (!g->by_name_.emplace(names[i], static_cast<Elem>(i)).second)
      throw DomainError("duplicate element name '" + names[i] + "'");
  }
  g->names_ = std::move(names);
  return g;
}

GroupPtr Group::quaternion() {
  // Elements (sign, unit) with unit in {1, i, j, k}; index = 2*unit + (sign < 0).
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::vector<std::uint32_t>> table(8, std::vector<std::uint32_t>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, ub = b / 2;
      int sign = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1) * unit_sign[ua][ub];
      table[a][b] = static_cast<std::uint32_t>(2 * unit_mul[ua][ub] + (sign < 0));
    }
  auto g = from_table(std::move(table), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
  std::const_pointer_cast<Group>(g)->description_ = "Q8";
  return g;
}

GroupPtr Group::integers() {
  // One shared instance, so independently built maps on Z agree on their ambient group.
  static const GroupPtr z = [] {
    auto g = std::shared_ptr<Group>(new Group());
    g->kind_ = GroupKind::integers;
    g->description_ = "Z";
    return GroupPtr(g);
  }();
  return z;
}

std::size_t Group::order() const {
  if (!is_finite()) throw DomainError("the integers have no finite order");
  return order_;
}

bool Group::contains(Elem a) const noexcept {
  return !is_finite() || (a >= 0 && static_cast<std::size_t>(a) < order_);
}

void Group::check(Elem a) const {
  if (!contains(a))
    throw DomainError("element id " + std::to_string(a) + " is not in " + description_);
}

Elem Group::mul(Elem a, Elem b) const {
  check(a);
  check(b);
  switch (kind_) {
    case GroupKind::integers:
      return a + b;
    case GroupKind::finite_table:
      if (modulus_) return static_cast<Elem>((static_cast<std::size_t>(a) + b) % modulus_);
      return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    case GroupKind::finite_permutation:
      return perm_index_.at(perms_[static_cast<std::size_t>(a)] * perms_[static_cast<std::size_t>(b)]);
  }
  return 0;
}

Elem Group::inv(Elem a) const {
  check(a);
  switch (kind_) {
    case GroupKind::integers:
      return -a;
    case GroupKind::finite_table:
      if (modulus_) return static_cast<Elem>((modulus_ - static_cast<std::size_t>(a)) % modulus_);
      return inverses_[static_cast<std::size_t>(a)];
    case GroupKind::finite_permutation:
      return perm_index_.at(perms_[static_cast<std::size_t>(a)].inverse());
  }
  return 0;
}

std::vector<Elem> Group::elements() const {
  if (!is_finite()) throw DomainError("cannot enumerate the integers; use window()");
  std::vector<Elem> out(order_);
  for (std::size_t i = 0; i < order_; ++i) out[i] = static_cast<Elem>(i);
  return out;
}

std::vector<Elem> Group::window(std::int64_t lo, std::int64_t hi) const {
  if (is_finite()) return elements();
  std::vector<Elem> out;
  for (auto x = lo; x <= hi; ++x) out.push_back(x);
  return out;
}

std::string Group::name(Elem a) const {
  check(a);
  if (!is_finite()) return std::to_string(a);
  return names_[static_cast<std::size_t>(a)];
}

Elem Group::parse(std::string_view text) const {
  auto s = trim(text);
  if (!is_finite()) {
    std::int64_t v = 0;
    if (!parse_int(s, v)) throw ParseError("'" + std::string(s) + "' is not an integer");
    return v;
  }
  if (auto it = by_name_.find(s); it != by_name_.end()) return it->second;
  if (modulus_) {
    // Accept g^k for any integer k.
    if (s.size() > generator_.size() + 1 && s.substr(0, generator_.size()) == generator_ &&
        s[generator_.size()] == '^') {
      std::int64_t k = 0;
      if (parse_int(s.substr(generator_.size() + 1), k)) {
        auto m = static_cast<std::int64_t>(modulus_);
        return ((k % m) + m) % m;
      }
    }
  }
  if (kind_ == GroupKind::finite_permutation && !s.empty() && s.front() == '(') {
    auto p = Permutation::from_cycles(perms_.front().degree(), s);
    if (auto it = perm_index_.find(p); it != perm_index_.end()) return it->second;
  }
  throw ParseError("unknown element '" + std::string(s) + "' of " + description_);
}

const Permutation& Group::permutation(Elem a) const {
  if (kind_ != GroupKind::finite_permutation)
    throw DomainError(description_ + " is not realized by permutations");
  check(a);
  return perms_[static_cast<std::size_t>(a)];
}

}  // namespace wreathcert
