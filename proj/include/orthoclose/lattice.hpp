#pragma once

#include <array>
#include <bit>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "ortho.hpp"
#include "poset.hpp"

namespace orthoclose {

/// A lattice poset with precomputed meet and join tables.
class FiniteLattice {
 public:
  explicit FiniteLattice(Poset p) : poset_(std::move(p)) {
    const std::size_t n = poset_.size();
    meet_.assign(n * n, 0);
    join_.assign(n * n, 0);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        auto m = orthoclose::meet(poset_, x, y);
        auto j = orthoclose::join(poset_, x, y);
        if (!m || !j)
          throw Error(ErrorCode::kNotALattice,
                      "'" + poset_.name(x) + "' and '" + poset_.name(y) + "' lack a " + (m ? "join" : "meet"));
        meet_[x * n + y] = *m;
        join_[x * n + y] = *j;
      }
    bottom_ = *orthoclose::bottom(poset_);
    top_ = *orthoclose::top(poset_);
  }

  const Poset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }
  bool leq(std::size_t x, std::size_t y) const { return poset_.leq(x, y); }
  std::size_t meet(std::size_t x, std::size_t y) const { return meet_[x * size() + y]; }
  std::size_t join(std::size_t x, std::size_t y) const { return join_[x * size() + y]; }
  std::size_t bottom() const noexcept { return bottom_; }
  std::size_t top() const noexcept { return top_; }
  std::string label(std::size_t x) const { return poset_.name(x); }

 private:
  Poset poset_;
  std::vector<std::size_t> meet_;
  std::vector<std::size_t> join_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

struct DistributivityResult {
  bool distributive = true;
  /// First (a, b, c) in index order with a ∧ (b ∨ c) != (a ∧ b) ∨ (a ∧ c).
  std::optional<std::array<std::size_t, 3>> counterexample;
  explicit operator bool() const noexcept { return distributive; }
};

template <LatticeLike L>
DistributivityResult is_distributive(const L& l) {
  const std::size_t n = l.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c)))
          return {false, std::array<std::size_t, 3>{a, b, c}};
  return {};
}

inline DistributivityResult is_distributive(const Poset& p) { return is_distributive(FiniteLattice(p)); }

/// First element without a complement, if any.
template <LatticeLike L>
std::optional<std::size_t> uncomplemented_element(const L& l) {
  for (std::size_t x = 0; x < l.size(); ++x) {
    bool found = false;
    for (std::size_t y = 0; y < l.size() && !found; ++y)
      found = l.meet(x, y) == l.bottom() && l.join(x, y) == l.top();
    if (!found) return x;
  }
  return std::nullopt;
}

/// Boolean iff x ↦ {atoms below x} and S ↦ ⋁S are mutually inverse
/// between L and the powerset of its atoms. Linear in |L| times the
/// atom count, unlike the distributivity scan.
template <LatticeLike L>
bool is_boolean(const L& l) {
  const std::size_t n = l.size();
  const std::size_t bot = l.bottom();
  std::vector<std::size_t> at;
  for (std::size_t x = 0; x < n; ++x) {
    if (x == bot) continue;
    bool minimal = true;
    for (std::size_t y = 0; y < n && minimal; ++y)
      minimal = y == bot || y == x || !l.leq(y, x);
    if (minimal) at.push_back(x);
  }
  const std::size_t k = at.size();
  if (k >= 63 || n != (std::size_t{1} << k)) return false;
  std::vector<std::size_t> join_of(n, bot);
  std::vector<char> hit(n, 0);
  for (std::size_t mask = 1; mask < n; ++mask) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(mask));
    join_of[mask] = l.join(join_of[mask & (mask - 1)], at[low]);
  }
  for (std::size_t mask = 0; mask < n; ++mask) {
    const std::size_t x = join_of[mask];
    if (hit[x]) return false;
    hit[x] = 1;
    std::size_t below = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (l.leq(at[i], x)) below |= std::size_t{1} << i;
    if (below != mask) return false;
  }
  return true;
}

inline bool is_boolean(const Poset& p) { return is_boolean(FiniteLattice(p)); }

}  // namespace orthoclose
