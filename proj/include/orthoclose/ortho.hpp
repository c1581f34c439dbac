#pragma once

#include <algorithm>
#include <concepts>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "check.hpp"
#include "element_set.hpp"
#include "poset.hpp"

namespace orthoclose {

/// A poset with 0 and its order-derived orthogonality: x ⊥ y iff the only
/// common lower bound of x and y is 0. In a meet-semilattice this is
/// x ∧ y = 0; in a pseudocomplemented poset it is y <= x*.
class OrthoSpace {
 public:
  explicit OrthoSpace(Poset base) : base_(std::move(base)), zero_(require_bottom(base_)) {
    const std::size_t n = base_.size();
    ElementSet only_zero = base_.empty_set();
    only_zero.insert(zero_);
    ortho_.assign(n, base_.empty_set());
    for (Element x = 0; x < n; ++x)
      for (Element y = x; y < n; ++y)
        if ((base_.down_set(x) & base_.down_set(y)) == only_zero) {
          ortho_[x].insert(y);
          ortho_[y].insert(x);
        }
  }

  const Poset& base() const noexcept { return base_; }
  std::size_t size() const noexcept { return base_.size(); }
  Element zero() const noexcept { return zero_; }
  bool orthogonal(Element x, Element y) const { return ortho_[x].contains(y); }
  /// x^⊥
  const ElementSet& perp_of(Element x) const { return ortho_[x]; }

  ElementSet zero_set() const {
    ElementSet s = base_.empty_set();
    s.insert(zero_);
    return s;
  }

 private:
  Poset base_;
  Element zero_;
  std::vector<ElementSet> ortho_;
};

inline OrthoSpace ortho_from_meet(const Poset& p) { return OrthoSpace(p); }

/// A^⊥ = ∩_{a ∈ A} a^⊥; the empty set maps to the whole carrier.
inline ElementSet perp(const OrthoSpace& s, const ElementSet& a) {
  ElementSet out = s.base().universe();
  a.for_each([&](Element x) { out &= s.perp_of(x); });
  return out;
}

inline ElementSet closure(const OrthoSpace& s, const ElementSet& a) { return perp(s, perp(s, a)); }

inline bool is_closed(const OrthoSpace& s, const ElementSet& a) { return closure(s, a) == a; }

/// All closed subsets in canonical order: the singleton perps plus the
/// carrier, closed under pairwise intersection.
inline std::vector<ElementSet> closed_sets(const OrthoSpace& s) {
  std::vector<ElementSet> family;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  auto add = [&](ElementSet a) {
    if (seen.insert(a).second) family.push_back(std::move(a));
  };
  add(s.base().universe());
  for (Element x = 0; x < s.size(); ++x) add(s.perp_of(x));
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) add(family[i] & family[j]);
  std::sort(family.begin(), family.end(), canonical_less);
  return family;
}

/// Label of a set as "{l1,l2,...}" in index order.
inline std::string set_label(const Poset& p, const ElementSet& a) {
  std::string out = "{";
  bool first = true;
  a.for_each([&](Element x) {
    if (!first) out += ",";
    out += p.name(x);
    first = false;
  });
  return out + "}";
}

/// The complete ortholattice of closed sets ordered by inclusion, with
/// meet = ∩, join = (A ∪ B)^⊥⊥ and orthocomplement A ↦ A^⊥.
class ClosedSetLattice {
 public:
  explicit ClosedSetLattice(OrthoSpace space) : space_(std::move(space)), sets_(closed_sets(space_)) {
    index_.reserve(sets_.size());
    for (std::size_t i = 0; i < sets_.size(); ++i) index_.emplace(sets_[i], i);
    ortho_.reserve(sets_.size());
    for (const ElementSet& a : sets_) ortho_.push_back(index_.at(perp(space_, a)));
    bottom_ = index_.at(space_.zero_set());
    top_ = index_.at(space_.base().universe());
  }

  const OrthoSpace& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return sets_.size(); }
  const std::vector<ElementSet>& sets() const noexcept { return sets_; }
  const ElementSet& set(std::size_t i) const { return sets_.at(i); }
  std::optional<std::size_t> index_of(const ElementSet& a) const {
    auto it = index_.find(a);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool leq(std::size_t i, std::size_t j) const { return sets_[i].is_subset_of(sets_[j]); }
  std::size_t meet(std::size_t i, std::size_t j) const { return index_.at(sets_[i] & sets_[j]); }
  std::size_t join(std::size_t i, std::size_t j) const {
    return index_.at(closure(space_, sets_[i] | sets_[j]));
  }
  std::size_t ortho(std::size_t i) const { return ortho_[i]; }
  std::size_t bottom() const noexcept { return bottom_; }
  std::size_t top() const noexcept { return top_; }
  std::string label(std::size_t i) const { return set_label(space_.base(), sets_[i]); }

  /// (Cl, ⊆) as a plain poset labelled by set_label.
  Poset to_poset() const {
    std::vector<std::string> names;
    names.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) names.push_back(label(i));
    std::vector<IndexPair> pairs;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        if (i != j && leq(i, j)) pairs.emplace_back(i, j);
    return Poset::from_index_pairs(std::move(names), pairs, std::max(size(), default_carrier_cap()));
  }

 private:
  OrthoSpace space_;
  std::vector<ElementSet> sets_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
  std::vector<std::size_t> ortho_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

inline ClosedSetLattice closure_lattice(const OrthoSpace& s) { return ClosedSetLattice(s); }

/// Finite bounded lattice given by index operations.
template <typename L>
concept LatticeLike = requires(const L& l, std::size_t i) {
  { l.size() } -> std::convertible_to<std::size_t>;
  { l.leq(i, i) } -> std::convertible_to<bool>;
  { l.meet(i, i) } -> std::convertible_to<std::size_t>;
  { l.join(i, i) } -> std::convertible_to<std::size_t>;
  { l.bottom() } -> std::convertible_to<std::size_t>;
  { l.top() } -> std::convertible_to<std::size_t>;
  { l.label(i) } -> std::convertible_to<std::string>;
};

template <typename L>
concept OrthoLatticeLike = LatticeLike<L> && requires(const L& l, std::size_t i) {
  { l.ortho(i) } -> std::convertible_to<std::size_t>;
};

/// Checks that `ortho` is an antitone involutive complementation obeying
/// De Morgan's laws. Failures are reported, never thrown.
template <OrthoLatticeLike L>
CheckReport verify_ortholattice(const L& l) {
  CheckReport report;
  const std::size_t n = l.size();
  auto& bounds = report.add("bounds");
  auto& involution = report.add("involution");
  auto& antitone = report.add("antitone");
  auto& complement = report.add("complementation");
  auto& de_morgan = report.add("de_morgan");
  for (std::size_t i = 0; i < n; ++i) {
    bounds.expect(l.leq(l.bottom(), i) && l.leq(i, l.top()),
                  [&] { return l.label(i) + " lies outside [bottom, top]"; });
    involution.expect(l.ortho(l.ortho(i)) == i, [&] { return l.label(i) + " is not fixed by ortho∘ortho"; });
    complement.expect(l.join(i, l.ortho(i)) == l.top() && l.meet(i, l.ortho(i)) == l.bottom(),
                      [&] { return l.label(i) + " and its ortho are not complements"; });
    for (std::size_t j = 0; j < n; ++j) {
      if (l.leq(i, j))
        antitone.expect(l.leq(l.ortho(j), l.ortho(i)),
                        [&] { return l.label(i) + " <= " + l.label(j) + " but orthos are not reversed"; });
      de_morgan.expect(l.ortho(l.join(i, j)) == l.meet(l.ortho(i), l.ortho(j)) &&
                           l.ortho(l.meet(i, j)) == l.join(l.ortho(i), l.ortho(j)),
                       [&] { return "fails for " + l.label(i) + ", " + l.label(j); });
    }
  }
  return report;
}

}  // namespace orthoclose
