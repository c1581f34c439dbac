#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "element_set.hpp"
#include "error.hpp"

namespace orthoclose {

inline constexpr std::size_t kDefaultCarrierCap = 4096;

/// Carrier cap from ORTHOCLOSE_CARRIER_CAP, falling back to 4096.
inline std::size_t default_carrier_cap() {
  if (const char* env = std::getenv("ORTHOCLOSE_CARRIER_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultCarrierCap;
}

using Element = std::size_t;
using IndexPair = std::pair<Element, Element>;
using LabelPair = std::pair<std::string, std::string>;

/// Finite partially ordered set. Immutable once built; elements are
/// identified by label, indices follow construction order.
class Poset {
 public:
  /// Builds the reflexive-transitive closure of `pairs` (x <= y).
  static Poset from_index_pairs(std::vector<std::string> names, const std::vector<IndexPair>& pairs,
                                std::size_t cap = default_carrier_cap()) {
    const std::size_t n = names.size();
    if (n == 0) throw Error(ErrorCode::kEmptyCarrier, "a poset needs at least one element");
    if (n > cap)
      throw Error(ErrorCode::kSizeLimit,
                  std::to_string(n) + " elements exceed the carrier cap " + std::to_string(cap));
    Poset p;
    p.names_ = std::move(names);
    for (Element i = 0; i < n; ++i) {
      if (!p.index_.emplace(p.names_[i], i).second)
        throw Error(ErrorCode::kDuplicateLabel, "label '" + p.names_[i] + "' appears twice");
    }
    p.up_.assign(n, ElementSet(n));
    for (Element i = 0; i < n; ++i) p.up_[i].insert(i);
    for (const auto& [x, y] : pairs) {
      if (x >= n || y >= n) throw Error(ErrorCode::kUnknownLabel, "pair index out of range");
      p.up_[x].insert(y);
    }
    // Warshall over bitset rows.
    for (Element k = 0; k < n; ++k)
      for (Element i = 0; i < n; ++i)
        if (i != k && p.up_[i].contains(k)) p.up_[i] |= p.up_[k];
    p.down_.assign(n, ElementSet(n));
    for (Element i = 0; i < n; ++i) {
      p.up_[i].for_each([&](Element j) {
        if (j != i && p.up_[j].contains(i))
          throw Error(ErrorCode::kCycleDetected,
                      "'" + p.names_[i] + "' and '" + p.names_[j] + "' lie on a cycle");
        p.down_[j].insert(i);
      });
    }
    return p;
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Element i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Element> index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  Element at(const std::string& label) const {
    auto i = index_of(label);
    if (!i) throw Error(ErrorCode::kUnknownLabel, "no element '" + label + "'");
    return *i;
  }

  bool leq(Element x, Element y) const { return up_[x].contains(y); }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }

  /// (a] = {x | x <= a}
  const ElementSet& down_set(Element a) const { return down_[a]; }
  /// [a) = {x | x >= a}
  const ElementSet& up_set(Element a) const { return up_[a]; }

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet universe() const { return ElementSet::full(size()); }

  ElementSet set_of(std::initializer_list<const char*> labels) const {
    ElementSet s = empty_set();
    for (const char* l : labels) s.insert(at(l));
    return s;
  }

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.names_ == b.names_ && a.up_ == b.up_;
  }

 private:
  Poset() = default;

  std::vector<std::string> names_;
  std::unordered_map<std::string, Element> index_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
};

/// Builds a poset from labels and arbitrary order assertions (x <= y).
inline Poset build_poset(std::vector<std::string> names, const std::vector<LabelPair>& relation_pairs,
                         std::size_t cap = default_carrier_cap()) {
  std::unordered_map<std::string, Element> index;
  for (Element i = 0; i < names.size(); ++i)
    if (!index.emplace(names[i], i).second)
      throw Error(ErrorCode::kDuplicateLabel, "label '" + names[i] + "' appears twice");
  std::vector<IndexPair> pairs;
  pairs.reserve(relation_pairs.size());
  for (const auto& [x, y] : relation_pairs) {
    auto ix = index.find(x), iy = index.find(y);
    if (ix == index.end()) throw Error(ErrorCode::kUnknownLabel, "no element '" + x + "'");
    if (iy == index.end()) throw Error(ErrorCode::kUnknownLabel, "no element '" + y + "'");
    pairs.emplace_back(ix->second, iy->second);
  }
  return Poset::from_index_pairs(std::move(names), pairs, cap);
}

/// Greatest element of `s` in p, if any.
inline std::optional<Element> greatest(const Poset& p, const ElementSet& s) {
  const std::size_t c = s.count();
  for (Element m = s.first(); m < p.size(); m = s.next(m + 1))
    if ((p.down_set(m) & s).count() == c) return m;
  return std::nullopt;
}

inline std::optional<Element> least(const Poset& p, const ElementSet& s) {
  const std::size_t c = s.count();
  for (Element m = s.first(); m < p.size(); m = s.next(m + 1))
    if ((p.up_set(m) & s).count() == c) return m;
  return std::nullopt;
}

/// Maximal elements of `s`.
inline ElementSet maximal(const Poset& p, const ElementSet& s) {
  ElementSet out = p.empty_set();
  s.for_each([&](Element x) {
    if ((p.up_set(x) & s).count() == 1) out.insert(x);
  });
  return out;
}

struct BoundsReport {
  ElementSet lower;
  ElementSet upper;
  std::optional<Element> meet;
  std::optional<Element> join;
};

inline ElementSet lower_bounds(const Poset& p, const ElementSet& a) {
  ElementSet lower = p.universe();
  a.for_each([&](Element x) { lower &= p.down_set(x); });
  return lower;
}

inline ElementSet upper_bounds(const Poset& p, const ElementSet& a) {
  ElementSet upper = p.universe();
  a.for_each([&](Element x) { upper &= p.up_set(x); });
  return upper;
}

inline BoundsReport bounds(const Poset& p, const ElementSet& a) {
  BoundsReport r{lower_bounds(p, a), upper_bounds(p, a), std::nullopt, std::nullopt};
  r.meet = greatest(p, r.lower);
  r.join = least(p, r.upper);
  return r;
}

/// Infimum of `a` in p (the empty infimum is the top, when present).
inline std::optional<Element> infimum(const Poset& p, const ElementSet& a) {
  return greatest(p, lower_bounds(p, a));
}
inline std::optional<Element> supremum(const Poset& p, const ElementSet& a) {
  return least(p, upper_bounds(p, a));
}

inline std::optional<Element> meet(const Poset& p, Element x, Element y) {
  if (p.leq(x, y)) return x;
  if (p.leq(y, x)) return y;
  return greatest(p, p.down_set(x) & p.down_set(y));
}

inline std::optional<Element> join(const Poset& p, Element x, Element y) {
  if (p.leq(x, y)) return y;
  if (p.leq(y, x)) return x;
  return least(p, p.up_set(x) & p.up_set(y));
}

inline std::optional<Element> bottom(const Poset& p) { return least(p, p.universe()); }
inline std::optional<Element> top(const Poset& p) { return greatest(p, p.universe()); }
inline bool is_bounded(const Poset& p) { return bottom(p) && top(p); }

/// First pair (x, y), x < y by index, lacking a meet.
inline std::optional<IndexPair> meetless_pair(const Poset& p) {
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = x + 1; y < p.size(); ++y)
      if (!meet(p, x, y)) return IndexPair{x, y};
  return std::nullopt;
}

inline bool is_meet_semilattice(const Poset& p) { return !meetless_pair(p); }

inline bool is_join_semilattice(const Poset& p) {
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = x + 1; y < p.size(); ++y)
      if (!join(p, x, y)) return false;
  return true;
}

inline bool is_lattice(const Poset& p) { return is_meet_semilattice(p) && is_join_semilattice(p); }

inline Element require_bottom(const Poset& p) {
  auto b = bottom(p);
  if (!b) throw Error(ErrorCode::kNoBottom, "poset has no least element");
  return *b;
}

/// Elements covering the bottom.
inline ElementSet atoms(const Poset& p) {
  const Element zero = require_bottom(p);
  ElementSet out = p.empty_set();
  for (Element x = 0; x < p.size(); ++x)
    if (x != zero && p.down_set(x).count() == 2) out.insert(x);
  return out;
}

inline bool is_atomic(const Poset& p) {
  const Element zero = require_bottom(p);
  const ElementSet at = atoms(p);
  for (Element x = 0; x < p.size(); ++x)
    if (x != zero && !p.down_set(x).intersects(at)) return false;
  return true;
}

inline const ElementSet& down_set(const Poset& p, Element a) { return p.down_set(a); }
inline const ElementSet& up_set(const Poset& p, Element a) { return p.up_set(a); }

/// Cover pairs (x, y) with x < y and nothing strictly between, sorted by index.
inline std::vector<IndexPair> transitive_reduction(const Poset& p) {
  std::vector<IndexPair> covers;
  for (Element x = 0; x < p.size(); ++x) {
    ElementSet above = p.up_set(x);
    above.erase(x);
    above.for_each([&](Element y) {
      ElementSet between = above & p.down_set(y);
      if (between.count() == 1) covers.emplace_back(x, y);
    });
  }
  return covers;
}

namespace detail {
inline std::string product_component(const std::string& label) {
  return label.find(',') == std::string::npos ? label : "(" + label + ")";
}
}  // namespace detail

/// Componentwise-ordered product. Element (i, j) has index i * |p2| + j
/// and label "l1,l2".
inline Poset direct_product(const Poset& p1, const Poset& p2, std::size_t cap = default_carrier_cap()) {
  const std::size_t n1 = p1.size(), n2 = p2.size();
  if (n1 * n2 > cap)
    throw Error(ErrorCode::kSizeLimit, "product of " + std::to_string(n1) + " and " + std::to_string(n2) +
                                           " elements exceeds the carrier cap " + std::to_string(cap));
  std::vector<std::string> names;
  names.reserve(n1 * n2);
  for (Element i = 0; i < n1; ++i)
    for (Element j = 0; j < n2; ++j)
      names.push_back(detail::product_component(p1.name(i)) + "," + detail::product_component(p2.name(j)));
  std::vector<IndexPair> pairs;
  for (const auto& [a, b] : transitive_reduction(p1))
    for (Element j = 0; j < n2; ++j) pairs.emplace_back(a * n2 + j, b * n2 + j);
  for (const auto& [a, b] : transitive_reduction(p2))
    for (Element i = 0; i < n1; ++i) pairs.emplace_back(i * n2 + a, i * n2 + b);
  return Poset::from_index_pairs(std::move(names), pairs, cap);
}

/// The order restricted to `members`, labels kept, ascending index order.
/// Returns the sub-poset and the member index of each of its elements.
inline std::pair<Poset, std::vector<Element>> induced_subposet(const Poset& p, const ElementSet& members) {
  std::vector<Element> back = members.members();
  std::vector<std::string> names;
  names.reserve(back.size());
  for (Element x : back) names.push_back(p.name(x));
  std::vector<IndexPair> pairs;
  for (Element i = 0; i < back.size(); ++i)
    for (Element j = 0; j < back.size(); ++j)
      if (i != j && p.leq(back[i], back[j])) pairs.emplace_back(i, j);
  return {Poset::from_index_pairs(std::move(names), pairs), std::move(back)};
}

/// Length of the longest chain ending at each element (minimal elements have 0).
inline std::vector<std::size_t> heights(const Poset& p) {
  std::vector<std::size_t> h(p.size(), 0);
  // Elements sorted by down-set size form a linear extension.
  std::vector<Element> order(p.size());
  for (Element i = 0; i < p.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) {
    return p.down_set(a).count() < p.down_set(b).count();
  });
  for (Element y : order)
    p.down_set(y).for_each([&](Element x) {
      if (x != y) h[y] = std::max(h[y], h[x] + 1);
    });
  return h;
}

}  // namespace orthoclose
