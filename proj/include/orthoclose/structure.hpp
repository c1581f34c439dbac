#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "check.hpp"
#include "error.hpp"
#include "lattice.hpp"
#include "ortho.hpp"
#include "poset.hpp"
#include "pseudo.hpp"

namespace orthoclose {

/// Order isomorphism: x <= y iff forward[x] <= forward[y].
struct IsoWitness {
  std::vector<std::size_t> forward;
  std::vector<std::size_t> inverse;

  IsoWitness inverted() const { return {inverse, forward}; }
};

inline IsoWitness make_witness(std::vector<std::size_t> forward) {
  std::vector<std::size_t> inverse(forward.size());
  for (std::size_t i = 0; i < forward.size(); ++i) inverse.at(forward[i]) = i;
  return {std::move(forward), std::move(inverse)};
}

inline bool is_order_isomorphism(const Poset& p1, const Poset& p2, const IsoWitness& w) {
  const std::size_t n = p1.size();
  if (p2.size() != n || w.forward.size() != n || w.inverse.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (w.forward[i] >= n || w.inverse[w.forward[i]] != i) return false;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (p1.leq(x, y) != p2.leq(w.forward[x], w.forward[y])) return false;
  return true;
}

inline constexpr std::size_t kIsomorphismLimit = 64;

/// Per-element invariant: down-set size, up-set size, lower and upper
/// cover counts, height.
using ElementInvariant = std::array<std::size_t, 5>;

inline std::vector<ElementInvariant> element_invariants(const Poset& p) {
  std::vector<ElementInvariant> inv(p.size());
  const auto h = heights(p);
  for (Element x = 0; x < p.size(); ++x) inv[x] = {p.down_set(x).count(), p.up_set(x).count(), 0, 0, h[x]};
  for (const auto& [x, y] : transitive_reduction(p)) {
    ++inv[x][3];
    ++inv[y][2];
  }
  return inv;
}

/// Sorted invariant vector; equal for isomorphic posets.
inline std::vector<ElementInvariant> invariant_signature(const Poset& p) {
  auto inv = element_invariants(p);
  std::sort(inv.begin(), inv.end());
  return inv;
}

/// Backtracking search with invariant pruning. Deterministic: elements of
/// p1 are placed rarest-invariant first, targets tried in index order.
inline std::optional<IsoWitness> poset_isomorphic(const Poset& p1, const Poset& p2) {
  const std::size_t n = p1.size();
  if (n > kIsomorphismLimit || p2.size() > kIsomorphismLimit)
    throw Error(ErrorCode::kSizeLimit, "isomorphism search is limited to 64 elements");
  if (p2.size() != n) return std::nullopt;
  if (p1 == p2) {
    std::vector<std::size_t> id(n);
    std::iota(id.begin(), id.end(), 0);
    return make_witness(std::move(id));
  }
  const auto inv1 = element_invariants(p1);
  const auto inv2 = element_invariants(p2);
  {
    auto s1 = inv1, s2 = inv2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto class_size = [&](std::size_t x) { return std::count(inv1.begin(), inv1.end(), inv1[x]); };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::make_tuple(class_size(a), inv1[a][0], a) < std::make_tuple(class_size(b), inv1[b][0], b);
  });

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> forward(n, kUnset);
  std::vector<bool> used(n, false);
  auto place = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const std::size_t x = order[depth];
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y] || inv2[y] != inv1[x]) continue;
      bool consistent = true;
      for (std::size_t d = 0; d < depth && consistent; ++d) {
        const std::size_t u = order[d];
        consistent = p1.leq(u, x) == p2.leq(forward[u], y) && p1.leq(x, u) == p2.leq(y, forward[u]);
      }
      if (!consistent) continue;
      forward[x] = y;
      used[y] = true;
      if (self(self, depth + 1)) return true;
      used[y] = false;
      forward[x] = kUnset;
    }
    return false;
  };
  if (!place(place, 0)) return std::nullopt;
  return make_witness(std::move(forward));
}

/// The Boolean lattice of subsets of {0..k-1} (element = bitmask).
inline Poset powerset_poset(std::size_t k) {
  if (k > 12) throw Error(ErrorCode::kSizeLimit, "powerset of more than 12 atoms");
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> names;
  for (std::size_t m = 0; m < n; ++m) {
    std::string s;
    for (std::size_t b = 0; b < k; ++b) s += ((m >> (k - 1 - b)) & 1U) ? '1' : '0';
    names.push_back(k == 0 ? "0" : s);
  }
  std::vector<IndexPair> pairs;
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t b = 0; b < k; ++b)
      if (!((m >> b) & 1U)) pairs.emplace_back(m, m | (std::size_t{1} << b));
  return Poset::from_index_pairs(std::move(names), pairs);
}

inline constexpr std::size_t kMaxPowersetAtoms = 20;

/// Witness of BCl(S) ≅ 2^At(S) for an atomic meet-semilattice with 0.
/// forward[mask] is the index in bcl.sets() of
///   f(C) = {x | x ≱ y for every atom y ∉ C},
/// where bit i of mask selects the i-th atom in index order.
/// Absent when the map fails to be a bijective order isomorphism.
inline std::optional<IsoWitness> atom_powerset_iso(const ClosedSetLattice& bcl) {
  const Poset& p = bcl.space().base();
  if (const auto pair = meetless_pair(p))
    throw Error(ErrorCode::kNotMeetSemilattice,
                "'" + p.name(pair->first) + "' and '" + p.name(pair->second) + "' have no meet");
  if (!is_atomic(p)) throw Error(ErrorCode::kNotAtomic, "some nonzero element dominates no atom");
  const ElementSet at = atoms(p);
  const std::vector<Element> atom_list = at.members();
  const std::size_t k = atom_list.size();
  if (k > kMaxPowersetAtoms) throw Error(ErrorCode::kSizeLimit, std::to_string(k) + " atoms");
  const std::size_t count = std::size_t{1} << k;
  if (bcl.size() != count) return std::nullopt;

  std::vector<ElementSet> images;
  images.reserve(count);
  std::vector<std::size_t> forward;
  forward.reserve(count);
  std::vector<bool> hit(count, false);
  for (std::size_t mask = 0; mask < count; ++mask) {
    ElementSet image = p.universe();
    for (std::size_t b = 0; b < k; ++b)
      if (!((mask >> b) & 1U)) image -= p.up_set(atom_list[b]);
    const auto idx = bcl.index_of(image);
    if (!idx || hit[*idx]) return std::nullopt;
    // C is recovered as At ∩ f(C), so f reflects inclusion.
    ElementSet chosen = p.empty_set();
    for (std::size_t b = 0; b < k; ++b)
      if ((mask >> b) & 1U) chosen.insert(atom_list[b]);
    if ((image & at) != chosen) return std::nullopt;
    hit[*idx] = true;
    forward.push_back(*idx);
    images.push_back(std::move(image));
  }
  // Monotone along every cover C ⊂ C ∪ {atom}.
  for (std::size_t mask = 0; mask < count; ++mask)
    for (std::size_t b = 0; b < k; ++b)
      if (!((mask >> b) & 1U) && !images[mask].is_subset_of(images[mask | (std::size_t{1} << b)]))
        return std::nullopt;
  return make_witness(std::move(forward));
}

inline std::optional<IsoWitness> atom_powerset_iso(const OrthoSpace& s) {
  return atom_powerset_iso(ClosedSetLattice(s));
}

/// Eight roles of the forbidden skeleton configuration, in search order.
inline constexpr std::array<std::string_view, 8> kForbiddenRoles = {"a**", "g*", "f*", "d**",
                                                                    "d*",  "f**", "g**", "a*"};

struct ForbiddenConfig {
  enum Role : std::size_t { kA2 = 0, kG1, kF1, kD2, kD1, kF2, kG2, kA1 };
  /// Element per role, indexed by Role (same order as kForbiddenRoles).
  std::array<Element, 8> roles{};

  Element operator[](Role r) const { return roles[r]; }
  friend bool operator==(const ForbiddenConfig&, const ForbiddenConfig&) = default;
};

/// Checks every invariant of a forbidden configuration in the order `sp`.
inline CheckResult validate_forbidden_config(const Poset& sp, const ForbiddenConfig& c) {
  using R = ForbiddenConfig;
  CheckResult r{"forbidden_config"};
  auto nm = [&](R::Role role) { return std::string(kForbiddenRoles[role]) + "=" + sp.name(c[role]); };
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j)
      r.expect(c.roles[i] != c.roles[j], [&] {
        return std::string(kForbiddenRoles[i]) + " and " + std::string(kForbiddenRoles[j]) + " coincide";
      });
  const std::array<std::pair<R::Role, R::Role>, 8> below = {{{R::kA2, R::kF2},
                                                            {R::kA2, R::kG2},
                                                            {R::kD2, R::kF2},
                                                            {R::kD2, R::kG2},
                                                            {R::kF1, R::kA1},
                                                            {R::kF1, R::kD1},
                                                            {R::kG1, R::kA1},
                                                            {R::kG1, R::kD1}}};
  for (const auto& [lo, hi] : below)
    r.expect(sp.leq(c[lo], c[hi]), [&] { return nm(lo) + " is not below " + nm(hi); });
  r.expect(!meet(sp, c[R::kA1], c[R::kD1]), [&] { return nm(R::kA1) + " and " + nm(R::kD1) + " have an infimum"; });
  const ElementSet mlb = maximal(sp, sp.down_set(c[R::kA1]) & sp.down_set(c[R::kD1]));
  r.expect(mlb.contains(c[R::kF1]) && mlb.contains(c[R::kG1]),
           [&] { return nm(R::kF1) + " / " + nm(R::kG1) + " not maximal lower bounds of a*, d*"; });
  r.expect(sp.less(c[R::kA2], c[R::kD1]) == sp.less(c[R::kD2], c[R::kA1]),
           [&] { return std::string("a** < d* and d** < a* disagree"); });
  r.expect(sp.less(c[R::kG1], c[R::kF2]) == sp.less(c[R::kF1], c[R::kG2]),
           [&] { return std::string("g* < f** and f* < g** disagree"); });
  return r;
}

/// Pairs (a*, d*) without infimum together with distinct maximal lower
/// bounds (f*, g*), in index order.
inline std::vector<std::array<Element, 4>> meetless_quadruples(const Poset& sp) {
  std::vector<std::array<Element, 4>> out;  // {a*, d*, f*, g*}
  const std::size_t n = sp.size();
  for (Element a = 0; a < n; ++a)
    for (Element d = 0; d < n; ++d) {
      if (a == d || meet(sp, a, d)) continue;
      const auto mlb = maximal(sp, sp.down_set(a) & sp.down_set(d)).members();
      for (Element f : mlb)
        for (Element g : mlb)
          if (f != g) out.push_back({a, d, f, g});
    }
  return out;
}

/// Lexicographically first (in kForbiddenRoles order) assignment of the
/// eight roles to distinct elements of the skeleton order `sp` satisfying
/// all configuration invariants.
inline std::optional<ForbiddenConfig> find_forbidden_configuration(const Poset& sp) {
  using R = ForbiddenConfig;
  const std::size_t n = sp.size();
  std::optional<ForbiddenConfig> best;
  for (const auto& [a1, d1, f1, g1] : meetless_quadruples(sp)) {
    for (Element a2 = 0; a2 < n; ++a2) {
      if (a2 == a1 || a2 == d1 || a2 == f1 || a2 == g1) continue;
      if (best && a2 > best->roles[R::kA2]) break;
      for (Element d2 = 0; d2 < n; ++d2) {
        if (d2 == a2 || d2 == a1 || d2 == d1 || d2 == f1 || d2 == g1) continue;
        if (sp.less(a2, d1) != sp.less(d2, a1)) continue;
        const ElementSet above = sp.up_set(a2) & sp.up_set(d2);
        for (Element f2 = above.first(); f2 < n; f2 = above.next(f2 + 1)) {
          if (f2 == a2 || f2 == d2 || f2 == a1 || f2 == d1 || f2 == f1 || f2 == g1) continue;
          for (Element g2 = above.first(); g2 < n; g2 = above.next(g2 + 1)) {
            if (g2 == f2 || g2 == a2 || g2 == d2 || g2 == a1 || g2 == d1 || g2 == f1 || g2 == g1) continue;
            if (sp.less(g1, f2) != sp.less(f1, g2)) continue;
            ForbiddenConfig c;
            c.roles = {a2, g1, f1, d2, d1, f2, g2, a1};
            if (!best || c.roles < best->roles) best = c;
          }
        }
      }
    }
  }
  return best;
}

/// Four-element pattern 0 < {g*, f*} < {d*, a*} < 1 with f* ∥ g*, a* ∥ d*.
inline constexpr std::array<std::string_view, 4> kCrossingRoles = {"g*", "f*", "d*", "a*"};

struct CrossingPattern {
  std::array<Element, 4> roles{};  // g*, f*, d*, a*
  friend bool operator==(const CrossingPattern&, const CrossingPattern&) = default;
};

/// First (g*, f*, d*, a*) in index order where g*, f* are distinct maximal
/// lower bounds of the incomparable pair {d*, a*}.
inline std::optional<CrossingPattern> contains_fig13(const Poset& sp) {
  std::optional<CrossingPattern> best;
  for (const auto& [a1, d1, f1, g1] : meetless_quadruples(sp)) {
    if (sp.comparable(a1, d1) || sp.comparable(f1, g1)) continue;
    CrossingPattern p{{g1, f1, d1, a1}};
    if (!best || p.roles < best->roles) best = p;
  }
  return best;
}

/// The configuration built from the pseudocomplement map as in the
/// equivalence proof: a** = (a*)*, d** = (d*)*, f** = (f*)*, g** = (g*)*.
/// All arguments and results are skeleton-local indices.
inline ForbiddenConfig star_linked_configuration(const PseudoStructure& ps, Element a1, Element d1, Element f1,
                                                 Element g1) {
  const std::vector<Element> members = skeleton_members(ps);
  auto star_local = [&](Element local) {
    const Element s = ps.star(members[local]);
    return static_cast<Element>(std::lower_bound(members.begin(), members.end(), s) - members.begin());
  };
  ForbiddenConfig c;
  c.roles = {star_local(a1), g1, f1, star_local(d1), d1, star_local(f1), star_local(g1), a1};
  return c;
}

/// Cl(p1 × p2) = {A × B} and BCl(p1 × p2) ≅ BCl(p1) × BCl(p2).
inline CheckReport product_closure_check(const Poset& p1, const Poset& p2, std::size_t cap = default_carrier_cap()) {
  CheckReport report;
  const Poset prod = direct_product(p1, p2, cap);
  const ClosedSetLattice l1(OrthoSpace{p1}), l2(OrthoSpace{p2}), lp(OrthoSpace{prod});
  const std::size_t n2 = p2.size();

  auto& products = report.add("closed_sets_are_products");
  std::vector<std::size_t> forward;
  forward.reserve(l1.size() * l2.size());
  std::vector<bool> hit(lp.size(), false);
  for (std::size_t i = 0; i < l1.size(); ++i)
    for (std::size_t j = 0; j < l2.size(); ++j) {
      ElementSet ab = prod.empty_set();
      l1.set(i).for_each([&](Element a) { l2.set(j).for_each([&](Element b) { ab.insert(a * n2 + b); }); });
      const auto idx = lp.index_of(ab);
      products.expect(idx.has_value(), [&] { return l1.label(i) + " x " + l2.label(j) + " is not closed"; });
      if (idx) hit[*idx] = true;
      forward.push_back(idx.value_or(0));
    }
  for (std::size_t k = 0; k < lp.size(); ++k)
    products.expect(hit[k], [&] { return lp.label(k) + " is not a product of closed sets"; });

  auto& order = report.add("componentwise_order");
  if (products.passed) {
    for (std::size_t i = 0; i < forward.size(); ++i)
      for (std::size_t j = 0; j < forward.size(); ++j) {
        const bool expected = l1.leq(i / l2.size(), j / l2.size()) && l2.leq(i % l2.size(), j % l2.size());
        order.expect(lp.leq(forward[i], forward[j]) == expected,
                     [&] { return lp.label(forward[i]) + " vs " + lp.label(forward[j]); });
      }
  } else {
    order.fail("skipped: closed sets are not products");
  }

  if (lp.size() <= kIsomorphismLimit) {
    auto& iso = report.add("bcl_isomorphic");
    const Poset rhs = direct_product(l1.to_poset(), l2.to_poset(), std::max(cap, lp.size()));
    iso.expect(poset_isomorphic(lp.to_poset(), rhs).has_value(),
               [] { return std::string("no isomorphism BCl(p1 x p2) -> BCl(p1) x BCl(p2)"); });
  }
  return report;
}

}  // namespace orthoclose
