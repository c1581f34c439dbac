#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "check.hpp"
#include "error.hpp"
#include "lattice.hpp"
#include "poset.hpp"

namespace orthoclose {

/// Greatest y whose only common lower bound with x is 0, if it exists.
inline std::optional<Element> pseudocomplement(const Poset& p, Element x) {
  const auto zero = bottom(p);
  if (!zero) return std::nullopt;
  ElementSet candidates = p.empty_set();
  for (Element y = 0; y < p.size(); ++y)
    if ((p.down_set(x) & p.down_set(y)).count() == 1) candidates.insert(y);
  return greatest(p, candidates);
}

/// First element (by index) lacking a pseudocomplement.
inline std::optional<Element> first_without_pseudocomplement(const Poset& p) {
  for (Element x = 0; x < p.size(); ++x)
    if (!pseudocomplement(p, x)) return x;
  return std::nullopt;
}

/// A bounded poset together with its pseudocomplement map x ↦ x* and
/// skeleton P* = {x* | x ∈ P}.
class PseudoStructure {
 public:
  PseudoStructure(Poset base, std::vector<Element> star)
      : base_(std::move(base)), star_(std::move(star)), skeleton_(base_.empty_set()) {
    for (Element s : star_) skeleton_.insert(s);
    zero_ = *bottom(base_);
    one_ = *top(base_);
  }

  const Poset& base() const noexcept { return base_; }
  Element star(Element x) const { return star_.at(x); }
  const std::vector<Element>& star_table() const noexcept { return star_; }
  const ElementSet& skeleton() const noexcept { return skeleton_; }
  Element zero() const noexcept { return zero_; }
  Element one() const noexcept { return one_; }

 private:
  Poset base_;
  std::vector<Element> star_;
  ElementSet skeleton_;
  Element zero_ = 0;
  Element one_ = 0;
};

/// The pseudocomplemented structure on p, absent when some element has no
/// pseudocomplement.
inline std::optional<PseudoStructure> pseudo_structure(const Poset& p) {
  if (!is_bounded(p)) throw Error(ErrorCode::kNotBounded, "pseudocomplements need a bounded poset");
  std::vector<Element> star;
  star.reserve(p.size());
  for (Element x = 0; x < p.size(); ++x) {
    auto s = pseudocomplement(p, x);
    if (!s) return std::nullopt;
    star.push_back(*s);
  }
  return PseudoStructure(p, std::move(star));
}

/// (P*, <=), the base order restricted to the skeleton.
inline Poset skeleton_poset(const PseudoStructure& ps) { return induced_subposet(ps.base(), ps.skeleton()).first; }

/// Skeleton element indices in ascending base order; position i is
/// element i of skeleton_poset().
inline std::vector<Element> skeleton_members(const PseudoStructure& ps) { return ps.skeleton().members(); }

/// Boolean algebra on the skeleton with the skeleton meet, x ⊔ y = (x* ∧ y*)*
/// and complement *. Indices are positions in skeleton_members().
class GlivenkoAlgebra {
 public:
  GlivenkoAlgebra(std::vector<Element> carrier, std::vector<std::string> labels, std::vector<std::size_t> meet,
                  std::vector<std::size_t> sqcup, std::vector<std::size_t> complement, std::size_t bottom,
                  std::size_t top)
      : carrier_(std::move(carrier)),
        labels_(std::move(labels)),
        meet_(std::move(meet)),
        sqcup_(std::move(sqcup)),
        complement_(std::move(complement)),
        bottom_(bottom),
        top_(top) {
    boolean_ = is_boolean(*this);
  }

  std::size_t size() const noexcept { return carrier_.size(); }
  /// Base-poset index of algebra element i.
  Element element(std::size_t i) const { return carrier_.at(i); }
  const std::vector<Element>& carrier() const noexcept { return carrier_; }
  std::size_t meet(std::size_t x, std::size_t y) const { return meet_[x * size() + y]; }
  std::size_t join(std::size_t x, std::size_t y) const { return sqcup_[x * size() + y]; }
  std::size_t sqcup(std::size_t x, std::size_t y) const { return join(x, y); }
  std::size_t ortho(std::size_t x) const { return complement_[x]; }
  std::size_t complement(std::size_t x) const { return complement_[x]; }
  bool leq(std::size_t x, std::size_t y) const { return meet(x, y) == x; }
  std::size_t bottom() const noexcept { return bottom_; }
  std::size_t top() const noexcept { return top_; }
  std::string label(std::size_t x) const { return labels_.at(x); }
  /// Result of the Boolean-algebra check run at construction.
  bool boolean_verified() const noexcept { return boolean_; }

  std::optional<std::size_t> local_index(Element base_element) const {
    for (std::size_t i = 0; i < carrier_.size(); ++i)
      if (carrier_[i] == base_element) return i;
    return std::nullopt;
  }

 private:
  std::vector<Element> carrier_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> meet_;
  std::vector<std::size_t> sqcup_;
  std::vector<std::size_t> complement_;
  std::size_t bottom_;
  std::size_t top_;
  bool boolean_ = false;
};

/// Present iff (P*, <=) is a meet-semilattice.
inline std::optional<GlivenkoAlgebra> glivenko(const PseudoStructure& ps) {
  const auto [sk, members] = induced_subposet(ps.base(), ps.skeleton());
  const std::size_t k = sk.size();
  std::vector<std::size_t> local(ps.base().size(), k);
  for (std::size_t i = 0; i < k; ++i) local[members[i]] = i;

  std::vector<std::size_t> meet_table(k * k);
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) {
      auto m = meet(sk, x, y);
      if (!m) return std::nullopt;
      meet_table[x * k + y] = *m;
    }
  std::vector<std::size_t> complement(k);
  for (std::size_t x = 0; x < k; ++x) complement[x] = local[ps.star(members[x])];
  std::vector<std::size_t> sqcup(k * k);
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) sqcup[x * k + y] = complement[meet_table[complement[x] * k + complement[y]]];
  return GlivenkoAlgebra(members, sk.names(), std::move(meet_table), std::move(sqcup), std::move(complement),
                         local[ps.zero()], local[ps.one()]);
}

inline constexpr std::size_t kDefaultSkeletonCap = 20;

struct CompatibilityResult {
  bool compatible = true;
  std::size_t subsets_checked = 0;
  /// First offending subset B of the skeleton (base indices).
  std::optional<ElementSet> subset;
  std::optional<Element> base_infimum;
  std::optional<Element> skeleton_infimum;
  /// A lower bound of B in P that is not below its skeleton infimum.
  std::optional<Element> stray_lower_bound;
  explicit operator bool() const noexcept { return compatible; }
};

/// For every B ⊆ P*, the infimum of B in P must exist and equal its
/// infimum in (P*, <=). Exponential in |P*|, hence the cap.
inline CompatibilityResult check_compatibility(const PseudoStructure& ps, std::size_t cap = kDefaultSkeletonCap) {
  const Poset& p = ps.base();
  const std::vector<Element> members = ps.skeleton().members();
  if (members.size() > cap)
    throw Error(ErrorCode::kSkeletonTooLarge,
                "skeleton has " + std::to_string(members.size()) + " elements, cap is " + std::to_string(cap));
  CompatibilityResult result;
  ElementSet chosen = p.empty_set();

  auto evaluate = [&](const ElementSet& lower) {
    ++result.subsets_checked;
    const auto base_inf = greatest(p, lower);
    const auto skel_inf = greatest(p, lower & ps.skeleton());
    if (base_inf && skel_inf && *base_inf == *skel_inf) return true;
    result.compatible = false;
    result.subset = chosen;
    result.base_infimum = base_inf;
    result.skeleton_infimum = skel_inf;
    if (skel_inf) {
      const ElementSet stray = lower - p.down_set(*skel_inf);
      if (!stray.empty()) result.stray_lower_bound = stray.first();
    }
    return false;
  };

  // Each subset is visited once, extending by strictly increasing positions.
  auto visit = [&](auto&& self, std::size_t start, const ElementSet& lower) -> bool {
    if (!evaluate(lower)) return false;
    for (std::size_t i = start; i < members.size(); ++i) {
      chosen.insert(members[i]);
      const bool ok = self(self, i + 1, lower & p.down_set(members[i]));
      if (!ok) return false;
      chosen.erase(members[i]);
    }
    return true;
  };
  visit(visit, 0, p.universe());
  return result;
}

/// A* = {a* | a ∈ A}
inline ElementSet star_of_set(const PseudoStructure& ps, const ElementSet& a) {
  ElementSet out = ps.base().empty_set();
  a.for_each([&](Element x) { out.insert(ps.star(x)); });
  return out;
}

/// Whenever ⋁A exists, ⋀A* must exist and equal (⋁A)*.
inline CheckResult inf_star_law(const PseudoStructure& ps, const ElementSet& a) {
  CheckResult r{"inf_star_law"};
  const Poset& p = ps.base();
  const auto sup = supremum(p, a);
  if (!sup) return r;
  const auto inf = infimum(p, star_of_set(ps, a));
  r.expect(inf && *inf == ps.star(*sup), [&] {
    return "A=" + set_label(p, a) + ": sup " + p.name(*sup) + ", star " + p.name(ps.star(*sup)) + ", inf of A* " +
           (inf ? p.name(*inf) : std::string("missing"));
  });
  return r;
}

}  // namespace orthoclose
