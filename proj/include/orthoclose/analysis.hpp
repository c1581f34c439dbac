#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "check.hpp"
#include "lattice.hpp"
#include "ortho.hpp"
#include "poset.hpp"
#include "pseudo.hpp"
#include "structure.hpp"

namespace orthoclose {

/// Galois-connection laws of ⊥ over every subset A and element b:
/// A ⊆ A⊥⊥, A⊥ = A⊥⊥⊥, A ∩ A⊥ = A ∩ {0}, (A ∪ {b})⊥ = A⊥ ∩ b⊥ and
/// (A ∪ {b})⊥ ⊆ A⊥. The last two extend to arbitrary unions and
/// inclusions by induction on |B|.
inline CheckReport check_galois_laws(const OrthoSpace& s) {
  const std::size_t n = s.size();
  if (n > 20) throw Error(ErrorCode::kSizeLimit, "exhaustive Galois check is limited to 20 elements");
  CheckReport report;
  auto& extensive = report.add("extensive");
  auto& triple = report.add("triple_perp");
  auto& disjoint = report.add("disjoint");
  auto& unions = report.add("union");
  auto& antitone = report.add("antitone");
  const Poset& p = s.base();
  const ElementSet zero = s.zero_set();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const ElementSet a = ElementSet::from_mask(n, mask);
    const ElementSet pa = perp(s, a);
    const ElementSet ppa = perp(s, pa);
    extensive.expect(a.is_subset_of(ppa), [&] { return "A=" + set_label(p, a); });
    triple.expect(pa == perp(s, ppa), [&] { return "A=" + set_label(p, a); });
    disjoint.expect((a & pa) == (a & zero), [&] { return "A=" + set_label(p, a); });
    for (Element b = 0; b < n; ++b) {
      if (a.contains(b)) continue;
      ElementSet ab = a;
      ab.insert(b);
      const ElementSet pab = perp(s, ab);
      unions.expect(pab == (pa & s.perp_of(b)), [&] { return "A=" + set_label(p, a) + ", b=" + p.name(b); });
      antitone.expect(pab.is_subset_of(pa), [&] { return "A=" + set_label(p, a) + ", b=" + p.name(b); });
    }
  }
  return report;
}

/// x* ↦ x⊥ is a well-defined order isomorphism (P*, <=) → BCl with
/// (x*)⊥ = x⊥⊥, and Cl = {x⊥ | x ∈ P}.
inline CheckReport check_skeleton_bcl_iso(const PseudoStructure& ps, const ClosedSetLattice& bcl) {
  CheckReport report;
  const Poset& p = ps.base();
  const OrthoSpace& s = bcl.space();
  auto& principal = report.add("closed_sets_principal");
  std::unordered_set<ElementSet, ElementSetHash> perps;
  for (Element x = 0; x < p.size(); ++x) perps.insert(s.perp_of(x));
  principal.expect(perps.size() == bcl.size(), [&] {
    return std::to_string(bcl.size()) + " closed sets but " + std::to_string(perps.size()) + " element perps";
  });
  for (const ElementSet& c : bcl.sets())
    principal.expect(perps.contains(c), [&] { return set_label(p, c) + " is not of the form x^perp"; });

  auto& well_defined = report.add("well_defined");
  auto& order = report.add("order_isomorphism");
  auto& ortho = report.add("orthocomplement");
  for (Element x = 0; x < p.size(); ++x) {
    ortho.expect(s.perp_of(ps.star(x)) == perp(s, s.perp_of(x)),
                 [&] { return "(x*)^perp != x^perp^perp at " + p.name(x); });
    for (Element y = 0; y < p.size(); ++y) {
      const bool same_star = ps.star(x) == ps.star(y);
      well_defined.expect(!same_star || s.perp_of(x) == s.perp_of(y),
                          [&] { return p.name(x) + ", " + p.name(y); });
      order.expect(p.leq(ps.star(x), ps.star(y)) == s.perp_of(x).is_subset_of(s.perp_of(y)),
                   [&] { return p.name(x) + ", " + p.name(y); });
    }
  }
  return report;
}

enum class Verdict { kPass, kFail, kHypothesisNotMet };

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kHypothesisNotMet: return "hypothesis-not-met";
  }
  return "unknown";
}

struct TheoremVerdict {
  std::string id;
  Verdict verdict = Verdict::kHypothesisNotMet;
  std::string detail;
};

/// Theorem identifiers, in report order.
inline constexpr std::array<std::string_view, 9> kTheoremIds = {
    "ortholattice", "galois", "t1", "t2", "glivenko", "compat_boolean", "inf_star", "star_perp", "forbidden"};

struct AnalyzeOptions {
  std::size_t galois_limit = 12;
  std::size_t subset_limit = 12;
  std::size_t skeleton_cap = kDefaultSkeletonCap;
};

struct AnalysisReport {
  Poset poset;

  bool has_bottom = false;
  bool has_top = false;
  bool bounded = false;
  bool meet_semilattice = false;
  bool lattice = false;
  std::optional<bool> atomic;
  std::optional<bool> pseudocomplemented;
  std::optional<bool> skeleton_meet_semilattice;
  std::optional<bool> skeleton_lattice;
  std::optional<bool> compatibility;
  std::optional<bool> bcl_boolean;

  std::optional<ElementSet> atoms;
  std::vector<ElementSet> closed_sets;
  std::optional<std::vector<Element>> star;
  std::optional<ElementSet> skeleton;
  std::optional<Element> non_pseudocomplemented_witness;
  std::optional<CompatibilityResult> compatibility_detail;

  /// forward[mask] = index into closed_sets; bit i selects the i-th atom.
  std::optional<IsoWitness> powerset_iso;
  /// Roles as base-poset indices.
  std::optional<ForbiddenConfig> forbidden;
  std::optional<CrossingPattern> crossing;

  std::vector<TheoremVerdict> theorems;

  explicit AnalysisReport(Poset p) : poset(std::move(p)) {}

  std::size_t size() const { return poset.size(); }
  const TheoremVerdict* verdict(std::string_view id) const {
    for (const auto& t : theorems)
      if (t.id == id) return &t;
    return nullptr;
  }
  bool any_failure() const {
    for (const auto& t : theorems)
      if (t.verdict == Verdict::kFail) return true;
    return false;
  }
};

namespace detail {

inline TheoremVerdict from_report(std::string id, const CheckReport& r) {
  return {std::move(id), r.passed() ? Verdict::kPass : Verdict::kFail, r.passed() ? "" : r.summary()};
}

inline TheoremVerdict not_met(std::string id, std::string why) {
  return {std::move(id), Verdict::kHypothesisNotMet, std::move(why)};
}

}  // namespace detail

/// Runs every applicable check on p. Theorems whose hypotheses fail are
/// recorded as hypothesis-not-met rather than skipped silently.
inline AnalysisReport analyze(const Poset& p, const AnalyzeOptions& opt = {}) {
  using detail::from_report;
  using detail::not_met;
  AnalysisReport r{p};
  const std::size_t n = p.size();
  r.has_bottom = bottom(p).has_value();
  r.has_top = top(p).has_value();
  r.bounded = r.has_bottom && r.has_top;
  r.meet_semilattice = is_meet_semilattice(p);
  r.lattice = r.meet_semilattice && is_join_semilattice(p);

  std::optional<ClosedSetLattice> bcl;
  if (r.has_bottom) {
    r.atoms = atoms(p);
    r.atomic = is_atomic(p);
    bcl.emplace(OrthoSpace{p});
    r.closed_sets = bcl->sets();
    r.bcl_boolean = is_boolean(*bcl);
  }
  std::optional<PseudoStructure> ps;
  if (r.bounded) {
    ps = pseudo_structure(p);
    r.pseudocomplemented = ps.has_value();
    if (!ps) r.non_pseudocomplemented_witness = first_without_pseudocomplement(p);
  }
  std::optional<Poset> sk;
  if (ps) {
    r.star = ps->star_table();
    r.skeleton = ps->skeleton();
    sk = skeleton_poset(*ps);
    r.skeleton_meet_semilattice = is_meet_semilattice(*sk);
    r.skeleton_lattice = is_lattice(*sk);
    if (ps->skeleton().count() <= opt.skeleton_cap) {
      r.compatibility_detail = check_compatibility(*ps, opt.skeleton_cap);
      r.compatibility = r.compatibility_detail->compatible;
    }
  }

  // Ortholattice of closed sets.
  if (bcl)
    r.theorems.push_back(from_report("ortholattice", verify_ortholattice(*bcl)));
  else
    r.theorems.push_back(not_met("ortholattice", "no bottom element"));

  if (!bcl)
    r.theorems.push_back(not_met("galois", "no bottom element"));
  else if (n > opt.galois_limit)
    r.theorems.push_back(not_met("galois", "more than " + std::to_string(opt.galois_limit) + " elements"));
  else
    r.theorems.push_back(from_report("galois", check_galois_laws(bcl->space())));

  // Atomic meet-semilattice: BCl ≅ 2^At.
  if (!bcl || !r.meet_semilattice || !*r.atomic) {
    r.theorems.push_back(not_met("t1", "needs an atomic meet-semilattice with 0"));
  } else {
    CheckReport t1;
    const std::size_t k = r.atoms->count();
    if (k > kMaxPowersetAtoms) {
      r.theorems.push_back(not_met("t1", "too many atoms"));
    } else {
      t1.add("closed_count").expect(bcl->size() == (std::size_t{1} << k), [&] {
        return std::to_string(bcl->size()) + " closed sets for " + std::to_string(k) + " atoms";
      });
      r.powerset_iso = atom_powerset_iso(*bcl);
      t1.add("powerset_iso").expect(r.powerset_iso.has_value(), [] { return std::string("f is not an isomorphism"); });
      t1.add("boolean").expect(*r.bcl_boolean, [] { return std::string("BCl is not Boolean"); });
      r.theorems.push_back(from_report("t1", t1));
    }
  }

  // Pseudocomplemented lattice: BCl Boolean and ≅ skeleton.
  if (!ps || !r.lattice) {
    r.theorems.push_back(not_met("t2", "needs a pseudocomplemented lattice"));
  } else {
    CheckReport t2 = check_skeleton_bcl_iso(*ps, *bcl);
    t2.add("boolean").expect(*r.bcl_boolean, [] { return std::string("BCl is not Boolean"); });
    r.theorems.push_back(from_report("t2", t2));
  }

  // Glivenko algebra on the skeleton.
  if (!ps || !*r.skeleton_meet_semilattice) {
    r.theorems.push_back(not_met("glivenko", "needs a pseudocomplemented poset whose skeleton is a meet-semilattice"));
  } else {
    CheckReport g;
    const auto alg = glivenko(*ps);
    g.add("present").expect(alg.has_value(), [] { return std::string("no Glivenko algebra"); });
    if (alg) {
      g.add("boolean").expect(alg->boolean_verified(), [] { return std::string("not a Boolean algebra"); });
      auto& closed = g.add("carrier_closed");
      for (std::size_t x = 0; x < alg->size(); ++x)
        for (std::size_t y = 0; y < alg->size(); ++y)
          closed.expect(alg->join(x, y) < alg->size() && alg->meet(x, y) < alg->size(),
                        [&] { return alg->label(x) + ", " + alg->label(y); });
      if (r.lattice) {
        auto& sqcup = g.add("sqcup_is_double_star_of_join");
        for (std::size_t x = 0; x < alg->size(); ++x)
          for (std::size_t y = 0; y < alg->size(); ++y) {
            const Element j = *join(p, alg->element(x), alg->element(y));
            sqcup.expect(alg->element(alg->join(x, y)) == ps->star(ps->star(j)),
                          [&] { return alg->label(x) + ", " + alg->label(y); });
          }
      }
    }
    r.theorems.push_back(from_report("glivenko", g));
  }

  // Pseudocomplemented poset with compatible lattice skeleton: BCl Boolean.
  if (!ps || !*r.skeleton_lattice || !r.compatibility || !*r.compatibility) {
    r.theorems.push_back(not_met("compat_boolean", "needs a lattice skeleton satisfying the compatibility condition"));
  } else {
    CheckReport c = check_skeleton_bcl_iso(*ps, *bcl);
    c.add("boolean").expect(*r.bcl_boolean, [] { return std::string("BCl is not Boolean"); });
    r.theorems.push_back(from_report("compat_boolean", c));
  }

  if (!ps) {
    r.theorems.push_back(not_met("inf_star", "not pseudocomplemented"));
  } else if (n > opt.subset_limit) {
    r.theorems.push_back(not_met("inf_star", "more than " + std::to_string(opt.subset_limit) + " elements"));
  } else {
    CheckReport l1;
    auto& inf_law = l1.add("inf_star_law");
    auto& perp_law = l1.add("perp_of_join");
    const OrthoSpace& s = bcl->space();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const ElementSet a = ElementSet::from_mask(n, mask);
      const CheckResult law = inf_star_law(*ps, a);
      inf_law.expect(law.passed, [&] { return law.counterexample; });
      if (const auto sup = supremum(p, a))
        perp_law.expect(perp(s, a) == s.perp_of(*sup), [&] { return "A=" + set_label(p, a); });
    }
    r.theorems.push_back(from_report("inf_star", l1));
  }

  if (!ps) {
    r.theorems.push_back(not_met("star_perp", "not pseudocomplemented"));
  } else {
    CheckReport l2;
    const OrthoSpace& s = bcl->space();
    auto& law = l2.add("star_perp_is_double_perp");
    auto& consistent = l2.add("ortho_is_below_star");
    auto& laws = l2.add("star_laws");
    for (Element x = 0; x < n; ++x) {
      const Element xs = ps->star(x);
      law.expect(s.perp_of(xs) == perp(s, s.perp_of(x)), [&] { return "a=" + p.name(x); });
      laws.expect(p.leq(x, ps->star(xs)) && ps->star(ps->star(xs)) == xs,
                  [&] { return "x <= x** or x*** = x* fails at " + p.name(x); });
      for (Element y = 0; y < n; ++y) {
        consistent.expect(s.orthogonal(x, y) == p.leq(y, xs), [&] { return p.name(x) + ", " + p.name(y); });
        if (p.leq(x, y))
          laws.expect(p.leq(ps->star(y), xs), [&] { return "star not antitone at " + p.name(x) + " <= " + p.name(y); });
      }
    }
    r.theorems.push_back(from_report("star_perp", l2));
  }

  // Forbidden configuration equivalence on the skeleton.
  if (!ps) {
    r.theorems.push_back(not_met("forbidden", "not pseudocomplemented"));
  } else {
    CheckReport f;
    const auto members = skeleton_members(*ps);
    const auto found = find_forbidden_configuration(*sk);
    const auto fig = contains_fig13(*sk);
    f.add("equivalence").expect(*r.skeleton_meet_semilattice == !found.has_value(), [&] {
      return std::string(found ? "configuration found in a meet-semilattice skeleton"
                               : "skeleton is not a meet-semilattice but no configuration exists");
    });
    if (found) {
      const CheckResult v = validate_forbidden_config(*sk, *found);
      f.add("witness_valid").expect(v.passed, [&] { return v.counterexample; });
      f.add("implies_crossing").expect(fig.has_value(), [] { return std::string("no crossing four-element pattern"); });
      ForbiddenConfig mapped = *found;
      for (auto& e : mapped.roles) e = members[e];
      r.forbidden = mapped;
    }
    if (fig) {
      CrossingPattern mapped = *fig;
      for (auto& e : mapped.roles) e = members[e];
      r.crossing = mapped;
    }
    auto& construction = f.add("star_construction");
    for (const auto& [a1, d1, f1, g1] : meetless_quadruples(*sk)) {
      const CheckResult v = validate_forbidden_config(*sk, star_linked_configuration(*ps, a1, d1, f1, g1));
      construction.expect(v.passed, [&] {
        return "a*=" + sk->name(a1) + ", d*=" + sk->name(d1) + ", f*=" + sk->name(f1) + ", g*=" + sk->name(g1) +
               ": " + v.counterexample;
      });
    }
    r.theorems.push_back(from_report("forbidden", f));
  }
  return r;
}

}  // namespace orthoclose
