#include <gtest/gtest.h>

#include "support.hpp"

using namespace orthoclose;
using oracle::fx;

namespace {

std::vector<std::string> star_labels(const PseudoStructure& ps) {
  std::vector<std::string> out;
  for (Element x : ps.star_table()) out.push_back(ps.base().name(x));
  return out;
}

std::vector<std::string> pseudocomplemented_fixtures() {
  std::vector<std::string> out;
  for (const auto& n : standard_fixture_names())
    if (is_bounded(fx(n)) && pseudo_structure(fx(n))) out.push_back(n);
  return out;
}

}  // namespace

TEST(Pseudo, L2Table) {
  const auto ps = pseudo_structure(fx("L2"));
  ASSERT_TRUE(ps);
  EXPECT_EQ(star_labels(*ps), (std::vector<std::string>{"1", "b", "c", "b", "0"}));
  EXPECT_EQ(ps->skeleton(), ps->base().set_of({"0", "b", "c", "1"}));
}

TEST(Pseudo, L3Table) {
  const auto ps = pseudo_structure(fx("L3"));
  ASSERT_TRUE(ps);
  EXPECT_EQ(star_labels(*ps), (std::vector<std::string>{"1", "f", "e", "d", "c", "b", "a", "0", "0"}));
}

TEST(Pseudo, P8Table) {
  const auto ps = pseudo_structure(fx("P8"));
  ASSERT_TRUE(ps);
  EXPECT_EQ(star_labels(*ps), (std::vector<std::string>{"1", "f", "c", "f", "0", "0", "c", "0"}));
  EXPECT_EQ(ps->skeleton(), ps->base().set_of({"0", "c", "f", "1"}));
}

TEST(Pseudo, P10TableAndSkeleton) {
  const auto ps = pseudo_structure(fx("P10"));
  ASSERT_TRUE(ps);
  EXPECT_EQ(star_labels(*ps), (std::vector<std::string>{"1", "h", "g", "f", "e", "d", "c", "b", "a", "0"}));
  for (Element x = 0; x < ps->base().size(); ++x) EXPECT_EQ(ps->star(ps->star(x)), x);
  EXPECT_EQ(ps->skeleton(), ps->base().universe());
  EXPECT_FALSE(is_meet_semilattice(skeleton_poset(*ps)));
  EXPECT_FALSE(glivenko(*ps).has_value());
}

TEST(Pseudo, M3HasNoPseudocomplement) {
  const Poset p = fx("M(3)");
  EXPECT_FALSE(pseudocomplement(p, p.at("a1")).has_value());
  EXPECT_EQ(first_without_pseudocomplement(p), p.at("a1"));
  EXPECT_FALSE(pseudo_structure(p).has_value());
  EXPECT_TRUE(pseudo_structure(fx("M(2)")).has_value());
}

TEST(Pseudo, UnboundedIsRejected) {
  const Poset p = build_poset({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}});
  EXPECT_EQ(pseudocomplement(p, p.at("a")), p.at("b"));
  try {
    pseudo_structure(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotBounded);
  }
}

TEST(Pseudo, SingletonIsItsOwnSkeleton) {
  const auto ps = pseudo_structure(fx("B(0)"));
  ASSERT_TRUE(ps);
  EXPECT_EQ(ps->star(0), 0u);
  const auto g = glivenko(*ps);
  ASSERT_TRUE(g);
  EXPECT_EQ(g->size(), 1u);
  EXPECT_TRUE(g->boolean_verified());
}

TEST(Pseudo, StarLawsOnCorpus) {
  for (const Poset& p : oracle::random_bounded(300, 21, 9)) {
    const auto ps = pseudo_structure(p);
    if (!ps) {
      EXPECT_TRUE(first_without_pseudocomplement(p).has_value());
      continue;
    }
    for (Element x = 0; x < p.size(); ++x) {
      const Element xs = ps->star(x);
      // x* is the greatest element orthogonal to x.
      for (Element y = 0; y < p.size(); ++y) EXPECT_EQ(oracle::orthogonal(p, x, y), p.leq(y, xs));
      EXPECT_TRUE(p.leq(x, ps->star(xs)));
      EXPECT_EQ(ps->star(ps->star(xs)), xs);
    }
  }
}

TEST(Pseudo, GlivenkoOfL2) {
  const auto ps = pseudo_structure(fx("L2"));
  const auto g = glivenko(*ps);
  ASSERT_TRUE(g);
  std::vector<std::string> carrier;
  for (std::size_t i = 0; i < g->size(); ++i) carrier.push_back(g->label(i));
  EXPECT_EQ(carrier, (std::vector<std::string>{"0", "b", "c", "1"}));
  const Poset& p = ps->base();
  const std::size_t b = *g->local_index(p.at("b")), c = *g->local_index(p.at("c"));
  EXPECT_EQ(g->element(g->sqcup(b, c)), p.at("1"));
  EXPECT_EQ(g->element(g->meet(b, c)), p.at("0"));
  EXPECT_EQ(g->element(g->complement(b)), p.at("c"));
  EXPECT_FALSE(g->local_index(p.at("a")).has_value());
  EXPECT_TRUE(g->boolean_verified());
  // In L2 itself b v c = 1 too, but a v b = 1 while a** = c.
  EXPECT_EQ(ps->star(ps->star(p.at("a"))), p.at("c"));
}

TEST(Pseudo, GlivenkoOnPseudocomplementedFixtures) {
  for (const auto& n : pseudocomplemented_fixtures()) {
    const auto ps = pseudo_structure(fx(n));
    if (!is_meet_semilattice(skeleton_poset(*ps))) continue;
    const auto g = glivenko(*ps);
    ASSERT_TRUE(g) << n;
    EXPECT_TRUE(g->boolean_verified()) << n;
    EXPECT_TRUE(is_boolean(*g)) << n;
  }
}

TEST(Pseudo, P8Compatibility) {
  const auto ps = pseudo_structure(fx("P8"));
  const auto r = check_compatibility(*ps);
  EXPECT_TRUE(r.compatible);
  EXPECT_EQ(r.subsets_checked, 16u);
}

TEST(Pseudo, P10IsIncompatible) {
  const auto ps = pseudo_structure(fx("P10"));
  const auto r = check_compatibility(*ps);
  EXPECT_FALSE(r.compatible);
  ASSERT_TRUE(r.subset);
  EXPECT_FALSE(r.base_infimum.has_value());
  EXPECT_FALSE(infimum(ps->base(), *r.subset).has_value());
}

TEST(Pseudo, CompatibilityCap) {
  const auto ps = pseudo_structure(fx("B(3)"));
  try {
    check_compatibility(*ps, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSkeletonTooLarge);
  }
}

TEST(Pseudo, InfStarLawExamples) {
  {
    const auto ps = pseudo_structure(fx("L3"));
    const Poset& p = ps->base();
    const ElementSet a = p.set_of({"a", "b"});
    EXPECT_EQ(supremum(p, a), p.at("d"));
    EXPECT_EQ(star_of_set(*ps, a), p.set_of({"e", "f"}));
    EXPECT_EQ(infimum(p, star_of_set(*ps, a)), p.at("c"));
    EXPECT_EQ(ps->star(p.at("d")), p.at("c"));
    EXPECT_TRUE(inf_star_law(*ps, a).passed);
  }
  {
    const auto ps = pseudo_structure(fx("L2"));
    const Poset& p = ps->base();
    const ElementSet a = p.set_of({"a", "c"});
    EXPECT_EQ(supremum(p, a), p.at("c"));
    EXPECT_EQ(infimum(p, star_of_set(*ps, a)), p.at("b"));
    EXPECT_TRUE(inf_star_law(*ps, a).passed);
  }
}

TEST(Pseudo, InfStarLawEverySubset) {
  for (const auto& n : pseudocomplemented_fixtures()) {
    const auto ps = pseudo_structure(fx(n));
    const Poset& p = ps->base();
    const OrthoSpace s{p};
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p.size()); ++mask) {
      const ElementSet a = ElementSet::from_mask(p.size(), mask);
      const CheckResult r = inf_star_law(*ps, a);
      EXPECT_TRUE(r.passed) << n << ": " << r.counterexample;
      if (const auto sup = supremum(p, a)) {
        EXPECT_EQ(perp(s, a), s.perp_of(*sup)) << n;
      }
    }
  }
}

TEST(Pseudo, PerpOfJoinFailsOnM3) {
  const Poset p = fx("M(3)");
  const OrthoSpace s{p};
  const ElementSet a = p.set_of({"a1", "a2"});
  EXPECT_EQ(perp(s, a), p.set_of({"0", "a3"}));
  EXPECT_EQ(s.perp_of(*supremum(p, a)), p.set_of({"0"}));
}

TEST(Pseudo, StarPerpIsDoublePerp) {
  for (const auto& n : pseudocomplemented_fixtures()) {
    const auto ps = pseudo_structure(fx(n));
    const OrthoSpace s{ps->base()};
    for (Element x = 0; x < s.size(); ++x) EXPECT_EQ(s.perp_of(ps->star(x)), perp(s, s.perp_of(x))) << n;
  }
}
