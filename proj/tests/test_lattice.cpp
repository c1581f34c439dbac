#include <gtest/gtest.h>

#include "support.hpp"

using namespace orthoclose;
using oracle::fx;

namespace {

std::vector<Poset> small_lattices() {
  std::vector<Poset> out;
  for (const auto& level : exhaustive_levels(7))
    for (const Poset& p : level)
      if (is_lattice(p)) out.push_back(p);
  return out;
}

}  // namespace

TEST(Lattice, TablesRequireALattice) {
  try {
    FiniteLattice l{fx("P10")};
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotALattice);
  }
  const FiniteLattice l{fx("L3")};
  const Poset& p = l.poset();
  EXPECT_EQ(l.join(p.at("a"), p.at("b")), p.at("d"));
  EXPECT_EQ(l.meet(p.at("d"), p.at("e")), p.at("a"));
  EXPECT_EQ(l.bottom(), p.at("0"));
  EXPECT_EQ(l.top(), p.at("1"));
}

TEST(Lattice, M3CounterexampleTriple) {
  const Poset p = fx("M(3)");
  const auto r = is_distributive(p);
  EXPECT_FALSE(r.distributive);
  ASSERT_TRUE(r.counterexample);
  EXPECT_EQ(*r.counterexample, (std::array<std::size_t, 3>{p.at("a1"), p.at("a2"), p.at("a3")}));
}

TEST(Lattice, PentagonIsNotDistributive) {
  const Poset n5 = build_poset({"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
  EXPECT_FALSE(is_distributive(n5).distributive);
  EXPECT_FALSE(is_boolean(n5));
}

TEST(Lattice, DistributivityMatchesSublatticeOracle) {
  std::size_t checked = 0, distributive = 0;
  for (const Poset& p : small_lattices()) {
    const bool d = is_distributive(p).distributive;
    EXPECT_EQ(d, oracle::distributive_by_sublattices(p));
    ++checked;
    distributive += d;
  }
  // Lattices on 1..7 elements: 1+1+1+2+5+15+53.
  EXPECT_EQ(checked, 78u);
  EXPECT_GT(distributive, 0u);
}

TEST(Lattice, BooleanMatchesDistributiveAndComplemented) {
  auto corpus = small_lattices();
  for (std::size_t n = 0; n <= 4; ++n) corpus.push_back(fx("B(" + std::to_string(n) + ")"));
  for (std::size_t n = 2; n <= 5; ++n) corpus.push_back(fx("M(" + std::to_string(n) + ")"));
  std::size_t boolean = 0;
  for (const Poset& p : corpus) {
    const FiniteLattice l{p};
    const bool expected = is_distributive(l).distributive && !uncomplemented_element(l);
    EXPECT_EQ(is_boolean(l), expected);
    boolean += expected;
  }
  EXPECT_GE(boolean, 5u);
}

TEST(Lattice, KnownShapes) {
  EXPECT_TRUE(is_boolean(fx("B(3)")));
  EXPECT_TRUE(is_boolean(fx("B(0)")));
  EXPECT_TRUE(is_boolean(fx("M(2)")));
  EXPECT_FALSE(is_boolean(fx("M(3)")));
  EXPECT_TRUE(is_distributive(fx("C(3)")).distributive);
  EXPECT_EQ(uncomplemented_element(FiniteLattice{fx("C(3)")}), 1u);
  EXPECT_FALSE(is_boolean(fx("C(3)")));
}
