#pragma once

// Independent brute-force oracles. They reuse only Poset::leq and labels,
// never the algorithms they are checking.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "orthoclose/orthoclose.hpp"

namespace oracle {

using namespace orthoclose;

inline Poset fx(const std::string& name) { return to_poset(fixture(name)); }

inline std::vector<std::string> lattice_fixture_names() {
  std::vector<std::string> out;
  for (const auto& n : standard_fixture_names())
    if (is_lattice(fx(n))) out.push_back(n);
  return out;
}

/// x ⊥ y straight from the definition: the common lower bounds are
/// exactly the bottom.
inline bool orthogonal(const Poset& p, Element x, Element y) {
  std::size_t common = 0;
  bool has_bottom_only = true;
  for (Element z = 0; z < p.size(); ++z) {
    if (!p.leq(z, x) || !p.leq(z, y)) continue;
    ++common;
    for (Element w = 0; w < p.size(); ++w)
      if (!p.leq(z, w)) has_bottom_only = false;
  }
  return common == 1 && has_bottom_only;
}

using Matrix = std::vector<std::vector<bool>>;

inline Matrix orthogonality(const Poset& p) {
  Matrix m(p.size(), std::vector<bool>(p.size()));
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y) m[x][y] = orthogonal(p, x, y);
  return m;
}

inline std::vector<bool> perp(const Matrix& orth, const std::vector<bool>& a) {
  std::vector<bool> out(a.size(), true);
  for (std::size_t y = 0; y < a.size(); ++y)
    for (std::size_t x = 0; x < a.size(); ++x)
      if (a[x] && !orth[x][y]) out[y] = false;
  return out;
}

/// Every subset A with A^⊥⊥ = A, as sorted label lists, in no particular order.
inline std::set<std::vector<std::string>> closed_sets(const Poset& p) {
  const std::size_t n = p.size();
  const Matrix orth = orthogonality(p);
  std::set<std::vector<std::string>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<bool> a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = (mask >> i) & 1;
    if (perp(orth, perp(orth, a)) != a) continue;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
      if (a[i]) labels.push_back(p.name(i));
    std::sort(labels.begin(), labels.end());
    out.insert(labels);
  }
  return out;
}

inline std::set<std::vector<std::string>> as_label_sets(const Poset& p, const std::vector<ElementSet>& sets) {
  std::set<std::vector<std::string>> out;
  for (const auto& s : sets) {
    std::vector<std::string> labels;
    for (auto x : s.members()) labels.push_back(p.name(x));
    std::sort(labels.begin(), labels.end());
    out.insert(labels);
  }
  return out;
}

inline bool preserves_order(const Poset& a, const Poset& b, const std::vector<std::size_t>& perm) {
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (a.leq(x, y) != b.leq(perm[x], perm[y])) return false;
  return true;
}

/// Tries every bijection.
inline bool isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (preserves_order(a, b, perm)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline std::size_t automorphisms(const Poset& p) {
  std::vector<std::size_t> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    if (preserves_order(p, p, perm)) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

/// Labeled posets on n points, by enumerating every strict relation on
/// the off-diagonal pairs and testing antisymmetry and transitivity.
inline std::size_t labeled_poset_count(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n));
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1) r[pairs[k].first][pairs[k].second] = true;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (r[i][j] && r[j][i]) ok = false;
        for (std::size_t k = 0; k < n && ok; ++k)
          if (r[i][j] && r[j][k] && !r[i][k]) ok = false;
      }
    count += ok;
  }
  return count;
}

inline std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

/// Distributivity by the M3/N5 criterion: search every 5-element subset
/// closed under the lattice operations for one of the two forbidden shapes.
inline bool distributive_by_sublattices(const Poset& p) {
  const std::size_t n = p.size();
  if (n < 5) return true;
  auto mt = [&](Element x, Element y) { return *meet(p, x, y); };
  auto jn = [&](Element x, Element y) { return *join(p, x, y); };
  const Poset m3 = build_poset({"0", "a", "b", "c", "1"},
                               {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
  const Poset n5 = build_poset({"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
  std::vector<bool> pick(n, false);
  std::fill(pick.end() - 5, pick.end(), true);
  do {
    std::vector<Element> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    bool closed = true;
    for (auto x : s)
      for (auto y : s)
        if (std::find(s.begin(), s.end(), mt(x, y)) == s.end() || std::find(s.begin(), s.end(), jn(x, y)) == s.end())
          closed = false;
    if (!closed) continue;
    ElementSet members(n);
    for (auto x : s) members.insert(x);
    const Poset sub = induced_subposet(p, members).first;
    if (isomorphic(sub, m3) || isomorphic(sub, n5)) return false;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return true;
}

/// Bounded random posets with 2..max_size elements.
inline std::vector<Poset> random_bounded(std::size_t count, std::uint64_t seed, std::size_t max_size) {
  std::vector<Poset> out;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 2 + rng() % (max_size - 1);
    auto batch = random_posets(n, RandomMode{rng(), 1, true});
    out.push_back(std::move(batch.front()));
  }
  return out;
}

}  // namespace oracle
