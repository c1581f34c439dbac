#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "error.hpp"
#include "poset.hpp"
#include "structure.hpp"

namespace orthoclose {

inline constexpr std::size_t kMaxExhaustiveSize = 7;

struct Exhaustive {};

/// Random strict upper-triangular relation (edge probability 2/n),
/// transitively closed. Not uniform over posets. With `bounded`, a fresh
/// bottom "0" and top "1" are adjoined around n-2 random elements.
struct RandomMode {
  std::uint64_t seed = 0;
  std::size_t count = 1;
  bool bounded = false;
};

using GenerateMode = std::variant<Exhaustive, RandomMode>;

/// All posets of size 1..n up to isomorphism; result[k-1] holds size k.
/// Every poset of size k+1 arises from one of size k by adding a maximal
/// element above a down-set; duplicates are removed by invariant bucket
/// plus exact isomorphism test.
inline std::vector<std::vector<Poset>> exhaustive_levels(std::size_t n) {
  if (n > kMaxExhaustiveSize)
    throw Error(ErrorCode::kSizeLimit, "exhaustive generation is limited to 7 elements");
  std::vector<std::vector<Poset>> levels;
  if (n == 0) return levels;
  levels.push_back({Poset::from_index_pairs({"e0"}, {})});
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<Poset> next;
    std::map<std::vector<ElementInvariant>, std::vector<std::size_t>> buckets;
    std::vector<std::string> names;
    for (std::size_t i = 0; i <= k; ++i) names.push_back("e" + std::to_string(i));
    for (const Poset& p : levels.back()) {
      const auto covers = transitive_reduction(p);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        const ElementSet below = ElementSet::from_mask(k, mask);
        bool is_down_set = true;
        below.for_each([&](Element x) { is_down_set = is_down_set && p.down_set(x).is_subset_of(below); });
        if (!is_down_set) continue;
        std::vector<IndexPair> pairs = covers;
        below.for_each([&](Element x) { pairs.emplace_back(x, k); });
        Poset candidate = Poset::from_index_pairs(names, pairs);
        auto& bucket = buckets[invariant_signature(candidate)];
        bool seen = false;
        for (std::size_t idx : bucket)
          if (poset_isomorphic(next[idx], candidate)) {
            seen = true;
            break;
          }
        if (seen) continue;
        bucket.push_back(next.size());
        next.push_back(std::move(candidate));
      }
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

inline std::vector<Poset> random_posets(std::size_t n, const RandomMode& mode) {
  if (n == 0 || (mode.bounded && n < 2))
    throw Error(ErrorCode::kSizeLimit, "random posets need at least " + std::string(mode.bounded ? "2" : "1") +
                                           " elements");
  if (n > default_carrier_cap()) throw Error(ErrorCode::kSizeLimit, "random poset exceeds the carrier cap");
  std::mt19937_64 rng(mode.seed);
  const double p = std::min(1.0, 2.0 / static_cast<double>(n));
  auto coin = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; };

  const std::size_t interior = mode.bounded ? n - 2 : n;
  const std::size_t offset = mode.bounded ? 1 : 0;
  std::vector<std::string> names;
  if (mode.bounded) names.push_back("0");
  for (std::size_t i = 0; i < interior; ++i) names.push_back("x" + std::to_string(i + offset));
  if (mode.bounded) names.push_back("1");

  std::vector<Poset> out;
  out.reserve(mode.count);
  for (std::size_t c = 0; c < mode.count; ++c) {
    std::vector<IndexPair> pairs;
    for (std::size_t i = 0; i < interior; ++i)
      for (std::size_t j = i + 1; j < interior; ++j)
        if (coin()) pairs.emplace_back(i + offset, j + offset);
    if (mode.bounded)
      for (std::size_t i = 1; i + 1 < n; ++i) {
        pairs.emplace_back(0, i);
        pairs.emplace_back(i, n - 1);
      }
    if (mode.bounded && n == 2) pairs.emplace_back(0, 1);
    out.push_back(Poset::from_index_pairs(names, pairs));
  }
  return out;
}

inline std::vector<Poset> generate_posets(std::size_t n, const GenerateMode& mode) {
  if (std::holds_alternative<Exhaustive>(mode)) {
    if (n == 0) throw Error(ErrorCode::kSizeLimit, "posets need at least one element");
    auto levels = exhaustive_levels(n);
    return std::move(levels.back());
  }
  return random_posets(n, std::get<RandomMode>(mode));
}

}  // namespace orthoclose
