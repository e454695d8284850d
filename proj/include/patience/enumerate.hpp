#pragma once

// Exhaustive generators and counting oracles over S_n and over pile
// configurations of [n]. Everything here is desk-scale: sizes are bounded by
// the guards in Limits.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "patience/core.hpp"
#include "patience/extended.hpp"
#include "patience/patterns.hpp"
#include "patience/sorting.hpp"

namespace patience {

/// Largest n accepted by each exhaustive operation.
struct Limits {
  std::size_t bell = 12;
  std::size_t avoiders = 8;
  std::size_t image_312 = 8;
  std::size_t floyd = 8;
  std::size_t stable_pairs = 5;
  std::size_t involution_configs = 7;

  /// Defaults, with every guard replaced by PATIENCE_MAX_N when it is set.
  static Limits from_environment() {
    Limits limits;
    if (const char* env = std::getenv("PATIENCE_MAX_N"); env != nullptr && *env != '\0') {
      char* end = nullptr;
      const auto value = std::strtoul(env, &end, 10);
      if (end == nullptr || *end != '\0') {
        throw ParseError(std::string("PATIENCE_MAX_N is not a number: ") + env);
      }
      limits.bell = limits.avoiders = limits.image_312 = limits.floyd =
          limits.stable_pairs = limits.involution_configs = value;
    }
    return limits;
  }
};

struct CountReport {
  std::size_t n;
  std::string label;
  std::uint64_t value;

  bool operator==(const CountReport&) const = default;
};

namespace detail {

inline void check_guard(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit) {
    throw DomainError(std::string(what) + ": n = " + std::to_string(n) + " exceeds guard " +
                      std::to_string(limit));
  }
}

}  // namespace detail

/// Visits S_n in lexicographic order.
inline void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& visit) {
  std::vector<Card> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Card>(i + 1);
  do {
    visit(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

inline std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

/// Set partitions of [n] as blocks, generated from restricted growth strings
/// in lexicographic order.
inline void for_each_set_partition(std::size_t n,
                                   const std::function<void(const std::vector<std::vector<Card>>&)>& visit) {
  if (n == 0) {
    visit({});
    return;
  }
  std::vector<std::size_t> rgs(n, 0);
  while (true) {
    std::size_t blocks_used = 0;
    for (auto b : rgs) blocks_used = std::max(blocks_used, b + 1);
    std::vector<std::vector<Card>> blocks(blocks_used);
    for (std::size_t i = 0; i < n; ++i) blocks[rgs[i]].push_back(static_cast<Card>(i + 1));
    visit(blocks);

    // Advance to the next restricted growth string: rgs[0] = 0 and
    // rgs[i] <= 1 + max(rgs[0..i-1]).
    std::size_t i = n - 1;
    while (i > 0) {
      std::size_t bound = 0;
      for (std::size_t k = 0; k < i; ++k) bound = std::max(bound, rgs[k] + 1);
      if (rgs[i] < bound) break;
      --i;
    }
    if (i == 0) return;
    ++rgs[i];
    std::fill(rgs.begin() + static_cast<std::ptrdiff_t>(i) + 1, rgs.end(), 0);
  }
}

/// Every pile configuration of [n]: one per set partition, blocks ordered by
/// minimum and stacked decreasingly.
inline std::vector<PileConfig> all_pile_configs(std::size_t n) {
  std::vector<PileConfig> out;
  for_each_set_partition(n, [&](const auto& blocks) { out.push_back(piles_from_set_partition(blocks)); });
  return out;
}

/// Bell numbers via the Bell triangle.
inline std::uint64_t bell(std::size_t n, const Limits& limits = {}) {
  detail::check_guard(n, limits.bell, "bell");
  detail::check_guard(n, 25, "bell (64-bit range)");
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

inline std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Number of permutations with sigma = sigma^-1, by direct scan.
inline std::uint64_t count_involutions(std::size_t n) {
  std::uint64_t count = 0;
  for_each_permutation(n, [&](const Permutation& p) { count += p == inverse(p); });
  return count;
}

/// Joint avoidance: sigma avoids every pattern in `patterns`.
inline CountReport count_avoiders(std::size_t n, std::span<const GeneralizedPattern> patterns,
                                  const Limits& limits = {}) {
  detail::check_guard(n, limits.avoiders, "count_avoiders");
  std::string label = "avoiders";
  for (std::size_t i = 0; i < patterns.size(); ++i) label += (i == 0 ? " " : ",") + to_string(patterns[i]);
  std::uint64_t count = 0;
  for_each_permutation(n, [&](const Permutation& p) { count += avoids_all(p, patterns); });
  return {n, label, count};
}

inline CountReport count_avoiders(std::size_t n, const GeneralizedPattern& pattern, const Limits& limits = {}) {
  return count_avoiders(n, std::span<const GeneralizedPattern>(&pattern, 1), limits);
}

/// Equal-shape ordered pairs of pile configurations, grouped by shape.
inline void for_each_equal_shape_pair(std::size_t n,
                                      const std::function<void(const PileConfig&, const PileConfig&)>& visit) {
  std::map<Shape, std::vector<PileConfig>> by_shape;
  for (auto& config : all_pile_configs(n)) by_shape[shape_of(config)].push_back(std::move(config));
  for (const auto& [shape, configs] : by_shape) {
    for (const auto& r : configs) {
      for (const auto& s : configs) visit(r, s);
    }
  }
}

inline std::vector<StablePair> all_stable_pairs(std::size_t n, const Limits& limits = {}) {
  detail::check_guard(n, limits.stable_pairs, "stable pairs");
  std::vector<StablePair> out;
  for_each_equal_shape_pair(n, [&](const PileConfig& r, const PileConfig& s) {
    if (is_stable_pair(r, s)) out.push_back({r, s});
  });
  return out;
}

inline CountReport count_stable_pairs(std::size_t n, const Limits& limits = {}) {
  return {n, "stable pairs", all_stable_pairs(n, limits).size()};
}

/// One configuration per composition of n: consecutive decreasing intervals.
/// n = 0 yields the single empty configuration.
inline std::vector<PileConfig> non_crossing_configs(std::size_t n) {
  if (n == 0) return {PileConfig{}};
  std::vector<PileConfig> out;
  const std::uint64_t compositions = std::uint64_t{1} << (n - 1);
  for (std::uint64_t cuts = 0; cuts < compositions; ++cuts) {
    RawPiles piles;
    std::vector<Card> current;
    for (std::size_t v = 1; v <= n; ++v) {
      current.insert(current.begin(), static_cast<Card>(v));
      const bool cut_after = v == n || ((cuts >> (v - 1)) & 1U) != 0;
      if (cut_after) piles.push_back(std::exchange(current, {}));
    }
    out.push_back(validate_pile_config(piles));
  }
  return out;
}

/// Pile configurations of the permutations avoiding the classical 3-1-2.
inline std::set<PileConfig> image_of_avoiders_312(std::size_t n, const Limits& limits = {}) {
  detail::check_guard(n, limits.image_312, "image_of_avoiders_312");
  const auto classical_312 = parse_pattern("3-1-2");
  std::set<PileConfig> out;
  for_each_permutation(n, [&](const Permutation& p) {
    if (avoids(p, classical_312)) out.insert(patience_sort(p));
  });
  return out;
}

/// Fewest piles reachable in Floyd's game: every card may start a new pile or
/// go on any pile whose top is larger. Exhaustive with memoization on
/// (cards dealt, sorted top cards).
inline std::size_t min_piles_bruteforce(const Permutation& sigma, const Limits& limits = {}) {
  detail::check_guard(sigma.size(), limits.floyd, "min_piles_bruteforce");
  std::map<std::pair<std::size_t, std::vector<Card>>, std::size_t> memo;
  std::function<std::size_t(std::size_t, const std::vector<Card>&)> solve =
      [&](std::size_t dealt, const std::vector<Card>& tops) -> std::size_t {
    if (dealt == sigma.size()) return tops.size();
    auto key = std::make_pair(dealt, tops);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const Card c = sigma[dealt];
    auto with_new = tops;
    with_new.insert(std::upper_bound(with_new.begin(), with_new.end(), c), c);
    std::size_t best = solve(dealt + 1, with_new);
    for (std::size_t j = 0; j < tops.size(); ++j) {
      if (tops[j] <= c) continue;
      auto played = tops;
      played.erase(played.begin() + static_cast<std::ptrdiff_t>(j));
      played.insert(std::upper_bound(played.begin(), played.end(), c), c);
      best = std::min(best, solve(dealt + 1, played));
    }
    memo.emplace(std::move(key), best);
    return best;
  };
  return solve(0, {});
}

/// Pile configurations R with (R, R) stable.
inline CountReport count_involution_configs(std::size_t n, const Limits& limits = {}) {
  detail::check_guard(n, limits.involution_configs, "count_involution_configs");
  std::uint64_t count = 0;
  for (const auto& r : all_pile_configs(n)) count += is_stable_pair(r, r);
  return {n, "involution configs", count};
}

}  // namespace patience
