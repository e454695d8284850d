#pragma once

// Mallows' patience sorting procedure and its companions: reverse patience
// words, set-partition conversion, left-to-right minima decomposition and a
// longest-increasing-subsequence oracle.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "patience/core.hpp"

namespace patience {

/// Greedy patience sort. Each card lands on the left-most pile whose top is
/// larger, or starts a new right-most pile when it exceeds every top.
inline PileConfig patience_sort(const Permutation& sigma) {
  RawPiles piles;
  std::vector<Card> tops;  // strictly increasing, so binary search applies
  for (Card c : sigma) {
    auto it = std::upper_bound(tops.begin(), tops.end(), c);
    if (it == tops.end()) {
      piles.push_back({c});
      tops.push_back(c);
    } else {
      const auto j = static_cast<std::size_t>(it - tops.begin());
      piles[j].push_back(c);
      *it = c;
    }
  }
  return validate_pile_config(piles);
}

/// Piles concatenated left to right, each read bottom-to-top.
inline Permutation reverse_patience_word(const PileConfig& config) {
  std::vector<Card> word;
  word.reserve(config.n());
  for (const auto& pile : config) word.insert(word.end(), pile.begin(), pile.end());
  return Permutation(std::move(word));
}

/// Sorts each block decreasingly and orders blocks by their minimum.
/// Throws DomainError when the blocks are not a set partition of {1..n}.
inline PileConfig piles_from_set_partition(std::vector<std::vector<Card>> blocks) {
  for (auto& block : blocks) {
    if (block.empty()) throw DomainError("set partition has an empty block");
    std::sort(block.begin(), block.end(), std::greater<>());
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.back() < b.back(); });
  try {
    return validate_pile_config(blocks);
  } catch (const PileConfigError& e) {
    throw DomainError(std::string("not a set partition: ") + e.what());
  }
}

/// A card of sigma tagged with its 1-based position.
struct PositionedCard {
  std::size_t position;
  Card value;

  bool operator==(const PositionedCard&) const = default;
};

/// Subsequence j lists the left-to-right minima of sigma once subsequences
/// 1..j-1 have been removed.
struct LrMinimaDecomposition {
  std::vector<std::vector<PositionedCard>> subsequences;

  std::vector<std::vector<Card>> values() const {
    std::vector<std::vector<Card>> out;
    for (const auto& s : subsequences) {
      auto& row = out.emplace_back();
      for (const auto& pc : s) row.push_back(pc.value);
    }
    return out;
  }

  std::vector<std::vector<std::size_t>> positions() const {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& s : subsequences) {
      auto& row = out.emplace_back();
      for (const auto& pc : s) row.push_back(pc.position);
    }
    return out;
  }
};

inline LrMinimaDecomposition lr_minima_decomposition(const Permutation& sigma) {
  LrMinimaDecomposition result;
  std::vector<PositionedCard> rest;
  rest.reserve(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) rest.push_back({i + 1, sigma[i]});

  while (!rest.empty()) {
    auto& minima = result.subsequences.emplace_back();
    std::vector<PositionedCard> remaining;
    for (const auto& pc : rest) {
      if (minima.empty() || pc.value < minima.back().value) {
        minima.push_back(pc);
      } else {
        remaining.push_back(pc);
      }
    }
    rest = std::move(remaining);
  }
  return result;
}

/// Quadratic dynamic program, deliberately unrelated to patience_sort.
inline std::size_t lis_length(const Permutation& sigma) {
  const auto n = sigma.size();
  std::vector<std::size_t> ending_at(n, 1);
  std::size_t best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (sigma[j] < sigma[i]) ending_at[i] = std::max(ending_at[i], ending_at[j] + 1);
    }
    best = std::max(best, ending_at[i]);
  }
  return best;
}

}  // namespace patience
