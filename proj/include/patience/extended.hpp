#pragma once

// Extended patience sorting: insertion piles R together with recording piles
// S of play times, the stable-pair filter, and the inverse map.

#include <algorithm>
#include <array>
#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "patience/core.hpp"
#include "patience/sorting.hpp"

namespace patience {

struct StablePair {
  PileConfig insertion;  // R
  PileConfig recording;  // S

  bool operator==(const StablePair&) const = default;
  auto operator<=>(const StablePair&) const = default;
};

/// Recording piles with each pile flipped vertically, so every pile reads
/// increasing from bottom to top. A view on S, never stored long-term.
struct RecordingPiles {
  RawPiles piles;

  bool operator==(const RecordingPiles&) const = default;
};

/// R(sigma) and S(sigma). Time i is slid under the bottom of the recording
/// pile that receives card i, so S is an ordinary pile configuration.
inline StablePair extended_patience_sort(const Permutation& sigma) {
  RawPiles insertion;
  RawPiles recording;  // built top-down, reversed at the end
  std::vector<Card> tops;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const Card c = sigma[i];
    const Card time = static_cast<Card>(i + 1);
    auto it = std::upper_bound(tops.begin(), tops.end(), c);
    if (it == tops.end()) {
      insertion.push_back({c});
      recording.push_back({time});
      tops.push_back(c);
    } else {
      const auto j = static_cast<std::size_t>(it - tops.begin());
      insertion[j].push_back(c);
      recording[j].push_back(time);
      *it = c;
    }
  }
  for (auto& pile : recording) std::reverse(pile.begin(), pile.end());
  return {validate_pile_config(insertion), validate_pile_config(recording)};
}

inline RecordingPiles reflect(const PileConfig& s) {
  RecordingPiles out;
  for (const auto& pile : s) out.piles.emplace_back(pile.cards().rbegin(), pile.cards().rend());
  return out;
}

inline PileConfig reflect(const RecordingPiles& s) {
  RawPiles raw;
  for (const auto& pile : s.piles) raw.emplace_back(pile.rbegin(), pile.rend());
  return validate_pile_config(raw);
}

/// RPW(S'): piles left to right, each read in increasing order.
inline Permutation rpw_of_reflected(const PileConfig& s) {
  std::vector<Card> word;
  word.reserve(s.n());
  for (const auto& pile : s) word.insert(word.end(), pile.cards().rbegin(), pile.cards().rend());
  return Permutation(std::move(word));
}

namespace detail {

// Relative order of three distinct values as a pattern code: "312" means the
// first is largest, the second smallest.
inline std::array<char, 3> triple_pattern(Card a, Card b, Card c) {
  auto rank = [&](Card v) { return static_cast<char>('1' + (v > a) + (v > b) + (v > c)); };
  return {rank(a), rank(b), rank(c)};
}

inline bool same(const std::array<char, 3>& t, std::string_view code) {
  return t[0] == code[0] && t[1] == code[1] && t[2] == code[2];
}

}  // namespace detail

/// The forbidden simultaneous occurrences, as (pattern in RPW(R), pattern in
/// RPW(S')). Each pattern has its first two letters adjacent.
inline constexpr std::array<std::pair<std::string_view, std::string_view>, 3>
    kForbiddenPatternPairs{{{"312", "132"}, {"312", "321"}, {"321", "132"}}};

/// Equal shapes, and no index triple (t, t+1, w) with w > t+1 carries the
/// first pattern of a forbidden pair in RPW(R) and the second in RPW(S').
inline bool is_stable_pair(const PileConfig& r, const PileConfig& s) {
  if (shape_of(r) != shape_of(s)) return false;
  const auto u = reverse_patience_word(r);
  const auto v = rpw_of_reflected(s);
  const auto n = u.size();
  for (std::size_t t = 0; t + 2 < n; ++t) {
    for (std::size_t w = t + 2; w < n; ++w) {
      const auto pu = detail::triple_pattern(u[t], u[t + 1], u[w]);
      const auto pv = detail::triple_pattern(v[t], v[t + 1], v[w]);
      for (const auto& [in_r, in_s] : kForbiddenPatternPairs) {
        if (detail::same(pu, in_r) && detail::same(pv, in_s)) return false;
      }
    }
  }
  return true;
}

/// Two-line assembly sigma(RPW(S')[i]) = RPW(R)[i] without the stability
/// check. Only round-trips through extended_patience_sort on stable pairs.
inline Permutation assemble_two_line(const PileConfig& r, const PileConfig& s) {
  if (shape_of(r) != shape_of(s)) throw DomainError("insertion and recording shapes differ");
  const auto top = rpw_of_reflected(s);
  const auto bottom = reverse_patience_word(r);
  std::vector<Card> sigma(top.size());
  for (std::size_t i = 0; i < top.size(); ++i) sigma[top[i] - 1] = bottom[i];
  return Permutation(std::move(sigma));
}

class UnstablePairError : public DomainError {
 public:
  UnstablePairError() : DomainError("(R, S) is not a stable pair") {}
};

inline Permutation invert_extended(const PileConfig& r, const PileConfig& s) {
  if (!is_stable_pair(r, s)) throw UnstablePairError();
  return assemble_two_line(r, s);
}

inline Permutation invert_extended(const StablePair& pair) {
  return invert_extended(pair.insertion, pair.recording);
}

}  // namespace patience
