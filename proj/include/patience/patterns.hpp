#pragma once

// Generalized (vincular) permutation patterns with at most one barred letter,
// plus the interchange moves that generate patience-sorting equivalence.
//
// Text syntax: letters are digits 1..9, '-' marks a gap that may be filled by
// any number of entries, and '~' before a letter bars it. Adjacent letters
// without a dash must match adjacent entries: "2-31", "23-1", "3-~1-42",
// "3-1-2" (classical), "312" (consecutive).

#include <cstddef>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "patience/core.hpp"
#include "patience/sorting.hpp"

namespace patience {

class GeneralizedPattern {
 public:
  /// `contiguous[k]` says whether letters k and k+1 must occupy adjacent
  /// positions; it has one entry fewer than `letters`.
  GeneralizedPattern(std::vector<int> letters, std::vector<bool> contiguous,
                     std::optional<std::size_t> barred = std::nullopt)
      : letters_(std::move(letters)), contiguous_(std::move(contiguous)), barred_(barred) {
    const auto m = letters_.size();
    if (m == 0) throw DomainError("empty pattern");
    if (contiguous_.size() != m - 1) throw DomainError("adjacency list has wrong length");
    std::vector<bool> seen(m + 1, false);
    for (int l : letters_) {
      if (l < 1 || static_cast<std::size_t>(l) > m || seen[l]) {
        throw DomainError("pattern letters must be a permutation of 1.." + std::to_string(m));
      }
      seen[l] = true;
    }
    if (barred_ && (*barred_ >= m || m < 2)) throw DomainError("invalid barred letter");
  }

  std::size_t size() const noexcept { return letters_.size(); }
  std::span<const int> letters() const noexcept { return letters_; }
  int letter(std::size_t k) const { return letters_[k]; }
  bool contiguous_after(std::size_t k) const { return contiguous_[k]; }
  std::optional<std::size_t> barred() const noexcept { return barred_; }

  /// The pattern with its barred letter deleted and the rest renormalized.
  /// Neighbours of the deleted letter become separated by a dash.
  GeneralizedPattern reduced() const {
    if (!barred_) return *this;
    const auto b = *barred_;
    const int removed = letters_[b];
    std::vector<int> letters;
    std::vector<bool> contiguous;
    for (std::size_t k = 0; k < letters_.size(); ++k) {
      if (k == b) continue;
      if (!letters.empty()) contiguous.push_back(k == b + 1 ? false : contiguous_[k - 1]);
      letters.push_back(letters_[k] > removed ? letters_[k] - 1 : letters_[k]);
    }
    return GeneralizedPattern(std::move(letters), std::move(contiguous));
  }

  bool operator==(const GeneralizedPattern&) const = default;

 private:
  std::vector<int> letters_;
  std::vector<bool> contiguous_;
  std::optional<std::size_t> barred_;
};

inline GeneralizedPattern parse_pattern(std::string_view text) {
  std::vector<int> letters;
  std::vector<bool> contiguous;
  std::optional<std::size_t> barred;
  bool dash_pending = false;
  bool bar_pending = false;
  const std::string original(text);
  for (char c : text) {
    if (c == '-') {
      if (letters.empty() || dash_pending || bar_pending) {
        throw ParseError("misplaced '-' in pattern '" + original + "'");
      }
      dash_pending = true;
    } else if (c == '~') {
      if (bar_pending || barred) throw ParseError("more than one bar in pattern '" + original + "'");
      bar_pending = true;
    } else if (c >= '1' && c <= '9') {
      if (!letters.empty()) contiguous.push_back(!dash_pending);
      if (bar_pending) barred = letters.size();
      letters.push_back(c - '0');
      dash_pending = bar_pending = false;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in pattern '" + original + "'");
    }
  }
  if (letters.empty()) throw ParseError("empty pattern");
  if (dash_pending || bar_pending) throw ParseError("pattern '" + original + "' ends with a modifier");
  try {
    return GeneralizedPattern(std::move(letters), std::move(contiguous), barred);
  } catch (const DomainError& e) {
    throw ParseError("pattern '" + original + "': " + e.what());
  }
}

inline std::string to_string(const GeneralizedPattern& p) {
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k > 0 && !p.contiguous_after(k - 1)) out += '-';
    if (p.barred() == k) out += '~';
    out += static_cast<char>('0' + p.letter(k));
  }
  return out;
}

/// 1-based positions of sigma matched by consecutive pattern letters.
struct Occurrence {
  std::vector<std::size_t> positions;

  bool operator==(const Occurrence&) const = default;
};

/// Checks that `positions` (1-based, one per letter) form an occurrence of p,
/// ignoring any bar.
inline bool is_occurrence(const Permutation& sigma, const GeneralizedPattern& p,
                          std::span<const std::size_t> positions) {
  if (positions.size() != p.size()) return false;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if (positions[k] < 1 || positions[k] > sigma.size()) return false;
    if (k > 0) {
      if (positions[k] <= positions[k - 1]) return false;
      if (p.contiguous_after(k - 1) && positions[k] != positions[k - 1] + 1) return false;
    }
    for (std::size_t l = 0; l < k; ++l) {
      const bool letter_less = p.letter(l) < p.letter(k);
      const bool value_less = sigma.at(positions[l]) < sigma.at(positions[k]);
      if (letter_less != value_less) return false;
    }
  }
  return true;
}

namespace detail {

// Backtracking over positions; `visit` returns false to stop the search.
// Returns false iff the search was stopped.
inline bool search_occurrences(const Permutation& sigma, const GeneralizedPattern& p,
                               std::vector<std::size_t>& chosen,
                               const std::function<bool(std::span<const std::size_t>)>& visit) {
  const auto k = chosen.size();
  if (k == p.size()) return visit(chosen);
  const auto n = sigma.size();
  std::size_t first = k == 0 ? 1 : chosen.back() + 1;
  std::size_t last = n - (p.size() - k - 1);
  if (k > 0 && p.contiguous_after(k - 1)) last = std::min(last, first);
  for (std::size_t pos = first; pos <= last && pos <= n; ++pos) {
    const Card v = sigma.at(pos);
    bool consistent = true;
    for (std::size_t l = 0; l < k && consistent; ++l) {
      consistent = (p.letter(l) < p.letter(k)) == (sigma.at(chosen[l]) < v);
    }
    if (!consistent) continue;
    chosen.push_back(pos);
    const bool keep_going = search_occurrences(sigma, p, chosen, visit);
    chosen.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace detail

/// Visits every occurrence of p (bar ignored) in lexicographic position
/// order until `visit` returns false.
inline void for_each_occurrence(const Permutation& sigma, const GeneralizedPattern& p,
                                const std::function<bool(std::span<const std::size_t>)>& visit) {
  if (p.size() > sigma.size()) return;
  std::vector<std::size_t> chosen;
  chosen.reserve(p.size());
  detail::search_occurrences(sigma, p, chosen, visit);
}

inline std::vector<Occurrence> occurrences(const Permutation& sigma, const GeneralizedPattern& p) {
  if (p.barred()) throw DomainError("occurrences of a barred pattern are undefined; use avoids");
  std::vector<Occurrence> out;
  for_each_occurrence(sigma, p, [&](std::span<const std::size_t> pos) {
    out.push_back({{pos.begin(), pos.end()}});
    return true;
  });
  return out;
}

inline bool contains(const Permutation& sigma, const GeneralizedPattern& p) {
  bool found = false;
  for_each_occurrence(sigma, p, [&](std::span<const std::size_t>) {
    found = true;
    return false;
  });
  return found;
}

/// Whether an occurrence of p.reduced() can be completed to an occurrence of
/// p by filling the barred slot with one more entry of sigma.
inline bool extends_to_full(const Permutation& sigma, const GeneralizedPattern& p,
                            std::span<const std::size_t> reduced_positions) {
  const auto b = *p.barred();
  const std::size_t lo = b == 0 ? 0 : reduced_positions[b - 1];
  const std::size_t hi = b == reduced_positions.size() ? sigma.size() + 1 : reduced_positions[b];
  std::vector<std::size_t> full(reduced_positions.begin(), reduced_positions.end());
  full.insert(full.begin() + static_cast<std::ptrdiff_t>(b), 0);
  for (std::size_t x = lo + 1; x < hi; ++x) {
    full[b] = x;
    if (is_occurrence(sigma, p, full)) return true;
  }
  return false;
}

/// Unbarred: no occurrence. Barred: every occurrence of the reduced pattern
/// extends to an occurrence of the full pattern.
inline bool avoids(const Permutation& sigma, const GeneralizedPattern& p) {
  if (!p.barred()) return !contains(sigma, p);
  bool ok = true;
  for_each_occurrence(sigma, p.reduced(), [&](std::span<const std::size_t> pos) {
    ok = extends_to_full(sigma, p, pos);
    return ok;
  });
  return ok;
}

inline bool avoids_all(const Permutation& sigma, std::span<const GeneralizedPattern> patterns) {
  for (const auto& p : patterns) {
    if (!avoids(sigma, p)) return false;
  }
  return true;
}

namespace detail {

// For the adjacent pair at 0-based indices (j, j+1) holding `high` > `low`:
// is there an earlier entry a with low < a < high and no entry below `low`
// strictly between a and index j?
inline bool has_interchange_witness(const Permutation& sigma, std::size_t j, Card high, Card low) {
  for (std::size_t i = j; i-- > 0;) {
    const Card a = sigma[i];
    if (a < low) return false;
    if (a < high) return true;
  }
  return false;
}

inline Permutation swap_adjacent(const Permutation& sigma, std::size_t j) {
  std::vector<Card> v(sigma.begin(), sigma.end());
  std::swap(v[j], v[j + 1]);
  return Permutation(std::move(v));
}

}  // namespace detail

/// 2-31 -> 2-13 interchanges: adjacent descents (b, c) with a witness a,
/// c < a < b, to the left and no entry below c between a and b.
inline std::vector<Permutation> ps_forward_moves(const Permutation& sigma) {
  std::vector<Permutation> out;
  for (std::size_t j = 0; j + 1 < sigma.size(); ++j) {
    if (sigma[j] > sigma[j + 1] && detail::has_interchange_witness(sigma, j, sigma[j], sigma[j + 1])) {
      out.push_back(detail::swap_adjacent(sigma, j));
    }
  }
  return out;
}

/// Forward interchanges together with their reversals (2-13 -> 2-31 under the
/// same witness condition), in order of the swapped index.
inline std::vector<Permutation> ps_interchange_neighbors(const Permutation& sigma) {
  std::vector<Permutation> out;
  for (std::size_t j = 0; j + 1 < sigma.size(); ++j) {
    const Card high = std::max(sigma[j], sigma[j + 1]);
    const Card low = std::min(sigma[j], sigma[j + 1]);
    // Only entries left of j matter, so the condition reads the same on
    // sigma and on the swapped result.
    if (detail::has_interchange_witness(sigma, j, high, low)) {
      out.push_back(detail::swap_adjacent(sigma, j));
    }
  }
  return out;
}

/// Closure of sigma under interchanges, sorted lexicographically.
inline std::set<Permutation> ps_class(const Permutation& sigma) {
  std::set<Permutation> seen{sigma};
  std::deque<Permutation> frontier{sigma};
  while (!frontier.empty()) {
    auto current = std::move(frontier.front());
    frontier.pop_front();
    for (auto& next : ps_interchange_neighbors(current)) {
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return seen;
}

/// Canonical representative of the class: the reverse patience word.
inline Permutation normal_form(const Permutation& sigma) {
  return reverse_patience_word(patience_sort(sigma));
}

}  // namespace patience
