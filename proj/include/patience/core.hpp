#pragma once

// Value types shared by every part of the library: permutations in one-line
// notation, piles, pile configurations and their shapes.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace patience {

using Card = int;

/// Malformed textual input (permutations, patterns, JSON documents).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed input that violates a combinatorial invariant or a size guard.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A bijection on {1..n} in one-line notation: values()[i] = sigma(i + 1).
class Permutation {
 public:
  Permutation() = default;

  /// Throws DomainError unless `values` is a permutation of {1..n}.
  explicit Permutation(std::vector<Card> values) : values_(std::move(values)) {
    const auto n = values_.size();
    std::vector<bool> seen(n + 1, false);
    for (Card v : values_) {
      if (v < 1 || static_cast<std::size_t>(v) > n) {
        throw DomainError("value " + std::to_string(v) + " outside 1.." +
                          std::to_string(n));
      }
      if (seen[v]) throw DomainError("duplicate value " + std::to_string(v));
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<Card> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Card>(i + 1);
    return Permutation(std::move(v));
  }

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  /// 0-based access to sigma(i + 1).
  Card operator[](std::size_t i) const { return values_[i]; }
  /// 1-based evaluation sigma(position).
  Card at(std::size_t position) const { return values_.at(position - 1); }

  std::span<const Card> values() const noexcept { return values_; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Card> values_;
};

/// A nonempty pile stored bottom-to-top; cards strictly decrease upward.
class Pile {
 public:
  explicit Pile(std::vector<Card> cards) : cards_(std::move(cards)) {
    if (cards_.empty()) throw DomainError("empty pile");
    for (std::size_t i = 1; i < cards_.size(); ++i) {
      if (cards_[i] >= cards_[i - 1]) {
        throw DomainError("pile not strictly decreasing bottom-to-top at card " +
                          std::to_string(cards_[i]));
      }
    }
  }

  Card bottom() const noexcept { return cards_.front(); }
  Card top() const noexcept { return cards_.back(); }
  std::size_t size() const noexcept { return cards_.size(); }
  std::span<const Card> cards() const noexcept { return cards_; }
  auto begin() const noexcept { return cards_.begin(); }
  auto end() const noexcept { return cards_.end(); }

  bool operator==(const Pile&) const = default;
  auto operator<=>(const Pile&) const = default;

 private:
  std::vector<Card> cards_;
};

/// A composition of n: the pile sizes of a configuration, left to right.
struct Shape {
  std::vector<std::size_t> parts;

  std::size_t n() const noexcept {
    std::size_t total = 0;
    for (auto p : parts) total += p;
    return total;
  }

  bool operator==(const Shape&) const = default;
  auto operator<=>(const Shape&) const = default;
};

/// Reason a raw pile list was rejected by validate_pile_config.
enum class PileConfigFault {
  kEmptyPile,
  kNotDecreasing,
  kDuplicateCard,
  kMissingCard,
  kTopsNotIncreasing,
};

class PileConfigError : public DomainError {
 public:
  PileConfigError(PileConfigFault fault, const std::string& what)
      : DomainError(what), fault_(fault) {}
  PileConfigFault fault() const noexcept { return fault_; }

 private:
  PileConfigFault fault_;
};

using RawPiles = std::vector<std::vector<Card>>;

/// Ordered piles forming a set partition of {1..n} whose top cards strictly
/// increase from left to right. Only constructible through validation.
class PileConfig {
 public:
  PileConfig() = default;

  std::size_t n() const noexcept { return n_; }
  std::size_t pile_count() const noexcept { return piles_.size(); }
  bool empty() const noexcept { return piles_.empty(); }
  std::span<const Pile> piles() const noexcept { return piles_; }
  const Pile& operator[](std::size_t i) const { return piles_[i]; }
  auto begin() const noexcept { return piles_.begin(); }
  auto end() const noexcept { return piles_.end(); }

  RawPiles raw() const {
    RawPiles out;
    out.reserve(piles_.size());
    for (const auto& p : piles_) out.emplace_back(p.begin(), p.end());
    return out;
  }

  bool operator==(const PileConfig&) const = default;
  auto operator<=>(const PileConfig&) const = default;

  friend PileConfig validate_pile_config(const RawPiles& piles);

 private:
  std::size_t n_ = 0;
  std::vector<Pile> piles_;
};

/// Accepts iff each pile strictly decreases bottom-to-top, the piles
/// partition {1..n}, and top cards strictly increase left to right.
/// Throws PileConfigError naming the first violated condition.
inline PileConfig validate_pile_config(const RawPiles& piles) {
  PileConfig config;
  std::size_t n = 0;
  for (std::size_t j = 0; j < piles.size(); ++j) {
    const auto& cards = piles[j];
    if (cards.empty()) {
      throw PileConfigError(PileConfigFault::kEmptyPile,
                            "pile " + std::to_string(j + 1) + " is empty");
    }
    for (std::size_t k = 1; k < cards.size(); ++k) {
      if (cards[k] >= cards[k - 1]) {
        throw PileConfigError(
            PileConfigFault::kNotDecreasing,
            "pile " + std::to_string(j + 1) + " is not strictly decreasing (" +
                std::to_string(cards[k - 1]) + " then " +
                std::to_string(cards[k]) + ")");
      }
    }
    n += cards.size();
  }

  std::vector<bool> seen(n + 1, false);
  for (const auto& cards : piles) {
    for (Card c : cards) {
      if (c >= 1 && static_cast<std::size_t>(c) <= n) {
        if (seen[c]) {
          throw PileConfigError(PileConfigFault::kDuplicateCard,
                                "card " + std::to_string(c) + " appears twice");
        }
        seen[c] = true;
      }
    }
  }
  for (std::size_t v = 1; v <= n; ++v) {
    if (!seen[v]) {
      throw PileConfigError(PileConfigFault::kMissingCard,
                            "card " + std::to_string(v) + " is missing");
    }
  }

  for (std::size_t j = 1; j < piles.size(); ++j) {
    if (piles[j].back() <= piles[j - 1].back()) {
      throw PileConfigError(
          PileConfigFault::kTopsNotIncreasing,
          "top cards not increasing: pile " + std::to_string(j) + " has top " +
              std::to_string(piles[j - 1].back()) + ", pile " +
              std::to_string(j + 1) + " has top " +
              std::to_string(piles[j].back()));
    }
  }

  config.n_ = n;
  config.piles_.reserve(piles.size());
  for (const auto& cards : piles) config.piles_.emplace_back(cards);
  return config;
}

inline Shape shape_of(const PileConfig& config) {
  Shape shape;
  shape.parts.reserve(config.pile_count());
  for (const auto& pile : config) shape.parts.push_back(pile.size());
  return shape;
}

inline Permutation inverse(const Permutation& sigma) {
  std::vector<Card> tau(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    tau[sigma[i] - 1] = static_cast<Card>(i + 1);
  }
  return Permutation(std::move(tau));
}

/// Parses either a compact digit string ("64518723", every value <= 9) or a
/// list of integers separated by commas and/or whitespace.
inline Permutation parse_permutation(std::string_view text) {
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);

  std::vector<std::string_view> tokens;
  const bool separated =
      std::any_of(text.begin(), text.end(),
                  [&](char c) { return c == ',' || is_space(c); });
  if (!separated) {
    for (std::size_t i = 0; i < text.size(); ++i) tokens.push_back(text.substr(i, 1));
  } else {
    // Split on commas; each comma field holds one or more
    // whitespace-separated tokens and must not be blank.
    std::size_t start = 0;
    while (true) {
      const auto comma = text.find(',', start);
      auto field = text.substr(start, comma == std::string_view::npos
                                          ? std::string_view::npos
                                          : comma - start);
      const auto before = tokens.size();
      std::size_t i = 0;
      while (i < field.size()) {
        while (i < field.size() && is_space(field[i])) ++i;
        std::size_t j = i;
        while (j < field.size() && !is_space(field[j])) ++j;
        if (j > i) tokens.push_back(field.substr(i, j - i));
        i = j;
      }
      if (tokens.size() == before) tokens.emplace_back();
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }

  std::vector<Card> values;
  values.reserve(tokens.size());
  for (auto token : tokens) {
    if (token.empty()) throw ParseError("empty token in permutation '" + std::string(text) + "'");
    Card v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError("invalid token '" + std::string(token) + "'");
    }
    values.push_back(v);
  }

  const auto n = values.size();
  std::vector<bool> seen(n + 1, false);
  for (std::size_t i = 0; i < n; ++i) {
    const Card v = values[i];
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      throw ParseError("token '" + std::string(tokens[i]) + "' outside 1.." +
                       std::to_string(n));
    }
    if (seen[v]) throw ParseError("duplicate token '" + std::string(tokens[i]) + "'");
    seen[v] = true;
  }
  return Permutation(std::move(values));
}

/// Compact digits when n <= 9, comma-separated otherwise.
inline std::string format_permutation(const Permutation& sigma) {
  std::string out;
  const bool compact = sigma.size() <= 9;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(sigma[i]);
  }
  return out;
}

}  // namespace patience
