#pragma once

// Exhaustive invariant checks over S_n and the pile configurations of [n].
// Each check reports pass/fail for one value of n.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "patience/core.hpp"
#include "patience/enumerate.hpp"
#include "patience/extended.hpp"
#include "patience/patterns.hpp"
#include "patience/shadow.hpp"
#include "patience/sorting.hpp"

namespace patience {

struct CheckResult {
  std::string label;
  std::size_t n;
  bool passed;
  std::string detail;
};

namespace verify_detail {

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(std::string why) {
    if (passed) detail = std::move(why);
    passed = false;
  }
};

// Fails on the first permutation for which `holds` is false.
inline Outcome over_permutations(std::size_t n, const std::function<bool(const Permutation&)>& holds) {
  Outcome out;
  std::size_t cases = 0;
  for_each_permutation(n, [&](const Permutation& sigma) {
    ++cases;
    if (out.passed && !holds(sigma)) out.fail("counterexample " + format_permutation(sigma));
  });
  if (out.passed) out.detail = std::to_string(cases) + " permutations";
  return out;
}

inline Outcome expect_count(std::uint64_t got, std::uint64_t want) {
  Outcome out;
  out.detail = "got " + std::to_string(got) + ", expected " + std::to_string(want);
  out.passed = got == want;
  return out;
}

inline std::set<Permutation> avoider_set(std::size_t n, const GeneralizedPattern& p) {
  std::set<Permutation> out;
  for_each_permutation(n, [&](const Permutation& s) {
    if (avoids(s, p)) out.insert(s);
  });
  return out;
}

// Later shadowlines lie strictly northeast of earlier ones: every corner of
// line i is dominated by some corner of each line j < i.
inline bool lines_nested(const ShadowDiagram& d) {
  for (std::size_t i = 0; i < d.lines.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      for (const auto& q : d.lines[i].corners) {
        const bool shaded = std::any_of(d.lines[j].corners.begin(), d.lines[j].corners.end(),
                                        [&](const LatticePoint& p) { return p.x < q.x && p.y < q.y; });
        if (!shaded) return false;
      }
    }
  }
  return true;
}

}  // namespace verify_detail

struct Check {
  std::string label;
  std::size_t min_n;
  std::size_t max_n;  // cap independent of the requested maximum
  std::function<verify_detail::Outcome(std::size_t)> run;
};

inline std::vector<Check> verification_checks(const Limits& limits = {}) {
  using namespace verify_detail;
  constexpr std::size_t kUncapped = static_cast<std::size_t>(-1);
  std::vector<Check> checks;

  checks.push_back({"piles satisfy the pile-configuration conditions", 0, kUncapped, [](std::size_t n) {
                      return over_permutations(n, [](const Permutation& s) {
                        const auto r = patience_sort(s);
                        return validate_pile_config(r.raw()) == r;
                      });
                    }});
  checks.push_back({"reverse patience word is a fixed point", 0, kUncapped, [](std::size_t n) {
                      return over_permutations(n, [](const Permutation& s) {
                        const auto r = patience_sort(s);
                        return patience_sort(reverse_patience_word(r)) == r;
                      });
                    }});
  checks.push_back({"every set partition is realized by its reverse patience word", 0, kUncapped,
                    [](std::size_t n) {
                      Outcome out;
                      std::size_t cases = 0;
                      for_each_set_partition(n, [&](const auto& blocks) {
                        ++cases;
                        const auto t = piles_from_set_partition(blocks);
                        if (out.passed && patience_sort(reverse_patience_word(t)) != t) {
                          out.fail("counterexample " + format_permutation(reverse_patience_word(t)));
                        }
                      });
                      if (out.passed) out.detail = std::to_string(cases) + " set partitions";
                      return out;
                    }});
  checks.push_back({"left-to-right minima subsequences equal piles", 0, kUncapped, [](std::size_t n) {
                      return over_permutations(n, [](const Permutation& s) {
                        return lr_minima_decomposition(s).values() == patience_sort(s).raw();
                      });
                    }});
  checks.push_back({"pile count equals longest increasing subsequence", 0, kUncapped, [](std::size_t n) {
                      return over_permutations(
                          n, [](const Permutation& s) { return patience_sort(s).pile_count() == lis_length(s); });
                    }});
  checks.push_back({"shadowline corners give piles and minima positions", 0, kUncapped, [](std::size_t n) {
                      return over_permutations(n, [](const Permutation& s) {
                        const auto d = shadow_diagram(s);
                        const auto m = lr_minima_decomposition(s);
                        return corner_ordinates(d) == patience_sort(s).raw() &&
                               corner_abscissae(d) == m.positions();
                      });
                    }});
  checks.push_back({"shadowline count equals longest increasing subsequence", 0, kUncapped,
                    [](std::size_t n) {
                      return over_permutations(
                          n, [](const Permutation& s) { return shadow_diagram(s).lines.size() == lis_length(s); });
                    }});
  checks.push_back({"shadowlines are non-crossing", 0, kUncapped, [](std::size_t n) {
                      return over_permutations(n, [](const Permutation& s) { return lines_nested(shadow_diagram(s)); });
                    }});
  checks.push_back({"interchange moves preserve piles", 0, kUncapped, [](std::size_t n) {
                      return over_permutations(n, [](const Permutation& s) {
                        const auto r = patience_sort(s);
                        for (const auto& t : ps_interchange_neighbors(s)) {
                          if (patience_sort(t) != r) return false;
                        }
                        return true;
                      });
                    }});
  checks.push_back({"interchange closure equals equal-piles partition", 0, kUncapped, [](std::size_t n) {
                      Outcome out;
                      std::map<PileConfig, std::set<Permutation>> by_piles;
                      for_each_permutation(n, [&](const Permutation& s) { by_piles[patience_sort(s)].insert(s); });
                      for (const auto& [r, members] : by_piles) {
                        const auto& representative = *members.begin();
                        if (ps_class(representative) != members) {
                          out.fail("class of " + format_permutation(representative) + " differs");
                          break;
                        }
                      }
                      if (out.passed) out.detail = std::to_string(by_piles.size()) + " classes";
                      return out;
                    }});
  checks.push_back({"normal form lies in the class and is idempotent", 0, kUncapped, [](std::size_t n) {
                      return over_permutations(n, [](const Permutation& s) {
                        const auto nf = normal_form(s);
                        return normal_form(nf) == nf && ps_class(s).contains(nf);
                      });
                    }});
  checks.push_back({"3-~1-42 avoiders are exactly the reverse patience words", 0, limits.avoiders,
                    [](std::size_t n) {
                      Outcome out;
                      const auto avoiders = avoider_set(n, parse_pattern("3-~1-42"));
                      std::set<Permutation> normal_forms, words;
                      for_each_permutation(n, [&](const Permutation& s) { normal_forms.insert(normal_form(s)); });
                      for (const auto& r : all_pile_configs(n)) words.insert(reverse_patience_word(r));
                      out.passed = avoiders == normal_forms && avoiders == words;
                      out.detail = std::to_string(avoiders.size()) + " avoiders, " +
                                   std::to_string(normal_forms.size()) + " normal forms, " +
                                   std::to_string(words.size()) + " words";
                      return out;
                    }});
  checks.push_back({"3-~1-42 and 23-1 have identical avoiders", 0, limits.avoiders, [](std::size_t n) {
                      Outcome out;
                      const auto a = avoider_set(n, parse_pattern("3-~1-42"));
                      const auto b = avoider_set(n, parse_pattern("23-1"));
                      out.passed = a == b;
                      out.detail = std::to_string(a.size()) + " vs " + std::to_string(b.size());
                      return out;
                    }});
  checks.push_back({"joint avoiders of 3-12 and 3-21 count involutions", 0, limits.avoiders,
                    [limits](std::size_t n) {
                      const std::vector<GeneralizedPattern> ps{parse_pattern("3-12"), parse_pattern("3-21")};
                      return expect_count(count_avoiders(n, ps, limits).value, count_involutions(n));
                    }});
  checks.push_back({"joint avoiders of 31-2 and 32-1 number 2^(n-1)", 1, limits.avoiders,
                    [limits](std::size_t n) {
                      const std::vector<GeneralizedPattern> ps{parse_pattern("31-2"), parse_pattern("32-1")};
                      return expect_count(count_avoiders(n, ps, limits).value, std::uint64_t{1} << (n - 1));
                    }});
  checks.push_back({"extended sort inverts through the two-line form", 0, kUncapped, [](std::size_t n) {
                      return over_permutations(n, [](const Permutation& s) {
                        return invert_extended(extended_patience_sort(s)) == s;
                      });
                    }});
  checks.push_back({"extended sort output is a stable pair", 0, kUncapped, [](std::size_t n) {
                      return over_permutations(n, [](const Permutation& s) {
                        const auto p = extended_patience_sort(s);
                        return is_stable_pair(p.insertion, p.recording) && p.insertion == patience_sort(s);
                      });
                    }});
  checks.push_back({"stable-pair surjectivity", 0, limits.stable_pairs, [limits](std::size_t n) {
                      const auto pairs = all_stable_pairs(n, limits);
                      std::set<Permutation> images;
                      for (const auto& p : pairs) images.insert(invert_extended(p));
                      auto out = expect_count(pairs.size(), factorial(n));
                      if (images.size() != pairs.size()) out.fail("inverse images not distinct");
                      return out;
                    }});
  checks.push_back({"inverse permutation swaps insertion and recording piles", 0, kUncapped,
                    [](std::size_t n) {
                      return over_permutations(n, [](const Permutation& s) {
                        const auto p = extended_patience_sort(s);
                        const auto q = extended_patience_sort(inverse(s));
                        return q.insertion == p.recording && q.recording == p.insertion;
                      });
                    }});
  checks.push_back({"involutions are exactly the permutations with R = S", 0, kUncapped, [](std::size_t n) {
                      return over_permutations(n, [](const Permutation& s) {
                        const auto p = extended_patience_sort(s);
                        return (s == inverse(s)) == (p.insertion == p.recording);
                      });
                    }});
  checks.push_back({"self-stable configurations count involutions", 0, limits.involution_configs,
                    [limits](std::size_t n) {
                      return expect_count(count_involution_configs(n, limits).value, count_involutions(n));
                    }});
  checks.push_back({"pile configurations number Bell(n)", 0, limits.bell, [limits](std::size_t n) {
                      return expect_count(all_pile_configs(n).size(), bell(n, limits));
                    }});
  checks.push_back({"3-~1-42 avoiders number Bell(n)", 0, std::min(limits.avoiders, limits.bell),
                    [limits](std::size_t n) {
                      return expect_count(count_avoiders(n, parse_pattern("3-~1-42"), limits).value,
                                          bell(n, limits));
                    }});
  checks.push_back({"3-1-2 avoiders map onto the non-crossing configurations", 1, limits.image_312,
                    [limits](std::size_t n) {
                      const auto image = image_of_avoiders_312(n, limits);
                      const auto nc = non_crossing_configs(n);
                      const std::set<PileConfig> nc_set(nc.begin(), nc.end());
                      auto out = expect_count(image.size(), std::uint64_t{1} << (n - 1));
                      if (nc.size() != nc_set.size() || nc_set.size() != image.size()) out.fail("size mismatch");
                      if (nc_set != image) out.fail("sets differ");
                      return out;
                    }});
  checks.push_back({"greedy play is optimal in Floyd's game", 0, limits.floyd, [limits](std::size_t n) {
                      return over_permutations(n, [&](const Permutation& s) {
                        return min_piles_bruteforce(s, limits) == patience_sort(s).pile_count();
                      });
                    }});
  return checks;
}

/// Runs every check for each n from its minimum up to min(max_n, its cap).
inline std::vector<CheckResult> run_verification(
    std::size_t max_n, const Limits& limits = {},
    const std::function<void(const CheckResult&)>& on_result = nullptr) {
  std::vector<CheckResult> results;
  for (const auto& check : verification_checks(limits)) {
    for (std::size_t n = check.min_n; n <= std::min(max_n, check.max_n); ++n) {
      auto outcome = check.run(n);
      results.push_back({check.label, n, outcome.passed, outcome.detail});
      if (on_result) on_result(results.back());
    }
  }
  return results;
}

}  // namespace patience
