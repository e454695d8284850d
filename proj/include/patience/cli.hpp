#pragma once

// Command-line front end. `run` takes the full argument vector (program name
// first) and explicit streams so it can be driven in-process by tests.
//
// Exit status: 0 success, 1 usage or parse error, 2 domain error (invalid
// pile configuration, unstable pair, guard exceeded), 3 verification failure.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "patience/core.hpp"
#include "patience/enumerate.hpp"
#include "patience/extended.hpp"
#include "patience/io.hpp"
#include "patience/patterns.hpp"
#include "patience/shadow.hpp"
#include "patience/sorting.hpp"
#include "patience/verify.hpp"

namespace patience::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,
  kVerificationFailed = 3,
};

namespace detail {

inline std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::vector<GeneralizedPattern> parse_patterns(const std::vector<std::string>& texts) {
  std::vector<GeneralizedPattern> out;
  for (const auto& t : texts) out.push_back(parse_pattern(t));
  return out;
}

// Collects output lines so --sorted can reorder them before printing.
class LineSink {
 public:
  LineSink(std::ostream& out, bool sorted) : out_(out), sorted_(sorted) {}
  ~LineSink() { flush(); }

  void operator()(std::string line) {
    if (sorted_) {
      lines_.push_back(std::move(line));
    } else {
      out_ << line << '\n';
    }
  }

  void flush() {
    std::sort(lines_.begin(), lines_.end());
    for (const auto& l : lines_) out_ << l << '\n';
    lines_.clear();
  }

 private:
  std::ostream& out_;
  bool sorted_;
  std::vector<std::string> lines_;
};

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Patience sorting: pile configurations, shadow diagrams, stable pairs and patterns", "patience"};
  app.require_subcommand(1);

  std::string perm_text;
  std::string pair_source = "-";
  std::vector<std::string> pattern_texts;
  std::string what;
  std::size_t size = 0;
  std::size_t max_n = 5;
  bool sorted = false;
  bool count_only = false;
  bool list = false;

  auto add_perm = [&](CLI::App* sub) {
    sub->add_option("permutation", perm_text, "one-line notation: 64518723 or 10,2,3,...")->required();
  };

  auto* sort_cmd = app.add_subcommand("sort", "pile configuration R(sigma) as JSON");
  add_perm(sort_cmd);
  auto* rpw_cmd = app.add_subcommand("rpw", "reverse patience word of R(sigma)");
  add_perm(rpw_cmd);
  auto* shadow_cmd = app.add_subcommand("shadow", "shadow diagram as JSON");
  add_perm(shadow_cmd);
  auto* extended_cmd = app.add_subcommand("extended", "insertion and recording piles as JSON");
  add_perm(extended_cmd);
  auto* invert_cmd = app.add_subcommand("invert", "permutation of a stable pair");
  invert_cmd->add_option("--pair", pair_source, "stable pair JSON file, '-' for stdin")->capture_default_str();
  auto* class_cmd = app.add_subcommand("class", "all permutations with the same piles");
  add_perm(class_cmd);
  auto* normal_cmd = app.add_subcommand("normal", "reverse patience word representative");
  add_perm(normal_cmd);
  auto* avoid_cmd = app.add_subcommand("avoid", "whether sigma avoids every given pattern");
  avoid_cmd->add_option("--pattern", pattern_texts, "pattern, e.g. 3-~1-42 (repeatable)")->required();
  add_perm(avoid_cmd);
  auto* occ_cmd = app.add_subcommand("occurrences", "occurrences of an unbarred pattern");
  occ_cmd->add_option("--pattern", pattern_texts, "pattern, e.g. 2-31")->required()->expected(1);
  add_perm(occ_cmd);
  auto* enum_cmd = app.add_subcommand("enumerate", "exhaustive enumerations and counts");
  enum_cmd->add_option("--what", what, "what to enumerate")
      ->required()
      ->check(CLI::IsMember({"configs", "noncrossing", "stable-pairs", "avoiders"}));
  enum_cmd->add_option("--n", size, "size")->required();
  enum_cmd->add_option("--pattern", pattern_texts, "pattern for avoiders (repeatable: joint avoidance)");
  enum_cmd->add_flag("--count", count_only, "print a count report instead of the items");
  enum_cmd->add_flag("--list", list, "for avoiders: list the permutations instead of counting");
  enum_cmd->add_flag("--sorted", sorted, "sort output lines");
  auto* verify_cmd = app.add_subcommand("verify", "run the exhaustive invariant suite");
  verify_cmd->add_option("--max-n", max_n, "largest n to check")->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    const auto limits = Limits::from_environment();
    auto perm = [&] { return parse_permutation(perm_text); };

    if (sort_cmd->parsed()) {
      out << io::to_json(patience_sort(perm())).dump() << '\n';
    } else if (rpw_cmd->parsed()) {
      out << format_permutation(reverse_patience_word(patience_sort(perm()))) << '\n';
    } else if (shadow_cmd->parsed()) {
      out << io::to_json(shadow_diagram(perm())).dump() << '\n';
    } else if (extended_cmd->parsed()) {
      out << io::to_json(extended_patience_sort(perm())).dump() << '\n';
    } else if (invert_cmd->parsed()) {
      std::string text;
      if (pair_source == "-") {
        text = detail::read_all(in);
      } else {
        std::ifstream file(pair_source);
        if (!file) throw ParseError("cannot open " + pair_source);
        text = detail::read_all(file);
      }
      const auto pair = io::stable_pair_from_json(io::parse_json(text));
      out << format_permutation(invert_extended(pair)) << '\n';
    } else if (class_cmd->parsed()) {
      for (const auto& t : ps_class(perm())) out << format_permutation(t) << '\n';
    } else if (normal_cmd->parsed()) {
      out << format_permutation(normal_form(perm())) << '\n';
    } else if (avoid_cmd->parsed()) {
      const auto patterns = detail::parse_patterns(pattern_texts);
      out << (avoids_all(perm(), patterns) ? "true" : "false") << '\n';
    } else if (occ_cmd->parsed()) {
      const auto pattern = parse_pattern(pattern_texts.front());
      for (const auto& o : occurrences(perm(), pattern)) out << io::to_json(o).dump() << '\n';
    } else if (enum_cmd->parsed()) {
      detail::LineSink sink(out, sorted);
      if (what == "configs") {
        patience::detail::check_guard(size, limits.bell, "enumerate configs");
        if (count_only) {
          sink(io::to_json(CountReport{size, "pile configs", all_pile_configs(size).size()}).dump());
        } else {
          for_each_set_partition(size, [&](const auto& blocks) {
            sink(io::to_json(piles_from_set_partition(blocks)).dump());
          });
        }
      } else if (what == "noncrossing") {
        patience::detail::check_guard(size, limits.bell, "enumerate noncrossing");
        const auto configs = non_crossing_configs(size);
        if (count_only) {
          sink(io::to_json(CountReport{size, "non-crossing configs", configs.size()}).dump());
        } else {
          for (const auto& c : configs) sink(io::to_json(c).dump());
        }
      } else if (what == "stable-pairs") {
        const auto pairs = all_stable_pairs(size, limits);
        if (count_only) {
          sink(io::to_json(CountReport{size, "stable pairs", pairs.size()}).dump());
        } else {
          for (const auto& p : pairs) sink(io::to_json(p).dump());
        }
      } else {
        if (pattern_texts.empty()) throw ParseError("enumerate --what avoiders needs --pattern");
        const auto patterns = detail::parse_patterns(pattern_texts);
        if (list) {
          patience::detail::check_guard(size, limits.avoiders, "enumerate avoiders");
          for_each_permutation(size, [&](const Permutation& s) {
            if (avoids_all(s, patterns)) sink(format_permutation(s));
          });
        } else {
          sink(io::to_json(count_avoiders(size, patterns, limits)).dump());
        }
      }
    } else if (verify_cmd->parsed()) {
      bool all_passed = true;
      std::size_t total = 0;
      run_verification(max_n, limits, [&](const CheckResult& r) {
        io::Json line;
        line["check"] = r.label;
        line["n"] = r.n;
        line["pass"] = r.passed;
        line["detail"] = r.detail;
        out << line.dump() << '\n' << std::flush;
        all_passed = all_passed && r.passed;
        ++total;
      });
      err << (all_passed ? "all " : "some of ") << total << " checks " << (all_passed ? "passed" : "failed")
          << '\n';
      return all_passed ? kOk : kVerificationFailed;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kOk;
}

inline int run(int argc, char** argv) {
  return run(std::vector<std::string>(argv, argv + argc), std::cin, std::cout, std::cerr);
}

}  // namespace patience::cli
