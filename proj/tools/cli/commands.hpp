#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "report.hpp"
#include "zetalab/errata.hpp"
#include "zetalab/precision.hpp"

namespace zetalab::cli {

/// Invalid target, family or parameter combination (exit code 2).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  unsigned digits = PrecisionContext::kDefaultDigits;
  Format format = Format::table;
  std::uint64_t seed = 0;
  std::optional<int> k_max;
  std::optional<int> k;
  std::optional<int> n;
  std::optional<int> r;
  std::optional<int> m;
  std::uint64_t samples = 1'000'000;
  bool errata = false;
  bool timings = false;
};

inline const std::vector<std::string> kVerifyTargets = {
    "thm21", "cor23", "thm25", "zkm", "janous", "eulerphi", "mn-partial", "kontsevich"};
inline const std::vector<std::string> kSequenceFamilies = {"ik",      "jk",  "zkm",
                                                           "beukers", "lcm", "bounds"};

/// Runs the checks of one target and returns the reports in output order.
std::vector<Report> run_verify(const std::string& target, const Options& options);

struct SequenceResult {
  Table table;
  /// False if a row's built-in check (bound, integrality, d_k < 3^k) failed.
  bool all_hold = true;
};

SequenceResult run_sequence(const std::string& family, const Options& options);

Table errata_rows(const PrecisionContext& ctx);

/// Number of series terms whose tail bound for the family is at most `tail`
/// (capped at the default oracle length).
std::uint64_t oracle_terms_for(const std::string& family, int m, double tail);

}  // namespace zetalab::cli
