#ifndef FPSLAB_TOOLS_VERIFY_HPP
#define FPSLAB_TOOLS_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fpslab/jacobi.hpp"
#include "fpslab/rational.hpp"

// Identity checks shared by `fpslab verify` and the acceptance binary.
// Every check is exact and deterministic for a given seed.

namespace fpslab::verify {

using jacobi::IntRange;

struct CheckResult {
  std::string suite;
  std::string name;
  long cases = 0;
  bool passed = true;
  std::string counterexample;  // first failing case
  std::string note;            // reported, never asserted
};

enum class Suite { all, series, changevar, bernoulli, jacobi };

std::optional<Suite> parse_suite(std::string_view name);

struct Options {
  int max_order = 20;
  int jmax = 24;
  int random_cases = 100;
  std::uint64_t seed = 20240601;
};

// series
CheckResult reversion_roundtrip(int cases, int max_order, std::uint64_t seed);
CheckResult exp_log_roundtrip(int cases, int max_order, std::uint64_t seed);
CheckResult truncation_soundness(int cases, int max_order, std::uint64_t seed);

// changevar
/// n! b_n for f = e^x - 1 against the known table through n = 14.
CheckResult b_prime_table(int order);
CheckResult inverse_product_log(int order);
CheckResult inverse_product_random(int cases, int order, std::uint64_t seed);
/// e^x - 1, (e^{2x} - 1)/2, x + x^2 and `random_cases` random changes of
/// variable.
CheckResult cbh_equivalence(int random_cases, int order, std::uint64_t seed);
CheckResult odd_vanishing(const std::vector<Rational>& as, int order);

// bernoulli
CheckResult bernoulli_consistency(int jmax);
CheckResult recursion_vs_expansion(IntRange n, int jmax);
CheckResult expansion_table();
CheckResult polynomiality(int jmax);
CheckResult convolution(int radius);
CheckResult weighted_convolution(int radius);

// jacobi
CheckResult residues(IntRange m, IntRange n);
CheckResult commutator(IntRange w, IntRange n, IntRange j, int k_span);

std::vector<CheckResult> run_suite(Suite suite, const Options& options);

bool all_passed(const std::vector<CheckResult>& results);

nlohmann::json to_json(const std::vector<CheckResult>& results);
std::string to_csv(const std::vector<CheckResult>& results);
std::string to_pretty(const std::vector<CheckResult>& results);

}  // namespace fpslab::verify

#endif  // FPSLAB_TOOLS_VERIFY_HPP
