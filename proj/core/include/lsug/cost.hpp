#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lsug/function_table.hpp"
#include "lsug/lattice.hpp"

namespace lsug {

/// Nonnegative exact fraction kept in lowest terms.
class Rational {
public:
  Rational(std::uint64_t num = 0, std::uint64_t den = 1);

  std::uint64_t num() const noexcept { return num_; }
  std::uint64_t den() const noexcept { return den_; }

  /// (num/den)^exponent; throws std::overflow_error beyond 64 bits.
  Rational pow(std::uint64_t exponent) const;

  /// "9/4", or "8" when the denominator is 1.
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;

private:
  std::uint64_t num_;
  std::uint64_t den_;
};

/// Verification cost in identity evaluations ("pairs"), analytic and measured.
struct CostModel {
  std::uint64_t k = 0;  ///< |L|
  std::uint64_t n = 0;  ///< arity

  // Analytic.
  std::uint64_t boolean_hom_pairs = 0;  ///< k·2^n
  std::uint64_t full_hom_pairs = 0;     ///< k·k^n
  Rational reduction_factor;            ///< full / boolean = (k/2)^n

  // Measured by run_bench; zero until then.
  std::uint64_t measured_boolean_pairs = 0;
  std::uint64_t measured_full_pairs = 0;
  std::uint64_t comonotone_pairs = 0;
  std::uint64_t g_comonotone_pairs = 0;
  /// Recognizer cost for both methods (distributive lattices only).
  std::optional<std::uint64_t> recognize_boolean_pairs;
  std::optional<std::uint64_t> recognize_direct_pairs;

  bool measured() const noexcept { return measured_full_pairs != 0; }
  /// measured_full_pairs / measured_boolean_pairs.
  Rational measured_reduction_factor() const;
  /// Whether a single g-comonotone supremality check costs the same as one
  /// Boolean homogeneity check (it generally does not for k > 2).
  bool g_comonotone_matches_boolean_count() const noexcept { return g_comonotone_pairs == boolean_hom_pairs; }
};

CostModel cost_model(std::uint64_t k, std::uint64_t n);
CostModel cost_model(const Lattice& lattice, std::uint64_t n);

/// Runs the boolean-inf-homogeneous, inf-homogeneous, comonotone-supremal and
/// g-comonotone-supremal checks on f with counters enabled, and (on
/// distributive lattices) both recognizer methods.
CostModel run_bench(const FunctionTable& f);

/// One header line plus one row per model:
/// k n boolean_pairs full_pairs comonotone_pairs g_comonotone_pairs reduction_factor
std::string cost_table_header();
std::string cost_table_row(const CostModel& model);

}  // namespace lsug
