#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "lsug/axioms.hpp"
#include "lsug/capacity.hpp"
#include "lsug/function_table.hpp"

namespace lsug {

enum class RecognitionMethod { BooleanHomogeneity, DirectComparison };

std::string_view to_string(RecognitionMethod method);

/// m(I) = f(1_I). Throws NotAggregation.
Capacity recover_capacity(const FunctionTable& f);

struct RecognitionWitness {
  enum class Kind { BooleanInfHomogeneity, BooleanSupHomogeneity, Disagreement };
  Kind kind = Kind::Disagreement;
  /// Set for the Boolean-homogeneity kinds.
  std::optional<Elem> constant;
  std::vector<Elem> x;
  /// Disagreement: f(x) and Su_m(x). Boolean kinds: the two sides of the identity.
  Elem lhs = 0;
  Elem rhs = 0;
};

std::string_view to_string(RecognitionWitness::Kind kind);

struct RecognitionResult {
  RecognitionMethod method = RecognitionMethod::BooleanHomogeneity;
  /// Present iff f is a Sugeno integral; then f = Su_m pointwise.
  std::optional<Capacity> capacity;
  std::optional<RecognitionWitness> witness;
  /// Identity evaluations spent deciding: 2·|L|·2^n for the Boolean method,
  /// |L|^n for direct comparison.
  std::uint64_t pairs_checked = 0;
  /// Points compared in the closing f = Su_m verification.
  std::uint64_t points_verified = 0;

  bool is_sugeno() const noexcept { return capacity.has_value(); }
};

struct RecognitionOptions {
  /// Permit non-distributive lattices; recognition then compares against the
  /// sup-of-meets form only.
  bool allow_non_distributive = false;
};

/// Throws NotAggregation, NotDistributive.
RecognitionResult recognize(const FunctionTable& f, RecognitionMethod method, RecognitionOptions options = {});

}  // namespace lsug
