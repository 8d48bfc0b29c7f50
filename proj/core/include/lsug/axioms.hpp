#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lsug/function_table.hpp"

namespace lsug {

enum class AxiomKind {
  MonotoneBoundary,
  Idempotent,
  InfHomogeneous,          ///< f(c∧x) = c∧f(x) for all c, x
  SupHomogeneous,          ///< f(c∨x) = c∨f(x) for all c, x
  BooleanInfHomogeneous,   ///< same, x ∈ {0,1}^n
  BooleanSupHomogeneous,
  ComonotoneSupremal,      ///< f(x∨y) = f(x)∨f(y) for comonotone x, y
  ComonotoneInfimal,
  GComonotoneSupremal,     ///< same over g-comonotone pairs
  GComonotoneInfimal,
};

inline constexpr std::array<AxiomKind, 10> kAllAxioms = {
    AxiomKind::MonotoneBoundary,      AxiomKind::Idempotent,          AxiomKind::InfHomogeneous,
    AxiomKind::SupHomogeneous,        AxiomKind::BooleanInfHomogeneous, AxiomKind::BooleanSupHomogeneous,
    AxiomKind::ComonotoneSupremal,    AxiomKind::ComonotoneInfimal,   AxiomKind::GComonotoneSupremal,
    AxiomKind::GComonotoneInfimal};

std::string_view to_string(AxiomKind kind);
/// Accepts the names printed by to_string. Throws ParseError.
AxiomKind parse_axiom_kind(std::string_view name);

/// First failure of an identity. (c, x) witnesses set `constant`; (x, y)
/// witnesses set `y`; boundary failures carry only `x`. `lhs` and `rhs` are
/// the two sides that differ (for monotonicity: f(x) and f(y) with f(x) ≰ f(y)).
struct AxiomWitness {
  std::optional<Elem> constant;
  std::vector<Elem> x;
  std::vector<Elem> y;
  Elem lhs = 0;
  Elem rhs = 0;

  std::string describe(const Lattice& l, AxiomKind kind) const;
};

struct AxiomResult {
  AxiomKind kind = AxiomKind::MonotoneBoundary;
  bool holds = true;
  std::optional<AxiomWitness> witness;
  /// Identity evaluations performed: |L|·|L|^n for full homogeneity,
  /// |L|·2^n for Boolean homogeneity, the number of unordered
  /// (g-)comonotone pairs x ≤lex y for the supremal/infimal checks.
  std::uint64_t pairs_checked = 0;
};

/// Optional shadow tally, incremented once per identity evaluation at the
/// evaluation site itself.
struct EvaluationTally {
  std::uint64_t evaluations = 0;
};

/// Every candidate pair is evaluated (no early exit), so `pairs_checked` is a
/// pure function of (|L|, n, kind) for the homogeneity checks.
AxiomResult axiom_check(const FunctionTable& f, AxiomKind kind, EvaluationTally* tally = nullptr);

/// Conditions (ii)–(viii) of the eight-way characterization.
enum class Condition : std::size_t {
  InfHomAndGComSupremal = 0,   ///< (ii)
  SupHomAndGComInfimal,        ///< (iii)
  InfHomAndComSupremal,        ///< (iv)
  SupHomAndComInfimal,         ///< (v)
  ComSupremalAndComInfimal,    ///< (vi)
  GComSupremalAndGComInfimal,  ///< (vii)
  BooleanSupAndBooleanInf,     ///< (viii)
};

inline constexpr std::size_t kConditionCount = 7;
std::string_view condition_label(Condition c);  ///< "ii" … "viii"

struct CheckReport {
  std::array<AxiomResult, kAllAxioms.size()> axioms;
  std::array<bool, kConditionCount> conditions{};
  bool theorem3_consistent = false;

  const AxiomResult& axiom(AxiomKind kind) const { return axioms[static_cast<std::size_t>(kind)]; }
  bool condition(Condition c) const { return conditions[static_cast<std::size_t>(c)]; }
  /// All seven conditions hold.
  bool all_conditions() const;
};

/// Throws NotAggregation (with the monotonicity or boundary witness) when f
/// is not an aggregation function.
CheckReport theorem3_report(const FunctionTable& f);

/// Throws NotAggregation when f fails monotone_boundary.
void require_aggregation(const FunctionTable& f);

struct AggregationEnumeration {
  /// Exhaustive mode refuses |L|^n above this.
  std::uint64_t max_points = 9;
  /// Sampling mode when set.
  std::optional<std::uint64_t> seed;
  std::uint64_t count = 0;
};

/// Exhaustive: every monotone boundary-respecting table once, lexicographic
/// over the table with monotone pruning. Sampling: random monotone tables,
/// reproducible from the seed. Throws EnumerationTooLarge.
void enumerate_aggregations(const LatticePtr& lattice, std::size_t n, const AggregationEnumeration& options,
                            const std::function<void(const FunctionTable&)>& visit);

std::vector<FunctionTable> collect_aggregations(const LatticePtr& lattice, std::size_t n,
                                                const AggregationEnumeration& options = {});

}  // namespace lsug
