#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lsug/lattice.hpp"
#include "lsug/vector.hpp"

namespace lsug {

enum class RelationKind {
  Comonotone,
  Comparable,
  GComonotone,      ///< (x_i∨y_i)∧(x_j∨y_j) = (x_i∧x_j)∨(y_i∧y_j) for all i, j
  DualGComonotone,  ///< (x_i∧y_i)∨(x_j∧y_j) = (x_i∨x_j)∧(y_i∨y_j) for all i, j
  SubsetwiseJoin,   ///< ⋀_I (x_i∨y_i) = ⋀_I x_i ∨ ⋀_I y_i for all nonempty I
  SubsetwiseMeet,   ///< ⋁_I (x_i∧y_i) = ⋁_I x_i ∧ ⋁_I y_i for all nonempty I
};

inline constexpr std::array<RelationKind, 6> kAllRelations = {
    RelationKind::Comonotone,      RelationKind::Comparable,     RelationKind::GComonotone,
    RelationKind::DualGComonotone, RelationKind::SubsetwiseJoin, RelationKind::SubsetwiseMeet};

std::string_view to_string(RelationKind kind);
/// Accepts the names printed by to_string. Throws ParseError.
RelationKind parse_relation_kind(std::string_view name);

/// Indices (0-based) of the first violation: a pair (i, j) for the pairwise
/// relations, (first i with x_i ≰ y_i, first j with y_j ≰ x_j) for
/// comparability, or the members of the violating subset for the subset-wise
/// identities.
struct RelationWitness {
  std::vector<std::size_t> indices;
};

struct RelationResult {
  bool holds = true;
  std::optional<RelationWitness> witness;
  explicit operator bool() const noexcept { return holds; }
};

/// Unchecked fast path over raw coordinates; x and y must have equal length.
bool relation_holds(const Lattice& l, std::span<const Elem> x, std::span<const Elem> y, RelationKind kind);

/// Same decision plus the lexicographically first witness.
RelationResult relation_check(const Lattice& l, std::span<const Elem> x, std::span<const Elem> y,
                              RelationKind kind);

/// Checked entry point. Throws ArityMismatch / LatticeMismatch.
RelationResult relation_check(const LVector& x, const LVector& y, RelationKind kind);

inline constexpr std::uint64_t kRegionLimit = 10'000'000;

/// { y ∈ L^n : relation_check(x, y, kind) } in lexicographic order.
/// Throws EnumerationTooLarge when |L|^n exceeds `limit`.
std::vector<LVector> relation_region(const LatticePtr& lattice, const LVector& x, RelationKind kind,
                                     std::uint64_t limit = kRegionLimit);

}  // namespace lsug
