#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lsug/error.hpp"
#include "lsug/lattice.hpp"
#include "lsug/vector.hpp"

namespace lsug {

/// Subset of [n] as a bit-mask; bit i stands for coordinate i+1.
using IndexSet = std::uint64_t;

inline constexpr std::size_t kMaxArity = 20;

inline IndexSet full_set(std::size_t n) { return (IndexSet{1} << n) - 1; }

/// "{}", "{1}", "{1,2}", ... (1-based members).
std::string index_set_to_string(IndexSet set);

struct CapacityViolation {
  ErrorCode kind;      ///< BoundaryViolation or MonotonicityViolation
  IndexSet smaller;    ///< boundary: the offending set; monotonicity: X
  IndexSet larger;     ///< monotonicity: Y ⊃ X (equal to `smaller` for boundary)
};

/// Thrown by validate_capacity; code() is the kind of the first violation.
/// Boundary violations come first, then the first monotonicity violation.
class InvalidCapacity : public Error {
public:
  InvalidCapacity(std::vector<CapacityViolation> violations, const std::string& what)
      : Error(violations.front().kind, what), violations_(std::move(violations)) {}
  const std::vector<CapacityViolation>& violations() const noexcept { return violations_; }

private:
  std::vector<CapacityViolation> violations_;
};

/// Monotone set function m: 2^[n] → L with m(∅) = bottom and m([n]) = top.
class Capacity {
public:
  const LatticePtr& lattice() const noexcept { return lattice_; }
  std::size_t arity() const noexcept { return arity_; }
  Elem operator[](IndexSet set) const noexcept { return values_[set]; }
  const std::vector<Elem>& values() const noexcept { return values_; }

  friend bool operator==(const Capacity& a, const Capacity& b) {
    return LVector::same_lattice(a.lattice_, b.lattice_) && a.values_ == b.values_;
  }

private:
  friend Capacity validate_capacity(LatticePtr, std::size_t, std::vector<Elem>);
  Capacity(LatticePtr l, std::size_t n, std::vector<Elem> v)
      : lattice_(std::move(l)), arity_(n), values_(std::move(v)) {}

  LatticePtr lattice_;
  std::size_t arity_;
  std::vector<Elem> values_;
};

/// `values` is indexed by subset mask and must have 2^n entries.
/// Throws InvalidCapacity, ArityMismatch, UnknownElement.
Capacity validate_capacity(LatticePtr lattice, std::size_t n, std::vector<Elem> values);

enum class SugenoForm { SupOfMeets, InfOfJoins };

/// ⋁_I (m(I) ∧ ⋀_{i∈I} x_i)   or   ⋀_I (m([n]∖I) ∨ ⋁_{i∈I} x_i).
/// Unchecked: x must have arity m.arity() over m's lattice.
Elem sugeno(const Capacity& m, std::span<const Elem> x, SugenoForm form);
/// Throws ArityMismatch / LatticeMismatch.
Elem sugeno(const Capacity& m, const LVector& x, SugenoForm form);

struct CapacityEnumeration {
  /// Exhaustive mode guard on |L|^(2^n − 2).
  std::uint64_t limit = 10'000'000;
  /// Sampling mode when set: `count` tables from a generator seeded by `seed`.
  std::optional<std::uint64_t> seed;
  std::uint64_t count = 0;
};

/// Exhaustive mode visits every capacity once, lexicographic over the table
/// (mask 1 most significant). Throws EnumerationTooLarge.
void enumerate_capacities(const LatticePtr& lattice, std::size_t n, const CapacityEnumeration& options,
                          const std::function<void(const Capacity&)>& visit);

std::vector<Capacity> collect_capacities(const LatticePtr& lattice, std::size_t n,
                                         const CapacityEnumeration& options = {});

}  // namespace lsug
