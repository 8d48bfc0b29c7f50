#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "lsug/lattice.hpp"
#include "lsug/vector.hpp"

namespace lsug {

class Capacity;

/// Explicit total map L^n → L, indexed by the mixed-radix encoding of the
/// input (coordinate 1 most significant).
class FunctionTable {
public:
  /// Throws ArityMismatch when `values` does not have |L|^n entries and
  /// UnknownElement for foreign entries.
  FunctionTable(LatticePtr lattice, std::size_t arity, std::vector<Elem> values);

  static FunctionTable tabulate(LatticePtr lattice, std::size_t arity,
                                const std::function<Elem(std::span<const Elem>)>& fn);
  static FunctionTable of_sugeno(const Capacity& m);

  const LatticePtr& lattice() const noexcept { return lattice_; }
  std::size_t arity() const noexcept { return codec_.arity(); }
  const PointCodec& codec() const noexcept { return codec_; }
  std::uint64_t size() const noexcept { return values_.size(); }
  const std::vector<Elem>& values() const noexcept { return values_; }

  Elem at(std::uint64_t index) const noexcept { return values_[index]; }
  Elem operator()(std::span<const Elem> x) const noexcept { return values_[codec_.encode(x)]; }
  /// Checked evaluation. Throws LatticeMismatch / ArityMismatch.
  Elem operator()(const LVector& x) const;

  friend bool operator==(const FunctionTable& a, const FunctionTable& b) {
    return LVector::same_lattice(a.lattice_, b.lattice_) && a.arity() == b.arity() && a.values_ == b.values_;
  }

private:
  LatticePtr lattice_;
  PointCodec codec_;
  std::vector<Elem> values_;
};

}  // namespace lsug
