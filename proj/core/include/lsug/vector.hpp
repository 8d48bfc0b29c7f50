#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lsug/lattice.hpp"

namespace lsug {

/// An n-tuple of elements of one lattice.
struct LVector {
  LatticePtr lattice;
  std::vector<Elem> coords;

  /// Validates every coordinate. Throws UnknownElement.
  LVector(LatticePtr l, std::vector<Elem> c);

  std::size_t arity() const noexcept { return coords.size(); }
  Elem operator[](std::size_t i) const noexcept { return coords[i]; }

  static LVector constant(LatticePtr l, std::size_t n, Elem c);
  /// 1_I: top on the coordinates in `mask`, bottom elsewhere.
  static LVector characteristic(LatticePtr l, std::size_t n, std::uint64_t mask);

  /// "(e1,e2,...,en)" using element names.
  std::string to_string() const;

  friend bool operator==(const LVector& a, const LVector& b) {
    return same_lattice(a.lattice, b.lattice) && a.coords == b.coords;
  }

  static bool same_lattice(const LatticePtr& a, const LatticePtr& b) {
    return a == b || (a && b && *a == *b);
  }
};

/// Throws LatticeMismatch / ArityMismatch when x and y cannot be compared.
void require_compatible(const LVector& x, const LVector& y);

LVector vec_meet(const LVector& x, const LVector& y);
LVector vec_join(const LVector& x, const LVector& y);
/// Coordinatewise order.
bool vec_leq(const LVector& x, const LVector& y);

/// Mixed-radix codec for L^n with coordinate 0 as the most significant digit.
class PointCodec {
public:
  PointCodec(std::size_t lattice_size, std::size_t arity);

  std::size_t radix() const noexcept { return radix_; }
  std::size_t arity() const noexcept { return arity_; }
  /// |L|^n.
  std::uint64_t count() const noexcept { return count_; }

  std::uint64_t encode(std::span<const Elem> coords) const;
  void decode(std::uint64_t index, std::span<Elem> out) const;
  std::vector<Elem> decode(std::uint64_t index) const;

private:
  std::size_t radix_;
  std::size_t arity_;
  std::uint64_t count_;
};

/// |L|^n, or `saturate` when it would exceed it.
std::uint64_t checked_power(std::uint64_t base, std::uint64_t exponent, std::uint64_t saturate = UINT64_MAX);

/// Decimal count, or ">= 2^64" for a saturated value.
std::string count_to_string(std::uint64_t count);

}  // namespace lsug
