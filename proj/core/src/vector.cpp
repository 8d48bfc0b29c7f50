#include "lsug/vector.hpp"

#include "lsug/error.hpp"

namespace lsug {

LVector::LVector(LatticePtr l, std::vector<Elem> c) : lattice(std::move(l)), coords(std::move(c)) {
  if (!lattice) throw Error(ErrorCode::LatticeMismatch, "vector without a lattice");
  for (Elem e : coords) lattice->element_name(e);
}

LVector LVector::constant(LatticePtr l, std::size_t n, Elem c) {
  return LVector(std::move(l), std::vector<Elem>(n, c));
}

LVector LVector::characteristic(LatticePtr l, std::size_t n, std::uint64_t mask) {
  std::vector<Elem> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = (mask >> i & 1u) ? l->top() : l->bottom();
  return LVector(std::move(l), std::move(c));
}

std::string LVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ',';
    out += lattice->element_name(coords[i]);
  }
  return out + ")";
}

void require_compatible(const LVector& x, const LVector& y) {
  if (!LVector::same_lattice(x.lattice, y.lattice))
    throw Error(ErrorCode::LatticeMismatch,
                "vectors over '" + x.lattice->name() + "' and '" + y.lattice->name() + "'");
  if (x.arity() != y.arity())
    throw Error(ErrorCode::ArityMismatch,
                "arity " + std::to_string(x.arity()) + " vs " + std::to_string(y.arity()));
}

LVector vec_meet(const LVector& x, const LVector& y) {
  require_compatible(x, y);
  std::vector<Elem> out(x.arity());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.lattice->meet(x[i], y[i]);
  return LVector(x.lattice, std::move(out));
}

LVector vec_join(const LVector& x, const LVector& y) {
  require_compatible(x, y);
  std::vector<Elem> out(x.arity());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.lattice->join(x[i], y[i]);
  return LVector(x.lattice, std::move(out));
}

bool vec_leq(const LVector& x, const LVector& y) {
  require_compatible(x, y);
  for (std::size_t i = 0; i < x.arity(); ++i)
    if (!x.lattice->leq(x[i], y[i])) return false;
  return true;
}

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exponent, std::uint64_t saturate) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > saturate / base) return saturate;
    result *= base;
  }
  return result > saturate ? saturate : result;
}

std::string count_to_string(std::uint64_t count) {
  return count == UINT64_MAX ? std::string(">= 2^64") : std::to_string(count);
}

PointCodec::PointCodec(std::size_t lattice_size, std::size_t arity)
    : radix_(lattice_size), arity_(arity), count_(checked_power(lattice_size, arity)) {
  if (count_ == UINT64_MAX) throw Error(ErrorCode::EnumerationTooLarge, "|L|^n overflows 64 bits");
}

std::uint64_t PointCodec::encode(std::span<const Elem> coords) const {
  std::uint64_t index = 0;
  for (Elem e : coords) index = index * radix_ + e;
  return index;
}

void PointCodec::decode(std::uint64_t index, std::span<Elem> out) const {
  for (std::size_t i = arity_; i-- > 0;) {
    out[i] = static_cast<Elem>(index % radix_);
    index /= radix_;
  }
}

std::vector<Elem> PointCodec::decode(std::uint64_t index) const {
  std::vector<Elem> out(arity_);
  decode(index, out);
  return out;
}

}  // namespace lsug
