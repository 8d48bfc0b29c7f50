#include "lsug/function_table.hpp"

#include "lsug/capacity.hpp"
#include "lsug/error.hpp"

namespace lsug {

namespace {

PointCodec make_codec(const LatticePtr& lattice, std::size_t arity) {
  if (!lattice) throw Error(ErrorCode::LatticeMismatch, "function table without a lattice");
  if (arity == 0) throw Error(ErrorCode::ArityMismatch, "function table arity must be positive");
  return PointCodec(lattice->size(), arity);
}

}  // namespace

FunctionTable::FunctionTable(LatticePtr lattice, std::size_t arity, std::vector<Elem> values)
    : lattice_(std::move(lattice)), codec_(make_codec(lattice_, arity)), values_(std::move(values)) {
  if (values_.size() != codec_.count())
    throw Error(ErrorCode::ArityMismatch, "function table needs " + std::to_string(codec_.count()) +
                                              " entries, got " + std::to_string(values_.size()));
  for (Elem v : values_) lattice_->element_name(v);
}

FunctionTable FunctionTable::tabulate(LatticePtr lattice, std::size_t arity,
                                      const std::function<Elem(std::span<const Elem>)>& fn) {
  PointCodec codec = make_codec(lattice, arity);
  std::vector<Elem> values(codec.count());
  std::vector<Elem> x(arity);
  for (std::uint64_t idx = 0; idx < codec.count(); ++idx) {
    codec.decode(idx, x);
    values[idx] = fn(x);
  }
  return FunctionTable(std::move(lattice), arity, std::move(values));
}

FunctionTable FunctionTable::of_sugeno(const Capacity& m) {
  return tabulate(m.lattice(), m.arity(),
                  [&](std::span<const Elem> x) { return sugeno(m, x, SugenoForm::SupOfMeets); });
}

Elem FunctionTable::operator()(const LVector& x) const {
  if (!LVector::same_lattice(lattice_, x.lattice))
    throw Error(ErrorCode::LatticeMismatch, "input is not over '" + lattice_->name() + "'");
  if (x.arity() != arity())
    throw Error(ErrorCode::ArityMismatch,
                "table arity " + std::to_string(arity()) + ", input arity " + std::to_string(x.arity()));
  return (*this)(std::span<const Elem>(x.coords));
}

}  // namespace lsug
