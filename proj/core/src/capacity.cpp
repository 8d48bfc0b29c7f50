#include "lsug/capacity.hpp"

#include <random>

namespace lsug {

std::string index_set_to_string(IndexSet set) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < 64; ++i) {
    if (!(set >> i & 1u)) continue;
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

Capacity validate_capacity(LatticePtr lattice, std::size_t n, std::vector<Elem> values) {
  if (!lattice) throw Error(ErrorCode::LatticeMismatch, "capacity without a lattice");
  if (n == 0 || n > kMaxArity)
    throw Error(ErrorCode::ArityMismatch, "capacity arity must be in [1, " + std::to_string(kMaxArity) + "]");
  if (values.size() != (std::size_t{1} << n))
    throw Error(ErrorCode::ArityMismatch, "capacity table needs 2^" + std::to_string(n) + " entries");
  for (Elem v : values) lattice->element_name(v);

  const Lattice& l = *lattice;
  const IndexSet all = full_set(n);
  std::vector<CapacityViolation> violations;
  std::string what;
  if (values[0] != l.bottom()) {
    violations.push_back({ErrorCode::BoundaryViolation, 0, 0});
    what += "m({}) = " + l.element_name(values[0]) + " is not bottom; ";
  }
  if (values[all] != l.top()) {
    violations.push_back({ErrorCode::BoundaryViolation, all, all});
    what += "m(" + index_set_to_string(all) + ") = " + l.element_name(values[all]) + " is not top; ";
  }
  // Cover pairs X ⊂ X ∪ {i} suffice by transitivity.
  bool found = false;
  for (IndexSet x = 0; x <= all && !found; ++x)
    for (std::size_t i = 0; i < n && !found; ++i) {
      if (x >> i & 1u) continue;
      const IndexSet y = x | (IndexSet{1} << i);
      if (!l.leq(values[x], values[y])) {
        violations.push_back({ErrorCode::MonotonicityViolation, x, y});
        what += "m(" + index_set_to_string(x) + ") = " + l.element_name(values[x]) + " is not below m(" +
                index_set_to_string(y) + ") = " + l.element_name(values[y]) + "; ";
        found = true;
      }
    }
  if (!violations.empty()) {
    what.resize(what.size() - 2);
    throw InvalidCapacity(std::move(violations), what);
  }
  return Capacity(std::move(lattice), n, std::move(values));
}

Elem sugeno(const Capacity& m, std::span<const Elem> x, SugenoForm form) {
  const Lattice& l = *m.lattice();
  const std::size_t n = m.arity();
  const IndexSet all = full_set(n);
  if (form == SugenoForm::SupOfMeets) {
    Elem acc = l.bottom();
    for (IndexSet set = 0; set <= all; ++set) {
      Elem term = m[set];
      for (std::size_t i = 0; i < n; ++i)
        if (set >> i & 1u) term = l.meet(term, x[i]);
      acc = l.join(acc, term);
    }
    return acc;
  }
  Elem acc = l.top();
  for (IndexSet set = 0; set <= all; ++set) {
    Elem term = m[all & ~set];
    for (std::size_t i = 0; i < n; ++i)
      if (set >> i & 1u) term = l.join(term, x[i]);
    acc = l.meet(acc, term);
  }
  return acc;
}

Elem sugeno(const Capacity& m, const LVector& x, SugenoForm form) {
  if (!LVector::same_lattice(m.lattice(), x.lattice))
    throw Error(ErrorCode::LatticeMismatch, "x is not over the capacity's lattice");
  if (x.arity() != m.arity())
    throw Error(ErrorCode::ArityMismatch,
                "capacity arity " + std::to_string(m.arity()) + ", vector arity " + std::to_string(x.arity()));
  return sugeno(m, x.coords, form);
}

namespace {

void enumerate_exhaustive(const LatticePtr& lattice, std::size_t n,
                          const std::function<void(const Capacity&)>& visit) {
  const Lattice& l = *lattice;
  const IndexSet all = full_set(n);
  std::vector<Elem> values(all + 1, l.bottom());
  values[all] = l.top();

  // Masks are filled in increasing order; every immediate subset of a mask has
  // a smaller mask, so checking those keeps each partial table monotone.
  auto fits = [&](IndexSet set, Elem v) {
    for (std::size_t i = 0; i < n; ++i)
      if ((set >> i & 1u) && !l.leq(values[set & ~(IndexSet{1} << i)], v)) return false;
    return true;
  };
  auto recurse = [&](auto& self, IndexSet set) -> void {
    if (set == all) {
      if (fits(all, l.top())) visit(validate_capacity(lattice, n, values));
      return;
    }
    for (Elem v = 0; v < l.size(); ++v) {
      if (!fits(set, v)) continue;
      values[set] = v;
      self(self, set + 1);
    }
  };
  if (n == 0) return;
  if (all == 1) {
    visit(validate_capacity(lattice, n, values));
    return;
  }
  recurse(recurse, 1);
}

void enumerate_sampled(const LatticePtr& lattice, std::size_t n, std::uint64_t seed, std::uint64_t count,
                       const std::function<void(const Capacity&)>& visit) {
  const Lattice& l = *lattice;
  const IndexSet all = full_set(n);
  std::mt19937_64 rng(seed);
  std::vector<Elem> values(all + 1);
  std::vector<Elem> choices;
  for (std::uint64_t s = 0; s < count; ++s) {
    values[0] = l.bottom();
    for (IndexSet set = 1; set < all; ++set) {
      Elem lower = l.bottom();
      for (std::size_t i = 0; i < n; ++i)
        if (set >> i & 1u) lower = l.join(lower, values[set & ~(IndexSet{1} << i)]);
      choices.clear();
      for (Elem v = 0; v < l.size(); ++v)
        if (l.leq(lower, v)) choices.push_back(v);
      values[set] = choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)];
    }
    values[all] = l.top();
    visit(validate_capacity(lattice, n, values));
  }
}

}  // namespace

void enumerate_capacities(const LatticePtr& lattice, std::size_t n, const CapacityEnumeration& options,
                          const std::function<void(const Capacity&)>& visit) {
  if (!lattice) throw Error(ErrorCode::LatticeMismatch, "no lattice");
  if (n == 0 || n > kMaxArity) throw Error(ErrorCode::ArityMismatch, "capacity arity out of range");
  if (options.seed) {
    enumerate_sampled(lattice, n, *options.seed, options.count, visit);
    return;
  }
  const std::uint64_t free_entries = (std::uint64_t{1} << n) - 2;
  const std::uint64_t bound = checked_power(lattice->size(), free_entries);
  if (bound > options.limit)
    throw Error(ErrorCode::EnumerationTooLarge, "|L|^(2^n-2) = " + count_to_string(bound) + " exceeds limit " +
                                                    std::to_string(options.limit));
  enumerate_exhaustive(lattice, n, visit);
}

std::vector<Capacity> collect_capacities(const LatticePtr& lattice, std::size_t n, const CapacityEnumeration& options) {
  std::vector<Capacity> out;
  enumerate_capacities(lattice, n, options, [&](const Capacity& m) { out.push_back(m); });
  return out;
}

}  // namespace lsug
