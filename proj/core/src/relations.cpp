#include "lsug/relations.hpp"

#include <string>

#include "lsug/error.hpp"

namespace lsug {

std::string_view to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::Comonotone: return "comonotone";
    case RelationKind::Comparable: return "comparable";
    case RelationKind::GComonotone: return "g-comonotone";
    case RelationKind::DualGComonotone: return "dual-g-comonotone";
    case RelationKind::SubsetwiseJoin: return "subsetwise-join";
    case RelationKind::SubsetwiseMeet: return "subsetwise-meet";
  }
  return "?";
}

RelationKind parse_relation_kind(std::string_view name) {
  for (RelationKind k : kAllRelations)
    if (to_string(k) == name) return k;
  throw Error(ErrorCode::ParseError, "unknown relation '" + std::string(name) + "'");
}

namespace {

using Indices = std::vector<std::size_t>;

bool pair_ok(const Lattice& l, std::span<const Elem> x, std::span<const Elem> y, std::size_t i, std::size_t j,
             RelationKind kind) {
  switch (kind) {
    case RelationKind::Comonotone:
      return (l.leq(x[i], x[j]) && l.leq(y[i], y[j])) || (l.leq(x[j], x[i]) && l.leq(y[j], y[i]));
    case RelationKind::GComonotone:
      return l.meet(l.join(x[i], y[i]), l.join(x[j], y[j])) == l.join(l.meet(x[i], x[j]), l.meet(y[i], y[j]));
    case RelationKind::DualGComonotone:
      return l.join(l.meet(x[i], y[i]), l.meet(x[j], y[j])) == l.meet(l.join(x[i], x[j]), l.join(y[i], y[j]));
    default:
      return true;
  }
}

bool subset_ok(const Lattice& l, std::span<const Elem> x, std::span<const Elem> y, std::uint64_t mask,
               RelationKind kind) {
  if (kind == RelationKind::SubsetwiseJoin) {
    Elem lhs = l.top(), mx = l.top(), my = l.top();
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!(mask >> i & 1u)) continue;
      lhs = l.meet(lhs, l.join(x[i], y[i]));
      mx = l.meet(mx, x[i]);
      my = l.meet(my, y[i]);
    }
    return lhs == l.join(mx, my);
  }
  Elem lhs = l.bottom(), jx = l.bottom(), jy = l.bottom();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(mask >> i & 1u)) continue;
    lhs = l.join(lhs, l.meet(x[i], y[i]));
    jx = l.join(jx, x[i]);
    jy = l.join(jy, y[i]);
  }
  return lhs == l.meet(jx, jy);
}

// Returns the witness of the first violation, or nothing when the relation holds.
template <bool kWantWitness>
std::optional<Indices> find_violation(const Lattice& l, std::span<const Elem> x, std::span<const Elem> y,
                                      RelationKind kind) {
  const std::size_t n = x.size();
  switch (kind) {
    case RelationKind::Comparable: {
      std::optional<std::size_t> not_below, not_above;
      for (std::size_t i = 0; i < n; ++i) {
        if (!not_below && !l.leq(x[i], y[i])) not_below = i;
        if (!not_above && !l.leq(y[i], x[i])) not_above = i;
      }
      if (not_below && not_above) return Indices{*not_below, *not_above};
      return std::nullopt;
    }
    case RelationKind::Comonotone:
    case RelationKind::GComonotone:
    case RelationKind::DualGComonotone:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!pair_ok(l, x, y, i, j, kind)) {
            if constexpr (kWantWitness) return Indices{i, j};
            return Indices{};
          }
      return std::nullopt;
    case RelationKind::SubsetwiseJoin:
    case RelationKind::SubsetwiseMeet:
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask)
        if (!subset_ok(l, x, y, mask, kind)) {
          Indices members;
          if constexpr (kWantWitness)
            for (std::size_t i = 0; i < n; ++i)
              if (mask >> i & 1u) members.push_back(i);
          return members;
        }
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

bool relation_holds(const Lattice& l, std::span<const Elem> x, std::span<const Elem> y, RelationKind kind) {
  return !find_violation<false>(l, x, y, kind).has_value();
}

RelationResult relation_check(const Lattice& l, std::span<const Elem> x, std::span<const Elem> y,
                              RelationKind kind) {
  auto violation = find_violation<true>(l, x, y, kind);
  if (!violation) return {};
  return {false, RelationWitness{std::move(*violation)}};
}

RelationResult relation_check(const LVector& x, const LVector& y, RelationKind kind) {
  require_compatible(x, y);
  if (x.arity() >= 64) throw Error(ErrorCode::EnumerationTooLarge, "arity must be below 64");
  return relation_check(*x.lattice, x.coords, y.coords, kind);
}

std::vector<LVector> relation_region(const LatticePtr& lattice, const LVector& x, RelationKind kind,
                                     std::uint64_t limit) {
  if (!LVector::same_lattice(lattice, x.lattice))
    throw Error(ErrorCode::LatticeMismatch, "x is not over '" + lattice->name() + "'");
  const std::uint64_t total = checked_power(lattice->size(), x.arity());
  if (total > limit)
    throw Error(ErrorCode::EnumerationTooLarge, "|L|^n = " + count_to_string(total) +
                                                    " exceeds the region limit of " + std::to_string(limit) +
                                                    " vectors");
  PointCodec codec(lattice->size(), x.arity());
  std::vector<LVector> region;
  std::vector<Elem> y(x.arity());
  for (std::uint64_t idx = 0; idx < codec.count(); ++idx) {
    codec.decode(idx, y);
    if (relation_holds(*lattice, x.coords, y, kind)) region.emplace_back(lattice, y);
  }
  return region;
}

}  // namespace lsug
