#include "lsug/axioms.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "lsug/error.hpp"
#include "lsug/relations.hpp"

namespace lsug {

std::string_view to_string(AxiomKind kind) {
  switch (kind) {
    case AxiomKind::MonotoneBoundary: return "monotone-boundary";
    case AxiomKind::Idempotent: return "idempotent";
    case AxiomKind::InfHomogeneous: return "inf-homogeneous";
    case AxiomKind::SupHomogeneous: return "sup-homogeneous";
    case AxiomKind::BooleanInfHomogeneous: return "boolean-inf-homogeneous";
    case AxiomKind::BooleanSupHomogeneous: return "boolean-sup-homogeneous";
    case AxiomKind::ComonotoneSupremal: return "comonotone-supremal";
    case AxiomKind::ComonotoneInfimal: return "comonotone-infimal";
    case AxiomKind::GComonotoneSupremal: return "g-comonotone-supremal";
    case AxiomKind::GComonotoneInfimal: return "g-comonotone-infimal";
  }
  return "?";
}

AxiomKind parse_axiom_kind(std::string_view name) {
  for (AxiomKind k : kAllAxioms)
    if (to_string(k) == name) return k;
  throw Error(ErrorCode::ParseError, "unknown axiom '" + std::string(name) + "'");
}

std::string_view condition_label(Condition c) {
  static constexpr std::array<std::string_view, kConditionCount> labels = {"ii", "iii", "iv", "v",
                                                                           "vi", "vii", "viii"};
  return labels[static_cast<std::size_t>(c)];
}

namespace {

std::string vec_string(const Lattice& l, const std::vector<Elem>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += l.element_name(v[i]);
  }
  return out + ")";
}

}  // namespace

std::string AxiomWitness::describe(const Lattice& l, AxiomKind kind) const {
  const std::string lhs_name = l.element_name(lhs), rhs_name = l.element_name(rhs);
  switch (kind) {
    case AxiomKind::MonotoneBoundary:
      if (y.empty()) return "boundary: f" + vec_string(l, x) + " = " + lhs_name + ", expected " + rhs_name;
      return "monotonicity: x=" + vec_string(l, x) + " <= y=" + vec_string(l, y) + " but f(x)=" + lhs_name +
             " is not below f(y)=" + rhs_name;
    case AxiomKind::Idempotent:
      return "c=" + l.element_name(*constant) + ": f" + vec_string(l, x) + " = " + lhs_name + " != " + rhs_name;
    case AxiomKind::InfHomogeneous:
    case AxiomKind::BooleanInfHomogeneous:
      return "c=" + l.element_name(*constant) + " x=" + vec_string(l, x) + ": f(c∧x) = " + lhs_name +
             " != c∧f(x) = " + rhs_name;
    case AxiomKind::SupHomogeneous:
    case AxiomKind::BooleanSupHomogeneous:
      return "c=" + l.element_name(*constant) + " x=" + vec_string(l, x) + ": f(c∨x) = " + lhs_name +
             " != c∨f(x) = " + rhs_name;
    case AxiomKind::ComonotoneSupremal:
    case AxiomKind::GComonotoneSupremal:
      return "x=" + vec_string(l, x) + " y=" + vec_string(l, y) + ": f(x∨y) = " + lhs_name +
             " != f(x)∨f(y) = " + rhs_name;
    case AxiomKind::ComonotoneInfimal:
    case AxiomKind::GComonotoneInfimal:
      return "x=" + vec_string(l, x) + " y=" + vec_string(l, y) + ": f(x∧y) = " + lhs_name +
             " != f(x)∧f(y) = " + rhs_name;
  }
  return {};
}

namespace {

/// Runs the identity checks for one axiom over flat, pre-decoded points.
class Checker {
public:
  Checker(const FunctionTable& f, EvaluationTally* tally)
      : f_(f), l_(*f.lattice()), n_(f.arity()), count_(f.size()), tally_(tally) {
    points_.resize(count_ * n_);
    for (std::uint64_t idx = 0; idx < count_; ++idx) f.codec().decode(idx, point(idx));
    scratch_.resize(n_);
  }

  AxiomResult run(AxiomKind kind) {
    result_ = AxiomResult{kind, true, std::nullopt, 0};
    switch (kind) {
      case AxiomKind::MonotoneBoundary: monotone_boundary(); break;
      case AxiomKind::Idempotent: idempotent(); break;
      case AxiomKind::InfHomogeneous: homogeneous(false, false); break;
      case AxiomKind::SupHomogeneous: homogeneous(true, false); break;
      case AxiomKind::BooleanInfHomogeneous: homogeneous(false, true); break;
      case AxiomKind::BooleanSupHomogeneous: homogeneous(true, true); break;
      case AxiomKind::ComonotoneSupremal: pairwise(RelationKind::Comonotone, true); break;
      case AxiomKind::ComonotoneInfimal: pairwise(RelationKind::Comonotone, false); break;
      case AxiomKind::GComonotoneSupremal: pairwise(RelationKind::GComonotone, true); break;
      case AxiomKind::GComonotoneInfimal: pairwise(RelationKind::GComonotone, false); break;
    }
    return std::move(result_);
  }

private:
  std::span<Elem> point(std::uint64_t idx) { return {points_.data() + idx * n_, n_}; }
  std::span<const Elem> cpoint(std::uint64_t idx) const { return {points_.data() + idx * n_, n_}; }

  // Records one identity evaluation; returns whether it held.
  bool evaluate(Elem lhs, Elem rhs) {
    ++result_.pairs_checked;
    if (tally_) ++tally_->evaluations;
    return lhs == rhs;
  }

  void fail(AxiomWitness w) {
    if (result_.holds) {
      result_.holds = false;
      result_.witness = std::move(w);
    }
  }

  std::vector<Elem> vec(std::span<const Elem> s) const { return {s.begin(), s.end()}; }

  void monotone_boundary() {
    const std::vector<Elem> bottom(n_, l_.bottom()), top(n_, l_.top());
    const Elem f_bottom = f_(bottom), f_top = f_(top);
    if (!evaluate(f_bottom, l_.bottom())) fail({std::nullopt, bottom, {}, f_bottom, l_.bottom()});
    if (!evaluate(f_top, l_.top())) fail({std::nullopt, top, {}, f_top, l_.top()});

    std::vector<std::vector<Elem>> upper(l_.size());
    for (auto [lo, hi] : l_.covers()) upper[lo].push_back(hi);
    for (std::uint64_t idx = 0; idx < count_; ++idx) {
      auto x = cpoint(idx);
      const Elem fx = f_.at(idx);
      for (std::size_t i = 0; i < n_; ++i) {
        for (Elem u : upper[x[i]]) {
          std::copy(x.begin(), x.end(), scratch_.begin());
          scratch_[i] = u;
          const Elem fy = f_(scratch_);
          ++result_.pairs_checked;
          if (tally_) ++tally_->evaluations;
          if (!l_.leq(fx, fy)) fail({std::nullopt, vec(x), scratch_, fx, fy});
        }
      }
    }
  }

  void idempotent() {
    std::vector<Elem> c_vec(n_);
    for (Elem c = 0; c < l_.size(); ++c) {
      std::fill(c_vec.begin(), c_vec.end(), c);
      const Elem fc = f_(c_vec);
      if (!evaluate(fc, c)) fail({c, c_vec, {}, fc, c});
    }
  }

  void homogeneous(bool sup, bool boolean_only) {
    std::vector<Elem> x(n_), shifted(n_);
    const std::uint64_t inputs = boolean_only ? (std::uint64_t{1} << n_) : count_;
    for (Elem c = 0; c < l_.size(); ++c) {
      for (std::uint64_t t = 0; t < inputs; ++t) {
        if (boolean_only) {
          for (std::size_t i = 0; i < n_; ++i) x[i] = (t >> (n_ - 1 - i) & 1u) ? l_.top() : l_.bottom();
        } else {
          auto p = cpoint(t);
          std::copy(p.begin(), p.end(), x.begin());
        }
        for (std::size_t i = 0; i < n_; ++i) shifted[i] = sup ? l_.join(c, x[i]) : l_.meet(c, x[i]);
        const Elem lhs = f_(shifted);
        const Elem fx = f_(x);
        const Elem rhs = sup ? l_.join(c, fx) : l_.meet(c, fx);
        if (!evaluate(lhs, rhs)) fail({c, x, {}, lhs, rhs});
      }
    }
  }

  void pairwise(RelationKind relation, bool supremal) {
    for (std::uint64_t a = 0; a < count_; ++a) {
      auto x = cpoint(a);
      for (std::uint64_t b = a; b < count_; ++b) {
        auto y = cpoint(b);
        if (!relation_holds(l_, x, y, relation)) continue;
        for (std::size_t i = 0; i < n_; ++i) scratch_[i] = supremal ? l_.join(x[i], y[i]) : l_.meet(x[i], y[i]);
        const Elem lhs = f_(scratch_);
        const Elem rhs = supremal ? l_.join(f_.at(a), f_.at(b)) : l_.meet(f_.at(a), f_.at(b));
        if (!evaluate(lhs, rhs)) fail({std::nullopt, vec(x), vec(y), lhs, rhs});
      }
    }
  }

  const FunctionTable& f_;
  const Lattice& l_;
  std::size_t n_;
  std::uint64_t count_;
  EvaluationTally* tally_;
  std::vector<Elem> points_;
  std::vector<Elem> scratch_;
  AxiomResult result_;
};

}  // namespace

AxiomResult axiom_check(const FunctionTable& f, AxiomKind kind, EvaluationTally* tally) {
  if (f.arity() >= 64) throw Error(ErrorCode::EnumerationTooLarge, "arity must be below 64");
  return Checker(f, tally).run(kind);
}

void require_aggregation(const FunctionTable& f) {
  const AxiomResult r = axiom_check(f, AxiomKind::MonotoneBoundary);
  if (!r.holds)
    throw Error(ErrorCode::NotAggregation, r.witness->describe(*f.lattice(), AxiomKind::MonotoneBoundary));
}

bool CheckReport::all_conditions() const {
  return std::all_of(conditions.begin(), conditions.end(), [](bool b) { return b; });
}

CheckReport theorem3_report(const FunctionTable& f) {
  CheckReport report;
  Checker checker(f, nullptr);
  for (AxiomKind k : kAllAxioms) report.axioms[static_cast<std::size_t>(k)] = checker.run(k);
  const auto& mb = report.axiom(AxiomKind::MonotoneBoundary);
  if (!mb.holds)
    throw Error(ErrorCode::NotAggregation, mb.witness->describe(*f.lattice(), AxiomKind::MonotoneBoundary));

  auto holds = [&](AxiomKind k) { return report.axiom(k).holds; };
  const bool inf_hom = holds(AxiomKind::InfHomogeneous), sup_hom = holds(AxiomKind::SupHomogeneous);
  const bool com_sup = holds(AxiomKind::ComonotoneSupremal), com_inf = holds(AxiomKind::ComonotoneInfimal);
  const bool g_sup = holds(AxiomKind::GComonotoneSupremal), g_inf = holds(AxiomKind::GComonotoneInfimal);
  report.conditions = {inf_hom && g_sup,
                       sup_hom && g_inf,
                       inf_hom && com_sup,
                       sup_hom && com_inf,
                       com_sup && com_inf,
                       g_sup && g_inf,
                       holds(AxiomKind::BooleanSupHomogeneous) && holds(AxiomKind::BooleanInfHomogeneous)};
  report.theorem3_consistent =
      std::all_of(report.conditions.begin(), report.conditions.end(), [&](bool b) { return b == report.conditions[0]; });
  return report;
}

namespace {

std::vector<std::size_t> element_heights(const Lattice& l) {
  // Longest chain from bottom; elements are visited in order of down-set size,
  // which is a linear extension of the order.
  std::vector<std::size_t> order(l.size()), below(l.size(), 0), height(l.size(), 0);
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = 0; b < l.size(); ++b) below[a] += l.leq(b, a);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  for (std::size_t e : order)
    for (Elem lo : l.lower_covers(static_cast<Elem>(e))) height[e] = std::max(height[e], height[lo] + 1);
  return height;
}

void enumerate_exhaustive(const LatticePtr& lattice, std::size_t n, std::uint64_t max_points,
                          const std::function<void(const FunctionTable&)>& visit) {
  const Lattice& l = *lattice;
  PointCodec codec(l.size(), n);
  if (codec.count() > max_points)
    throw Error(ErrorCode::EnumerationTooLarge, "|L|^n = " + std::to_string(codec.count()) +
                                                    " points exceeds the exhaustive limit of " +
                                                    std::to_string(max_points));
  const std::uint64_t count = codec.count();
  std::vector<std::vector<Elem>> points(count);
  for (std::uint64_t p = 0; p < count; ++p) points[p] = codec.decode(p);
  auto below = [&](std::uint64_t p, std::uint64_t q) {
    for (std::size_t i = 0; i < n; ++i)
      if (!l.leq(points[p][i], points[q][i])) return false;
    return true;
  };
  // For each point, the earlier points it is comparable with.
  std::vector<std::vector<std::uint64_t>> earlier_below(count), earlier_above(count);
  for (std::uint64_t p = 0; p < count; ++p)
    for (std::uint64_t q = 0; q < p; ++q) {
      if (below(q, p)) earlier_below[p].push_back(q);
      if (below(p, q)) earlier_above[p].push_back(q);
    }
  const std::uint64_t bottom_idx = codec.encode(std::vector<Elem>(n, l.bottom()));
  const std::uint64_t top_idx = codec.encode(std::vector<Elem>(n, l.top()));

  std::vector<Elem> values(count, l.bottom());
  auto fits = [&](std::uint64_t p, Elem v) {
    for (std::uint64_t q : earlier_below[p])
      if (!l.leq(values[q], v)) return false;
    for (std::uint64_t q : earlier_above[p])
      if (!l.leq(v, values[q])) return false;
    return true;
  };
  auto recurse = [&](auto& self, std::uint64_t p) -> void {
    if (p == count) {
      visit(FunctionTable(lattice, n, values));
      return;
    }
    if (p == bottom_idx || p == top_idx) {
      const Elem forced = p == bottom_idx ? l.bottom() : l.top();
      if (!fits(p, forced)) return;
      values[p] = forced;
      self(self, p + 1);
      return;
    }
    for (Elem v = 0; v < l.size(); ++v) {
      if (!fits(p, v)) continue;
      values[p] = v;
      self(self, p + 1);
    }
  };
  recurse(recurse, 0);
}

void enumerate_sampled(const LatticePtr& lattice, std::size_t n, std::uint64_t seed, std::uint64_t count,
                       const std::function<void(const FunctionTable&)>& visit) {
  const Lattice& l = *lattice;
  PointCodec codec(l.size(), n);
  if (codec.count() > 10'000'000) throw Error(ErrorCode::EnumerationTooLarge, "|L|^n too large to tabulate");
  const auto height = element_heights(l);
  const std::uint64_t total = codec.count();
  std::vector<std::vector<Elem>> points(total);
  std::vector<std::size_t> point_height(total, 0);
  for (std::uint64_t p = 0; p < total; ++p) {
    points[p] = codec.decode(p);
    for (Elem e : points[p]) point_height[p] += height[e];
  }
  std::vector<std::uint64_t> order(total);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint64_t a, std::uint64_t b) { return point_height[a] < point_height[b]; });

  // Lower covers of each point in the product order: lower one coordinate to
  // one of its lower covers. Their values bound the new entry from below.
  std::vector<std::vector<Elem>> lower(l.size());
  for (Elem e = 0; e < l.size(); ++e) lower[e] = l.lower_covers(e);

  const std::uint64_t top_idx = codec.encode(std::vector<Elem>(n, l.top()));
  std::mt19937_64 rng(seed);
  std::vector<Elem> values(total), choices, scratch(n);
  for (std::uint64_t s = 0; s < count; ++s) {
    for (std::uint64_t p : order) {
      Elem floor = l.bottom();
      for (std::size_t i = 0; i < n; ++i)
        for (Elem lo : lower[points[p][i]]) {
          scratch = points[p];
          scratch[i] = lo;
          floor = l.join(floor, values[codec.encode(scratch)]);
        }
      if (p == top_idx) {
        values[p] = l.top();
        continue;
      }
      if (point_height[p] == 0) {
        values[p] = l.bottom();
        continue;
      }
      choices.clear();
      for (Elem v = 0; v < l.size(); ++v)
        if (l.leq(floor, v)) choices.push_back(v);
      values[p] = choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)];
    }
    visit(FunctionTable(lattice, n, values));
  }
}

}  // namespace

void enumerate_aggregations(const LatticePtr& lattice, std::size_t n, const AggregationEnumeration& options,
                            const std::function<void(const FunctionTable&)>& visit) {
  if (!lattice) throw Error(ErrorCode::LatticeMismatch, "no lattice");
  if (n == 0) throw Error(ErrorCode::ArityMismatch, "arity must be positive");
  if (options.seed)
    enumerate_sampled(lattice, n, *options.seed, options.count, visit);
  else
    enumerate_exhaustive(lattice, n, options.max_points, visit);
}

std::vector<FunctionTable> collect_aggregations(const LatticePtr& lattice, std::size_t n,
                                                const AggregationEnumeration& options) {
  std::vector<FunctionTable> out;
  enumerate_aggregations(lattice, n, options, [&](const FunctionTable& f) { out.push_back(f); });
  return out;
}

}  // namespace lsug
