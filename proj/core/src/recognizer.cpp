#include "lsug/recognizer.hpp"

#include "lsug/error.hpp"

namespace lsug {

std::string_view to_string(RecognitionMethod method) {
  return method == RecognitionMethod::BooleanHomogeneity ? "boolean_homogeneity" : "direct_comparison";
}

std::string_view to_string(RecognitionWitness::Kind kind) {
  switch (kind) {
    case RecognitionWitness::Kind::BooleanInfHomogeneity: return "boolean-inf-homogeneity";
    case RecognitionWitness::Kind::BooleanSupHomogeneity: return "boolean-sup-homogeneity";
    case RecognitionWitness::Kind::Disagreement: return "disagreement";
  }
  return "?";
}

Capacity recover_capacity(const FunctionTable& f) {
  require_aggregation(f);
  const std::size_t n = f.arity();
  if (n > kMaxArity) throw Error(ErrorCode::ArityMismatch, "arity too large for capacity recovery");
  const Lattice& l = *f.lattice();
  std::vector<Elem> values(std::size_t{1} << n);
  std::vector<Elem> x(n);
  for (IndexSet set = 0; set < values.size(); ++set) {
    for (std::size_t i = 0; i < n; ++i) x[i] = (set >> i & 1u) ? l.top() : l.bottom();
    values[set] = f(x);
  }
  return validate_capacity(f.lattice(), n, std::move(values));
}

namespace {

// First x with f(x) differing from Su_m(x) in any requested form. Every point
// is visited so the point count does not depend on where the first miss is.
std::optional<RecognitionWitness> first_disagreement(const FunctionTable& f, const Capacity& m, bool both_forms,
                                                     std::uint64_t& points) {
  std::optional<RecognitionWitness> first;
  std::vector<Elem> x(f.arity());
  for (std::uint64_t idx = 0; idx < f.size(); ++idx) {
    f.codec().decode(idx, x);
    ++points;
    Elem su = sugeno(m, x, SugenoForm::SupOfMeets);
    if (f.at(idx) == su && both_forms) su = sugeno(m, x, SugenoForm::InfOfJoins);
    if (f.at(idx) != su && !first) first = RecognitionWitness{RecognitionWitness::Kind::Disagreement, std::nullopt, x, f.at(idx), su};
  }
  return first;
}

}  // namespace

RecognitionResult recognize(const FunctionTable& f, RecognitionMethod method, RecognitionOptions options) {
  const bool distributive = f.lattice()->is_distributive();
  if (!distributive && !options.allow_non_distributive)
    throw Error(ErrorCode::NotDistributive,
                "recognition is only defined on distributive lattices; '" + f.lattice()->name() + "' is not");
  if (!distributive) method = RecognitionMethod::DirectComparison;
  require_aggregation(f);

  RecognitionResult result;
  result.method = method;

  if (method == RecognitionMethod::BooleanHomogeneity) {
    const AxiomResult inf = axiom_check(f, AxiomKind::BooleanInfHomogeneous);
    const AxiomResult sup = axiom_check(f, AxiomKind::BooleanSupHomogeneous);
    result.pairs_checked = inf.pairs_checked + sup.pairs_checked;
    const AxiomResult* failed = !inf.holds ? &inf : (!sup.holds ? &sup : nullptr);
    if (failed) {
      const auto kind = failed == &inf ? RecognitionWitness::Kind::BooleanInfHomogeneity
                                       : RecognitionWitness::Kind::BooleanSupHomogeneity;
      const AxiomWitness& w = *failed->witness;
      result.witness = RecognitionWitness{kind, w.constant, w.x, w.lhs, w.rhs};
      return result;
    }
    // Both Boolean identities hold: the recovered capacity must reproduce f.
    // The comparison is kept as a regression check on the characterization.
    Capacity m = recover_capacity(f);
    if (auto w = first_disagreement(f, m, true, result.points_verified)) {
      result.witness = std::move(w);
      return result;
    }
    result.capacity = std::move(m);
    return result;
  }

  Capacity m = recover_capacity(f);
  std::uint64_t points = 0;
  auto w = first_disagreement(f, m, distributive, points);
  result.pairs_checked = points;
  result.points_verified = points;
  if (w)
    result.witness = std::move(w);
  else
    result.capacity = std::move(m);
  return result;
}

}  // namespace lsug
