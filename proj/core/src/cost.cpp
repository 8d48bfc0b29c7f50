#include "lsug/cost.hpp"

#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "lsug/axioms.hpp"
#include "lsug/recognizer.hpp"

namespace lsug {

Rational::Rational(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::pow(std::uint64_t exponent) const {
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (__builtin_mul_overflow(num, num_, &num) || __builtin_mul_overflow(den, den_, &den))
      throw std::overflow_error("rational power overflows 64 bits");
  }
  return {num, den};
}

std::string Rational::to_string() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational CostModel::measured_reduction_factor() const {
  return {measured_full_pairs, measured_boolean_pairs};
}

CostModel cost_model(std::uint64_t k, std::uint64_t n) {
  CostModel model;
  model.k = k;
  model.n = n;
  const std::uint64_t k_pow = checked_power(k, n);
  if (n >= 63 || k_pow == UINT64_MAX || __builtin_mul_overflow(k, k_pow, &model.full_hom_pairs) ||
      __builtin_mul_overflow(k, std::uint64_t{1} << n, &model.boolean_hom_pairs))
    throw std::overflow_error("cost model overflows 64 bits");
  model.reduction_factor = Rational(model.full_hom_pairs, model.boolean_hom_pairs);
  return model;
}

CostModel cost_model(const Lattice& lattice, std::uint64_t n) { return cost_model(lattice.size(), n); }

CostModel run_bench(const FunctionTable& f) {
  CostModel model = cost_model(*f.lattice(), f.arity());
  model.measured_boolean_pairs = axiom_check(f, AxiomKind::BooleanInfHomogeneous).pairs_checked;
  model.measured_full_pairs = axiom_check(f, AxiomKind::InfHomogeneous).pairs_checked;
  model.comonotone_pairs = axiom_check(f, AxiomKind::ComonotoneSupremal).pairs_checked;
  model.g_comonotone_pairs = axiom_check(f, AxiomKind::GComonotoneSupremal).pairs_checked;
  if (f.lattice()->is_distributive() && axiom_check(f, AxiomKind::MonotoneBoundary).holds) {
    model.recognize_boolean_pairs = recognize(f, RecognitionMethod::BooleanHomogeneity).pairs_checked;
    model.recognize_direct_pairs = recognize(f, RecognitionMethod::DirectComparison).pairs_checked;
  }
  return model;
}

std::string cost_table_header() {
  std::ostringstream os;
  os << std::left << std::setw(4) << "k" << std::setw(4) << "n" << std::setw(15) << "boolean_pairs"
     << std::setw(12) << "full_pairs" << std::setw(18) << "comonotone_pairs" << std::setw(20)
     << "g_comonotone_pairs"
     << "reduction_factor";
  return os.str();
}

std::string cost_table_row(const CostModel& model) {
  std::ostringstream os;
  const bool m = model.measured();
  os << std::left << std::setw(4) << model.k << std::setw(4) << model.n << std::setw(15)
     << (m ? model.measured_boolean_pairs : model.boolean_hom_pairs) << std::setw(12)
     << (m ? model.measured_full_pairs : model.full_hom_pairs) << std::setw(18)
     << (m ? std::to_string(model.comonotone_pairs) : "-") << std::setw(20)
     << (m ? std::to_string(model.g_comonotone_pairs) : "-")
     << (m ? model.measured_reduction_factor() : model.reduction_factor).to_string();
  return os.str();
}

}  // namespace lsug
