#include "theorem_suite.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lsug/axioms.hpp"
#include "lsug/capacity.hpp"
#include "lsug/error.hpp"
#include "lsug/io.hpp"
#include "lsug/recognizer.hpp"
#include "lsug/relations.hpp"

namespace lsug::cli {

SuiteScope parse_scope(std::string_view name) {
  if (name == "thm1") return SuiteScope::Thm1;
  if (name == "thm2") return SuiteScope::Thm2;
  if (name == "thm3") return SuiteScope::Thm3;
  if (name == "prop1") return SuiteScope::Prop1;
  if (name == "example1") return SuiteScope::Example1;
  if (name == "all") return SuiteScope::All;
  throw Error(ErrorCode::ParseError, "unknown theorem-suite scope '" + std::string(name) + "'");
}

std::string_view to_string(SuiteStatus status) {
  switch (status) {
    case SuiteStatus::Pass: return "pass";
    case SuiteStatus::Fail: return "FAIL";
    case SuiteStatus::Recorded: return "recorded";
    case SuiteStatus::Skipped: return "skipped";
  }
  return "?";
}

bool SuiteReport::passed() const {
  return std::none_of(entries.begin(), entries.end(), [](const SuiteEntry& e) { return e.status == SuiteStatus::Fail; });
}

namespace {

bool is_chain(const Lattice& l) {
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = 0; b < l.size(); ++b)
      if (!l.comparable(a, b)) return false;
  return true;
}

std::string vec_string(const LatticePtr& l, std::span<const Elem> v) {
  return LVector(l, std::vector<Elem>(v.begin(), v.end())).to_string();
}

/// Calls visit(x, y) for every ordered pair in (L^n)^2; returns the pair count.
template <class Visit>
std::uint64_t for_each_pair(const LatticePtr& lattice, std::size_t n, std::uint64_t limit, Visit&& visit) {
  const std::uint64_t points = checked_power(lattice->size(), n);
  const std::uint64_t pairs = checked_power(points, 2);
  if (pairs > limit)
    throw Error(ErrorCode::EnumerationTooLarge,
                count_to_string(pairs) + " vector pairs exceed the limit of " + std::to_string(limit));
  PointCodec codec(lattice->size(), n);
  std::vector<Elem> xs(points * n);
  for (std::uint64_t p = 0; p < points; ++p) codec.decode(p, std::span<Elem>(xs.data() + p * n, n));
  for (std::uint64_t a = 0; a < points; ++a)
    for (std::uint64_t b = 0; b < points; ++b)
      visit(std::span<const Elem>(xs.data() + a * n, n), std::span<const Elem>(xs.data() + b * n, n));
  return pairs;
}

SuiteEntry run_thm1(const LatticePtr& lattice, std::size_t n, const SuiteOptions& options) {
  SuiteEntry entry;
  entry.name = "thm1";
  const Lattice& l = *lattice;
  std::optional<std::string> witness;
  std::uint64_t divergent = 0;
  entry.cases = for_each_pair(lattice, n, options.limit, [&](auto x, auto y) {
    const bool g = relation_holds(l, x, y, RelationKind::GComonotone);
    const bool d = relation_holds(l, x, y, RelationKind::DualGComonotone);
    if (g != d) {
      ++divergent;
      if (!witness)
        witness = "x=" + vec_string(lattice, x) + " y=" + vec_string(lattice, y) + " g-comonotone=" +
                  (g ? "true" : "false") + " dual-g-comonotone=" + (d ? "true" : "false");
    }
  });
  const bool distributive = l.is_distributive();
  if (distributive) {
    entry.status = divergent ? SuiteStatus::Fail : SuiteStatus::Pass;
    entry.summary = std::to_string(entry.cases) + " vector pairs checked, " + std::to_string(divergent) +
                    " with g-comonotone != dual-g-comonotone";
  } else {
    entry.status = SuiteStatus::Recorded;
    entry.summary = "lattice not distributive; " + std::to_string(entry.cases) + " vector pairs searched, " +
                    (divergent ? "divergence witness found (" + std::to_string(divergent) + " divergent pairs)"
                               : std::string("no divergence exists"));
  }
  if (witness) entry.details.push_back("witness: " + *witness);
  return entry;
}

SuiteEntry run_thm2(const LatticePtr& lattice, std::size_t n, const SuiteOptions& options) {
  SuiteEntry entry;
  entry.name = "thm2";
  const Lattice& l = *lattice;
  static constexpr std::array<RelationKind, 4> kinds = {RelationKind::GComonotone, RelationKind::DualGComonotone,
                                                        RelationKind::SubsetwiseJoin, RelationKind::SubsetwiseMeet};
  std::optional<std::string> witness;
  std::uint64_t disagreements = 0;
  entry.cases = for_each_pair(lattice, n, options.limit, [&](auto x, auto y) {
    std::array<bool, 4> v{};
    for (std::size_t i = 0; i < kinds.size(); ++i) v[i] = relation_holds(l, x, y, kinds[i]);
    if (std::all_of(v.begin(), v.end(), [&](bool b) { return b == v[0]; })) return;
    ++disagreements;
    if (!witness) {
      std::string s = "x=" + vec_string(lattice, x) + " y=" + vec_string(lattice, y);
      for (std::size_t i = 0; i < kinds.size(); ++i)
        s += " " + std::string(to_string(kinds[i])) + "=" + (v[i] ? "true" : "false");
      witness = s;
    }
  });
  entry.summary = std::to_string(entry.cases) + " vector pairs checked, " + std::to_string(disagreements) +
                  " where the four conditions disagree";
  if (l.is_distributive()) {
    entry.status = disagreements ? SuiteStatus::Fail : SuiteStatus::Pass;
  } else {
    entry.status = SuiteStatus::Recorded;
    entry.summary = "lattice not distributive; " + entry.summary;
  }
  if (witness) entry.details.push_back("witness: " + *witness);
  return entry;
}

void enumerate_tables(const LatticePtr& lattice, std::size_t n, const SuiteOptions& options,
                      const std::function<void(const FunctionTable&)>& visit) {
  AggregationEnumeration mode;
  if (options.seed) {
    mode.seed = options.seed;
    mode.count = options.sample_count;
  }
  enumerate_aggregations(lattice, n, mode, visit);
}

std::vector<std::string> table_witness(const FunctionTable& f, const CheckReport& report) {
  std::vector<std::string> lines;
  std::ostringstream os;
  write_table(os, f, "witness");
  std::istringstream is(os.str());
  for (std::string line; std::getline(is, line);) lines.push_back("  " + line);
  std::string conds = "conditions:";
  for (std::size_t c = 0; c < kConditionCount; ++c)
    conds += " (" + std::string(condition_label(static_cast<Condition>(c))) + ")=" +
             (report.conditions[c] ? "true" : "false");
  lines.push_back(conds);
  for (const AxiomResult& r : report.axioms)
    if (!r.holds)
      lines.push_back(std::string(to_string(r.kind)) + " fails: " + r.witness->describe(*f.lattice(), r.kind));
  return lines;
}

SuiteEntry run_thm3(const LatticePtr& lattice, std::size_t n, const SuiteOptions& options) {
  SuiteEntry entry;
  entry.name = "thm3";
  if (!lattice->is_distributive()) {
    entry.status = SuiteStatus::Skipped;
    entry.summary = "lattice not distributive; the characterization is only claimed for distributive lattices";
    return entry;
  }
  std::uint64_t sugeno_count = 0, inconsistent = 0, method_mismatch = 0, viii_mismatch = 0;
  std::set<std::vector<Elem>> capacities_seen;
  enumerate_tables(lattice, n, options, [&](const FunctionTable& f) {
    ++entry.cases;
    const CheckReport report = theorem3_report(f);
    const RecognitionResult by_boolean = recognize(f, RecognitionMethod::BooleanHomogeneity);
    const RecognitionResult by_direct = recognize(f, RecognitionMethod::DirectComparison);
    if (by_direct.is_sugeno()) {
      ++sugeno_count;
      capacities_seen.insert(by_direct.capacity->values());
    }
    if (by_boolean.is_sugeno() != by_direct.is_sugeno()) {
      if (!method_mismatch++) entry.details.push_back("recognizer methods disagree on:");
    }
    if (report.condition(Condition::BooleanSupAndBooleanInf) != by_direct.is_sugeno()) ++viii_mismatch;
    if (!report.theorem3_consistent) {
      if (!inconsistent++) {
        entry.details.push_back("first table where conditions (ii)-(viii) disagree (Sugeno integral: " +
                                std::string(by_direct.is_sugeno() ? "yes" : "no") + "):");
        auto lines = table_witness(f, report);
        entry.details.insert(entry.details.end(), lines.begin(), lines.end());
      }
    }
  });
  std::string summary = std::to_string(sugeno_count) + " Sugeno integrals identified among " +
                        std::to_string(entry.cases) + (options.seed ? " sampled" : "") +
                        " aggregation functions; " + std::to_string(inconsistent) +
                        " tables where conditions (ii)-(viii) disagree";
  bool ok = inconsistent == 0 && method_mismatch == 0 && viii_mismatch == 0;
  if (!options.seed) {
    std::uint64_t capacities = 0;
    CapacityEnumeration all;
    all.limit = options.limit;
    enumerate_capacities(lattice, n, all, [&](const Capacity&) { ++capacities; });
    summary += "; capacities: " + std::to_string(capacities);
    ok = ok && capacities == sugeno_count && capacities_seen.size() == sugeno_count;
  }
  if (method_mismatch) summary += "; recognizer methods disagree on " + std::to_string(method_mismatch) + " tables";
  if (viii_mismatch) summary += "; condition (viii) disagrees with recognition on " + std::to_string(viii_mismatch);
  entry.summary = summary;
  entry.status = ok ? SuiteStatus::Pass : SuiteStatus::Fail;
  return entry;
}

SuiteEntry run_prop1(const LatticePtr& lattice, std::size_t n, const SuiteOptions& options) {
  SuiteEntry entry;
  entry.name = "prop1";
  if (!is_chain(*lattice)) {
    entry.status = SuiteStatus::Skipped;
    entry.summary = "lattice is not a chain";
    return entry;
  }
  std::uint64_t sugeno_count = 0, mismatches = 0;
  enumerate_tables(lattice, n, options, [&](const FunctionTable& f) {
    ++entry.cases;
    const CheckReport report = theorem3_report(f);
    const bool sugeno = recognize(f, RecognitionMethod::DirectComparison).is_sugeno();
    sugeno_count += sugeno;
    // Comonotone maxitive + min-homogeneous, and the dual pair.
    const bool maxitive_form = report.condition(Condition::InfHomAndComSupremal);
    const bool minitive_form = report.condition(Condition::SupHomAndComInfimal);
    if (maxitive_form != sugeno || minitive_form != sugeno) {
      if (!mismatches++) {
        entry.details.push_back("first mismatching table:");
        auto lines = table_witness(f, report);
        entry.details.insert(entry.details.end(), lines.begin(), lines.end());
      }
    }
  });
  entry.summary = std::to_string(sugeno_count) + " Sugeno integrals among " + std::to_string(entry.cases) +
                  " aggregation functions; " + std::to_string(mismatches) + " mismatches";
  entry.status = mismatches ? SuiteStatus::Fail : SuiteStatus::Pass;
  return entry;
}

SuiteEntry run_example1(const LatticePtr& lattice, const SuiteOptions& options) {
  SuiteEntry entry;
  entry.name = "example1";
  if (!is_chain(*lattice)) {
    entry.status = SuiteStatus::Skipped;
    entry.summary = "lattice is not a chain";
    return entry;
  }
  constexpr std::size_t n = 2;
  PointCodec codec(lattice->size(), n);
  std::uint64_t failures = 0;
  for (std::uint64_t idx = 0; idx < codec.count(); ++idx) {
    LVector x(lattice, codec.decode(idx));
    auto a = relation_region(lattice, x, RelationKind::Comonotone, options.limit);
    auto b = relation_region(lattice, x, RelationKind::Comparable, options.limit);
    auto c = relation_region(lattice, x, RelationKind::GComonotone, options.limit);
    std::set<std::vector<Elem>> a_or_b, c_set;
    for (const auto& v : a) a_or_b.insert(v.coords);
    for (const auto& v : b) a_or_b.insert(v.coords);
    for (const auto& v : c) c_set.insert(v.coords);
    ++entry.cases;
    if (a_or_b != c_set && !failures++)
      entry.details.push_back("C(x) != A(x) ∪ B(x) for x=" + x.to_string());
  }
  entry.summary = std::to_string(entry.cases) + " base vectors x in L^2 checked, " + std::to_string(failures) +
                  " with C(x) != A(x) ∪ B(x)";
  entry.status = failures ? SuiteStatus::Fail : SuiteStatus::Pass;
  return entry;
}

}  // namespace

SuiteReport theorem_suite(SuiteScope scope, const LatticePtr& lattice, std::size_t arity,
                          const SuiteOptions& options) {
  if (arity == 0) throw Error(ErrorCode::ArityMismatch, "arity must be positive");
  SuiteReport report;
  const bool all = scope == SuiteScope::All;
  if (all || scope == SuiteScope::Thm1) report.entries.push_back(run_thm1(lattice, arity, options));
  if (all || scope == SuiteScope::Thm2) report.entries.push_back(run_thm2(lattice, arity, options));
  if (all || scope == SuiteScope::Thm3) report.entries.push_back(run_thm3(lattice, arity, options));
  if (all || scope == SuiteScope::Prop1) report.entries.push_back(run_prop1(lattice, arity, options));
  if (all || scope == SuiteScope::Example1) report.entries.push_back(run_example1(lattice, options));
  return report;
}

std::string format_report(const SuiteReport& report) {
  std::ostringstream os;
  for (const auto& e : report.entries) {
    os << e.name << ": " << to_string(e.status) << " (" << e.summary << ")\n";
    for (const auto& d : e.details) os << "  " << d << "\n";
  }
  os << "overall: " << (report.passed() ? "pass" : "FAIL") << "\n";
  return os.str();
}

}  // namespace lsug::cli
