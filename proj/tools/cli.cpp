#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>

#include "lsug/axioms.hpp"
#include "lsug/capacity.hpp"
#include "lsug/cost.hpp"
#include "lsug/error.hpp"
#include "lsug/io.hpp"
#include "lsug/recognizer.hpp"
#include "lsug/relations.hpp"
#include "theorem_suite.hpp"

namespace lsug::cli {

namespace {

struct Args {
  std::string lattice;
  std::size_t arity = 0;
  std::string table;
  std::string capacity;
  std::string x;
  std::string y;
  std::string kind;
  std::string form = "sup";
  std::string method = "boolean";
  std::optional<std::uint64_t> seed;
  std::uint64_t limit = 10'000'000;
  bool unsafe = false;
  std::string scope;
};

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string witness_indices(const RelationWitness& w) {
  std::string s;
  for (std::size_t i : w.indices) s += (s.empty() ? "" : ",") + std::to_string(i + 1);
  return "{" + s + "}";
}

int cmd_lattice_validate(const Args& a, std::ostream& out) {
  LatticePtr l;
  try {
    l = parse_lattice_spec(a.lattice);
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::CyclicOrder:
      case ErrorCode::NoBounds:
      case ErrorCode::NotALattice:
        out << "invalid: " << e.what() << "\n";
        return kExitFails;
      default:
        throw;
    }
  }
  out << "lattice " << l->name() << "\n"
      << "elements " << l->size() << "\n"
      << "covers " << l->covers().size() << "\n"
      << "distributive " << yes_no(l->is_distributive()) << "\n"
      << "valid\n";
  return kExitHolds;
}

int cmd_relations(const Args& a, std::ostream& out) {
  const LatticePtr l = parse_lattice_spec(a.lattice);
  const LVector x = parse_vector(l, a.x), y = parse_vector(l, a.y);
  if (!a.kind.empty()) {
    const RelationKind kind = parse_relation_kind(a.kind);
    const RelationResult r = relation_check(x, y, kind);
    out << to_string(kind) << ": " << yes_no(r.holds) << "\n";
    if (!r.holds) out << "witness indices " << witness_indices(*r.witness) << "\n";
    return r.holds ? kExitHolds : kExitFails;
  }
  for (RelationKind kind : kAllRelations) {
    const RelationResult r = relation_check(x, y, kind);
    out << to_string(kind) << ": " << yes_no(r.holds);
    if (!r.holds) out << " (witness indices " << witness_indices(*r.witness) << ")";
    out << "\n";
  }
  return kExitHolds;
}

int cmd_region(const Args& a, std::ostream& out) {
  const LatticePtr l = parse_lattice_spec(a.lattice);
  const LVector x = parse_vector(l, a.x);
  const RelationKind kind = parse_relation_kind(a.kind.empty() ? "g-comonotone" : a.kind);
  const auto region = relation_region(l, x, kind, a.limit);
  out << "region " << to_string(kind) << " x=" << x.to_string() << " size " << region.size() << "\n";
  for (const auto& v : region) out << v.to_string() << "\n";
  return kExitHolds;
}

int cmd_sugeno(const Args& a, std::ostream& out) {
  const LatticePtr l = parse_lattice_spec(a.lattice);
  const NamedCapacity m = load_capacity(a.capacity, l);
  const LVector x = parse_vector(l, a.x);
  if (a.form != "sup" && a.form != "inf") throw Error(ErrorCode::ParseError, "unknown form '" + a.form + "'");
  const SugenoForm form = a.form == "sup" ? SugenoForm::SupOfMeets : SugenoForm::InfOfJoins;
  out << "Su_" << m.name << x.to_string() << " = " << l->element_name(sugeno(m.capacity, x, form)) << "\n";
  return kExitHolds;
}

int cmd_axioms(const Args& a, std::ostream& out) {
  const LatticePtr l = parse_lattice_spec(a.lattice);
  const NamedTable t = load_table(a.table, l);
  std::vector<AxiomKind> kinds(kAllAxioms.begin(), kAllAxioms.end());
  if (!a.kind.empty()) kinds = {parse_axiom_kind(a.kind)};
  bool all = true;
  for (AxiomKind k : kinds) {
    const AxiomResult r = axiom_check(t.table, k);
    all = all && r.holds;
    out << to_string(k) << ": " << yes_no(r.holds) << " (pairs_checked " << r.pairs_checked << ")\n";
    if (!r.holds) out << "  witness " << r.witness->describe(*l, k) << "\n";
  }
  if (a.kind.empty() && axiom_check(t.table, AxiomKind::MonotoneBoundary).holds) {
    const CheckReport report = theorem3_report(t.table);
    for (std::size_t c = 0; c < kConditionCount; ++c)
      out << "condition (" << condition_label(static_cast<Condition>(c)) << "): " << yes_no(report.conditions[c])
          << "\n";
    out << "conditions agree: " << yes_no(report.theorem3_consistent) << "\n";
  }
  return all ? kExitHolds : kExitFails;
}

int cmd_recognize(const Args& a, std::ostream& out) {
  const LatticePtr l = parse_lattice_spec(a.lattice);
  const NamedTable t = load_table(a.table, l);
  RecognitionMethod method;
  if (a.method == "boolean")
    method = RecognitionMethod::BooleanHomogeneity;
  else if (a.method == "direct")
    method = RecognitionMethod::DirectComparison;
  else
    throw Error(ErrorCode::ParseError, "unknown method '" + a.method + "'");

  RecognitionResult r;
  try {
    r = recognize(t.table, method, {.allow_non_distributive = a.unsafe});
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotAggregation) throw;
    out << "not_sugeno\n"
        << "witness not-aggregation " << e.what() << "\n";
    return kExitFails;
  }
  out << (r.is_sugeno() ? "sugeno" : "not_sugeno") << "\n"
      << "method " << to_string(r.method) << "\n";
  if (r.is_sugeno()) {
    write_capacity(out, *r.capacity, t.name);
  } else {
    const RecognitionWitness& w = *r.witness;
    out << "witness " << to_string(w.kind);
    if (w.constant) out << " c=" << l->element_name(*w.constant);
    out << " x=" << LVector(l, w.x).to_string() << " lhs=" << l->element_name(w.lhs)
        << " rhs=" << l->element_name(w.rhs) << "\n";
  }
  out << "pairs_checked " << r.pairs_checked << "\n"
      << "points_verified " << r.points_verified << "\n";
  return r.is_sugeno() ? kExitHolds : kExitFails;
}

int cmd_theorem_suite(const Args& a, std::ostream& out) {
  const LatticePtr l = parse_lattice_spec(a.lattice);
  SuiteOptions options;
  options.limit = a.limit;
  options.seed = a.seed;
  const SuiteReport report = theorem_suite(parse_scope(a.scope), l, a.arity, options);
  out << format_report(report);
  return report.passed() ? kExitHolds : kExitFails;
}

int cmd_bench(const Args& a, std::ostream& out) {
  const LatticePtr l = parse_lattice_spec(a.lattice);
  std::optional<FunctionTable> f;
  if (!a.table.empty()) {
    f = load_table(a.table, l).table;
  } else {
    if (a.arity == 0) throw Error(ErrorCode::ArityMismatch, "bench needs --arity or --table");
    // Su_m of the largest capacity: m(I) = top for every nonempty I.
    std::vector<Elem> values(std::size_t{1} << a.arity, l->top());
    values[0] = l->bottom();
    f = FunctionTable::of_sugeno(validate_capacity(l, a.arity, std::move(values)));
  }
  const CostModel model = run_bench(*f);
  out << cost_table_header() << "\n" << cost_table_row(model) << "\n";
  out << "reduction_factor " << model.measured_reduction_factor().to_string() << "\n"
      << "analytic_reduction_factor " << model.reduction_factor.to_string() << "\n";
  if (!model.g_comonotone_matches_boolean_count())
    out << "note: g_comonotone_pairs (" << model.g_comonotone_pairs << ") != boolean_pairs ("
        << model.measured_boolean_pairs << ")\n";
  if (model.recognize_boolean_pairs)
    out << "recognize boolean_homogeneity pairs " << *model.recognize_boolean_pairs << "\n"
        << "recognize direct_comparison pairs " << *model.recognize_direct_pairs << "\n";
  return kExitHolds;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite lattice Sugeno-integral toolkit", "lattice-sugeno"};
  app.require_subcommand(1, 1);
  Args a;

  auto lattice_opt = [&](CLI::App* sub) { sub->add_option("--lattice", a.lattice, "lattice descriptor")->required(); };
  auto limit_opt = [&](CLI::App* sub) { sub->add_option("--limit", a.limit, "enumeration limit"); };

  auto* validate = app.add_subcommand("lattice-validate", "validate a lattice descriptor or file");
  lattice_opt(validate);

  auto* relations = app.add_subcommand("relations", "decide the vector relations for x and y");
  lattice_opt(relations);
  relations->add_option("--x", a.x)->required();
  relations->add_option("--y", a.y)->required();
  relations->add_option("--kind", a.kind, "relation name");

  auto* region = app.add_subcommand("region", "list every y related to x");
  lattice_opt(region);
  region->add_option("--x", a.x)->required();
  region->add_option("--kind", a.kind, "relation name");
  limit_opt(region);

  auto* sug = app.add_subcommand("sugeno", "evaluate a Sugeno integral");
  lattice_opt(sug);
  sug->add_option("--capacity", a.capacity)->required();
  sug->add_option("--x", a.x)->required();
  sug->add_option("--form", a.form, "sup|inf");

  auto* axioms = app.add_subcommand("axioms", "check axioms of a function table");
  lattice_opt(axioms);
  axioms->add_option("--table", a.table)->required();
  axioms->add_option("--kind", a.kind, "axiom name (default: all)");

  auto* rec = app.add_subcommand("recognize", "decide whether a table is a Sugeno integral");
  lattice_opt(rec);
  rec->add_option("--table", a.table)->required();
  rec->add_option("--method", a.method, "boolean|direct");
  rec->add_flag("--unsafe", a.unsafe, "allow non-distributive lattices");

  auto* suite = app.add_subcommand("theorem-suite", "run exhaustive invariant suites");
  suite->add_option("scope", a.scope, "thm1|thm2|thm3|prop1|example1|all")->required();
  lattice_opt(suite);
  suite->add_option("--arity", a.arity)->required();
  suite->add_option("--seed", a.seed, "sample aggregation tables instead of enumerating");
  limit_opt(suite);

  auto* bench = app.add_subcommand("bench", "count identity evaluations");
  lattice_opt(bench);
  bench->add_option("--arity", a.arity);
  bench->add_option("--table", a.table);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitHolds;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitHolds;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_lattice_validate(a, out);
    if (relations->parsed()) return cmd_relations(a, out);
    if (region->parsed()) return cmd_region(a, out);
    if (sug->parsed()) return cmd_sugeno(a, out);
    if (axioms->parsed()) return cmd_axioms(a, out);
    if (rec->parsed()) return cmd_recognize(a, out);
    if (suite->parsed()) return cmd_theorem_suite(a, out);
    if (bench->parsed()) return cmd_bench(a, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lsug::cli
