#include <gtest/gtest.h>

#include <sstream>

#include "lsug/axioms.hpp"
#include "lsug/error.hpp"
#include "lsug/io.hpp"

using namespace lsug;

namespace {

std::string data(const std::string& file) { return std::string(LSUG_TEST_DATA_DIR) + "/" + file; }

/// Runs fn and returns the error text, failing the test if nothing is thrown.
std::string error_of(ErrorCode code, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
    return e.what();
  }
  ADD_FAILURE() << "expected " << to_string(code);
  return {};
}

NamedTable table_from(const std::string& text, const LatticePtr& l) {
  std::istringstream in(text);
  return read_table(in, l, "t.tbl");
}

NamedCapacity capacity_from(const std::string& text, const LatticePtr& l) {
  std::istringstream in(text);
  return read_capacity(in, l, "m.cap");
}

}  // namespace

TEST(LatticeSpec, Builtins) {
  EXPECT_EQ(*parse_lattice_spec("chain:4"), *make_chain(4));
  EXPECT_EQ(*parse_lattice_spec("boolean:3"), *make_boolean(3));
  EXPECT_EQ(*parse_lattice_spec("builtin:N5"), *make_n5());
  EXPECT_EQ(*parse_lattice_spec("builtin:M3"), *make_m3());
  EXPECT_EQ(*parse_lattice_spec("prod:chain:2xchain:3"), *make_product({make_chain(2), make_chain(3)}));
  EXPECT_EQ(*parse_lattice_spec("prod:boolean:1xchain:2xbuiltin:N5"),
            *make_product({make_boolean(1), make_chain(2), make_n5()}));
  const auto diamond = parse_lattice_spec("file:" + data("diamond.lat"));
  EXPECT_EQ(diamond->name(), "diamond");
  EXPECT_TRUE(diamond->is_distributive());
  error_of(ErrorCode::ParseError, [] { parse_lattice_spec("chain:x"); });
  error_of(ErrorCode::ParseError, [] { parse_lattice_spec("torus:3"); });
  error_of(ErrorCode::ParseError, [] { parse_lattice_spec("prod:chain:2"); });
  error_of(ErrorCode::ParseError, [] { parse_lattice_spec("file:/nonexistent/x.lat"); });
  error_of(ErrorCode::CyclicOrder, [] { parse_lattice_spec("file:" + data("cyclic.lat")); });
}

TEST(LatticeFile, RoundTrip) {
  for (const auto& l : {make_chain(2), make_chain(7), make_boolean(3), make_n5(), make_m3(),
                        make_product({make_chain(3), make_boolean(2)})}) {
    std::ostringstream out;
    write_lattice(out, *l);
    std::istringstream in(out.str());
    const auto back = read_lattice(in);
    EXPECT_EQ(*back, *l) << out.str();
    EXPECT_EQ(back->covers(), l->covers());
  }
}

TEST(LatticeFile, Diagnostics) {
  std::istringstream bad("lattice x\nelements 0 1\n# comment\nfrob 0 1\n");
  const auto msg = error_of(ErrorCode::ParseError, [&] { read_lattice(bad, "x.lat"); });
  EXPECT_NE(msg.find("x.lat:4"), std::string::npos) << msg;
  EXPECT_NE(msg.find("'frob'"), std::string::npos) << msg;
  std::istringstream unbounded("lattice v\nelements a b\n");
  error_of(ErrorCode::NoBounds, [&] { read_lattice(unbounded); });
}

TEST(Vectors, Literals) {
  auto b = make_boolean(2);
  const auto v = parse_vector(b, " ( p , 1,0 ) ");
  EXPECT_EQ(v.coords, (std::vector<Elem>{b->element("p"), b->top(), b->bottom()}));
  EXPECT_EQ(v.to_string(), "(p,1,0)");
  EXPECT_EQ(parse_vector(b, v.to_string()), v);
  error_of(ErrorCode::UnknownElement, [&] { parse_vector(b, "(p,z)"); });
  error_of(ErrorCode::ParseError, [&] { parse_vector(b, "p,q"); });
  error_of(ErrorCode::ParseError, [&] { parse_vector(b, "()"); });
}

TEST(CapacityFile, RoundTripEveryCapacity) {
  for (const auto& [l, n] : std::vector<std::pair<LatticePtr, std::size_t>>{
           {make_chain(3), 2}, {make_boolean(2), 2}, {make_chain(4), 3}}) {
    for (const auto& m : collect_capacities(l, n)) {
      std::ostringstream out;
      write_capacity(out, m, "m");
      const auto back = capacity_from(out.str(), l);
      EXPECT_EQ(back.name, "m");
      ASSERT_EQ(back.capacity, m) << out.str();
    }
  }
}

TEST(CapacityFile, DefaultsAndErrors) {
  auto l = make_chain(3);
  const auto half = load_capacity(data("half.cap"), l);
  EXPECT_EQ(half.name, "half");
  EXPECT_EQ(half.capacity.values(), (std::vector<Elem>{0, 1, 1, 2}));

  auto msg = error_of(ErrorCode::ParseError, [&] { capacity_from("capacity m over chain:3 arity 2\n{1} -> 1\n", l); });
  EXPECT_NE(msg.find("{2}"), std::string::npos) << msg;
  msg = error_of(ErrorCode::ParseError,
                 [&] { capacity_from("capacity m over chain:3 arity 2\n{1} -> 1\n{3} -> 1\n", l); });
  EXPECT_NE(msg.find("m.cap:3"), std::string::npos) << msg;
  EXPECT_NE(msg.find("'3'"), std::string::npos) << msg;
  msg = error_of(ErrorCode::ParseError,
                 [&] { capacity_from("capacity m over chain:3 arity 2\n{1} -> 7\n{2} -> 1\n", l); });
  EXPECT_NE(msg.find("m.cap:2"), std::string::npos) << msg;
  EXPECT_NE(msg.find("'7'"), std::string::npos) << msg;
  msg = error_of(ErrorCode::ParseError, [&] { capacity_from("capacity m over chain:3 arity 2\n1} -> 1\n", l); });
  EXPECT_NE(msg.find("m.cap:2"), std::string::npos) << msg;
  error_of(ErrorCode::LatticeMismatch, [&] { capacity_from("capacity m over chain:4 arity 1\n", l); });
  error_of(ErrorCode::BoundaryViolation, [&] { load_capacity(data("bad.cap"), make_chain(3)); });
}

TEST(TableFile, RoundTripEveryAggregation) {
  for (const auto& [l, n] : std::vector<std::pair<LatticePtr, std::size_t>>{
           {make_chain(3), 2}, {make_boolean(2), 1}, {make_n5(), 1}}) {
    for (const auto& f : collect_aggregations(l, n)) {
      std::ostringstream out;
      write_table(out, f, "f");
      const auto back = table_from(out.str(), l);
      EXPECT_EQ(back.name, "f");
      ASSERT_EQ(back.table, f) << out.str();
    }
  }
}

TEST(TableFile, DataFilesAndErrors) {
  auto l = make_chain(3);
  const auto h = load_table(data("h.tbl"), l);
  EXPECT_EQ(h.name, "h");
  EXPECT_EQ(h.table.values(), (std::vector<Elem>{0, 2, 2, 2, 2, 2, 2, 2, 2}));
  const auto median = load_table(data("median.tbl"), l);
  EXPECT_EQ(median.table.values(), (std::vector<Elem>{0, 1, 1, 1, 1, 1, 1, 1, 2}));

  const std::string header = "table f over chain:3 arity 1\n";
  auto msg = error_of(ErrorCode::ParseError, [&] { table_from(header + "(0) -> 0\n(2) -> 2\n", l); });
  EXPECT_NE(msg.find("(1)"), std::string::npos) << msg;
  msg = error_of(ErrorCode::ParseError, [&] { table_from(header + "(0) -> 0\n(0) -> 1\n", l); });
  EXPECT_NE(msg.find("t.tbl:3"), std::string::npos) << msg;
  msg = error_of(ErrorCode::ParseError, [&] { table_from(header + "(0,1) -> 0\n", l); });
  EXPECT_NE(msg.find("t.tbl:2"), std::string::npos) << msg;
  msg = error_of(ErrorCode::ParseError, [&] { table_from(header + "(0) => 0\n", l); });
  EXPECT_NE(msg.find("t.tbl:2"), std::string::npos) << msg;
  msg = error_of(ErrorCode::ParseError, [&] { table_from("tabel f over chain:3 arity 1\n", l); });
  EXPECT_NE(msg.find("t.tbl:1"), std::string::npos) << msg;
  error_of(ErrorCode::LatticeMismatch, [&] { load_table(data("h.tbl"), make_chain(4)); });
}
