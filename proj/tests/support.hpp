#pragma once

#include <vector>

#include "lsug/function_table.hpp"
#include "lsug/lattice.hpp"
#include "oracle.hpp"

namespace testing_support {

/// Oracle operations rebuilt from the library's order relation alone.
inline oracle::Ops ops_of(const lsug::Lattice& l) {
  return oracle::from_order(static_cast<int>(l.size()),
                            [&](int a, int b) { return l.leq(static_cast<lsug::Elem>(a), static_cast<lsug::Elem>(b)); });
}

inline std::vector<lsug::Elem> to_elems(const oracle::Vec& v) { return {v.begin(), v.end()}; }

inline oracle::Table to_table(const lsug::FunctionTable& f) {
  return {static_cast<int>(f.arity()), std::vector<int>(f.values().begin(), f.values().end())};
}

inline lsug::FunctionTable to_function(const lsug::LatticePtr& l, const oracle::Table& t) {
  return lsug::FunctionTable(l, static_cast<std::size_t>(t.n), std::vector<lsug::Elem>(t.values.begin(), t.values.end()));
}

/// The distributive lattices used for the exhaustive relation checks.
inline std::vector<lsug::LatticePtr> distributive_zoo() {
  return {lsug::make_chain(2), lsug::make_chain(3), lsug::make_chain(4), lsug::make_chain(5), lsug::make_boolean(2),
          lsug::make_product({lsug::make_chain(2), lsug::make_chain(3)})};
}

}  // namespace testing_support
