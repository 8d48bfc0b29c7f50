#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "lsug/capacity.hpp"
#include "lsug/function_table.hpp"
#include "lsug/lattice.hpp"
#include "lsug/vector.hpp"

namespace lsug {

// Text formats are line oriented; '#' starts a comment. Parse failures throw
// Error(ParseError) with "<source>:<line>: ... '<token>'" in the message.

/// chain:<k>, boolean:<m>, prod:<spec>x<spec>[x...], file:<path>, builtin:N5, builtin:M3.
LatticePtr parse_lattice_spec(std::string_view spec);

/// lattice <name> / elements <id>... / bottom <id> / top <id> / cover <lo> <hi>.
LatticePtr read_lattice(std::istream& in, const std::string& source = "<input>");
LatticePtr load_lattice(const std::filesystem::path& path);
/// Emits the Hasse diagram; read_lattice(write_lattice(L)) == L.
void write_lattice(std::ostream& out, const Lattice& lattice);

/// "(e1,e2,...,en)" with element names of `lattice`.
LVector parse_vector(const LatticePtr& lattice, std::string_view literal);

struct NamedCapacity {
  std::string name;
  Capacity capacity;
};

/// capacity <name> over <lattice-name> arity <n>, then "{i,j,...} -> <elem>"
/// lines. Missing {} and [n] entries default to bottom and top; every other
/// subset must be listed. Throws LatticeMismatch when <lattice-name> differs
/// from lattice->name().
NamedCapacity read_capacity(std::istream& in, const LatticePtr& lattice, const std::string& source = "<input>");
NamedCapacity load_capacity(const std::filesystem::path& path, const LatticePtr& lattice);
void write_capacity(std::ostream& out, const Capacity& m, const std::string& name);

struct NamedTable {
  std::string name;
  FunctionTable table;
};

/// table <name> over <lattice-name> arity <n>, then one "(x1,...,xn) -> <elem>"
/// line per input; all |L|^n inputs are required exactly once.
NamedTable read_table(std::istream& in, const LatticePtr& lattice, const std::string& source = "<input>");
NamedTable load_table(const std::filesystem::path& path, const LatticePtr& lattice);
void write_table(std::ostream& out, const FunctionTable& f, const std::string& name);

}  // namespace lsug
