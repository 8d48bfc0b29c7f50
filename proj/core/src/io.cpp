#include "lsug/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "lsug/error.hpp"

namespace lsug {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

[[noreturn]] void parse_fail(const std::string& source, std::size_t line, const std::string& what,
                             std::string_view token) {
  throw Error(ErrorCode::ParseError,
              source + ":" + std::to_string(line) + ": " + what + " '" + std::string(token) + "'");
}

std::optional<std::uint64_t> to_uint(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

/// Reads non-empty, comment-stripped lines with their 1-based line numbers.
std::vector<std::pair<std::size_t, std::string>> content_lines(std::istream& in) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::size_t number = 0;
  for (std::string line; std::getline(in, line);) {
    ++number;
    const std::string stripped = strip_comment(line);
    const auto body = trim(stripped);
    if (!body.empty()) out.emplace_back(number, std::string(body));
  }
  return out;
}

std::ifstream open_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path.string() + "'");
  return in;
}

bool spec_starts_here(std::string_view s) {
  for (std::string_view prefix : {"chain:", "boolean:", "prod:", "file:", "builtin:"})
    if (s.substr(0, prefix.size()) == prefix) return true;
  return false;
}

/// Elements of a parenthesised, comma separated literal.
std::vector<std::string_view> tuple_items(std::string_view literal, char open, char close) {
  literal = trim(literal);
  if (literal.size() < 2 || literal.front() != open || literal.back() != close)
    throw Error(ErrorCode::ParseError, "expected " + std::string(1, open) + "..." + std::string(1, close) +
                                           " but got '" + std::string(literal) + "'");
  std::string_view body = trim(literal.substr(1, literal.size() - 2));
  std::vector<std::string_view> items;
  if (body.empty()) return items;
  std::size_t start = 0;
  while (true) {
    const auto comma = body.find(',', start);
    items.push_back(trim(body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return items;
}

/// tuple_items with the file position attached to any parse failure.
std::vector<std::string_view> tuple_items_at(std::string_view literal, char open, char close,
                                             const std::string& source, std::size_t line) {
  try {
    return tuple_items(literal, open, close);
  } catch (const Error&) {
    parse_fail(source, line, "malformed " + std::string(1, open) + "..." + std::string(1, close) + " literal", literal);
  }
}

struct Header {
  std::string name;
  std::size_t arity = 0;
};

/// "<keyword> <name> over <lattice-name> arity <n>"
Header parse_header(const std::pair<std::size_t, std::string>& line, std::string_view keyword,
                    const Lattice& lattice, const std::string& source) {
  const auto toks = split_ws(line.second);
  if (toks.size() != 6 || toks[0] != keyword || toks[2] != "over" || toks[4] != "arity")
    parse_fail(source, line.first,
               "expected '" + std::string(keyword) + " <name> over <lattice> arity <n>', got", line.second);
  if (toks[3] != lattice.name())
    throw Error(ErrorCode::LatticeMismatch, source + ":" + std::to_string(line.first) + ": declared over '" +
                                                toks[3] + "' but the active lattice is '" + lattice.name() + "'");
  auto n = to_uint(toks[5]);
  if (!n || *n == 0) parse_fail(source, line.first, "bad arity", toks[5]);
  return {toks[1], static_cast<std::size_t>(*n)};
}

/// Splits "<lhs> -> <rhs>".
std::pair<std::string_view, std::string_view> split_arrow(const std::pair<std::size_t, std::string>& line,
                                                          const std::string& source) {
  std::string_view s = line.second;
  const auto arrow = s.find("->");
  if (arrow == std::string_view::npos) parse_fail(source, line.first, "expected '<key> -> <elem>', got", s);
  return {trim(s.substr(0, arrow)), trim(s.substr(arrow + 2))};
}

Elem resolve_element(const Lattice& lattice, std::string_view token, const std::string& source, std::size_t line) {
  if (auto e = lattice.find_element(token)) return *e;
  parse_fail(source, line, "unknown element", token);
}

}  // namespace

LatticePtr parse_lattice_spec(std::string_view spec) {
  spec = trim(spec);
  auto number = [&](std::string_view rest) {
    auto v = to_uint(rest);
    if (!v) throw Error(ErrorCode::ParseError, "bad size in lattice descriptor '" + std::string(spec) + "'");
    return static_cast<std::size_t>(*v);
  };
  if (spec.starts_with("chain:")) return make_chain(number(spec.substr(6)));
  if (spec.starts_with("boolean:")) return make_boolean(number(spec.substr(8)));
  if (spec.starts_with("file:")) return load_lattice(std::string(spec.substr(5)));
  if (spec == "builtin:N5") return make_n5();
  if (spec == "builtin:M3") return make_m3();
  if (spec.starts_with("prod:")) {
    std::string_view rest = spec.substr(5);
    std::vector<LatticePtr> factors;
    std::size_t start = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (rest[i] == 'x' && i > start && spec_starts_here(rest.substr(i + 1))) {
        factors.push_back(parse_lattice_spec(rest.substr(start, i - start)));
        start = i + 1;
      }
    }
    factors.push_back(parse_lattice_spec(rest.substr(start)));
    if (factors.size() < 2) throw Error(ErrorCode::ParseError, "product needs at least two factors in '" + std::string(spec) + "'");
    return make_product(factors);
  }
  throw Error(ErrorCode::ParseError, "unknown lattice descriptor '" + std::string(spec) + "'");
}

LatticePtr read_lattice(std::istream& in, const std::string& source) {
  std::optional<std::string> name, bottom, top;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& [number, text] : content_lines(in)) {
    const auto toks = split_ws(text);
    const std::string& key = toks[0];
    if (key == "lattice") {
      if (toks.size() != 2) parse_fail(source, number, "expected 'lattice <name>', got", text);
      name = toks[1];
    } else if (key == "elements") {
      if (toks.size() < 2) parse_fail(source, number, "no elements listed in", text);
      elements.insert(elements.end(), toks.begin() + 1, toks.end());
    } else if (key == "bottom" || key == "top") {
      if (toks.size() != 2) parse_fail(source, number, "expected '" + key + " <id>', got", text);
      (key == "bottom" ? bottom : top) = toks[1];
    } else if (key == "cover") {
      if (toks.size() != 3) parse_fail(source, number, "expected 'cover <lower> <upper>', got", text);
      covers.emplace_back(toks[1], toks[2]);
    } else {
      parse_fail(source, number, "unknown directive", key);
    }
  }
  if (!name) throw Error(ErrorCode::ParseError, source + ": missing 'lattice <name>' line");
  if (elements.empty()) throw Error(ErrorCode::ParseError, source + ": missing 'elements' line");
  return make_from_covers(*name, std::move(elements), covers, bottom, top);
}

LatticePtr load_lattice(const std::filesystem::path& path) {
  auto in = open_file(path);
  return read_lattice(in, path.string());
}

void write_lattice(std::ostream& out, const Lattice& lattice) {
  out << "lattice " << lattice.name() << "\n";
  out << "elements";
  for (const auto& e : lattice.element_names()) out << ' ' << e;
  out << "\n";
  out << "bottom " << lattice.element_name(lattice.bottom()) << "\n";
  out << "top " << lattice.element_name(lattice.top()) << "\n";
  for (auto [lo, hi] : lattice.covers())
    out << "cover " << lattice.element_name(lo) << ' ' << lattice.element_name(hi) << "\n";
}

LVector parse_vector(const LatticePtr& lattice, std::string_view literal) {
  std::vector<Elem> coords;
  for (auto item : tuple_items(literal, '(', ')')) {
    auto e = lattice->find_element(item);
    if (!e)
      throw Error(ErrorCode::UnknownElement,
                  "'" + std::string(item) + "' is not an element of '" + lattice->name() + "'");
    coords.push_back(*e);
  }
  if (coords.empty()) throw Error(ErrorCode::ParseError, "empty vector literal '" + std::string(literal) + "'");
  return LVector(lattice, std::move(coords));
}

NamedCapacity read_capacity(std::istream& in, const LatticePtr& lattice, const std::string& source) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw Error(ErrorCode::ParseError, source + ": empty capacity file");
  const Header header = parse_header(lines.front(), "capacity", *lattice, source);
  if (header.arity > kMaxArity) parse_fail(source, lines.front().first, "arity too large", std::to_string(header.arity));
  const std::size_t n = header.arity;
  const IndexSet all = full_set(n);
  std::vector<std::optional<Elem>> values(all + 1);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto [key, value] = split_arrow(lines[li], source);
    IndexSet set = 0;
    for (auto item : tuple_items_at(key, '{', '}', source, lines[li].first)) {
      auto idx = to_uint(item);
      if (!idx || *idx < 1 || *idx > n) parse_fail(source, lines[li].first, "index out of range", item);
      if (set >> (*idx - 1) & 1u) parse_fail(source, lines[li].first, "repeated index", item);
      set |= IndexSet{1} << (*idx - 1);
    }
    if (values[set]) parse_fail(source, lines[li].first, "duplicate entry for", key);
    values[set] = resolve_element(*lattice, value, source, lines[li].first);
  }
  if (!values[0]) values[0] = lattice->bottom();
  if (!values[all]) values[all] = lattice->top();
  std::vector<Elem> table(all + 1);
  for (IndexSet s = 0; s <= all; ++s) {
    if (!values[s]) throw Error(ErrorCode::ParseError, source + ": missing entry for subset '" + index_set_to_string(s) + "'");
    table[s] = *values[s];
  }
  return {header.name, validate_capacity(lattice, n, std::move(table))};
}

NamedCapacity load_capacity(const std::filesystem::path& path, const LatticePtr& lattice) {
  auto in = open_file(path);
  return read_capacity(in, lattice, path.string());
}

void write_capacity(std::ostream& out, const Capacity& m, const std::string& name) {
  const Lattice& l = *m.lattice();
  out << "capacity " << name << " over " << l.name() << " arity " << m.arity() << "\n";
  for (IndexSet s = 0; s < m.values().size(); ++s)
    out << index_set_to_string(s) << " -> " << l.element_name(m[s]) << "\n";
}

NamedTable read_table(std::istream& in, const LatticePtr& lattice, const std::string& source) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw Error(ErrorCode::ParseError, source + ": empty table file");
  const Header header = parse_header(lines.front(), "table", *lattice, source);
  PointCodec codec(lattice->size(), header.arity);
  if (codec.count() > 50'000'000) parse_fail(source, lines.front().first, "table too large, |L|^n =", std::to_string(codec.count()));
  std::vector<std::optional<Elem>> values(codec.count());
  std::vector<Elem> x(header.arity);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto [key, value] = split_arrow(lines[li], source);
    const auto items = tuple_items_at(key, '(', ')', source, lines[li].first);
    if (items.size() != header.arity) parse_fail(source, lines[li].first, "wrong arity for input", key);
    for (std::size_t i = 0; i < items.size(); ++i) x[i] = resolve_element(*lattice, items[i], source, lines[li].first);
    const auto idx = codec.encode(x);
    if (values[idx]) parse_fail(source, lines[li].first, "duplicate entry for", key);
    values[idx] = resolve_element(*lattice, value, source, lines[li].first);
  }
  std::vector<Elem> table(codec.count());
  for (std::uint64_t idx = 0; idx < codec.count(); ++idx) {
    if (!values[idx]) {
      codec.decode(idx, x);
      throw Error(ErrorCode::ParseError,
                  source + ": missing entry for input '" + LVector(lattice, x).to_string() + "'");
    }
    table[idx] = *values[idx];
  }
  return {header.name, FunctionTable(lattice, header.arity, std::move(table))};
}

NamedTable load_table(const std::filesystem::path& path, const LatticePtr& lattice) {
  auto in = open_file(path);
  return read_table(in, lattice, path.string());
}

void write_table(std::ostream& out, const FunctionTable& f, const std::string& name) {
  const Lattice& l = *f.lattice();
  out << "table " << name << " over " << l.name() << " arity " << f.arity() << "\n";
  std::vector<Elem> x(f.arity());
  for (std::uint64_t idx = 0; idx < f.size(); ++idx) {
    f.codec().decode(idx, x);
    out << LVector(f.lattice(), x).to_string() << " -> " << l.element_name(f.at(idx)) << "\n";
  }
}

}  // namespace lsug
