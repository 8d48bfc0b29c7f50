#include "lsug/lattice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "lsug/error.hpp"

namespace lsug {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CyclicOrder: return "CyclicOrder";
    case ErrorCode::NoBounds: return "NoBounds";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::EmptyIndexSet: return "EmptyIndexSet";
    case ErrorCode::NotDistributive: return "NotDistributive";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::LatticeMismatch: return "LatticeMismatch";
    case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::BoundaryViolation: return "BoundaryViolation";
    case ErrorCode::MonotonicityViolation: return "MonotonicityViolation";
    case ErrorCode::NotAggregation: return "NotAggregation";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

[[noreturn]] void law_failure(const Lattice& l, const std::string& law, Elem a, Elem b) {
  throw Error(ErrorCode::NotALattice, "lattice '" + l.name() + "' violates " + law + " at (" +
                                          l.element_name(a) + ", " + l.element_name(b) + ")");
}

std::vector<std::uint8_t> order_matrix(const Lattice& l) {
  const std::size_t k = l.size();
  std::vector<std::uint8_t> leq(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) leq[a * k + b] = l.leq(static_cast<Elem>(a), static_cast<Elem>(b));
  return leq;
}

}  // namespace

Lattice::Lattice(const Lattice& other)
    : name_(other.name_),
      names_(other.names_),
      leq_(other.leq_),
      meet_(other.meet_),
      join_(other.join_),
      bottom_(other.bottom_),
      top_(other.top_),
      distributive_(other.distributive_.load()) {}

Lattice& Lattice::operator=(const Lattice& other) {
  if (this != &other) {
    name_ = other.name_;
    names_ = other.names_;
    leq_ = other.leq_;
    meet_ = other.meet_;
    join_ = other.join_;
    bottom_ = other.bottom_;
    top_ = other.top_;
    distributive_.store(other.distributive_.load());
  }
  return *this;
}

Lattice Lattice::from_order(std::string name, std::vector<std::string> names, std::vector<std::uint8_t> leq,
                            Distributivity known) {
  const std::size_t n = names.size();
  if (n == 0) throw Error(ErrorCode::NoBounds, "lattice '" + name + "' has no elements");
  if (n > kMaxLatticeSize)
    throw Error(ErrorCode::EnumerationTooLarge,
                "lattice '" + name + "' has " + std::to_string(n) + " elements, limit is " +
                    std::to_string(kMaxLatticeSize));
  if (leq.size() != n * n) throw Error(ErrorCode::NotALattice, "order matrix has wrong dimensions");
  {
    std::unordered_map<std::string_view, std::size_t> seen;
    for (std::size_t i = 0; i < n; ++i)
      if (!seen.emplace(names[i], i).second)
        throw Error(ErrorCode::NotALattice, "duplicate element name '" + names[i] + "'");
  }

  Lattice l;
  l.name_ = std::move(name);
  l.names_ = std::move(names);
  l.leq_ = std::move(leq);

  // Partial order laws.
  for (Elem a = 0; a < n; ++a) {
    if (!l.leq(a, a)) law_failure(l, "reflexivity", a, a);
    for (Elem b = 0; b < n; ++b) {
      if (a != b && l.leq(a, b) && l.leq(b, a))
        throw Error(ErrorCode::CyclicOrder, "elements '" + l.names_[a] + "' and '" + l.names_[b] +
                                                "' are mutually below each other");
      for (Elem c = 0; c < n; ++c)
        if (l.leq(a, b) && l.leq(b, c) && !l.leq(a, c)) law_failure(l, "transitivity", a, c);
    }
  }

  // Bounds.
  std::optional<Elem> bottom, top;
  for (Elem a = 0; a < n; ++a) {
    bool below_all = true, above_all = true;
    for (Elem b = 0; b < n; ++b) {
      below_all = below_all && l.leq(a, b);
      above_all = above_all && l.leq(b, a);
    }
    if (below_all) bottom = a;
    if (above_all) top = a;
  }
  if (!bottom || !top) throw Error(ErrorCode::NoBounds, "lattice '" + l.name_ + "' lacks a unique bottom or top");
  l.bottom_ = *bottom;
  l.top_ = *top;

  // Meets and joins by bound search: the only candidate for a greatest lower
  // bound is the lower bound with the largest down-set, which is then checked
  // against every other lower bound (dually for joins).
  std::vector<std::size_t> down_count(n, 0), up_count(n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      down_count[a] += l.leq(b, a);
      up_count[a] += l.leq(a, b);
    }
  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      std::optional<Elem> glb, lub;
      for (Elem c = 0; c < n; ++c) {
        if (l.leq(c, a) && l.leq(c, b) && (!glb || down_count[c] > down_count[*glb])) glb = c;
        if (l.leq(a, c) && l.leq(b, c) && (!lub || up_count[c] > up_count[*lub])) lub = c;
      }
      for (Elem d = 0; d < n; ++d) {
        if (glb && l.leq(d, a) && l.leq(d, b) && !l.leq(d, *glb)) glb.reset();
        if (lub && l.leq(a, d) && l.leq(b, d) && !l.leq(*lub, d)) lub.reset();
      }
      if (!glb) throw Error(ErrorCode::NotALattice, "no meet for (" + l.names_[a] + ", " + l.names_[b] + ")");
      if (!lub) throw Error(ErrorCode::NotALattice, "no join for (" + l.names_[a] + ", " + l.names_[b] + ")");
      l.meet_[l.index(a, b)] = *glb;
      l.join_[l.index(a, b)] = *lub;
    }
  }

  // Algebraic laws, checked against the tables themselves.
  for (Elem a = 0; a < n; ++a) {
    if (l.meet(a, a) != a || l.join(a, a) != a) law_failure(l, "idempotence", a, a);
    for (Elem b = 0; b < n; ++b) {
      if (l.meet(a, b) != l.meet(b, a) || l.join(a, b) != l.join(b, a)) law_failure(l, "commutativity", a, b);
      if (l.join(a, l.meet(a, b)) != a || l.meet(a, l.join(a, b)) != a) law_failure(l, "absorption", a, b);
      if (l.leq(a, b) != (l.meet(a, b) == a)) law_failure(l, "order consistency", a, b);
      for (Elem c = 0; c < n; ++c) {
        if (l.meet(a, l.meet(b, c)) != l.meet(l.meet(a, b), c) || l.join(a, l.join(b, c)) != l.join(l.join(a, b), c))
          law_failure(l, "associativity", a, b);
      }
    }
  }

  l.distributive_.store(known);
  return l;
}

const std::string& Lattice::element_name(Elem e) const {
  if (!contains(e))
    throw Error(ErrorCode::UnknownElement, "index " + std::to_string(e) + " is not an element of '" + name_ + "'");
  return names_[e];
}

std::optional<Elem> Lattice::find_element(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Elem>(it - names_.begin());
}

Elem Lattice::element(std::string_view name) const {
  if (auto e = find_element(name)) return *e;
  throw Error(ErrorCode::UnknownElement, "'" + std::string(name) + "' is not an element of '" + name_ + "'");
}

Elem Lattice::checked_meet(Elem a, Elem b) const {
  element_name(a);
  element_name(b);
  return meet(a, b);
}

Elem Lattice::checked_join(Elem a, Elem b) const {
  element_name(a);
  element_name(b);
  return join(a, b);
}

bool Lattice::checked_leq(Elem a, Elem b) const {
  element_name(a);
  element_name(b);
  return leq(a, b);
}

bool Lattice::is_distributive() const {
  auto known = distributive_.load();
  if (known != Distributivity::Unverified) return known == Distributivity::VerifiedTrue;
  const auto n = static_cast<Elem>(size());
  bool ok = true;
  for (Elem x = 0; x < n && ok; ++x)
    for (Elem y = 0; y < n && ok; ++y)
      for (Elem z = 0; z < n && ok; ++z)
        ok = meet(x, join(y, z)) == join(meet(x, y), meet(x, z));
  distributive_.store(ok ? Distributivity::VerifiedTrue : Distributivity::VerifiedFalse);
  return ok;
}

std::vector<Elem> Lattice::lower_covers(Elem e) const {
  std::vector<Elem> out;
  const auto n = static_cast<Elem>(size());
  for (Elem a = 0; a < n; ++a) {
    if (a == e || !leq(a, e)) continue;
    bool cover = true;
    for (Elem b = 0; b < n && cover; ++b)
      if (b != a && b != e && leq(a, b) && leq(b, e)) cover = false;
    if (cover) out.push_back(a);
  }
  return out;
}

std::vector<std::pair<Elem, Elem>> Lattice::covers() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem e = 0; e < size(); ++e)
    for (Elem a : lower_covers(e)) out.emplace_back(a, e);
  std::sort(out.begin(), out.end());
  return out;
}

bool Lattice::operator==(const Lattice& other) const {
  return name_ == other.name_ && names_ == other.names_ && leq_ == other.leq_;
}

LatticePtr make_chain(std::size_t k) {
  if (k < 2) throw Error(ErrorCode::NoBounds, "chain needs at least 2 elements");
  std::vector<std::string> names(k);
  for (std::size_t i = 0; i < k; ++i) names[i] = std::to_string(i);
  std::vector<std::uint8_t> leq(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) leq[a * k + b] = a <= b;
  return std::make_shared<const Lattice>(Lattice::from_order("chain:" + std::to_string(k), std::move(names),
                                                             std::move(leq), Distributivity::VerifiedTrue));
}

LatticePtr make_boolean(std::size_t m) {
  if (m < 1 || (std::size_t{1} << m) > kMaxLatticeSize)
    throw Error(ErrorCode::EnumerationTooLarge, "boolean lattice needs 1 <= m <= 8 atoms");
  const std::size_t k = std::size_t{1} << m;
  std::vector<std::string> names(k);
  for (std::size_t mask = 0; mask < k; ++mask) {
    if (mask == 0) {
      names[mask] = "0";
    } else if (mask == k - 1) {
      names[mask] = "1";
    } else {
      for (std::size_t i = 0; i < m; ++i)
        if (mask >> i & 1u) names[mask].push_back(static_cast<char>('p' + i));
    }
  }
  std::vector<std::uint8_t> leq(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) leq[a * k + b] = (a & ~b) == 0;
  return std::make_shared<const Lattice>(Lattice::from_order("boolean:" + std::to_string(m), std::move(names),
                                                             std::move(leq), Distributivity::VerifiedTrue));
}

LatticePtr make_product(const std::vector<LatticePtr>& factors) {
  if (factors.empty()) throw Error(ErrorCode::NoBounds, "product of zero lattices");
  std::string name = "prod:" + factors.front()->name();
  std::vector<std::string> names = factors.front()->element_names();
  std::vector<std::uint8_t> leq = order_matrix(*factors.front());
  bool dist = factors.front()->distributivity() == Distributivity::VerifiedTrue;
  for (std::size_t f = 1; f < factors.size(); ++f) {
    const Lattice& rhs = *factors[f];
    name += "x" + rhs.name();
    const std::size_t ka = names.size(), kb = rhs.size(), k = ka * kb;
    if (k > kMaxLatticeSize) throw Error(ErrorCode::EnumerationTooLarge, "product exceeds lattice size limit");
    std::vector<std::string> next_names(k);
    std::vector<std::uint8_t> next_leq(k * k);
    for (std::size_t a = 0; a < k; ++a) {
      next_names[a] = names[a / kb] + "." + rhs.element_names()[a % kb];
      for (std::size_t b = 0; b < k; ++b)
        next_leq[a * k + b] =
            leq[(a / kb) * ka + b / kb] && rhs.leq(static_cast<Elem>(a % kb), static_cast<Elem>(b % kb));
    }
    names = std::move(next_names);
    leq = std::move(next_leq);
    dist = dist && rhs.distributivity() == Distributivity::VerifiedTrue;
  }
  return std::make_shared<const Lattice>(Lattice::from_order(
      std::move(name), std::move(names), std::move(leq), dist ? Distributivity::VerifiedTrue : Distributivity::Unverified));
}

LatticePtr make_from_covers(std::string name, std::vector<std::string> elements,
                            const std::vector<std::pair<std::string, std::string>>& covers,
                            std::optional<std::string> bottom, std::optional<std::string> top) {
  const std::size_t n = elements.size();
  if (n == 0) throw Error(ErrorCode::NoBounds, "lattice '" + name + "' has no elements");
  if (n > kMaxLatticeSize) throw Error(ErrorCode::EnumerationTooLarge, "lattice exceeds size limit");
  std::unordered_map<std::string, std::size_t> id;
  for (std::size_t i = 0; i < n; ++i)
    if (!id.emplace(elements[i], i).second)
      throw Error(ErrorCode::NotALattice, "duplicate element name '" + elements[i] + "'");
  auto lookup = [&](const std::string& s) {
    auto it = id.find(s);
    if (it == id.end()) throw Error(ErrorCode::UnknownElement, "'" + s + "' is not a declared element of '" + name + "'");
    return it->second;
  };

  std::vector<std::vector<std::size_t>> up(n);
  for (const auto& [lo, hi] : covers) up[lookup(lo)].push_back(lookup(hi));

  // Cycle detection: iterative DFS with colors.
  std::vector<std::uint8_t> color(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (color[s]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
    color[s] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < up[v].size()) {
        std::size_t w = up[v][next++];
        if (color[w] == 1)
          throw Error(ErrorCode::CyclicOrder, "cover graph of '" + name + "' has a cycle through '" + elements[w] + "'");
        if (color[w] == 0) {
          color[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        color[v] = 2;
        stack.pop_back();
      }
    }
  }

  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> todo{s};
    leq[s * n + s] = 1;
    while (!todo.empty()) {
      std::size_t v = todo.back();
      todo.pop_back();
      for (std::size_t w : up[v])
        if (!leq[s * n + w]) {
          leq[s * n + w] = 1;
          todo.push_back(w);
        }
    }
  }

  auto check_bound = [&](const std::optional<std::string>& declared, bool lower) {
    if (!declared) return;
    std::size_t b = lookup(*declared);
    for (std::size_t x = 0; x < n; ++x)
      if (!(lower ? leq[b * n + x] : leq[x * n + b]))
        throw Error(ErrorCode::NoBounds, "declared " + std::string(lower ? "bottom '" : "top '") + *declared +
                                             "' is not " + (lower ? "below" : "above") + " '" + elements[x] + "'");
  };
  check_bound(bottom, true);
  check_bound(top, false);

  return std::make_shared<const Lattice>(
      Lattice::from_order(std::move(name), std::move(elements), std::move(leq), Distributivity::Unverified));
}

LatticePtr make_n5() {
  return make_from_covers("N5", {"0", "a", "b", "c", "1"}, {{"0", "a"}, {"0", "c"}, {"a", "b"}, {"b", "1"}, {"c", "1"}},
                          "0", "1");
}

LatticePtr make_m3() {
  return make_from_covers("M3", {"0", "a", "b", "c", "1"},
                          {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}}, "0", "1");
}

BirkhoffForm birkhoff(const Lattice& lattice) {
  if (!lattice.is_distributive())
    throw Error(ErrorCode::NotDistributive, "lattice '" + lattice.name() + "' is not distributive");
  BirkhoffForm form;
  for (Elem e = 0; e < lattice.size(); ++e)
    if (e != lattice.bottom() && lattice.lower_covers(e).size() == 1) form.join_irreducibles.push_back(e);
  const std::size_t j = form.ji_count();
  form.ji_leq.resize(j * j);
  for (std::size_t a = 0; a < j; ++a)
    for (std::size_t b = 0; b < j; ++b)
      form.ji_leq[a * j + b] = lattice.leq(form.join_irreducibles[a], form.join_irreducibles[b]);
  form.downset_of.resize(lattice.size());
  for (Elem x = 0; x < lattice.size(); ++x)
    for (std::size_t a = 0; a < j; ++a)
      if (lattice.leq(form.join_irreducibles[a], x)) form.downset_of[x].set(a);
  return form;
}

ExpansionReport distributive_expansion(const Lattice& lattice, const TwoFamily& family) {
  if (family.left.empty() && family.right.empty())
    throw Error(ErrorCode::EmptyIndexSet, "two-family expansion needs a nonempty index set");
  if (family.left.size() != family.right.size())
    throw Error(ErrorCode::ArityMismatch, "families have different index sets");
  const std::size_t size = family.left.size();
  if (size > 20) throw Error(ErrorCode::EnumerationTooLarge, "index set too large for selector expansion");
  for (std::size_t i = 0; i < size; ++i) {
    lattice.element_name(family.left[i]);
    lattice.element_name(family.right[i]);
  }
  auto pick = [&](std::size_t phi, std::size_t i) { return (phi >> i & 1u) ? family.right[i] : family.left[i]; };

  Elem meet_of_joins = lattice.top(), join_of_meets = lattice.bottom();
  for (std::size_t i = 0; i < size; ++i) {
    meet_of_joins = lattice.meet(meet_of_joins, lattice.join(family.left[i], family.right[i]));
    join_of_meets = lattice.join(join_of_meets, lattice.meet(family.left[i], family.right[i]));
  }
  Elem expanded_join = lattice.bottom(), expanded_meet = lattice.top();
  for (std::size_t phi = 0; phi < (std::size_t{1} << size); ++phi) {
    Elem m = lattice.top(), j = lattice.bottom();
    for (std::size_t i = 0; i < size; ++i) {
      m = lattice.meet(m, pick(phi, i));
      j = lattice.join(j, pick(phi, i));
    }
    expanded_join = lattice.join(expanded_join, m);
    expanded_meet = lattice.meet(expanded_meet, j);
  }
  return {meet_of_joins == expanded_join, join_of_meets == expanded_meet};
}

bool distributive_expansion_check(const Lattice& lattice, const TwoFamily& family) {
  return distributive_expansion(lattice, family).holds();
}

}  // namespace lsug
