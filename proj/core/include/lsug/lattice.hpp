#pragma once

#include <atomic>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lsug {

/// Index of an element in its lattice's element list.
using Elem = std::uint16_t;

inline constexpr std::size_t kMaxLatticeSize = 256;

enum class Distributivity : std::uint8_t { Unverified, VerifiedTrue, VerifiedFalse };

/// A finite bounded lattice with dense order/meet/join tables.
///
/// Instances are immutable once built (the cached distributivity verdict is
/// the only mutable state, and it is written atomically), so a single
/// `LatticePtr` may be shared between threads.
class Lattice {
public:
  /// Builds a lattice from a reflexive-transitive order matrix (row-major,
  /// `leq[a * size + b]` means a <= b). Meets and joins are derived by bound
  /// search and every lattice law is checked before returning.
  static Lattice from_order(std::string name, std::vector<std::string> names,
                            std::vector<std::uint8_t> leq,
                            Distributivity known = Distributivity::Unverified);

  Lattice(const Lattice& other);
  Lattice& operator=(const Lattice& other);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& element_names() const noexcept { return names_; }
  const std::string& element_name(Elem e) const;

  /// Resolves an element by name. Throws UnknownElement.
  Elem element(std::string_view name) const;
  std::optional<Elem> find_element(std::string_view name) const;

  Elem bottom() const noexcept { return bottom_; }
  Elem top() const noexcept { return top_; }

  Elem meet(Elem a, Elem b) const noexcept { return meet_[index(a, b)]; }
  Elem join(Elem a, Elem b) const noexcept { return join_[index(a, b)]; }
  bool leq(Elem a, Elem b) const noexcept { return leq_[index(a, b)] != 0; }

  /// Checked variants of the table lookups; throw UnknownElement.
  Elem checked_meet(Elem a, Elem b) const;
  Elem checked_join(Elem a, Elem b) const;
  bool checked_leq(Elem a, Elem b) const;

  bool comparable(Elem a, Elem b) const noexcept { return leq(a, b) || leq(b, a); }
  bool contains(Elem e) const noexcept { return e < size(); }

  /// Exhaustive x∧(y∨z) = (x∧y)∨(x∧z) test; the verdict is cached.
  bool is_distributive() const;
  Distributivity distributivity() const noexcept { return distributive_.load(); }

  /// Hasse diagram as (lower, upper) pairs sorted lexicographically.
  std::vector<std::pair<Elem, Elem>> covers() const;
  /// Elements covered by `e`.
  std::vector<Elem> lower_covers(Elem e) const;

  /// Structural equality: same name, element names and order.
  bool operator==(const Lattice& other) const;

private:
  Lattice() = default;
  std::size_t index(Elem a, Elem b) const noexcept { return std::size_t{a} * names_.size() + b; }

  std::string name_;
  std::vector<std::string> names_;
  std::vector<std::uint8_t> leq_;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  Elem bottom_ = 0;
  Elem top_ = 0;
  mutable std::atomic<Distributivity> distributive_{Distributivity::Unverified};
};

using LatticePtr = std::shared_ptr<const Lattice>;

/// k-element chain; elements are named "0" … "k-1" (index i reads as i/(k-1)).
LatticePtr make_chain(std::size_t k);

/// Powerset of m atoms. Atoms are named p, q, r, …; joins of atoms concatenate
/// their names; the empty set is "0" and the full set "1". Element index is
/// the subset bit-mask.
LatticePtr make_boolean(std::size_t m);

/// Direct product, folded left to right. Element names join the component
/// names with '.', element index is mixed-radix with the first factor most
/// significant.
LatticePtr make_product(const std::vector<LatticePtr>& factors);

/// Lattice from a cover relation, `first` covered by `second`. When bottom or
/// top are not given, the unique minimal / maximal element is used.
LatticePtr make_from_covers(std::string name, std::vector<std::string> elements,
                            const std::vector<std::pair<std::string, std::string>>& covers,
                            std::optional<std::string> bottom = std::nullopt,
                            std::optional<std::string> top = std::nullopt);

/// The pentagon 0 < a < b < 1, 0 < c < 1.
LatticePtr make_n5();
/// The diamond: 0, three pairwise incomparable atoms a, b, c, and 1.
LatticePtr make_m3();

/// Birkhoff representation of a finite distributive lattice.
struct BirkhoffForm {
  using Downset = std::bitset<kMaxLatticeSize>;

  /// Join-irreducible elements in index order.
  std::vector<Elem> join_irreducibles;
  /// ji_leq[i * count + j] iff join_irreducibles[i] <= join_irreducibles[j].
  std::vector<std::uint8_t> ji_leq;
  /// Bit i of downset_of[x] is set iff join_irreducibles[i] <= x.
  std::vector<Downset> downset_of;

  std::size_t ji_count() const noexcept { return join_irreducibles.size(); }
  bool ji_below(std::size_t i, std::size_t j) const noexcept { return ji_leq[i * ji_count() + j] != 0; }
};

/// Throws NotDistributive for non-distributive input.
BirkhoffForm birkhoff(const Lattice& lattice);

/// Two families (λ_{i,0})_{i∈I}, (λ_{i,1})_{i∈I} over a common index set.
struct TwoFamily {
  std::vector<Elem> left;
  std::vector<Elem> right;
};

struct ExpansionReport {
  bool meet_of_joins_holds = false;  ///< ⋀(λ0 ∨ λ1) = ⋁_φ ⋀ λ_φ
  bool join_of_meets_holds = false;  ///< ⋁(λ0 ∧ λ1) = ⋀_φ ⋁ λ_φ
  bool holds() const noexcept { return meet_of_joins_holds && join_of_meets_holds; }
};

/// Evaluates both selector-expansion identities directly and through the
/// 2^|I| selector expansion. Throws EmptyIndexSet, ArityMismatch when the
/// families differ in length, UnknownElement for foreign elements.
ExpansionReport distributive_expansion(const Lattice& lattice, const TwoFamily& family);
bool distributive_expansion_check(const Lattice& lattice, const TwoFamily& family);

}  // namespace lsug
