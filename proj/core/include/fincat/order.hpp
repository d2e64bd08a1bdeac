#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fincat/finset.hpp"

namespace fincat {

// A reflexive, transitive relation on a finite carrier, stored as a dense
// row-major 0/1 matrix: leq(x, y) == matrix[x * n + y].
class FinPreorder {
public:
  FinPreorder() = default;
  /// Throws InvariantViolation naming the first failing element or triple.
  FinPreorder(FinSet carrier, std::vector<std::uint8_t> leq);

  /// Reflexive-transitive closure of the given pairs.
  static FinPreorder generated_by(const FinSet& carrier, std::span<const std::pair<Elem, Elem>> pairs);
  static FinPreorder discrete(const FinSet& carrier);

  const FinSet& carrier() const noexcept { return carrier_; }
  std::size_t size() const noexcept { return carrier_.size(); }
  bool leq(Elem x, Elem y) const { return leq_[x * size() + y] != 0; }
  bool less(Elem x, Elem y) const { return x != y && leq(x, y); }
  std::span<const std::uint8_t> matrix() const noexcept { return leq_; }

  bool is_antisymmetric() const;
  /// Number of pairs x != y with x <= y.
  std::size_t strict_relation_count() const;

  friend bool operator==(const FinPreorder& a, const FinPreorder& b) {
    return a.leq_ == b.leq_ && a.carrier_ == b.carrier_;
  }

protected:
  struct Unchecked {};
  FinPreorder(Unchecked, FinSet carrier, std::vector<std::uint8_t> leq)
      : carrier_(std::move(carrier)), leq_(std::move(leq)) {}

  FinSet carrier_;
  std::vector<std::uint8_t> leq_;

  friend FinPreorder make_preorder_unchecked(FinSet, std::vector<std::uint8_t>);
};

/// For constructions whose output is reflexive and transitive by construction.
FinPreorder make_preorder_unchecked(FinSet carrier, std::vector<std::uint8_t> leq);

// A preorder that is also antisymmetric.
class FinPoset : public FinPreorder {
public:
  FinPoset() = default;
  explicit FinPoset(FinPreorder order);
  FinPoset(FinSet carrier, std::vector<std::uint8_t> leq);

  static FinPoset chain(const FinSet& carrier);
  static FinPoset antichain(const FinSet& carrier);

  /// Covering pairs x < y with nothing strictly between, lexicographic.
  std::vector<std::pair<Elem, Elem>> covers() const;
};

// An order-preserving map between preorders (posets are preorders).
class MonotoneMap {
public:
  MonotoneMap() = default;
  /// Throws InvariantViolation if the table is not total or not monotone.
  MonotoneMap(FinPreorder dom, FinPreorder cod, std::vector<Elem> table);

  static MonotoneMap identity(const FinPreorder& x);

  const FinPreorder& dom() const noexcept { return dom_; }
  const FinPreorder& cod() const noexcept { return cod_; }
  std::span<const Elem> table() const noexcept { return table_; }
  Elem operator()(Elem x) const { return table_[x]; }

  FinFn underlying() const;

  friend bool operator==(const MonotoneMap& a, const MonotoneMap& b) {
    return a.table_ == b.table_ && a.dom_ == b.dom_ && a.cod_ == b.cod_;
  }

private:
  struct Unchecked {};
  MonotoneMap(Unchecked, FinPreorder dom, FinPreorder cod, std::vector<Elem> table)
      : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {}
  friend MonotoneMap make_monotone_unchecked(FinPreorder, FinPreorder, std::vector<Elem>);

  FinPreorder dom_;
  FinPreorder cod_;
  std::vector<Elem> table_;
};

MonotoneMap make_monotone_unchecked(FinPreorder dom, FinPreorder cod, std::vector<Elem> table);

/// g after f.
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);

/// True iff the table is total on dom and x <= y implies t(x) <= t(y).
bool is_monotone(const FinPreorder& dom, const FinPreorder& cod, std::span<const Elem> table);

/// Bijective on elements and order-reflecting.
bool is_order_isomorphism(const MonotoneMap& f);

struct Reflection {
  FinPoset poset;
  MonotoneMap unit;
};

struct PosPullback {
  FinPoset apex;
  MonotoneMap proj1;
  MonotoneMap proj2;
};

struct PreorderQuotient {
  FinPreorder quotient;
  MonotoneMap projection;
};

struct PosQuotient {
  FinPoset quotient;
  MonotoneMap projection;
};

struct PosClass {
  bool epi = false;
  bool regular_epi = false;
  friend bool operator==(const PosClass&, const PosClass&) = default;
};

/// Quotient by x ~ y iff x <= y <= x; the unit is the projection.
Reflection posetal_reflection(const FinPreorder& x);

/// Equal-image pairs with the componentwise order, labelled "(x,y)".
PosPullback pullback_pos(const MonotoneMap& f, const MonotoneMap& g);
PosPullback kernel_pair_pos(const MonotoneMap& f);

/// Set-level coequalizer carrying the reflexive-transitive closure of the
/// image of cod's order. Classes are labelled by their sorted member labels
/// joined with "=".
PreorderQuotient coequalizer_preord(const MonotoneMap& f, const MonotoneMap& g);

/// Posetal reflection of coequalizer_preord; the projection is the composite.
PosQuotient coequalizer_pos(const MonotoneMap& f, const MonotoneMap& g);

/// epi: surjective on elements; regular_epi: the comparison out of the
/// coequalizer of the kernel pair is an order isomorphism.
PosClass classify_pos(const MonotoneMap& f);

/// Unique m with m . q == f, if q is surjective, f is constant on the fibres
/// of q and the resulting table is monotone.
std::optional<MonotoneMap> factor_through_surjection(const MonotoneMap& q, const MonotoneMap& f);

/// "a=b=c" from the labels of the given members, sorted.
std::string class_label(const FinSet& carrier, std::span<const Elem> members);

// Canonical labelling. Elements are first split into cells by an isomorphism
// invariant (down-set size, up-set size, covering in/out degree); positions
// are assigned cell by cell and, within cells, by backtracking over every
// order, keeping the lexicographically largest leq code.
struct CanonicalForm {
  /// position -> original element
  std::vector<Elem> order;
  /// leq matrix in canonical positions, row-major
  std::vector<std::uint8_t> code;
};

CanonicalForm canonical_form(const FinPreorder& x);
/// x relabelled to canonical positions with carrier FinSet::canonical(n).
FinPoset canonical_poset(const FinPoset& x);
bool are_isomorphic(const FinPreorder& a, const FinPreorder& b);

/// Order automorphisms, as element permutations (identity first).
std::vector<std::vector<Elem>> automorphisms(const FinPreorder& x);

/// Largest poset size the enumerators accept.
inline constexpr std::size_t kMaxPosetEnumeration = 6;

/// Posets on exactly n elements up to isomorphism, in canonical order:
/// fewer strict relations first, then by canonical code (descending).
/// Carriers are FinSet::canonical(n). Throws BoundExceeded past the limit.
std::vector<FinPoset> enumerate_posets(std::size_t n);
/// Concatenation of enumerate_posets(0..n).
std::vector<FinPoset> enumerate_posets_up_to(std::size_t n);

/// Every labelled preorder on FinSet::canonical(n).
std::vector<FinPreorder> enumerate_preorders(std::size_t n);

/// All monotone maps X -> Y in lexicographic table order.
std::vector<MonotoneMap> enumerate_monotone(const FinPreorder& x, const FinPreorder& y);

} // namespace fincat
