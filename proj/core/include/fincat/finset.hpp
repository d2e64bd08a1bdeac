#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fincat {

/// Index of an element inside a finite carrier.
using Elem = std::size_t;

// A finite set of distinct string labels. Element i is the i-th label.
// The label storage is shared and immutable, so copies are cheap.
class FinSet {
public:
  FinSet();
  explicit FinSet(std::vector<std::string> labels);

  /// {"0", "1", ..., "n-1"}; small sizes are interned.
  static FinSet canonical(std::size_t n);

  std::size_t size() const noexcept { return labels_->size(); }
  bool empty() const noexcept { return labels_->empty(); }
  const std::string& label(Elem i) const { return (*labels_)[i]; }
  std::span<const std::string> labels() const noexcept { return *labels_; }
  std::optional<Elem> index_of(std::string_view label) const;

  friend bool operator==(const FinSet& a, const FinSet& b) noexcept {
    return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
  }

private:
  explicit FinSet(std::shared_ptr<const std::vector<std::string>> labels)
      : labels_(std::move(labels)) {}

  std::shared_ptr<const std::vector<std::string>> labels_;
};

// A total function between finite sets, stored as a lookup table.
class FinFn {
public:
  FinFn() = default;
  FinFn(FinSet dom, FinSet cod, std::vector<Elem> table);

  static FinFn identity(const FinSet& x);

  const FinSet& dom() const noexcept { return dom_; }
  const FinSet& cod() const noexcept { return cod_; }
  std::span<const Elem> table() const noexcept { return table_; }
  Elem operator()(Elem x) const { return table_[x]; }

  bool injective() const;
  bool surjective() const;

  friend bool operator==(const FinFn& a, const FinFn& b) {
    return a.table_ == b.table_ && a.dom_ == b.dom_ && a.cod_ == b.cod_;
  }

private:
  struct Unchecked {};
  FinFn(Unchecked, FinSet dom, FinSet cod, std::vector<Elem> table)
      : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {}
  friend FinFn compose(const FinFn& g, const FinFn& f);
  friend FinFn make_fn_unchecked(FinSet, FinSet, std::vector<Elem>);

  FinSet dom_;
  FinSet cod_;
  std::vector<Elem> table_;
};

/// g after f. Throws ShapeMismatch unless cod(f) == dom(g).
FinFn compose(const FinFn& g, const FinFn& f);

/// For constructions whose output is correct by construction.
FinFn make_fn_unchecked(FinSet dom, FinSet cod, std::vector<Elem> table);

// A binary relation between finite sets; pairs are kept sorted and unique.
class FinRel {
public:
  FinRel() = default;
  FinRel(FinSet dom, FinSet cod, std::vector<std::pair<Elem, Elem>> pairs);

  static FinRel graph(const FinFn& f);

  const FinSet& dom() const noexcept { return dom_; }
  const FinSet& cod() const noexcept { return cod_; }
  std::span<const std::pair<Elem, Elem>> pairs() const noexcept { return pairs_; }
  bool contains(Elem x, Elem y) const;

  friend bool operator==(const FinRel&, const FinRel&) = default;

private:
  FinSet dom_;
  FinSet cod_;
  std::vector<std::pair<Elem, Elem>> pairs_;
};

/// Relational composite "second after first": {(x, z) | exists y. x first y, y second z}.
FinRel compose(const FinRel& second, const FinRel& first);

// An equivalence relation on a finite carrier, stored as a class index per
// element. Always held in canonical form: class ids are 0..k-1 and appear in
// first-occurrence order over the carrier.
class Partition {
public:
  Partition() = default;
  /// Accepts any labelling of the classes and canonicalizes it.
  Partition(FinSet carrier, std::span<const std::size_t> class_of);

  static Partition discrete(const FinSet& carrier);
  static Partition indiscrete(const FinSet& carrier);
  /// The smallest equivalence relation containing the given pairs.
  static Partition generated_by(const FinSet& carrier,
                                std::span<const std::pair<Elem, Elem>> pairs);

  const FinSet& carrier() const noexcept { return carrier_; }
  std::size_t num_classes() const noexcept { return num_classes_; }
  std::size_t class_of(Elem x) const { return class_of_[x]; }
  std::span<const std::size_t> class_ids() const noexcept { return class_of_; }
  bool same_class(Elem x, Elem y) const { return class_of_[x] == class_of_[y]; }
  /// Members of each class, in carrier order.
  std::vector<std::vector<Elem>> classes() const;

  friend bool operator==(const Partition&, const Partition&) = default;

private:
  FinSet carrier_;
  std::vector<std::size_t> class_of_;
  std::size_t num_classes_ = 0;
};

/// A set together with a surjection onto it.
struct SetQuotient {
  FinSet carrier;
  FinFn projection;
};

/// Apex of a pullback of finite sets with its two projections.
struct SetPullback {
  FinSet apex;
  FinFn proj1;
  FinFn proj2;
};

struct FnClass {
  bool mono = false;
  bool epi = false;
  bool regular_epi = false;
  friend bool operator==(const FnClass&, const FnClass&) = default;
};

/// x ~ y iff h(x) == h(y).
Partition kernel_partition(const FinFn& h);

/// True iff every class of p lies inside a class of q. Throws ShapeMismatch
/// on different carriers.
bool refines(const Partition& p, const Partition& q);

/// Set of classes, each labelled by its least-index member, plus the projection.
SetQuotient quotient(const Partition& p);

/// The map quotient(p) -> quotient(q) sending a p-class to the q-class that
/// contains it. Requires refines(p, q).
FinFn induced_map(const Partition& p, const Partition& q);

/// {(x, y) | f(x) == g(y)} labelled "(x,y)", in lexicographic order.
SetPullback pullback_fn(const FinFn& f, const FinFn& g);
SetPullback kernel_pair(const FinFn& f);

/// cod(f) modulo the equivalence generated by f(x) ~ g(x).
SetQuotient coequalizer_fn(const FinFn& f, const FinFn& g);

/// mono: injective; epi: surjective; regular_epi: the comparison from the
/// coequalizer of the kernel pair is a bijection.
FnClass classify_fn(const FinFn& f);

/// The unique m with m . q == f when q is surjective and f is constant on the
/// fibres of q; nullopt otherwise.
std::optional<FinFn> factor_through_surjection(const FinFn& q, const FinFn& f);

/// All tables [0, m)^n in lexicographic order, the first entry being the most
/// significant. Yields exactly one (empty) table when n == 0.
class FunctionTables {
public:
  class iterator {
  public:
    using value_type = std::vector<Elem>;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(std::size_t n, std::size_t m, bool done) : cur_(n, 0), m_(m), done_(done) {}

    const std::vector<Elem>& operator*() const { return cur_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return done_; }

  private:
    std::vector<Elem> cur_;
    std::size_t m_ = 0;
    bool done_ = true;
  };

  FunctionTables(std::size_t n, std::size_t m) : n_(n), m_(m) {}
  iterator begin() const { return {n_, m_, n_ > 0 && m_ == 0}; }
  std::default_sentinel_t end() const { return {}; }

private:
  std::size_t n_;
  std::size_t m_;
};

/// Every function X -> Y, in the order of FunctionTables.
std::vector<FinFn> enumerate_fns(const FinSet& x, const FinSet& y);

/// "(a,b)"
std::string pair_label(std::string_view a, std::string_view b);

/// Deterministic ordering on tables; the checkers use it to sort hom-sets.
inline std::strong_ordering compare_tables(std::span<const Elem> a, std::span<const Elem> b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace fincat
