#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fincat/coslice.hpp"
#include "fincat/enumcat.hpp"
#include "fincat/finset.hpp"
#include "fincat/order.hpp"

namespace fincat {

// Finite sets on canonical carriers 0..bound.
class FinSetCat {
public:
  using Object = FinSet;
  using Morphism = FinFn;

  explicit FinSetCat(std::size_t bound);

  std::string name() const { return "finset"; }
  std::size_t bound() const noexcept { return bound_; }
  std::span<const FinSet> objects() const noexcept { return objects_; }
  std::vector<FinFn> homs(const FinSet& x, const FinSet& y) const { return enumerate_fns(x, y); }
  const FinSet& dom(const FinFn& f) const noexcept { return f.dom(); }
  const FinSet& cod(const FinFn& f) const noexcept { return f.cod(); }
  FinFn compose(const FinFn& g, const FinFn& f) const { return fincat::compose(g, f); }
  FinFn identity(const FinSet& x) const { return FinFn::identity(x); }
  std::span<const Elem> table(const FinFn& f) const noexcept { return f.table(); }
  Json object_json(const FinSet& x) const { return to_json(x); }
  Json morphism_json(const FinFn& f) const { return to_json(f); }

  std::optional<PullbackSquare<FinFn>> pullback(const FinFn& f, const FinFn& g) const;
  std::optional<FinFn> coequalizer(const FinFn& f, const FinFn& g) const;
  std::optional<FinFn> factor_through_epi(const FinFn& q, const FinFn& f) const;
  bool is_iso(const FinFn& f) const { return f.injective() && f.surjective(); }

private:
  std::size_t bound_;
  std::vector<FinSet> objects_;
};

// Finite posets up to isomorphism with at most `bound` elements.
class FinPosCat {
public:
  using Object = FinPreorder;
  using Morphism = MonotoneMap;

  /// Throws BoundExceeded past kMaxPosetEnumeration.
  explicit FinPosCat(std::size_t bound);

  std::string name() const { return "finpos"; }
  std::size_t bound() const noexcept { return bound_; }
  std::span<const FinPreorder> objects() const noexcept { return objects_; }
  std::vector<MonotoneMap> homs(const FinPreorder& x, const FinPreorder& y) const { return enumerate_monotone(x, y); }
  const FinPreorder& dom(const MonotoneMap& f) const noexcept { return f.dom(); }
  const FinPreorder& cod(const MonotoneMap& f) const noexcept { return f.cod(); }
  MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) const { return fincat::compose(g, f); }
  MonotoneMap identity(const FinPreorder& x) const { return MonotoneMap::identity(x); }
  std::span<const Elem> table(const MonotoneMap& f) const noexcept { return f.table(); }
  Json object_json(const FinPreorder& x) const { return to_json(x); }
  Json morphism_json(const MonotoneMap& f) const { return to_json(f); }

  std::optional<PullbackSquare<MonotoneMap>> pullback(const MonotoneMap& f, const MonotoneMap& g) const;
  std::optional<MonotoneMap> coequalizer(const MonotoneMap& f, const MonotoneMap& g) const;
  std::optional<MonotoneMap> factor_through_epi(const MonotoneMap& q, const MonotoneMap& f) const;
  bool is_iso(const MonotoneMap& f) const { return is_order_isomorphism(f); }

private:
  std::size_t bound_;
  std::vector<FinPreorder> objects_;
};

// Objects A -> X up to isomorphism under A, |X| <= bound. The representative
// has X = FinSet::canonical(n) and numbers the image of A in first-occurrence
// order, so the arrow table is a restricted growth string.
class CosliceCat {
public:
  using Object = CoslObj;
  using Morphism = CoslMor;

  CosliceCat(FinSet base, std::size_t bound);

  std::string name() const { return "coslice"; }
  std::size_t bound() const noexcept { return bound_; }
  Json parameters() const { return Json{{"base_size", base_.size()}}; }
  const FinSet& base() const noexcept { return base_; }
  std::span<const CoslObj> objects() const noexcept { return objects_; }
  std::vector<CoslMor> homs(const CoslObj& x, const CoslObj& y) const { return coslice_homs(x, y); }
  const CoslObj& dom(const CoslMor& f) const noexcept { return f.src(); }
  const CoslObj& cod(const CoslMor& f) const noexcept { return f.dst(); }
  CoslMor compose(const CoslMor& g, const CoslMor& f) const { return fincat::compose(g, f); }
  CoslMor identity(const CoslObj& x) const { return CoslMor::identity(x); }
  std::span<const Elem> table(const CoslMor& f) const noexcept { return f.map().table(); }
  Json object_json(const CoslObj& x) const { return to_json(x); }
  Json morphism_json(const CoslMor& f) const { return to_json(f); }

  std::optional<PullbackSquare<CoslMor>> pullback(const CoslMor& f, const CoslMor& g) const;
  std::optional<CoslMor> coequalizer(const CoslMor& f, const CoslMor& g) const;
  std::optional<CoslMor> factor_through_epi(const CoslMor& q, const CoslMor& f) const;
  bool is_iso(const CoslMor& f) const { return f.map().injective() && f.map().surjective(); }

private:
  FinSet base_;
  std::size_t bound_;
  std::vector<CoslObj> objects_;
};

/// Every restricted growth string of the given length with values < n, in
/// lexicographic order.
std::vector<std::vector<Elem>> restricted_growth_strings(std::size_t length, std::size_t n);

/// Coslice pushout of two objects over the same base: the set pushout
/// X +_A Y with its two injections.
struct CoslCoproduct {
  CoslObj object;
  CoslMor in1;
  CoslMor in2;
};
CoslCoproduct coslice_coproduct(const CoslObj& x, const CoslObj& y);

} // namespace fincat
