#pragma once

#include <memory>
#include <vector>

#include "fincat/finset.hpp"
#include "fincat/order.hpp"

namespace fincat {

// An object of the coslice under a base set A: a function A -> X.
class CoslObj {
public:
  CoslObj() = default;
  explicit CoslObj(FinFn arrow) : arrow_(std::move(arrow)) {}

  const FinSet& base() const noexcept { return arrow_.dom(); }
  const FinSet& carrier() const noexcept { return arrow_.cod(); }
  const FinFn& arrow() const noexcept { return arrow_; }

  friend bool operator==(const CoslObj&, const CoslObj&) = default;

private:
  FinFn arrow_;
};

// A commuting triangle: map . src.arrow == dst.arrow.
class CoslMor {
public:
  CoslMor() = default;
  /// Throws InvariantViolation if the endpoints or the triangle are wrong.
  CoslMor(CoslObj src, CoslObj dst, FinFn map);

  static CoslMor identity(const CoslObj& x);

  const CoslObj& src() const noexcept { return src_; }
  const CoslObj& dst() const noexcept { return dst_; }
  const FinFn& map() const noexcept { return map_; }

  friend bool operator==(const CoslMor&, const CoslMor&) = default;

private:
  struct Unchecked {};
  CoslMor(Unchecked, CoslObj src, CoslObj dst, FinFn map)
      : src_(std::move(src)), dst_(std::move(dst)), map_(std::move(map)) {}
  friend CoslMor make_coslmor_unchecked(CoslObj, CoslObj, FinFn);

  CoslObj src_;
  CoslObj dst_;
  FinFn map_;
};

CoslMor make_coslmor_unchecked(CoslObj src, CoslObj dst, FinFn map);
CoslMor compose(const CoslMor& g, const CoslMor& f);

/// Every triangle src -> dst, in lexicographic table order.
std::vector<CoslMor> coslice_homs(const CoslObj& src, const CoslObj& dst);

// A synthetic model: a poset-shaped diagram of coslice objects over one base,
// i.e. a functor shape -> A/FinSet. Storage is shared and immutable.
class SynObj {
public:
  SynObj();
  /// arr is indexed p * n + q and read only where p <= q. Throws
  /// InvariantViolation naming the first failing equation.
  SynObj(FinPoset shape, FinSet base, std::vector<CoslObj> obj, std::vector<FinFn> arr);

  /// The one-point model whose only value is x (element label "*").
  static SynObj name_of(const CoslObj& x);
  /// Every element decorated by x, every relation by the identity.
  static SynObj constant(const FinPoset& shape, const CoslObj& x);

  const FinPoset& shape() const noexcept { return rep_->shape; }
  const FinSet& base() const noexcept { return rep_->base; }
  std::size_t size() const noexcept { return rep_->shape.size(); }
  const CoslObj& obj(Elem p) const { return rep_->obj[p]; }
  /// Throws ShapeMismatch unless p <= q.
  const FinFn& arr(Elem p, Elem q) const;
  /// The decoration restricted along h: p |-> obj(h(p)). cod(h) must be shape().
  SynObj reindex(const MonotoneMap& h) const;

  friend bool operator==(const SynObj& a, const SynObj& b);

private:
  struct Rep {
    FinPoset shape;
    FinSet base;
    std::vector<CoslObj> obj;
    std::vector<FinFn> arr;
  };
  struct Unchecked {};
  SynObj(Unchecked, FinPoset shape, FinSet base, std::vector<CoslObj> obj, std::vector<FinFn> arr);
  friend SynObj make_synobj_unchecked(FinPoset, FinSet, std::vector<CoslObj>, std::vector<FinFn>);

  std::shared_ptr<const Rep> rep_;
};

SynObj make_synobj_unchecked(FinPoset shape, FinSet base, std::vector<CoslObj> obj, std::vector<FinFn> arr);

// A morphism of synthetic models: a monotone map of shapes along which the
// decorations agree strictly (objects and arrows are equal, not isomorphic).
class SynMor {
public:
  SynMor() = default;
  /// Throws InvariantViolation naming the first failing commutation equation.
  SynMor(SynObj src, SynObj dst, MonotoneMap map);

  static SynMor identity(const SynObj& x);

  const SynObj& src() const noexcept { return src_; }
  const SynObj& dst() const noexcept { return dst_; }
  const MonotoneMap& map() const noexcept { return map_; }

  friend bool operator==(const SynMor& a, const SynMor& b) {
    return a.map_.table().size() == b.map_.table().size() &&
           std::equal(a.map_.table().begin(), a.map_.table().end(), b.map_.table().begin()) &&
           a.src_ == b.src_ && a.dst_ == b.dst_;
  }

private:
  struct Unchecked {};
  SynMor(Unchecked, SynObj src, SynObj dst, MonotoneMap map)
      : src_(std::move(src)), dst_(std::move(dst)), map_(std::move(map)) {}
  friend SynMor make_synmor_unchecked(SynObj, SynObj, MonotoneMap);

  SynObj src_;
  SynObj dst_;
  MonotoneMap map_;
};

SynMor make_synmor_unchecked(SynObj src, SynObj dst, MonotoneMap map);
SynMor compose(const SynMor& g, const SynMor& f);

/// True iff h : shape(src) -> shape(dst) makes the decorations agree strictly.
bool decorations_agree(const SynObj& src, const SynObj& dst, std::span<const Elem> h);

} // namespace fincat
