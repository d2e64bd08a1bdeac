#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fincat/coslice.hpp"
#include "fincat/counterexample.hpp"
#include "fincat/diagram.hpp"
#include "fincat/enumcat.hpp"
#include "fincat/instances.hpp"

namespace fincat {

/// The identity arrow of the base as a coslice object.
CoslObj base_identity(const FinSet& base);

/// Every arrow base -> FinSet::canonical(n), n <= value_bound, ordered by n
/// then table.
std::vector<CoslObj> coslice_values(const FinSet& base, std::size_t value_bound);

/// Every decoration of `shape` by values from `catalog` (functors into the
/// coslice, arrows composed from covering maps), in a fixed order.
std::vector<SynObj> enumerate_decorations(const FinPoset& shape, const FinSet& base,
                                          std::span<const CoslObj> catalog);

// The strict comma category over Pos: shapes with at most bound + 1 elements
// up to isomorphism, decorated by coslice objects on canonical carriers of
// size <= value_bound, plus the identity of the base. Objects are taken up to
// shape automorphism; the representative has the least decoration key.
class CommaCat {
public:
  using Object = SynObj;
  using Morphism = SynMor;

  static constexpr std::size_t kMaxBound = 3;
  static constexpr std::size_t kMaxBaseSize = 2;
  static constexpr std::size_t kMaxValueBound = 2;

  /// Throws BoundExceeded past the limits above.
  CommaCat(FinSet base, std::size_t bound, std::size_t value_bound = 2);

  std::string name() const { return "comma"; }
  std::size_t bound() const noexcept { return bound_; }
  Json parameters() const;
  const FinSet& base() const noexcept { return base_; }
  std::size_t max_shape_size() const noexcept { return bound_ + 1; }
  std::span<const CoslObj> catalog() const noexcept { return catalog_; }
  std::span<const SynObj> objects() const noexcept { return objects_; }
  /// Monotone maps along which decorations agree, in lexicographic order.
  std::vector<SynMor> homs(const SynObj& x, const SynObj& y) const;
  const SynObj& dom(const SynMor& f) const noexcept { return f.src(); }
  const SynObj& cod(const SynMor& f) const noexcept { return f.dst(); }
  SynMor compose(const SynMor& g, const SynMor& f) const { return fincat::compose(g, f); }
  SynMor identity(const SynObj& x) const { return SynMor::identity(x); }
  std::span<const Elem> table(const SynMor& f) const noexcept { return f.map().table(); }
  Json object_json(const SynObj& x) const { return to_json(x); }
  Json morphism_json(const SynMor& f) const { return to_json(f); }

  /// The Pos pullback of the shapes, decorated through the first projection.
  std::optional<PullbackSquare<SynMor>> pullback(const SynMor& f, const SynMor& g) const;
  /// The Pos coequalizer of the shapes with the decoration induced along
  /// paths; nullopt when no decoration makes the projection a morphism.
  std::optional<SynMor> coequalizer(const SynMor& f, const SynMor& g) const;
  std::optional<SynMor> factor_through_epi(const SynMor& q, const SynMor& f) const;
  bool is_iso(const SynMor& f) const { return is_order_isomorphism(f.map()); }

private:
  FinSet base_;
  std::size_t bound_;
  std::size_t value_bound_;
  std::vector<CoslObj> catalog_;
  std::vector<SynObj> objects_;
};

/// Every monotone h : shape(x) -> shape(y) with decorations agreeing, in
/// lexicographic order.
std::vector<SynMor> synthetic_homs(const SynObj& x, const SynObj& y);

// A natural transformation between two functors shape -> coslice over the
// same shape; components are the underlying maps of coslice morphisms.
class NatTrans {
public:
  NatTrans() = default;
  /// Throws InvariantViolation on a bad component or a failing square.
  NatTrans(SynObj src, SynObj dst, std::vector<FinFn> components);

  const SynObj& src() const noexcept { return src_; }
  const SynObj& dst() const noexcept { return dst_; }
  const FinFn& component(Elem p) const { return components_[p]; }
  /// Concatenated component tables.
  std::span<const Elem> key() const noexcept { return key_; }

  friend bool operator==(const NatTrans& a, const NatTrans& b) {
    return a.key_ == b.key_ && a.src_ == b.src_ && a.dst_ == b.dst_;
  }

private:
  struct Unchecked {};
  NatTrans(Unchecked, SynObj src, SynObj dst, std::vector<FinFn> components);
  friend NatTrans make_nattrans_unchecked(SynObj, SynObj, std::vector<FinFn>);

  SynObj src_;
  SynObj dst_;
  std::vector<FinFn> components_;
  std::vector<Elem> key_;
};

NatTrans make_nattrans_unchecked(SynObj src, SynObj dst, std::vector<FinFn> components);
NatTrans compose(const NatTrans& g, const NatTrans& f);
Json to_json(const NatTrans& t);

// The fiber over a fixed shape P, as the category of functors P -> coslice
// (values on canonical carriers of size <= value_bound) and natural
// transformations between them.
class FiberCat {
public:
  using Object = SynObj;
  using Morphism = NatTrans;

  static constexpr std::size_t kMaxShape = 4;
  static constexpr std::size_t kMaxBaseSize = 3;
  static constexpr std::size_t kMaxValueBound = 3;

  /// Throws BoundExceeded past the limits above.
  FiberCat(FinPoset shape, FinSet base, std::size_t value_bound);

  std::string name() const { return "fiber"; }
  std::size_t bound() const noexcept { return value_bound_; }
  Json parameters() const;
  const FinPoset& shape() const noexcept { return shape_; }
  std::span<const SynObj> objects() const noexcept { return objects_; }
  std::vector<NatTrans> homs(const SynObj& x, const SynObj& y) const;
  const SynObj& dom(const NatTrans& f) const noexcept { return f.src(); }
  const SynObj& cod(const NatTrans& f) const noexcept { return f.dst(); }
  NatTrans compose(const NatTrans& g, const NatTrans& f) const { return fincat::compose(g, f); }
  NatTrans identity(const SynObj& x) const;
  std::span<const Elem> table(const NatTrans& f) const noexcept { return f.key(); }
  Json object_json(const SynObj& x) const { return to_json(x); }
  Json morphism_json(const NatTrans& f) const { return fincat::to_json(f); }

private:
  FinPoset shape_;
  FinSet base_;
  std::size_t value_bound_;
  std::vector<SynObj> objects_;
};

/// Same as constructing FiberCat.
FiberCat fiber(const FinPoset& shape, const FinSet& base, std::size_t value_bound);

FinPoset projection_S(const SynObj& x);
MonotoneMap projection_S(const SynMor& f);

/// The one-point model of x.
SynObj name_embedding(const CoslObj& x);

struct FiberCheck {
  std::size_t fiber_objects = 0;
  /// Pairs (D, a) with D : P -> FinSet and a : A -> lim D.
  std::size_t coslice_objects = 0;
  bool object_bijection = false;
  std::size_t hom_pairs = 0;
  std::size_t homs = 0;
  std::size_t hom_mismatches = 0;
  /// Morphisms of the strict comma over the identity of P that are not
  /// identities, among all pairs of fiber objects: must be zero.
  std::size_t strict_non_identity = 0;

  bool passed() const noexcept { return object_bijection && hom_mismatches == 0 && strict_non_identity == 0; }
  Json to_json() const;
};

/// Compares the fiber with pairs (D, a : A -> lim D), morphisms being
/// natural D => D' whose induced map on limits carries a to a'. Both sides
/// are enumerated independently.
FiberCheck fiber_as_coslice_check(const FinPoset& shape, const FinSet& base, std::size_t value_bound);

struct ConePointCheck {
  std::size_t diagrams = 0;
  std::size_t apexes = 0;
  std::size_t cones = 0;
  std::size_t points = 0;
  std::size_t count_mismatches = 0;
  std::size_t round_trip_failures = 0;

  bool passed() const noexcept { return count_mismatches == 0 && round_trip_failures == 0; }
  Json to_json() const;
};

/// For every poset shape with at most max_shape elements (up to isomorphism),
/// every diagram with values <= value_bound and every apex of size <=
/// max_apex: |cones| == |apex -> lim| and both conversions invert each other.
ConePointCheck cone_point_correspondence(std::size_t max_shape, std::size_t value_bound, std::size_t max_apex);

/// Every element decorated by the identity of the base.
SynObj constant_decoration(const FinPoset& shape, const FinSet& base);

struct LiftedCounterexample {
  CounterexampleBundle pos;
  SynObj a;
  SynObj b;
  SynObj c;
  SynMor p;
  SynMor i;
  PullbackSquare<SynMor> square;
  RegularEpiVerdict p_regular;
  RegularEpiVerdict u_prime_regular;
  RegularEpiVerdict u_prime_search;
  bool u_prime_epi = false;
  bool square_is_pullback = false;
  bool projection_matches = false;
};

/// Decorates the Pos counterexample with constant functors and classifies it
/// in `cat`. Throws DefectError if any expected classification fails.
LiftedCounterexample lift_counterexample(const CommaCat& cat);
Json to_json(const LiftedCounterexample& l);

/// Decorations x, y, z of dom f, cod f and cod q. Throws InvariantViolation if
/// they do not commute with the maps.
Verdict check_c1(const CommaCat& cat, const MonotoneMap& f, const MonotoneMap& g, const MonotoneMap& q,
                 const SynObj& x, const SynObj& y, const SynObj& z);

/// Square f . proj1 == g . proj2 with decorations of dom f, dom g, cod f and
/// the apex. Throws InvariantViolation if they do not commute with the maps.
Verdict check_c2(const CommaCat& cat, const PullbackSquare<MonotoneMap>& sq, const SynObj& x, const SynObj& y,
                 const SynObj& z, const SynObj& apex);

struct CoproductWitness {
  CoslObj x;
  CoslObj y;
  CoslCoproduct coslice;
  bool coslice_verified = false;
  SynObj comma;
  SynMor comma_in1;
  SynMor comma_in2;
  bool comma_verified = false;
  SynObj name_of_coslice;
  bool preserved = true;
};

/// Two copies of the base identity: their coslice coproduct is one object
/// whose name has a one-point shape, while their comma coproduct has a
/// two-point shape. Both universal properties are checked by enumeration in
/// CosliceCat(base, bound) and `cat`.
CoproductWitness coproduct_nonpreservation_witness(const CommaCat& cat);
Json to_json(const CoproductWitness& w);

} // namespace fincat
