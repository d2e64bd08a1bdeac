#pragma once

#include <optional>
#include <vector>

#include "fincat/finset.hpp"
#include "fincat/order.hpp"

namespace fincat {

// A functor from a finite poset to finite sets: one set per shape element and
// one function per related pair p <= q.
class Diagram {
public:
  Diagram() = default;
  /// arrows is indexed p * n + q and only read where p <= q. Checks identities,
  /// composition and endpoints; throws InvariantViolation on the first failure.
  Diagram(FinPoset shape, std::vector<FinSet> objects, std::vector<FinFn> arrows);

  /// Builds the arrows for all related pairs from the covering pairs only,
  /// composing along chains; throws if two chains disagree.
  static Diagram from_covers(FinPoset shape, std::vector<FinSet> objects,
                             const std::vector<std::pair<std::pair<Elem, Elem>, FinFn>>& cover_maps);

  const FinPoset& shape() const noexcept { return shape_; }
  const FinSet& obj(Elem p) const { return objects_[p]; }
  /// Throws ShapeMismatch unless p <= q.
  const FinFn& arr(Elem p, Elem q) const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

private:
  FinPoset shape_;
  std::vector<FinSet> objects_;
  std::vector<FinFn> arrows_;
};

// A cone over a diagram: arr(p <= q) . leg(p) == leg(q).
class Cone {
public:
  Cone() = default;
  /// Throws InvariantViolation on the first failing naturality square.
  Cone(FinSet apex, Diagram diagram, std::vector<FinFn> legs);

  const FinSet& apex() const noexcept { return apex_; }
  const Diagram& diagram() const noexcept { return diagram_; }
  const FinFn& leg(Elem p) const { return legs_[p]; }
  std::span<const FinFn> legs() const noexcept { return legs_; }

  friend bool operator==(const Cone&, const Cone&) = default;

private:
  FinSet apex_;
  Diagram diagram_;
  std::vector<FinFn> legs_;
};

struct Limit {
  FinSet carrier;
  /// The limiting cone; its legs are the coordinate projections.
  Cone cone;
  /// Compatible families, in the order of the carrier.
  std::vector<std::vector<Elem>> families;
};

/// Compatible families x with arr(p <= q)(x_p) == x_q, in lexicographic order,
/// labelled "(x_0,x_1,...)".
Limit limit_of_diagram(const Diagram& d);

/// The unique apex -> lim map commuting with all legs.
FinFn cone_to_point(const Cone& c);
FinFn cone_to_point(const Cone& c, const Limit& lim);

/// Legs = limit projections after a. Throws ShapeMismatch if cod(a) is not
/// the limit carrier of d.
Cone point_to_cone(const FinFn& a, const Diagram& d);
Cone point_to_cone(const FinFn& a, const Limit& lim);

/// Arrows for every related pair (indexed p * n + q), composed from the
/// covering maps along a linear extension; nullopt if two chains between the
/// same endpoints disagree.
std::optional<std::vector<FinFn>> arrows_from_covers(
    const FinPoset& shape, const std::vector<FinSet>& objects,
    const std::vector<std::pair<std::pair<Elem, Elem>, FinFn>>& cover_maps);

/// Every functor shape -> FinSet whose values are FinSet::canonical(k) for
/// k <= value_bound, in a fixed deterministic order.
std::vector<Diagram> enumerate_diagrams(const FinPoset& shape, std::size_t value_bound);

/// Every cone with the given apex over d, by brute force over all leg families.
std::vector<Cone> enumerate_cones(const FinSet& apex, const Diagram& d);

} // namespace fincat
