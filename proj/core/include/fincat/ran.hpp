#pragma once

#include <optional>

#include "fincat/finset.hpp"

namespace fincat {

// An observable A -> Y remembered only through the partition it induces on A.
class RAnObj {
public:
  RAnObj() = default;
  explicit RAnObj(FinFn arrow) : arrow_(std::move(arrow)), kernel_(kernel_partition(arrow_)) {}

  const FinSet& base() const noexcept { return arrow_.dom(); }
  const FinFn& arrow() const noexcept { return arrow_; }
  const Partition& kernel() const noexcept { return kernel_; }

  friend bool operator==(const RAnObj&, const RAnObj&) = default;

private:
  FinFn arrow_;
  Partition kernel_;
};

/// True iff src's kernel refines dst's. Throws ShapeMismatch on different bases.
bool ran_hom_exists(const RAnObj& src, const RAnObj& dst);

/// R = {(k(a), h(a))} for src = k, dst = h. Throws InvariantViolation unless
/// ran_hom_exists(src, dst).
FinRel closing_relation(const RAnObj& src, const RAnObj& dst);

/// R . graph(k) == graph(h), as relations A -> Y.
bool closes_exactly(const FinRel& r, const FinFn& k, const FinFn& h);

/// Some f : cod(k) -> cod(h) with f . k == h, if any (least table first).
std::optional<FinFn> closing_function(const FinFn& k, const FinFn& h);

struct RAnWitness {
  FinFn k;
  FinFn h;
  FinRel relation;
};

struct RAnAudit {
  std::size_t base_bound = 0;
  std::size_t codomain_bound = 0;
  std::size_t pairs = 0;
  /// Pairs (k, h) closed by some function.
  std::size_t function_closed = 0;
  /// Function-closed pairs whose kernels do not refine: must be zero.
  std::size_t implication_violations = 0;
  /// Pairs with refinement.
  std::size_t refining = 0;
  /// Refining pairs whose closing relation fails the exact equation: must be zero.
  std::size_t relation_violations = 0;
  /// Refining pairs with no closing function.
  std::size_t refinement_without_function = 0;
  /// The first such pair in scan order, re-verified.
  std::optional<RAnWitness> witness;

  bool passed() const noexcept {
    return implication_violations == 0 && relation_violations == 0 && witness.has_value();
  }
};

/// Scans every k : A -> X and h : A -> Y with |A| <= base_bound and
/// |X|, |Y| <= codomain_bound over canonical carriers, in order of
/// (|A|, |X|, |Y|, k, h).
RAnAudit an_implies_ran_check(std::size_t base_bound, std::size_t codomain_bound);

} // namespace fincat
