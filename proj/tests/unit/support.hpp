#pragma once

#include <vector>

#include "fincat/finset.hpp"
#include "fincat/order.hpp"

namespace fincat::test {

/// Every function between canonical carriers of size <= bound.
inline std::vector<FinFn> all_fns_up_to(std::size_t bound) {
  std::vector<FinFn> out;
  for (std::size_t n = 0; n <= bound; ++n)
    for (std::size_t m = 0; m <= bound; ++m)
      for (auto& f : enumerate_fns(FinSet::canonical(n), FinSet::canonical(m))) out.push_back(std::move(f));
  return out;
}

/// Every partition of FinSet::canonical(n), each once.
inline std::vector<Partition> all_partitions(std::size_t n) {
  std::vector<Partition> out;
  const FinSet x = FinSet::canonical(n);
  for (auto& f : enumerate_fns(x, x)) {
    Partition p = kernel_partition(f);
    bool seen = false;
    for (const auto& q : out) seen = seen || q == p;
    if (!seen) out.push_back(std::move(p));
  }
  return out;
}

/// Surjections q : X -> Q and r : X -> R with a bijection b and b . q == r.
inline bool isomorphic_under(const FinFn& q, const FinFn& r) {
  if (q.cod().size() != r.cod().size() || !(q.dom() == r.dom())) return false;
  for (const auto& b : enumerate_fns(q.cod(), r.cod()))
    if (b.injective() && b.surjective() && compose(b, q) == r) return true;
  return false;
}

inline bool order_isomorphic_under(const MonotoneMap& q, const MonotoneMap& r) {
  if (q.cod().size() != r.cod().size() || !(q.dom() == r.dom())) return false;
  for (const auto& b : enumerate_monotone(q.cod(), r.cod()))
    if (is_order_isomorphism(b) && compose(b, q) == r) return true;
  return false;
}

inline FinPoset chain(std::size_t n) { return FinPoset::chain(FinSet::canonical(n)); }

} // namespace fincat::test
