#include "fincat/ran.hpp"

#include "fincat/error.hpp"

namespace fincat {

bool ran_hom_exists(const RAnObj& src, const RAnObj& dst) {
  if (!(src.base() == dst.base())) throw ShapeMismatch("ran_hom_exists: objects over different bases");
  return refines(src.kernel(), dst.kernel());
}

FinRel closing_relation(const RAnObj& src, const RAnObj& dst) {
  if (!ran_hom_exists(src, dst)) {
    throw InvariantViolation("closing_relation: kernel of the source does not refine kernel of the target");
  }
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem a = 0; a < src.base().size(); ++a) pairs.emplace_back(src.arrow()(a), dst.arrow()(a));
  return FinRel(src.arrow().cod(), dst.arrow().cod(), std::move(pairs));
}

bool closes_exactly(const FinRel& r, const FinFn& k, const FinFn& h) {
  if (!(k.dom() == h.dom()) || !(r.dom() == k.cod()) || !(r.cod() == h.cod())) return false;
  return compose(r, FinRel::graph(k)) == FinRel::graph(h);
}

std::optional<FinFn> closing_function(const FinFn& k, const FinFn& h) {
  if (!(k.dom() == h.dom())) throw ShapeMismatch("closing_function: different bases");
  // Forced on the image of k; least value elsewhere.
  constexpr Elem unset = static_cast<Elem>(-1);
  std::vector<Elem> t(k.cod().size(), unset);
  for (Elem a = 0; a < k.dom().size(); ++a) {
    Elem& slot = t[k(a)];
    if (slot == unset) {
      slot = h(a);
    } else if (slot != h(a)) {
      return std::nullopt;
    }
  }
  for (Elem& v : t) {
    if (v != unset) continue;
    if (h.cod().empty()) return std::nullopt;
    v = 0;
  }
  return FinFn(k.cod(), h.cod(), std::move(t));
}

RAnAudit an_implies_ran_check(std::size_t base_bound, std::size_t codomain_bound) {
  RAnAudit out;
  out.base_bound = base_bound;
  out.codomain_bound = codomain_bound;
  for (std::size_t na = 0; na <= base_bound; ++na) {
    const FinSet a = FinSet::canonical(na);
    for (std::size_t nx = 0; nx <= codomain_bound; ++nx) {
      const FinSet x = FinSet::canonical(nx);
      const auto ks = enumerate_fns(a, x);
      for (std::size_t ny = 0; ny <= codomain_bound; ++ny) {
        const FinSet y = FinSet::canonical(ny);
        const auto hs = enumerate_fns(a, y);
        const auto fs = enumerate_fns(x, y);
        for (const auto& k : ks) {
          const RAnObj src(k);
          for (const auto& h : hs) {
            const RAnObj dst(h);
            ++out.pairs;
            bool by_function = false;
            for (const auto& f : fs) {
              if (compose(f, k) == h) {
                by_function = true;
                break;
              }
            }
            const bool refine = ran_hom_exists(src, dst);
            if (by_function) {
              ++out.function_closed;
              if (!refine) ++out.implication_violations;
            }
            if (!refine) continue;
            ++out.refining;
            const FinRel r = closing_relation(src, dst);
            if (!closes_exactly(r, k, h)) ++out.relation_violations;
            if (by_function) continue;
            ++out.refinement_without_function;
            if (!out.witness && closes_exactly(r, k, h) && !closing_function(k, h)) {
              out.witness = RAnWitness{k, h, r};
            }
          }
        }
      }
    }
  }
  return out;
}

} // namespace fincat
