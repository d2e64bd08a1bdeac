#include "fincat/counterexample.hpp"

#include "fincat/error.hpp"

namespace fincat {

namespace {

bool order_reflecting(const MonotoneMap& f) {
  for (Elem x = 0; x < f.dom().size(); ++x)
    for (Elem y = 0; y < f.dom().size(); ++y)
      if (f.cod().leq(f(x), f(y)) && !f.dom().leq(x, y)) return false;
  return true;
}

void require(bool ok, const char* what) {
  if (!ok) throw DefectError(std::string("counterexample: ") + what);
}

Json class_json(const PosClass& c) { return Json{{"epi", c.epi}, {"regular_epi", c.regular_epi}}; }

} // namespace

CounterexampleBundle pos_counterexample() {
  CounterexampleBundle out;
  const FinSet a_set({"(a,0)", "(a,1)", "(b,0)", "(b,1)"});
  const std::pair<Elem, Elem> a_rel[] = {{0, 1}, {2, 3}};
  out.a = FinPoset(FinPreorder::generated_by(a_set, a_rel));
  out.b = FinPoset::chain(FinSet({"0", "1", "2"}));
  out.c = FinPoset::chain(FinSet({"0", "2"}));
  out.p = MonotoneMap(out.a, out.b, {0, 1, 1, 2});
  out.i = MonotoneMap(out.c, out.b, {0, 2});
  out.pullback = pullback_pos(out.p, out.i);
  out.u_prime = out.pullback.proj2;
  out.p_class = classify_pos(out.p);
  out.u_prime_class = classify_pos(out.u_prime);
  out.u_prime_bijective = out.u_prime.underlying().injective() && out.u_prime.underlying().surjective();
  out.u_prime_order_reflecting = order_reflecting(out.u_prime);
  out.matches_antichain_inclusion = out.pullback.apex.size() == 2 &&
                                    out.pullback.apex.strict_relation_count() == 0 && out.u_prime_bijective;
  out.pos_not_regular = out.p_class.regular_epi && out.u_prime_class.epi && !out.u_prime_class.regular_epi;

  require(out.p_class.regular_epi, "p is not a regular epi");
  require(out.u_prime_class == PosClass{true, false}, "u' is not a non-regular epi");
  require(out.matches_antichain_inclusion, "the pullback is not the 2-element antichain over C");
  require(!out.u_prime_order_reflecting, "u' reflects the order");
  require(out.pos_not_regular, "conclusion flag not set");
  return out;
}

DivergenceWitness divergence_for(const MonotoneMap& f, const MonotoneMap& g) {
  DivergenceWitness w;
  w.f = f;
  w.g = g;
  w.preorder_coeq = coequalizer_preord(f, g);
  w.pos_coeq = coequalizer_pos(f, g);
  w.blocking_cocone = w.preorder_coeq.projection;
  for (const auto& m : enumerate_monotone(w.pos_coeq.quotient, w.preorder_coeq.quotient)) {
    if (compose(m, w.pos_coeq.projection) == w.blocking_cocone) ++w.factorizations;
  }
  return w;
}

DivergenceWitness cat_vs_pos_divergence_witness() {
  const FinPoset x = FinPoset::antichain(FinSet({"p", "q"}));
  const std::pair<Elem, Elem> y_rel[] = {{0, 1}, {2, 3}};
  const FinPoset y(FinPreorder::generated_by(FinSet::canonical(4), y_rel));
  DivergenceWitness w = divergence_for(MonotoneMap(x, y, {1, 3}), MonotoneMap(x, y, {2, 0}));
  require(w.preorder_coeq.quotient.size() == 2, "preorder coequalizer does not have 2 elements");
  require(!w.preorder_coeq.quotient.is_antisymmetric(), "preorder coequalizer has no cycle");
  require(w.pos_coeq.quotient.size() == 1, "Pos coequalizer does not have 1 element");
  require(compose(w.blocking_cocone, w.f) == compose(w.blocking_cocone, w.g), "blocking cocone does not coequalize");
  require(w.factorizations == 0, "blocking cocone factors through the Pos coequalizer");
  return w;
}

Json to_json(const CounterexampleBundle& b) {
  return Json{{"A", to_json(static_cast<const FinPreorder&>(b.a))},
              {"B", to_json(static_cast<const FinPreorder&>(b.b))},
              {"C", to_json(static_cast<const FinPreorder&>(b.c))},
              {"p", to_json(b.p)},
              {"i", to_json(b.i)},
              {"pullback",
               Json{{"apex", to_json(static_cast<const FinPreorder&>(b.pullback.apex))},
                    {"proj1", to_json(b.pullback.proj1)},
                    {"proj2", to_json(b.pullback.proj2)}}},
              {"u_prime", to_json(b.u_prime)},
              {"classification", Json{{"p", class_json(b.p_class)}, {"u_prime", class_json(b.u_prime_class)}}},
              {"pullback_size", b.pullback.apex.size()},
              {"pullback_strict_relations", b.pullback.apex.strict_relation_count()},
              {"u_prime_bijective", b.u_prime_bijective},
              {"u_prime_order_reflecting", b.u_prime_order_reflecting},
              {"matches_antichain_inclusion", b.matches_antichain_inclusion},
              {"pos_not_regular", b.pos_not_regular}};
}

Json to_json(const DivergenceWitness& w) {
  return Json{{"f", to_json(w.f)},
              {"g", to_json(w.g)},
              {"preorder_coequalizer",
               Json{{"quotient", to_json(w.preorder_coeq.quotient)},
                    {"projection", to_json(w.preorder_coeq.projection)},
                    {"is_poset", w.preorder_coeq.quotient.is_antisymmetric()}}},
              {"pos_coequalizer",
               Json{{"quotient", to_json(static_cast<const FinPreorder&>(w.pos_coeq.quotient))},
                    {"projection", to_json(w.pos_coeq.projection)}}},
              {"blocking_cocone", to_json(w.blocking_cocone)},
              {"blocking_cocone_factorizations", w.factorizations},
              {"universal_property_destroyed", w.factorizations == 0}};
}

} // namespace fincat
