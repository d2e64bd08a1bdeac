#pragma once

#include "fincat/json.hpp"
#include "fincat/order.hpp"

namespace fincat {

// A regular epi p : A -> B in Pos whose pullback u' along the inclusion
// i : C -> B is epi but not regular.
struct CounterexampleBundle {
  FinPoset a;
  FinPoset b;
  FinPoset c;
  MonotoneMap p;
  MonotoneMap i;
  /// proj1 : P -> A, proj2 : P -> C.
  PosPullback pullback;
  MonotoneMap u_prime;
  PosClass p_class;
  PosClass u_prime_class;
  bool u_prime_bijective = false;
  bool u_prime_order_reflecting = false;
  /// The apex is a 2-element antichain and u' is bijective onto C.
  bool matches_antichain_inclusion = false;
  bool pos_not_regular = false;
};

/// A = {a,b} x (0 -> 1), B = 0 -> 1 -> 2, C = 0 -> 2. Every internal claim is
/// checked on construction; a failure throws DefectError.
CounterexampleBundle pos_counterexample();

// Parallel maps whose preorder coequalizer has a cycle: the posetal
// reflection collapses it, and the identity cocone onto the cyclic preorder
// cannot factor through the Pos coequalizer.
struct DivergenceWitness {
  MonotoneMap f;
  MonotoneMap g;
  PreorderQuotient preorder_coeq;
  PosQuotient pos_coeq;
  /// Coequalizes (f, g), lands in the cyclic preorder.
  MonotoneMap blocking_cocone;
  /// Monotone maps m : pos_coeq -> cod(blocking_cocone) with m . q == cocone.
  std::size_t factorizations = 0;
};

/// X = {p, q} discrete, Y = chains 0 -> 1 and 2 -> 3, f = (1, 3), g = (2, 0).
/// Checked on construction; a failure throws DefectError.
DivergenceWitness cat_vs_pos_divergence_witness();

/// Builds the divergence data for any parallel pair of monotone maps.
DivergenceWitness divergence_for(const MonotoneMap& f, const MonotoneMap& g);

Json to_json(const CounterexampleBundle& b);
Json to_json(const DivergenceWitness& w);

} // namespace fincat
